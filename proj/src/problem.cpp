#include "ghsub/problem.hpp"

#include "ghsub/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ghsub {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Re-raise a value error as a ParseError pointing at the value on this line.
template <class Fn>
auto at_line(std::size_t line, std::size_t column, Fn fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const ParseError& e) {
        const std::size_t col = e.column() > 0 ? column + e.column() - 1 : column;
        std::string msg = e.what();
        const auto cut = msg.find(": ", msg.find("column"));
        throw ParseError(cut == std::string::npos ? msg : msg.substr(cut + 2), line, col);
    } catch (const Error& e) {
        throw ParseError(e.what(), line, column);
    }
}

} // namespace

RealVector parse_point(std::string_view text)
{
    std::string_view t = trim(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')')
            throw ParseError("missing ')' in point", 0, t.size());
        t = t.substr(1, t.size() - 2);
    }
    RealVector out;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        const auto comma = t.find(',', pos);
        const auto end = comma == std::string_view::npos ? t.size() : comma;
        out.push_back(parse_real(t.substr(pos, end - pos)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

Ivf ProblemFile::objective() const
{
    if (arity == 0 || !domain || objective_text.empty())
        throw Error(ErrorCode::InvalidArgument, "problem needs arity, domain and objective");
    return Ivf(arity, parse_expr(objective_text), *domain);
}

ProblemFile parse_problem(std::string_view text)
{
    ProblemFile p;
    std::size_t objective_line = 0;
    std::size_t objective_col = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value", line_no, 1);
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view raw = line.substr(eq + 1);
        std::size_t col = eq + 2;
        while (col - eq - 2 < raw.size() && std::isspace(static_cast<unsigned char>(raw[col - eq - 2])))
            ++col;
        const std::string_view value = trim(raw);
        if (value.empty())
            throw ParseError("empty value for '" + key + "'", line_no, col);
        if (key == "arity") {
            const double a = at_line(line_no, col, [&] { return parse_real(value); });
            if (a < 1 || a != static_cast<double>(static_cast<std::size_t>(a)))
                throw ParseError("arity must be a positive integer", line_no, col);
            p.arity = static_cast<std::size_t>(a);
        } else if (key == "domain") {
            p.domain = at_line(line_no, col, [&] { return parse_box(value); });
        } else if (key == "objective") {
            at_line(line_no, col, [&] { return parse_expr(value, line_no); });
            p.objective_text = std::string(value);
            objective_line = line_no;
            objective_col = col;
        } else if (key == "base") {
            p.base_points.push_back(at_line(line_no, col, [&] { return parse_point(value); }));
        } else if (key == "candidate") {
            p.candidates.push_back(at_line(line_no, col, [&] { return parse_ivector(value); }));
        } else if (key == "x0") {
            p.x0 = at_line(line_no, col, [&] { return parse_point(value); });
        } else if (key == "step") {
            p.step = at_line(line_no, col, [&] { return parse_real(value); });
        } else if (key == "iters") {
            const double n = at_line(line_no, col, [&] { return parse_real(value); });
            if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n)))
                throw ParseError("iters must be a positive integer", line_no, col);
            p.iters = static_cast<std::size_t>(n);
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
    }
    if (p.arity == 0)
        throw ParseError("missing 'arity'", line_no, 1);
    if (!p.domain)
        throw ParseError("missing 'domain'", line_no, 1);
    if (p.objective_text.empty())
        throw ParseError("missing 'objective'", line_no, 1);
    if (p.domain->dim() != p.arity)
        throw ParseError("domain has " + std::to_string(p.domain->dim()) + " axes but arity is " +
                             std::to_string(p.arity),
                         line_no, 1);
    at_line(objective_line, objective_col, [&] { return p.objective(); });
    for (const auto& b : p.base_points)
        if (!p.domain->contains(b))
            throw ParseError("base point " + format(b) + " lies outside the domain", line_no, 1);
    return p;
}

ProblemFile load_problem(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

} // namespace ghsub
