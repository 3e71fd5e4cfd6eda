#include "ghsub/error.hpp"
#include "ghsub/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace ghsub {

namespace {

enum class Tok { NUMBER, IDENT, SYMBOL, END };

struct Token {
    Tok type = Tok::END;
    std::string text;
    double number = 0.0;
    std::size_t line = 0;
    std::size_t column = 0;
};

class Lexer {
public:
    Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                t.type = Tok::NUMBER;
                lex_number(t);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.type = Tok::IDENT;
                const std::size_t b = pos_;
                while (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                t.text = std::string(src_.substr(b, pos_ - b));
            } else {
                t.type = Tok::SYMBOL;
                static const std::string_view two[] = {"=>", "<=", ">=", "&&"};
                bool matched = false;
                for (auto s : two) {
                    if (src_.substr(pos_, 2) == s) {
                        t.text = std::string(s);
                        advance();
                        advance();
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    if (std::string_view("[](),+-*/{};<>&").find(c) == std::string_view::npos)
                        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
                    t.text = std::string(1, c);
                    advance();
                }
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    void lex_number(Token& t)
    {
        const std::size_t b = pos_;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            advance();
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-'))
                ++look;
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                while (pos_ < look)
                    advance();
                digits();
            }
        }
        t.text = std::string(src_.substr(b, pos_ - b));
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || !std::isfinite(t.number))
            throw ParseError("invalid number '" + t.text + "'", t.line, t.column);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse()
    {
        Expr e = expr();
        if (peek().type != Tok::END)
            fail("unexpected '" + peek().text + "' after expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, peek().line, peek().column);
    }

    bool is_symbol(std::string_view s) const { return peek().type == Tok::SYMBOL && peek().text == s; }
    bool is_ident(std::string_view s) const { return peek().type == Tok::IDENT && peek().text == s; }

    void expect(std::string_view s)
    {
        if (!is_symbol(s))
            fail("expected '" + std::string(s) + "'" + (peek().type == Tok::END ? " at end of input" : ", got '" + peek().text + "'"));
        next();
    }

    Expr expr()
    {
        Expr lhs = term();
        while (true) {
            if (is_symbol("+")) {
                next();
                lhs = lhs + term();
            } else if (is_symbol("-")) {
                next();
                lhs = lhs - term();
            } else if (is_ident("ghsub")) {
                next();
                lhs = gh_sub(lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr term()
    {
        Expr lhs = factor();
        while (true) {
            if (is_symbol("*")) {
                next();
                lhs = lhs * factor();
            } else if (is_symbol("/")) {
                next();
                lhs = lhs / factor();
            } else {
                return lhs;
            }
        }
    }

    double signed_number()
    {
        double sign = 1.0;
        if (is_symbol("-") || is_symbol("+")) {
            if (next().text == "-")
                sign = -1.0;
        }
        if (peek().type != Tok::NUMBER)
            fail("expected a number");
        return sign * next().number;
    }

    std::size_t var_index()
    {
        if (!is_ident("x"))
            fail("expected a variable like x1");
        next();
        if (peek().type != Tok::NUMBER || peek().text.find_first_not_of("0123456789") != std::string::npos)
            fail("expected a variable index after 'x'");
        const Token t = next();
        const double k = t.number;
        if (k < 1)
            throw ParseError("variable indices start at 1", t.line, t.column);
        return static_cast<std::size_t>(k) - 1;
    }

    Expr factor()
    {
        if (is_symbol("-")) {
            next();
            return Expr::constant(-1.0) * factor();
        }
        if (is_symbol("+")) {
            next();
            return factor();
        }
        if (is_symbol("[")) {
            const Token open = next();
            const double lo = signed_number();
            expect(",");
            const double hi = signed_number();
            expect("]");
            if (lo > hi)
                throw ParseError("interval lower endpoint exceeds upper endpoint", open.line, open.column);
            return Expr::constant(Interval(lo, hi));
        }
        if (peek().type == Tok::NUMBER)
            return Expr::constant(next().number);
        if (is_symbol("(")) {
            next();
            Expr e = expr();
            expect(")");
            return e;
        }
        if (is_ident("x"))
            return Expr::var(var_index());
        if (is_ident("abs")) {
            next();
            expect("(");
            Expr e = expr();
            expect(")");
            return Expr::abs(e);
        }
        if (is_ident("pow")) {
            next();
            if (peek().type != Tok::NUMBER || peek().text.find_first_not_of("0123456789") != std::string::npos ||
                peek().number < 1)
                fail("expected a positive integer exponent after 'pow'");
            const auto k = static_cast<unsigned>(next().number);
            expect("(");
            Expr e = expr();
            expect(")");
            return Expr::pow(k, e);
        }
        if (is_ident("norm")) {
            next();
            expect("(");
            if (!is_ident("x"))
                fail("norm takes the whole input vector: write norm(x)");
            next();
            expect(")");
            return Expr::norm();
        }
        if (is_ident("piecewise"))
            return piecewise();
        if (peek().type == Tok::END)
            fail("unexpected end of input");
        fail("unexpected '" + peek().text + "'");
    }

    Condition condition()
    {
        Condition c;
        c.var = var_index();
        if (is_symbol("<="))
            c.op = Condition::Op::LE;
        else if (is_symbol(">="))
            c.op = Condition::Op::GE;
        else if (is_symbol("<"))
            c.op = Condition::Op::LT;
        else if (is_symbol(">"))
            c.op = Condition::Op::GT;
        else
            fail("expected a comparison operator");
        next();
        c.value = signed_number();
        return c;
    }

    Guard guard()
    {
        Guard g;
        if (is_ident("otherwise")) {
            next();
            g.otherwise = true;
            return g;
        }
        g.all.push_back(condition());
        while (is_symbol("&") || is_symbol("&&") || is_ident("and")) {
            next();
            g.all.push_back(condition());
        }
        return g;
    }

    Expr piecewise()
    {
        next();
        expect("{");
        std::vector<Branch> branches;
        do {
            Guard g = guard();
            expect("=>");
            Expr body = expr();
            expect(";");
            branches.push_back(Branch{std::move(g), std::move(body)});
        } while (!is_symbol("}"));
        const Token close = next();
        try {
            return Expr::piecewise(std::move(branches));
        } catch (const Error& e) {
            throw ParseError(e.what(), close.line, close.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text, std::size_t line)
{
    try {
        return Parser(Lexer(text, line).run()).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), line, 1);
    }
}

} // namespace ghsub
