#include "ghsub/expr.hpp"

#include "ghsub/error.hpp"
#include "ghsub/ivector.hpp"

#include <algorithm>
#include <cmath>

namespace ghsub {

struct Expr::Node {
    NodeKind kind;
    Interval value{};
    std::size_t index = 0;
    unsigned exponent = 0;
    std::vector<Expr> children;
    std::vector<Branch> branches;
};

bool Condition::holds(std::span<const double> x) const
{
    if (var >= x.size())
        throw Error(ErrorCode::ArityMismatch, "guard reads x" + std::to_string(var + 1) + " of a " +
                                                  std::to_string(x.size()) + "-vector");
    const double v = x[var];
    switch (op) {
    case Op::LE: return v <= value;
    case Op::GE: return v >= value;
    case Op::LT: return v < value;
    case Op::GT: return v > value;
    }
    return false;
}

namespace {

bool guard_holds(const Guard& g, std::span<const double> x)
{
    return std::all_of(g.all.begin(), g.all.end(), [&](const Condition& c) { return c.holds(x); });
}

bool agree(const Interval& a, const Interval& b)
{
    const double scale = 1.0 + std::max(norm(a), norm(b));
    return std::abs(a.lo() - b.lo()) <= 1e-12 * scale && std::abs(a.hi() - b.hi()) <= 1e-12 * scale;
}

Interval require_real(const Interval& v, const char* what)
{
    if (!v.is_degenerate())
        throw Error(ErrorCode::NonDegenerateRealNode,
                    std::string(what) + " applied to non-degenerate interval " + format(v));
    return v;
}

} // namespace

Expr Expr::constant(const Interval& c)
{
    return Expr(std::make_shared<const Node>(Node{NodeKind::CONST, c, 0, 0, {}, {}}));
}

Expr Expr::var(std::size_t index)
{
    return Expr(std::make_shared<const Node>(Node{NodeKind::VAR, {}, index, 0, {}, {}}));
}

Expr Expr::binary(NodeKind kind, Expr lhs, Expr rhs)
{
    switch (kind) {
    case NodeKind::ADD:
    case NodeKind::SUB:
    case NodeKind::GH_SUB:
    case NodeKind::MUL:
    case NodeKind::DIV: break;
    default: throw Error(ErrorCode::InvalidArgument, "not a binary node kind");
    }
    return Expr(std::make_shared<const Node>(Node{kind, {}, 0, 0, {std::move(lhs), std::move(rhs)}, {}}));
}

Expr Expr::abs(Expr arg)
{
    return Expr(std::make_shared<const Node>(Node{NodeKind::ABS, {}, 0, 0, {std::move(arg)}, {}}));
}

Expr Expr::pow(unsigned k, Expr arg)
{
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "pow exponent must be positive");
    return Expr(std::make_shared<const Node>(Node{NodeKind::POW, {}, 0, k, {std::move(arg)}, {}}));
}

Expr Expr::norm()
{
    return Expr(std::make_shared<const Node>(Node{NodeKind::NORM, {}, 0, 0, {}, {}}));
}

Expr Expr::piecewise(std::vector<Branch> branches)
{
    if (branches.empty())
        throw Error(ErrorCode::InvalidArgument, "piecewise needs at least one branch");
    const auto n_otherwise =
        std::count_if(branches.begin(), branches.end(), [](const Branch& b) { return b.guard.otherwise; });
    if (n_otherwise > 1)
        throw Error(ErrorCode::InvalidArgument, "piecewise has more than one 'otherwise' branch");
    return Expr(std::make_shared<const Node>(Node{NodeKind::PIECEWISE, {}, 0, 0, {}, std::move(branches)}));
}

NodeKind Expr::kind() const { return node_->kind; }
const Interval& Expr::value() const { return node_->value; }
std::size_t Expr::index() const { return node_->index; }
unsigned Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
const std::vector<Branch>& Expr::branches() const { return node_->branches; }

Interval Expr::eval(std::span<const double> x) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::CONST: return n.value;
    case NodeKind::VAR:
        if (n.index >= x.size())
            throw Error(ErrorCode::ArityMismatch, "x" + std::to_string(n.index + 1) + " read from a " +
                                                      std::to_string(x.size()) + "-vector");
        return Interval(x[n.index]);
    case NodeKind::ADD: return add(n.children[0].eval(x), n.children[1].eval(x));
    case NodeKind::SUB: return sub(n.children[0].eval(x), n.children[1].eval(x));
    case NodeKind::GH_SUB: return gh_diff(n.children[0].eval(x), n.children[1].eval(x));
    case NodeKind::MUL: return mul(n.children[0].eval(x), n.children[1].eval(x));
    case NodeKind::DIV: return div(n.children[0].eval(x), n.children[1].eval(x));
    case NodeKind::ABS: return Interval(std::abs(require_real(n.children[0].eval(x), "abs").lo()));
    case NodeKind::POW: {
        const double v = require_real(n.children[0].eval(x), "pow").lo();
        double r = 1.0;
        for (unsigned i = 0; i < n.exponent; ++i)
            r *= v;
        return Interval(r);
    }
    case NodeKind::NORM: {
        double s = 0.0;
        for (double v : x)
            s += v * v;
        return Interval(std::sqrt(s));
    }
    case NodeKind::PIECEWISE: {
        const Branch* chosen = nullptr;
        const Branch* fallback = nullptr;
        Interval result;
        for (const auto& b : n.branches) {
            if (b.guard.otherwise) {
                fallback = &b;
                continue;
            }
            if (!guard_holds(b.guard, x))
                continue;
            const Interval v = b.body.eval(x);
            if (chosen == nullptr) {
                chosen = &b;
                result = v;
            } else if (!agree(result, v)) {
                throw Error(ErrorCode::AmbiguousPiecewise, "overlapping guards disagree at x=" + format(x) +
                                                               ": " + format(result) + " vs " + format(v));
            }
        }
        if (chosen != nullptr)
            return result;
        if (fallback != nullptr)
            return fallback->body.eval(x);
        throw Error(ErrorCode::NoPiecewiseBranch, "no guard holds at x=" + format(x));
    }
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt expression node");
}

std::size_t Expr::min_arity() const
{
    const Node& n = *node_;
    std::size_t a = n.kind == NodeKind::VAR ? n.index + 1 : 0;
    for (const auto& c : n.children)
        a = std::max(a, c.min_arity());
    for (const auto& b : n.branches) {
        a = std::max(a, b.body.min_arity());
        for (const auto& c : b.guard.all)
            a = std::max(a, c.var + 1);
    }
    return a;
}

bool Expr::uses_norm() const
{
    const Node& n = *node_;
    if (n.kind == NodeKind::NORM)
        return true;
    for (const auto& c : n.children)
        if (c.uses_norm())
            return true;
    for (const auto& b : n.branches)
        if (b.body.uses_norm())
            return true;
    return false;
}

Expr Expr::substitute(const std::vector<Expr>& replacements) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::CONST: return *this;
    case NodeKind::VAR:
        if (n.index >= replacements.size())
            throw Error(ErrorCode::ArityMismatch, "no replacement for x" + std::to_string(n.index + 1));
        return replacements[n.index];
    case NodeKind::NORM:
    case NodeKind::PIECEWISE:
        throw Error(ErrorCode::InvalidArgument, "substitution into norm/piecewise nodes is not supported");
    case NodeKind::ABS: return abs(n.children[0].substitute(replacements));
    case NodeKind::POW: return pow(n.exponent, n.children[0].substitute(replacements));
    default:
        return binary(n.kind, n.children[0].substitute(replacements), n.children[1].substitute(replacements));
    }
}

namespace {

const char* op_text(NodeKind k)
{
    switch (k) {
    case NodeKind::ADD: return " + ";
    case NodeKind::SUB: return " - ";
    case NodeKind::GH_SUB: return " ghsub ";
    case NodeKind::MUL: return "*";
    case NodeKind::DIV: return "/";
    default: return "?";
    }
}

std::string cond_text(const Condition& c)
{
    static const char* ops[] = {" <= ", " >= ", " < ", " > "};
    return "x" + std::to_string(c.var + 1) + ops[static_cast<int>(c.op)] + format_real(c.value);
}

} // namespace

std::string Expr::to_string() const
{
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::CONST: return n.value.is_degenerate() && n.value.lo() >= 0 ? format_real(n.value.lo()) : format(n.value);
    case NodeKind::VAR: return "x" + std::to_string(n.index + 1);
    case NodeKind::ABS: return "abs(" + n.children[0].to_string() + ")";
    case NodeKind::POW: return "pow" + std::to_string(n.exponent) + "(" + n.children[0].to_string() + ")";
    case NodeKind::NORM: return "norm(x)";
    case NodeKind::PIECEWISE: {
        std::string s = "piecewise{";
        for (const auto& b : n.branches) {
            if (b.guard.otherwise) {
                s += "otherwise";
            } else {
                for (std::size_t i = 0; i < b.guard.all.size(); ++i)
                    s += (i ? " & " : "") + cond_text(b.guard.all[i]);
            }
            s += " => " + b.body.to_string() + "; ";
        }
        return s + "}";
    }
    default:
        return "(" + n.children[0].to_string() + op_text(n.kind) + n.children[1].to_string() + ")";
    }
}

Expr operator+(Expr a, Expr b) { return Expr::binary(NodeKind::ADD, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(NodeKind::SUB, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(NodeKind::MUL, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(NodeKind::DIV, std::move(a), std::move(b)); }
Expr gh_sub(Expr a, Expr b) { return Expr::binary(NodeKind::GH_SUB, std::move(a), std::move(b)); }

} // namespace ghsub
