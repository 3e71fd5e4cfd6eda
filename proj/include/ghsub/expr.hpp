#pragma once

#include "ghsub/interval.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghsub {

enum class NodeKind { CONST, VAR, ADD, SUB, GH_SUB, MUL, DIV, ABS, POW, NORM, PIECEWISE };

// One comparison "x_var op value" of a piecewise guard.
struct Condition {
    enum class Op { LE, GE, LT, GT };
    std::size_t var = 0;
    Op op = Op::LE;
    double value = 0.0;

    bool holds(std::span<const double> x) const;
};

// Conjunction of conditions; an `otherwise` guard holds exactly when no
// other guard of the same piecewise node does.
struct Guard {
    std::vector<Condition> all;
    bool otherwise = false;
};

class Expr;

struct Branch;

// Immutable expression tree for an interval-valued function of a real vector.
// Copies share structure.
class Expr {
public:
    static Expr constant(const Interval& c);
    static Expr constant(double c) { return constant(Interval(c)); }
    static Expr var(std::size_t index);
    static Expr binary(NodeKind kind, Expr lhs, Expr rhs);
    static Expr abs(Expr arg);
    static Expr pow(unsigned k, Expr arg);
    static Expr norm();
    static Expr piecewise(std::vector<Branch> branches);

    NodeKind kind() const;
    const Interval& value() const;     // CONST
    std::size_t index() const;         // VAR
    unsigned exponent() const;         // POW
    const std::vector<Expr>& children() const;
    const std::vector<Branch>& branches() const;

    Interval eval(std::span<const double> x) const;

    // Number of input coordinates the tree reads (max VAR index + 1; 0 if none).
    // A NORM node reads every coordinate and is reported separately.
    std::size_t min_arity() const;
    bool uses_norm() const;

    // Replace VAR i by replacements[i].
    Expr substitute(const std::vector<Expr>& replacements) const;

    std::string to_string() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Branch {
    Guard guard;
    Expr body;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr gh_sub(Expr a, Expr b);

// Parses the text grammar. `line` is reported in errors (0 for single-line input).
Expr parse_expr(std::string_view text, std::size_t line = 0);

} // namespace ghsub
