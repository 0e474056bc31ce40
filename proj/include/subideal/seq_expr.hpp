#pragma once

/**
 * @file seq_expr.hpp
 * @brief Closed expression trees for non-negative, non-increasing null sequences.
 *
 * Every SeqExpr denotes an element of c0*: a sequence xi_1 >= xi_2 >= ... >= 0
 * with xi_n -> 0. Atoms are the power-log family n^-p * log(n+1)^-q, geometric
 * sequences r^n and finitely supported lists; combinators are closed under the
 * cone (positive scaling, m-fold ampliation, k-decimation, pointwise sum, max
 * and product). Construction rejects anything that would leave the cone.
 *
 * Indices are 1-based throughout.
 */

#include "subideal/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subideal {

/// A value outside the domain of a constructor (e.g. geo(3/2)).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Index = std::uint64_t;

class SeqExpr {
public:
    enum class Kind { PowerLog, Geometric, Finite, Scale, Ampliate, Decimate, Sum, Max, Product };

    /// n^-p * log(n+1)^-q. Requires p >= 0, q > 0 when p = 0, and (when
    /// q < 0) -q <= 2 ln2 * p so the sequence is non-increasing from n = 1.
    static SeqExpr power_log(Rational p, Rational q = 0);
    /// r^n for r in (0, 1).
    static SeqExpr geometric(Rational r);
    /// Non-empty, non-increasing, non-negative; zero past the end.
    static SeqExpr finite(std::vector<Rational> values);
    static SeqExpr scale(Rational c, SeqExpr inner);
    static SeqExpr sum(SeqExpr a, SeqExpr b);
    static SeqExpr max(SeqExpr a, SeqExpr b);
    static SeqExpr product(SeqExpr a, SeqExpr b);

    // Raw ampliation/decimation nodes. Prefer the normalizing free functions
    // ampliate() and decimate().
    static SeqExpr ampliate_node(Index m, SeqExpr inner);
    static SeqExpr decimate_node(Index k, SeqExpr inner);

    Kind kind() const noexcept;

    // PowerLog
    const Rational& exponent() const;
    const Rational& log_exponent() const;
    // Geometric
    const Rational& ratio() const;
    // Finite
    const std::vector<Rational>& values() const;
    // Scale
    const Rational& factor() const;
    // Ampliate / Decimate
    Index order() const;
    // Scale / Ampliate / Decimate
    const SeqExpr& inner() const;
    // Sum / Max / Product
    const SeqExpr& lhs() const;
    const SeqExpr& rhs() const;

    /// Structural equality of trees.
    friend bool operator==(const SeqExpr& a, const SeqExpr& b);

    /// Stable grammar text, e.g. `amp(2,pow(1))`.
    std::string to_string() const;

private:
    friend long double log_eval(const SeqExpr& e, Index n);

    struct Node;
    explicit SeqExpr(std::shared_ptr<const Node> node);
    const Node& node() const noexcept { return *node_; }

    std::shared_ptr<const Node> node_;
};

/// Value of a sequence at one index. `exact` is present when the value is a
/// rational computed without rounding; `log` is always the natural log of the
/// value at long double (64-bit mantissa) precision, -inf for zero.
struct Value {
    std::optional<Rational> exact;
    long double log = 0.0L;

    bool is_zero() const noexcept;
    /// exp(log); underflows to 0 for very small values.
    long double approx() const noexcept;
};

Value eval(const SeqExpr& e, Index n);

/// Exact rational value when every component is rational at n.
std::optional<Rational> eval_exact(const SeqExpr& e, Index n);

/// ln(eval(e, n)) without forming big rationals; -inf for zero.
long double log_eval(const SeqExpr& e, Index n);

/// D_m: each entry repeated m times. ampliate(e, 1) = e and nested
/// ampliations compose multiplicatively.
SeqExpr ampliate(const SeqExpr& e, Index m);

/// n -> xi_{kn}. decimate(e, 1) = e; decimate(ampliate(e, m), m) = e.
SeqExpr decimate(const SeqExpr& e, Index k);

/// Pointwise product with exact atom folding: power-log exponents add,
/// geometric ratios multiply, scales are pulled out, finite lists multiply.
/// Denotes the same sequence as SeqExpr::product(a, b).
SeqExpr multiply(const SeqExpr& a, const SeqExpr& b);

/// n-fold pointwise power via multiply().
SeqExpr pointwise_power(const SeqExpr& e, unsigned n);

/// Pointwise square root when it stays inside the grammar exactly
/// (power-log halves its exponents; rational squares elsewhere).
std::optional<SeqExpr> pointwise_sqrt(const SeqExpr& e);

/// True when the sequence is finitely supported.
bool eventually_zero(const SeqExpr& e);

} // namespace subideal
