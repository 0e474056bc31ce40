#pragma once

/**
 * @file ideal.hpp
 * @brief Two-sided ideals of B(H) described through characteristic sets.
 *
 * An ideal is determined by the set of s-number sequences of its members.
 * Principal ideals (gen) contain eta exactly when eta = O(D_m gen) for some
 * ampliation order m; the product (a)K(H) contains eta exactly when
 * eta = o(D_m a) for some m. Products and sums of descriptions reduce to a
 * normal form with at most one principal and one "soft product" part.
 */

#include "subideal/compare.hpp"
#include "subideal/seq_expr.hpp"
#include "subideal/verdict.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace subideal {

/// An operation was called outside its stated precondition (e.g. asking
/// about softness of (S) inside J when S is not in J).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EngineConfig {
    ComparisonConfig compare;
    Index k_max = 32;
    Index m_max = 32;
};

class IdealDesc {
public:
    enum class Kind { Principal, Compact, FiniteRank, Product, Sum, Power };

    /// (gen). The zero sequence is rejected: the zero ideal is out of scope.
    static IdealDesc principal(SeqExpr gen);
    /// K(H)
    static IdealDesc compact();
    /// F(H)
    static IdealDesc finite_rank();
    static IdealDesc product(IdealDesc a, IdealDesc b);
    static IdealDesc sum(IdealDesc a, IdealDesc b);
    static IdealDesc power(IdealDesc base, unsigned exponent);

    Kind kind() const noexcept;
    const SeqExpr& generator() const;
    const IdealDesc& lhs() const;
    const IdealDesc& rhs() const;
    const IdealDesc& base() const;
    unsigned exponent() const;

    friend bool operator==(const IdealDesc& a, const IdealDesc& b);

    /// Grammar text: prin(E), KH, FH, prod(I,I), sum(I,I), pow(I,n).
    std::string to_string() const;

private:
    struct Node;
    explicit IdealDesc(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Normal form: K(H) | F(H) | (principal) + (soft)K(H) with either part optional.
struct ReducedIdeal {
    bool compact = false;
    bool finite_rank = false;
    std::optional<SeqExpr> principal;
    std::optional<SeqExpr> soft;

    IdealDesc to_desc() const;
};

ReducedIdeal reduce(const IdealDesc& ideal);

/// Rewrites products, powers and sums into the normal form, returned as a
/// description: prin(a), prod(prin(a),KH), their sum, KH or FH.
IdealDesc reduce_product(const IdealDesc& ideal);

Verdict member(const SeqExpr& eta, const IdealDesc& ideal, const EngineConfig& cfg = {});

/// I subset of J.
Verdict includes(const IdealDesc& outer, const IdealDesc& inner, const EngineConfig& cfg = {});

/// Mutual inclusion. No certificates name the failing direction.
Verdict ideal_equal(const IdealDesc& a, const IdealDesc& b, const EngineConfig& cfg = {});

namespace detail {

/// Smallest m >= 1 with pred(m), assuming pred is monotone in m and
/// eventually true. Doubling then bisection.
template <typename Pred>
Index minimal_order(Pred pred)
{
    Index hi = 1;
    while (!pred(hi)) {
        if (hi > (Index{1} << 61)) throw std::runtime_error("order search did not terminate");
        hi *= 2;
    }
    Index lo = hi / 2; // pred(lo) false unless hi == 1
    if (hi == 1) return 1;
    while (hi - lo > 1) {
        const Index mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Class-level a = O(b) / a = o(b) without building verdicts.
bool dominated(const SeqExpr& a, const SeqExpr& b);
bool vanishes_against(const SeqExpr& a, const SeqExpr& b);

} // namespace detail

} // namespace subideal
