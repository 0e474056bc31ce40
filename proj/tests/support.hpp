#pragma once

// Shared test helpers: an evaluator that never touches eval()/log_eval(),
// and seeded generators for the property suites.

#include "subideal/classifier.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>
#include <vector>

namespace subideal::test {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big big(const Rational& r)
{
    return Big(r.get_num().get_str()) / Big(r.get_den().get_str());
}

// Straight from the definitions; indices past 2^40 are not expected here.
inline Big reference_value(const SeqExpr& e, Index n)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::PowerLog: {
        Big v = 1;
        if (sgn(e.exponent()) != 0) v *= boost::multiprecision::pow(Big(n), -big(e.exponent()));
        if (sgn(e.log_exponent()) != 0) v *= boost::multiprecision::pow(boost::multiprecision::log(Big(n + 1)), -big(e.log_exponent()));
        return v;
    }
    case K::Geometric: return boost::multiprecision::pow(big(e.ratio()), Big(n));
    case K::Finite: return n <= e.values().size() ? big(e.values()[n - 1]) : Big(0);
    case K::Scale: return big(e.factor()) * reference_value(e.inner(), n);
    case K::Ampliate: return reference_value(e.inner(), (n + e.order() - 1) / e.order());
    case K::Decimate: return reference_value(e.inner(), n * e.order());
    case K::Sum: return reference_value(e.lhs(), n) + reference_value(e.rhs(), n);
    case K::Max: return std::max(reference_value(e.lhs(), n), reference_value(e.rhs(), n));
    case K::Product: return reference_value(e.lhs(), n) * reference_value(e.rhs(), n);
    }
    return 0;
}

/// The same expression with amp/dec nodes rebuilt through the normalizing constructors.
inline SeqExpr normalized(const SeqExpr& e)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::Scale: return SeqExpr::scale(e.factor(), normalized(e.inner()));
    case K::Ampliate: return ampliate(normalized(e.inner()), e.order());
    case K::Decimate: return decimate(normalized(e.inner()), e.order());
    case K::Sum: return SeqExpr::sum(normalized(e.lhs()), normalized(e.rhs()));
    case K::Max: return SeqExpr::max(normalized(e.lhs()), normalized(e.rhs()));
    case K::Product: return SeqExpr::product(normalized(e.lhs()), normalized(e.rhs()));
    default: return e;
    }
}

class ExprGen {
public:
    explicit ExprGen(std::uint32_t seed) : rng_(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    SeqExpr power_log()
    {
        static const Rational ps[] = {Rational(1, 2), 1, 2, 3};
        if (pick(6) == 0) return SeqExpr::power_log(0, 1 + pick(2));
        return SeqExpr::power_log(ps[pick(4)], pick(3));
    }

    SeqExpr geometric()
    {
        static const Rational rs[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(3, 4), Rational(1, 10)};
        return SeqExpr::geometric(rs[pick(5)]);
    }

    SeqExpr finite()
    {
        std::vector<Rational> v;
        Rational x = 1 + pick(4);
        for (int i = 0, len = 1 + pick(4); i < len; ++i) {
            v.push_back(x);
            x /= 1 + pick(3);
        }
        return SeqExpr::finite(v);
    }

    /// PowerLog or Geometric atom.
    SeqExpr classic() { return pick(2) ? power_log() : geometric(); }

    SeqExpr atom()
    {
        const int r = pick(10);
        if (r < 5) return power_log();
        if (r < 9) return geometric();
        return finite();
    }

    SeqExpr expr(int depth = 2)
    {
        if (depth == 0 || pick(3) == 0) return atom();
        switch (pick(6)) {
        case 0: return SeqExpr::scale(Rational(1 + pick(3), 1 + pick(2)), expr(depth - 1));
        case 1: return SeqExpr::ampliate_node(1 + pick(4), expr(depth - 1));
        case 2: return SeqExpr::decimate_node(1 + pick(4), expr(depth - 1));
        case 3: return SeqExpr::sum(expr(depth - 1), expr(depth - 1));
        case 4: return SeqExpr::max(expr(depth - 1), expr(depth - 1));
        default: return SeqExpr::product(expr(depth - 1), expr(depth - 1));
        }
    }

    /// A nonzero generator (no finite atoms) for principal ideals.
    SeqExpr generator()
    {
        for (;;) {
            auto e = expr(1);
            if (!eventually_zero(e)) return e;
        }
    }

private:
    std::mt19937 rng_;
};

} // namespace subideal::test
