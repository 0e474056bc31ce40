#include "subideal/asymptotic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace subideal {

namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

HighPrecision log_high(const BigInt& z) { return boost::multiprecision::log(HighPrecision(z.get_str())); }

long double log_int(const BigInt& z) { return log_rational(Rational(z)); }

// Refine a set of integers > 1 into a pairwise coprime set that generates
// each of them multiplicatively.
std::vector<BigInt> coprime_basis(std::vector<BigInt> xs)
{
    auto normalize = [](std::vector<BigInt>& v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](const BigInt& x) { return x <= 1; }), v.end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(xs);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < xs.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
                BigInt g;
                mpz_gcd(g.get_mpz_t(), xs[i].get_mpz_t(), xs[j].get_mpz_t());
                if (g == 1) continue;
                BigInt a = xs[i] / g, b = xs[j] / g;
                xs[i] = a;
                xs[j] = b;
                xs.push_back(g);
                normalize(xs);
                changed = true;
            }
        }
    }
    return xs;
}

} // namespace

LogRate LogRate::of_ratio(const Rational& r)
{
    if (sgn(r) <= 0 || r >= 1) throw DomainError("rate of a ratio outside (0,1)");
    LogRate rate;
    Rational base = 1 / r;
    rate.terms_.emplace_back(base, Rational(1));
    return rate;
}

LogRate LogRate::scaled(const Rational& factor) const
{
    if (sgn(factor) <= 0) throw std::logic_error("rate scale factor must be positive");
    LogRate out = *this;
    for (auto& [base, coeff] : out.terms_) coeff *= factor;
    return out;
}

LogRate LogRate::operator+(const LogRate& other) const
{
    std::map<Rational, Rational> merged;
    for (const auto& [base, coeff] : terms_) merged[base] += coeff;
    for (const auto& [base, coeff] : other.terms_) merged[base] += coeff;
    LogRate out;
    out.terms_.assign(merged.begin(), merged.end());
    return out;
}

std::strong_ordering compare(const LogRate& a, const LogRate& b)
{
    // a - b = sum_i e_i ln(n_i) over the integer numerators/denominators.
    std::vector<std::pair<BigInt, Rational>> weighted;
    auto push = [&](const LogRate& rate, int sign) {
        for (const auto& [base, coeff] : rate.terms()) {
            weighted.emplace_back(base.get_num(), Rational(sign * coeff));
            weighted.emplace_back(base.get_den(), Rational(-sign * coeff));
        }
    };
    push(a, 1);
    push(b, -1);

    std::vector<BigInt> ints;
    for (const auto& [z, c] : weighted) ints.push_back(z);
    const auto basis = coprime_basis(std::move(ints));

    std::vector<Rational> exps(basis.size());
    for (const auto& [z, c] : weighted) {
        BigInt rest = z;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            while (mpz_divisible_p(rest.get_mpz_t(), basis[j].get_mpz_t())) {
                rest /= basis[j];
                exps[j] += c;
            }
        }
        if (rest != 1) throw std::logic_error("coprime basis failed to factor an integer");
    }

    long double value = 0.0L, magnitude = 0.0L;
    bool all_zero = true;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (sgn(exps[j]) == 0) continue;
        all_zero = false;
        const long double term = to_long_double(exps[j]) * log_int(basis[j]);
        value += term;
        magnitude += std::fabs(term);
    }
    if (all_zero) return std::strong_ordering::equal;
    if (std::fabs(value) > 1e-14L * magnitude) return value > 0 ? std::strong_ordering::greater : std::strong_ordering::less;

    // Logs of multiplicatively independent integers with a nonzero rational
    // combination: close to zero but not zero. Resolve with 50 digits.
    HighPrecision hp = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (sgn(exps[j]) == 0) continue;
        hp += HighPrecision(exps[j].get_num().get_str()) / HighPrecision(exps[j].get_den().get_str()) *
              log_high(basis[j]);
    }
    return hp > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

long double LogRate::approx() const
{
    long double v = 0.0L;
    for (const auto& [base, coeff] : terms_) v += to_long_double(coeff) * log_rational(base);
    return v;
}

std::string LogRate::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [base, coeff] : terms_) {
        if (!s.empty()) s += " + ";
        if (coeff != 1) s += render_rational(coeff) + "*";
        s += "ln(" + render_rational(base) + ")";
    }
    return s;
}

std::string AsymptoticClass::to_string() const
{
    if (zero) return "eventually-zero";
    return "exp(-n*[" + rate.to_string() + "]) * n^-" + render_rational(power) + " * log(n+1)^-" +
           render_rational(log_power);
}

AsymptoticClass asymptotic_class(const SeqExpr& e)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::PowerLog: return {false, {}, e.exponent(), e.log_exponent()};
    case K::Geometric: return {false, LogRate::of_ratio(e.ratio()), 0, 0};
    case K::Finite: return AsymptoticClass::eventually_zero();
    case K::Scale: return asymptotic_class(e.inner());
    case K::Ampliate: {
        auto c = asymptotic_class(e.inner());
        if (!c.zero && !c.rate.is_zero()) c.rate = c.rate.scaled(Rational(1, e.order()));
        return c;
    }
    case K::Decimate: {
        auto c = asymptotic_class(e.inner());
        if (!c.zero && !c.rate.is_zero()) c.rate = c.rate.scaled(Rational(BigInt(std::to_string(e.order()), 10)));
        return c;
    }
    case K::Sum:
    case K::Max: {
        auto a = asymptotic_class(e.lhs());
        auto b = asymptotic_class(e.rhs());
        return compare_classes(a, b) >= 0 ? a : b;
    }
    case K::Product: {
        auto a = asymptotic_class(e.lhs());
        auto b = asymptotic_class(e.rhs());
        if (a.zero || b.zero) return AsymptoticClass::eventually_zero();
        return {false, a.rate + b.rate, a.power + b.power, a.log_power + b.log_power};
    }
    }
    throw std::logic_error("unhandled SeqExpr kind");
}

std::strong_ordering compare_classes(const AsymptoticClass& a, const AsymptoticClass& b)
{
    if (a.zero || b.zero) {
        if (a.zero && b.zero) return std::strong_ordering::equal;
        return a.zero ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // faster exponential decay means a smaller sequence
    if (auto c = compare(b.rate, a.rate); c != 0) return c;
    if (auto c = cmp(b.power, a.power); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = cmp(b.log_power, a.log_power); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string describe_class_gap(const AsymptoticClass& a, const AsymptoticClass& b)
{
    if (a.zero) return {};
    if (b.zero) return "right-hand side is eventually zero while the left is not";
    if (auto c = compare(a.rate, b.rate); c != 0)
        return c < 0 ? "left decays at exponential rate " + a.rate.to_string() + " < " + b.rate.to_string()
                     : std::string{};
    if (a.power != b.power)
        return a.power < b.power ? "equal exponential rate; left power " + render_rational(a.power) + " < " +
                                       render_rational(b.power)
                                 : std::string{};
    if (a.log_power != b.log_power)
        return a.log_power < b.log_power ? "equal rate and power; left log power " + render_rational(a.log_power) +
                                               " < " + render_rational(b.log_power)
                                         : std::string{};
    return "classes coincide: the ratio stays bounded away from zero";
}

} // namespace subideal
