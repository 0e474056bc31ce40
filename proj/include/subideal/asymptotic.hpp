#pragma once

/**
 * @file asymptotic.hpp
 * @brief O-equivalence normal forms for grammar sequences.
 *
 * Every SeqExpr is O-equivalent (bounded ratio both ways, eventually) to
 *
 *     exp(-lambda * n) * n^-p * log(n+1)^-q
 *
 * or is eventually zero. lambda is kept exactly as a positive rational
 * combination of logs of rationals, sum_i c_i * ln(1/r_i), so that
 * ampliation (lambda / m), decimation (lambda * k) and products (lambda
 * sums) never round. Distinct classes are strictly ordered, which makes O
 * and o between two grammar sequences a lexicographic comparison.
 */

#include "subideal/rational.hpp"
#include "subideal/seq_expr.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace subideal {

/// Exponential decay rate sum_i coeff_i * ln(base_i), each base_i > 1.
class LogRate {
public:
    LogRate() = default;

    /// Rate of r^n, i.e. ln(1/r) for r in (0,1).
    static LogRate of_ratio(const Rational& r);

    bool is_zero() const noexcept { return terms_.empty(); }
    LogRate scaled(const Rational& factor) const;
    LogRate operator+(const LogRate& other) const;

    /// Exact three-way comparison of the two real numbers.
    friend std::strong_ordering compare(const LogRate& a, const LogRate& b);
    friend bool operator==(const LogRate& a, const LogRate& b) { return compare(a, b) == 0; }

    long double approx() const;
    std::string to_string() const;

    const std::vector<std::pair<Rational, Rational>>& terms() const noexcept { return terms_; }

private:
    // (base > 1, coefficient > 0), merged by base
    std::vector<std::pair<Rational, Rational>> terms_;
};

struct AsymptoticClass {
    bool zero = false; ///< eventually zero
    LogRate rate;
    Rational power = 0;
    Rational log_power = 0;

    static AsymptoticClass eventually_zero() { return {true, {}, 0, 0}; }

    std::string to_string() const;
};

AsymptoticClass asymptotic_class(const SeqExpr& e);

/// Order on classes by size: a < b when a = o(b). Equal when a and b are
/// O of each other.
std::strong_ordering compare_classes(const AsymptoticClass& a, const AsymptoticClass& b);

/// Human-readable reason why `a` is not O(b) / o(b); empty when it is.
std::string describe_class_gap(const AsymptoticClass& a, const AsymptoticClass& b);

} // namespace subideal
