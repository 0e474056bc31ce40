#pragma once

/**
 * @file kernels.hpp
 * @brief Data-parallel scans over sequence windows.
 *
 * Each kernel exists twice: a plain loop in `serial` kept as the reference
 * and an OpenMP version in `parallel`. Both must agree bit for bit (every
 * per-index value is computed by the same scalar code; reductions are max/min,
 * which are order independent). Ratios are carried as natural logs.
 *
 * Ratio conventions at index n: a_n = 0 gives -inf; a_n > 0 = b_n gives +inf.
 */

#include "subideal/seq_expr.hpp"
#include "subideal/verdict.hpp"

#include <span>
#include <vector>

namespace subideal::kernels {

struct RatioExtrema {
    long double max_log = 0.0L;
    long double min_log = 0.0L;
    Index argmax = 0;
    Index argmin = 0;
};

/// log(a_n / b_n) under the conventions above.
long double log_ratio_at(const SeqExpr& a, const SeqExpr& b, Index n);

namespace serial {

std::vector<long double> log_values(const SeqExpr& e, Index first, Index last);
std::vector<RatioSample> sample_log_ratio(const SeqExpr& a, const SeqExpr& b, std::span<const Index> indices);
RatioExtrema log_ratio_extrema(const SeqExpr& a, const SeqExpr& b, Index first, Index last);
/// Largest |value_n - target| over a window of precomputed values.
long double max_abs_deviation(std::span<const long double> values, long double target);

} // namespace serial

namespace parallel {

std::vector<long double> log_values(const SeqExpr& e, Index first, Index last);
std::vector<RatioSample> sample_log_ratio(const SeqExpr& a, const SeqExpr& b, std::span<const Index> indices);
RatioExtrema log_ratio_extrema(const SeqExpr& a, const SeqExpr& b, Index first, Index last);
long double max_abs_deviation(std::span<const long double> values, long double target);

} // namespace parallel

} // namespace subideal::kernels
