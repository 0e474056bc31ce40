#include "subideal/kernels.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subideal::kernels {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

// Ties resolve to the smaller index so serial and parallel agree exactly.
void absorb(RatioExtrema& acc, long double v, Index n)
{
    if (v > acc.max_log || (v == acc.max_log && n < acc.argmax)) {
        acc.max_log = v;
        acc.argmax = n;
    }
    if (v < acc.min_log || (v == acc.min_log && n < acc.argmin)) {
        acc.min_log = v;
        acc.argmin = n;
    }
}

void merge(RatioExtrema& acc, const RatioExtrema& other)
{
    if (other.argmax != 0) absorb(acc, other.max_log, other.argmax);
    if (other.argmin != 0) absorb(acc, other.min_log, other.argmin);
}

RatioExtrema empty_extrema() { return {-kInf, kInf, 0, 0}; }

} // namespace

long double log_ratio_at(const SeqExpr& a, const SeqExpr& b, Index n)
{
    const long double la = log_eval(a, n);
    if (la == -kInf) return -kInf;
    const long double lb = log_eval(b, n);
    if (lb == -kInf) return kInf;
    return la - lb;
}

namespace serial {

std::vector<long double> log_values(const SeqExpr& e, Index first, Index last)
{
    if (last < first) return {};
    std::vector<long double> out(last - first + 1);
    for (Index n = first; n <= last; ++n) out[n - first] = log_eval(e, n);
    return out;
}

std::vector<RatioSample> sample_log_ratio(const SeqExpr& a, const SeqExpr& b, std::span<const Index> indices)
{
    std::vector<RatioSample> out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = {indices[i], log_ratio_at(a, b, indices[i])};
    return out;
}

RatioExtrema log_ratio_extrema(const SeqExpr& a, const SeqExpr& b, Index first, Index last)
{
    RatioExtrema acc = empty_extrema();
    for (Index n = first; n <= last; ++n) absorb(acc, log_ratio_at(a, b, n), n);
    return acc;
}

long double max_abs_deviation(std::span<const long double> values, long double target)
{
    long double worst = 0.0L;
    for (long double v : values) worst = std::max(worst, std::fabs(v - target));
    return worst;
}

} // namespace serial

namespace parallel {

std::vector<long double> log_values(const SeqExpr& e, Index first, Index last)
{
    if (last < first) return {};
    const auto count = static_cast<long long>(last - first + 1);
    std::vector<long double> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = log_eval(e, first + static_cast<Index>(i));
    return out;
}

std::vector<RatioSample> sample_log_ratio(const SeqExpr& a, const SeqExpr& b, std::span<const Index> indices)
{
    const auto count = static_cast<long long>(indices.size());
    std::vector<RatioSample> out(indices.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        const auto n = indices[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = {n, log_ratio_at(a, b, n)};
    }
    return out;
}

RatioExtrema log_ratio_extrema(const SeqExpr& a, const SeqExpr& b, Index first, Index last)
{
    RatioExtrema result = empty_extrema();
    if (last < first) return result;
    const auto count = static_cast<long long>(last - first + 1);
#pragma omp parallel
    {
        RatioExtrema local = empty_extrema();
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < count; ++i) {
            const Index n = first + static_cast<Index>(i);
            absorb(local, log_ratio_at(a, b, n), n);
        }
#pragma omp critical(subideal_extrema)
        merge(result, local);
    }
    return result;
}

long double max_abs_deviation(std::span<const long double> values, long double target)
{
    long double worst = 0.0L;
    const auto count = static_cast<long long>(values.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < count; ++i)
        worst = std::max(worst, std::fabs(values[static_cast<std::size_t>(i)] - target));
    return worst;
}

} // namespace parallel

} // namespace subideal::kernels
