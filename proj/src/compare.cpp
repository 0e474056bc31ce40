#include "subideal/compare.hpp"

#include "subideal/asymptotic.hpp"
#include "subideal/kernels.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

namespace subideal {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

IndexRange window_of(const ComparisonConfig& cfg) { return {cfg.window_first, cfg.window_last}; }

double clamp_constant(long double log_c)
{
    if (log_c == -kInf) return 1.0;
    if (log_c > std::log(static_cast<long double>(DBL_MAX))) return DBL_MAX;
    return static_cast<double>(std::exp(log_c));
}

// A handful of grid ratios as evidence for a No.
std::vector<RatioSample> evidence(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    const auto grid = sample_grid(cfg);
    std::vector<Index> picks;
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / 8);
    for (std::size_t i = 0; i < grid.size(); i += stride) picks.push_back(grid[i]);
    if (picks.empty() || picks.back() != grid.back()) picks.push_back(grid.back());
    return kernels::serial::sample_log_ratio(a, b, picks);
}

struct Trend {
    std::vector<RatioSample> samples; // division-by-zero points removed
    bool b_vanishes_under_a = false;  // last grid point has b_n = 0 < a_n
    long double mid = 0, q3 = 0, end = 0, sup = -kInf;
};

Trend read_trend(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    const auto grid = sample_grid(cfg);
    auto raw = kernels::parallel::sample_log_ratio(a, b, grid);
    Trend t;
    t.b_vanishes_under_a = !raw.empty() && raw.back().log_ratio == kInf;
    for (const auto& s : raw)
        if (s.log_ratio != kInf) t.samples.push_back(s);
    const auto n = t.samples.size();
    if (n > 0) {
        t.mid = t.samples[n / 2].log_ratio;
        t.q3 = t.samples[(3 * n) / 4].log_ratio;
        t.end = t.samples[n - 1].log_ratio;
        for (const auto& s : t.samples) t.sup = std::max(t.sup, s.log_ratio);
    }
    return t;
}

Certificate numeric_certificate(const Trend& t, const ComparisonConfig& cfg, std::string detail)
{
    Certificate c;
    c.window = window_of(cfg);
    c.evidence = t.samples;
    c.detail = std::move(detail);
    return c;
}

std::string fmt_log(long double v)
{
    std::ostringstream os;
    os.precision(6);
    if (v == kInf) return "inf";
    if (v == -kInf) return "0";
    os << std::exp(static_cast<double>(std::clamp<long double>(v, -700.0L, 700.0L)));
    return os.str();
}

} // namespace

std::vector<Index> sample_grid(const ComparisonConfig& cfg)
{
    const Index lo = std::max<Index>(1, cfg.window_first);
    const Index hi = std::max(lo, cfg.window_last);
    const int points = std::max(2, cfg.grid_points);
    std::vector<Index> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const long double span = std::log(static_cast<long double>(hi) / static_cast<long double>(lo));
    for (int i = 0; i < points; ++i) {
        const long double t = static_cast<long double>(i) / static_cast<long double>(points - 1);
        auto n = static_cast<Index>(std::llround(static_cast<long double>(lo) * std::exp(span * t)));
        n = std::clamp(n, lo, hi);
        if (grid.empty() || n > grid.back()) grid.push_back(n);
    }
    if (grid.back() != hi) grid.push_back(hi);
    return grid;
}

Witness ratio_witness(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    std::vector<Index> indices;
    const Index dense = std::min(cfg.dense_prefix, cfg.window_last);
    for (Index n = 1; n <= dense; ++n) indices.push_back(n);
    for (Index n : sample_grid(cfg))
        if (n > dense) indices.push_back(n);

    const auto samples = kernels::parallel::sample_log_ratio(a, b, indices);
    Index first = 1;
    for (const auto& s : samples)
        if (s.log_ratio == kInf) first = s.index + 1;
    long double sup = -kInf;
    for (const auto& s : samples)
        if (s.index >= first) sup = std::max(sup, s.log_ratio);

    Witness w;
    w.constant = sup == -kInf ? 1.0 : clamp_constant(sup + std::log(static_cast<long double>(cfg.bound_factor)));
    w.window = {first, std::max(first, cfg.window_last)};
    return w;
}

Verdict numeric_compare_O(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    const Trend t = read_trend(a, b, cfg);
    if (t.b_vanishes_under_a)
        return Verdict::no(numeric_certificate(t, cfg, "right-hand side vanishes in the tail while the left does not"),
                           false);
    if (t.samples.size() < 4) return Verdict::unknown("too few usable samples in the window");

    const long double slack = std::log1p(static_cast<long double>(cfg.trend_slack));
    if (std::max(t.q3, t.end) <= t.mid + slack) {
        Witness w;
        w.constant = t.sup == -kInf ? 1.0 : clamp_constant(t.sup + std::log(static_cast<long double>(cfg.bound_factor)));
        w.window = window_of(cfg);
        return Verdict::yes(w, false);
    }
    if (t.end > std::log(static_cast<long double>(cfg.divergence_threshold)) && t.q3 > t.mid + slack &&
        t.end > t.q3 + slack)
        return Verdict::no(numeric_certificate(t, cfg,
                                               "ratio grows monotonically past the divergence threshold (final ratio " +
                                                   fmt_log(t.end) + ")"),
                           false);
    return Verdict::unknown("ratio still rising inside the window (final ratio " + fmt_log(t.end) +
                            ") without crossing the divergence threshold");
}

Verdict numeric_compare_o(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    const Trend t = read_trend(a, b, cfg);
    if (t.b_vanishes_under_a)
        return Verdict::no(numeric_certificate(t, cfg, "right-hand side vanishes in the tail while the left does not"),
                           false);
    if (t.samples.size() < 4) return Verdict::unknown("too few usable samples in the window");

    const long double slack = std::log1p(static_cast<long double>(cfg.trend_slack));
    const long double vanish = std::log(static_cast<long double>(cfg.vanishing_threshold));
    if (t.end < vanish && (t.end == -kInf || (t.end < t.mid - slack && t.q3 <= t.mid && t.end <= t.q3))) {
        Witness w;
        w.constant = t.sup == -kInf ? 1.0 : clamp_constant(t.sup + std::log(static_cast<long double>(cfg.bound_factor)));
        w.window = window_of(cfg);
        return Verdict::yes(w, false);
    }
    if (t.end >= vanish && t.end >= t.mid - slack)
        return Verdict::no(numeric_certificate(t, cfg, "ratio stays above the vanishing threshold without decaying (final ratio " +
                                                           fmt_log(t.end) + ")"),
                           false);
    return Verdict::unknown("ratio decays inside the window but has not reached the vanishing threshold (final ratio " +
                            fmt_log(t.end) + ")");
}

Verdict compare_O(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    if (cfg.force_numeric) return numeric_compare_O(a, b, cfg);
    const auto ca = asymptotic_class(a);
    const auto cb = asymptotic_class(b);
    if (compare_classes(ca, cb) <= 0) return Verdict::yes(ratio_witness(a, b, cfg), true);
    Certificate c;
    c.window = window_of(cfg);
    c.evidence = evidence(a, b, cfg);
    c.detail = describe_class_gap(ca, cb);
    return Verdict::no(std::move(c), true);
}

Verdict compare_o(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg)
{
    if (cfg.force_numeric) return numeric_compare_o(a, b, cfg);
    const auto ca = asymptotic_class(a);
    const auto cb = asymptotic_class(b);
    if (ca.zero || compare_classes(ca, cb) < 0) return Verdict::yes(ratio_witness(a, b, cfg), true);
    Certificate c;
    c.window = window_of(cfg);
    c.evidence = evidence(a, b, cfg);
    c.detail = describe_class_gap(ca, cb);
    return Verdict::no(std::move(c), true);
}

} // namespace subideal
