#pragma once

/**
 * @file compare.hpp
 * @brief Asymptotic comparison a_n = O(b_n) and a_n = o(b_n).
 *
 * Both sides are reduced to their O-equivalence class (asymptotic.hpp) and
 * compared exactly; that path never yields Unknown. The numeric fallback
 * samples log(a_n / b_n) on a geometric index grid and reads the trend of
 * the second half of the window. It only runs when forced through
 * ComparisonConfig::force_numeric; it can return Unknown.
 */

#include "subideal/seq_expr.hpp"
#include "subideal/verdict.hpp"

#include <vector>

namespace subideal {

struct ComparisonConfig {
    Index window_first = Index{1} << 4;
    Index window_last = Index{1} << 20;
    int grid_points = 64;
    /// Witness constant = bound_factor * observed sup of the ratio.
    double bound_factor = 2.0;
    double divergence_threshold = 1e3;
    double vanishing_threshold = 1e-3;
    /// Relative change below which the ratio counts as flat between checkpoints.
    double trend_slack = 0.05;
    /// Every index 1..dense_prefix is scanned when computing witness constants.
    Index dense_prefix = 1024;
    bool force_numeric = false;
};

/// Geometric grid of distinct indices from window_first to window_last.
std::vector<Index> sample_grid(const ComparisonConfig& cfg);

/// Decides a_n = O(b_n).
Verdict compare_O(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg = {});

/// Decides a_n = o(b_n) (for every eps, eventually a_n <= eps b_n).
Verdict compare_o(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg = {});

/// Sampling-only versions, exposed for cross-checking the symbolic path.
Verdict numeric_compare_O(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg = {});
Verdict numeric_compare_o(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg = {});

/// bound_factor * sup of a_n / b_n over 1..dense_prefix and the grid,
/// restricted to the indices after the last point where b_n = 0 < a_n.
/// The returned witness window starts there.
Witness ratio_witness(const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& cfg);

} // namespace subideal
