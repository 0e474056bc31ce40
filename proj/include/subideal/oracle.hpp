#pragma once

/**
 * @file oracle.hpp
 * @brief Finite-window numeric checks on truncated diagonal and dense operators.
 *
 * These checks are independent of the normal-form algebra: they evaluate
 * sequences index by index and scan the window with the parallel kernels.
 */

#include "subideal/softness.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace subideal {

class TruncatedOperator {
public:
    static constexpr Index max_dense_dimension = 512;

    static TruncatedOperator diagonal(std::vector<std::complex<double>> entries);
    /// Real diagonal diag(e_1, ..., e_N).
    static TruncatedOperator diagonal_of(const SeqExpr& e, Index n);
    static TruncatedOperator dense(Eigen::MatrixXcd matrix);

    Index dimension() const noexcept;
    bool is_diagonal() const noexcept { return diagonal_; }
    const std::vector<std::complex<double>>& entries() const;
    const Eigen::MatrixXcd& matrix() const;

private:
    TruncatedOperator() = default;
    bool diagonal_ = true;
    std::vector<std::complex<double>> entries_;
    Eigen::MatrixXcd matrix_;
};

/// Non-increasing singular values.
std::vector<double> singular_values(const TruncatedOperator& op);

struct OracleReport {
    /// How observed values are held against the target.
    enum class Relation { Near, AtLeast, AtMost };

    std::string name;
    IndexRange window;
    std::vector<std::pair<Index, double>> observed;
    double target = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::Near;
    bool passed = false;
    std::string note;
};

std::string to_string(OracleReport::Relation r);

/// (1/k) / (1/(j+1)) for k = mj + r tends to 1/m; checked over the upper decade of 1..n.
OracleReport verify_ratio_1_over_m(Index m, Index n = 1'000'000, double tol = 1e-3);

/// (1/(mj+r)^2) / (1/(j+1)^3) must exceed `threshold` over the upper half of 1..n.
OracleReport verify_divergence_E2(Index m, Index n = 1'000'000, double threshold = 1e3);

/// Splits c = x * y with x in I and y in J on the diagonal model of size n.
/// Throws PreconditionError unless c is a member of IJ.
OracleReport verify_product_split(const SeqExpr& c, const IdealDesc& i, const IdealDesc& j, Index n,
                                  const EngineConfig& cfg = {});

/// s_n(S) <= C * D_k(s(S))_n * s_n(T) from the witness start up to n.
/// Throws PreconditionError unless `res` is a Yes with a structured witness.
OracleReport verify_softness_witness(const SeqExpr& s, const SoftnessResult& res, Index n);

/// a_n <= constant * b_n on first..last.
OracleReport verify_domination(std::string name, const SeqExpr& a, const SeqExpr& b, double constant, Index first,
                               Index last);

} // namespace subideal
