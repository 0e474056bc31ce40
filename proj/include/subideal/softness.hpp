#pragma once

#include "subideal/ideal.hpp"

#include <optional>

namespace subideal {

/// A structured witness for s(S) = O(D_k(s(S)) * s(T)) with T in J.
struct SoftnessWitness {
    Index k = 1;
    Index m = 1;
    SeqExpr t_witness;
    double constant = 1.0;
};

struct SoftnessResult {
    Verdict verdict;
    std::optional<SoftnessWitness> witness_detail;
};

/// Is the principal ideal (S) J-soft, i.e. (S)J = (S)?
///
/// For J = K(H) the decision is the decimation test S_{kn} = o(S_n) for some
/// k in 2..k_max. Otherwise it searches structured witnesses T (ampliated
/// generators of J) on the (k, m) grid; outside numeric mode the verdict is
/// exact over the grammar and the search extends past the grid when needed.
///
/// Throws PreconditionError when S is provably not a member of J.
SoftnessResult is_soft(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg = {});

} // namespace subideal
