#pragma once

/**
 * @file classifier.hpp
 * @brief Classification of the principal J-ideals generated by S.
 *
 * For S in J the chain
 *
 *     J(S)J  ⊆  JS+SJ+J(S)J  ⊆  <S>_J  ⊆  (S)_J^R  ⊆  (S)_J  ⊆  (S)
 *
 * is fully determined by whether (S) is J-soft: soft means every position
 * equals the B(H)-ideal (S); not soft means every inclusion from
 * JS+SJ+J(S)J upward is strict. Only the first link needs its own probe.
 */

#include "subideal/softness.hpp"

#include <array>
#include <string>
#include <vector>

namespace subideal {

enum class LinkStatus { Equal, Strict, Unknown };

std::string to_string(LinkStatus s);

enum class ChainPosition { NucleusJSJ, OneSidedSum, GeneralIdeal, RealLinearIdeal, LinearIdeal, BHIdeal };

std::string to_string(ChainPosition p);

struct ChainLink {
    ChainPosition lower;
    ChainPosition upper;
    LinkStatus status = LinkStatus::Unknown;
    std::string basis; ///< why the status holds
};

struct SubidealReport {
    SoftnessResult softness;
    Verdict is_bh_ideal;
    std::optional<IdealDesc> collapse_target;
    std::array<ChainLink, 5> chain;
    std::vector<SeqExpr> generators;
    IdealDesc j;
};

/// J(S)J = JS + SJ + J(S)J ? Yes when J is idempotent; No when the canonical
/// element gen_J * S of JS falls outside J(S)J; Unknown otherwise.
Verdict probe_chain_link(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg = {});

SubidealReport classify_principal(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg = {});

/// Combined generator sum(gens); the report keeps the original generators.
SubidealReport classify_finitely_generated(const std::vector<SeqExpr>& gens, const IdealDesc& j,
                                           const EngineConfig& cfg = {});

/// Is the linear J-ideal generated by S and T principal? Calling this
/// declares that S and T are simultaneously diagonalizable with disjoint
/// supports; the engine checks that s(S) and s(T) are O of each other.
Verdict two_generator_principality(const SeqExpr& s, const SeqExpr& t, const IdealDesc& j,
                                   const EngineConfig& cfg = {});

/// Is <S>_J non-linear? Yes exactly when (S) is not J-soft.
Verdict nonlinearity_witness(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg = {});

} // namespace subideal
