#include "subideal/classifier.hpp"

namespace subideal {

std::string to_string(LinkStatus s)
{
    switch (s) {
    case LinkStatus::Equal: return "equal";
    case LinkStatus::Strict: return "strict";
    case LinkStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(ChainPosition p)
{
    switch (p) {
    case ChainPosition::NucleusJSJ: return "J(S)J";
    case ChainPosition::OneSidedSum: return "JS+SJ+J(S)J";
    case ChainPosition::GeneralIdeal: return "<S>_J";
    case ChainPosition::RealLinearIdeal: return "(S)_J^R";
    case ChainPosition::LinearIdeal: return "(S)_J";
    case ChainPosition::BHIdeal: return "(S)";
    }
    return {};
}

namespace {

// Throws on a provable violation; returns the Unknown verdict otherwise.
std::optional<Verdict> require_member(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg,
                                      const char* op)
{
    const auto v = member(s, j, cfg);
    if (v.is_no())
        throw PreconditionError(std::string(op) + ": " + s.to_string() + " is not a member of " + j.to_string() +
                                " (" + v.certificate().detail + ")");
    if (v.is_unknown()) return Verdict::unknown("membership of S in J is undecided: " + v.reason());
    return std::nullopt;
}

std::array<ChainLink, 5> empty_chain()
{
    using P = ChainPosition;
    constexpr auto u = LinkStatus::Unknown;
    return {{{P::NucleusJSJ, P::OneSidedSum, u, {}},
             {P::OneSidedSum, P::GeneralIdeal, u, {}},
             {P::GeneralIdeal, P::RealLinearIdeal, u, {}},
             {P::RealLinearIdeal, P::LinearIdeal, u, {}},
             {P::LinearIdeal, P::BHIdeal, u, {}}}};
}

LinkStatus status_of(const Verdict& v)
{
    if (v.is_yes()) return LinkStatus::Equal;
    if (v.is_no()) return LinkStatus::Strict;
    return LinkStatus::Unknown;
}

} // namespace

Verdict probe_chain_link(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg)
{
    if (auto u = require_member(s, j, cfg, "probe_chain_link")) return *u;

    const auto idempotent = ideal_equal(j, IdealDesc::power(j, 2), cfg);
    if (idempotent.is_yes())
        return idempotent.with_reason("J is idempotent (J^2 = J), so SJ, JS lie in J(S)J");

    const auto r = reduce(j);
    std::optional<SeqExpr> element;
    if (r.principal)
        element = *r.principal;
    else if (r.soft)
        element = multiply(*r.soft, *r.soft);

    if (element) {
        const auto candidate = multiply(*element, s);
        const auto nucleus = IdealDesc::product(j, IdealDesc::product(IdealDesc::principal(s), j));
        const auto v = member(candidate, nucleus, cfg);
        if (v.is_no()) {
            Certificate c = v.certificate();
            c.detail = candidate.to_string() + " lies in JS but not in J(S)J = " + reduce_product(nucleus).to_string() +
                       ": " + c.detail;
            return Verdict::no(std::move(c), v.symbolic());
        }
    }

    // soft (S) collapses the whole chain onto (S)
    const auto soft = is_soft(s, j, cfg);
    if (soft.verdict.is_yes())
        return soft.verdict.with_reason("(S) is J-soft, so J(S)J = (S) and the chain collapses");

    return Verdict::unknown("J is not idempotent and the canonical element of JS lies in J(S)J; "
                            "the link is not decided by the available tests");
}

SubidealReport classify_principal(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg)
{
    SubidealReport report{{Verdict::unknown("not evaluated"), std::nullopt},
                          Verdict::unknown("not evaluated"),
                          std::nullopt,
                          empty_chain(),
                          {s},
                          j};

    if (auto u = require_member(s, j, cfg, "classify_principal")) {
        report.softness = {*u, std::nullopt};
        report.is_bh_ideal = *u;
        for (auto& link : report.chain) link.basis = "softness undecided";
        return report;
    }

    report.softness = is_soft(s, j, cfg);
    report.is_bh_ideal = report.softness.verdict;

    const auto& soft = report.softness.verdict;
    if (soft.is_yes()) {
        report.collapse_target = eventually_zero(s) ? IdealDesc::finite_rank() : IdealDesc::principal(s);
        for (auto& link : report.chain) {
            link.status = LinkStatus::Equal;
            link.basis = "(S) is J-soft: every position collapses to (S)";
        }
        return report;
    }

    const auto probe = probe_chain_link(s, j, cfg);
    report.chain[0].status = status_of(probe);
    report.chain[0].basis = probe.is_no() ? probe.certificate().detail : probe.reason();

    for (std::size_t i = 1; i < report.chain.size(); ++i) {
        if (soft.is_no()) {
            report.chain[i].status = LinkStatus::Strict;
            report.chain[i].basis = i == 1 ? "S is not in (S)J, which contains JS+SJ+J(S)J"
                                           : "(S) is not J-soft: one equality would force all";
        } else {
            report.chain[i].status = LinkStatus::Unknown;
            report.chain[i].basis = "softness undecided: " + soft.reason();
        }
    }
    return report;
}

SubidealReport classify_finitely_generated(const std::vector<SeqExpr>& gens, const IdealDesc& j,
                                           const EngineConfig& cfg)
{
    if (gens.empty()) throw PreconditionError("classify_finitely_generated: needs at least one generator");
    for (const auto& g : gens) {
        const auto v = member(g, j, cfg);
        if (v.is_no())
            throw PreconditionError("classify_finitely_generated: generator " + g.to_string() +
                                    " is not a member of " + j.to_string());
    }
    SeqExpr combined = gens.front();
    for (std::size_t i = 1; i < gens.size(); ++i) combined = SeqExpr::sum(combined, gens[i]);

    auto report = classify_principal(combined, j, cfg);
    report.generators = gens;
    return report;
}

Verdict two_generator_principality(const SeqExpr& s, const SeqExpr& t, const IdealDesc& j, const EngineConfig& cfg)
{
    const auto st = compare_O(s, t, cfg.compare);
    const auto ts = compare_O(t, s, cfg.compare);
    if (st.is_no() || ts.is_no())
        throw PreconditionError("two_generator_principality: s(S) and s(T) are not equivalent (" +
                                (st.is_no() ? st.certificate().detail : ts.certificate().detail) + ")");
    if (st.is_unknown() || ts.is_unknown())
        return Verdict::unknown("equivalence of s(S) and s(T) is undecided");

    const auto soft = is_soft(SeqExpr::sum(s, t), j, cfg);
    if (soft.verdict.is_yes()) return soft.verdict.with_reason("({S,T}) is J-soft, so ({S,T})_J = (|S|+|T|)");
    if (soft.verdict.is_no()) {
        Certificate c = soft.verdict.certificate();
        c.detail = "({S,T}) is not J-soft: " + c.detail;
        return Verdict::no(std::move(c), soft.verdict.symbolic());
    }
    return soft.verdict;
}

Verdict nonlinearity_witness(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg)
{
    const auto soft = is_soft(s, j, cfg);
    if (soft.verdict.is_unknown()) return soft.verdict;
    if (soft.verdict.is_yes()) {
        Certificate c;
        c.window = soft.verdict.witness().window;
        c.detail = "(S) is J-soft: <S>_J = (S)_J = (S) is linear";
        return Verdict::no(std::move(c), soft.verdict.symbolic());
    }
    // i S in <S>_J would put S in (S)J
    Witness w;
    w.window = soft.verdict.certificate().window;
    return Verdict::yes(w, soft.verdict.symbolic())
        .with_reason("(S) is not J-soft; i*S lies in (S)_J but not in <S>_J: " + soft.verdict.certificate().detail);
}

} // namespace subideal
