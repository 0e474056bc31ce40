#include "subideal/softness.hpp"

#include <functional>

namespace subideal {

namespace {

struct Family {
    std::string name;
    std::function<SeqExpr(Index)> witness; // T(m), always a member of J
    Index extension_k;                     // k used when the grid is exhausted
};

SoftnessResult accept(const SeqExpr& s, Index k, Index m, SeqExpr t, const EngineConfig& cfg, bool symbolic)
{
    Witness w = ratio_witness(s, SeqExpr::product(ampliate(s, k), t), cfg.compare);
    w.k = k;
    w.m = m;
    SoftnessWitness detail{k, m, std::move(t), w.constant};
    return {Verdict::yes(w, symbolic), std::move(detail)};
}

bool bound_holds(const SeqExpr& s, Index k, const SeqExpr& t, const EngineConfig& cfg, bool& unknown)
{
    const auto rhs = SeqExpr::product(ampliate(s, k), t);
    if (!cfg.compare.force_numeric) return detail::dominated(s, rhs);
    const auto v = numeric_compare_O(s, rhs, cfg.compare);
    if (v.is_unknown()) unknown = true;
    return v.is_yes();
}

// (S) is K(H)-soft iff S_{kn} = o(S_n) for some k > 1.
SoftnessResult soft_in_compact(const SeqExpr& s, const EngineConfig& cfg)
{
    bool unknown = false;
    std::optional<Verdict> first_no;
    Index found = 0;
    for (Index k = 2; k <= std::max<Index>(2, cfg.k_max); ++k) {
        auto v = compare_o(decimate(s, k), s, cfg.compare);
        if (v.is_yes()) {
            found = k;
            break;
        }
        if (v.is_unknown()) unknown = true;
        else if (!first_no) first_no = v;
    }
    if (!found) {
        if (unknown || !first_no)
            return {Verdict::unknown("decimation test inconclusive for every k up to " + std::to_string(cfg.k_max)),
                    std::nullopt};
        Certificate c = first_no->certificate();
        c.detail = "S_{kn} is not o(S_n) for any k in 2.." + std::to_string(cfg.k_max) + ": " + c.detail;
        return {Verdict::no(std::move(c), first_no->symbolic()), std::nullopt};
    }

    // T = D_m(S) lies in K(H); find the smallest m with S = O(D_k(S) D_m(S)).
    bool t_unknown = false;
    for (Index m = 1; m <= cfg.m_max; ++m)
        if (bound_holds(s, found, ampliate(s, m), cfg, t_unknown))
            return accept(s, found, m, ampliate(s, m), cfg, !cfg.compare.force_numeric);
    if (!cfg.compare.force_numeric) {
        const Index m = detail::minimal_order(
            [&](Index j) { return detail::dominated(s, SeqExpr::product(ampliate(s, found), ampliate(s, j))); });
        return accept(s, found, m, ampliate(s, m), cfg, true);
    }
    return {Verdict::unknown("decimation test passed with k = " + std::to_string(found) +
                             " but no ampliated witness T was confirmed by sampling"),
            std::nullopt};
}

} // namespace

SoftnessResult is_soft(const SeqExpr& s, const IdealDesc& j, const EngineConfig& cfg)
{
    const auto pre = member(s, j, cfg);
    if (pre.is_no())
        throw PreconditionError("is_soft: " + s.to_string() + " is not a member of " + j.to_string() + " (" +
                                pre.certificate().detail + ")");
    if (pre.is_unknown())
        return {Verdict::unknown("membership of S in J is undecided: " + pre.reason()), std::nullopt};

    const auto r = reduce(j);
    if (eventually_zero(s)) return accept(s, 1, 1, s, cfg, true);
    if (r.compact) return soft_in_compact(s, cfg);

    std::vector<Family> families;
    if (r.principal) {
        const SeqExpr p = *r.principal;
        families.push_back({"principal", [p](Index m) { return ampliate(p, m); }, 2});
    }
    if (r.soft) {
        const SeqExpr q = *r.soft;
        // D_m(q) D_m(S) lies in (q)K(H) because S is compact
        families.push_back(
            {"soft", [q, s](Index m) { return SeqExpr::product(ampliate(q, m), ampliate(s, m)); }, 4});
    }

    bool unknown = false;
    for (Index k = 1; k <= cfg.k_max; ++k)
        for (Index m = 1; m <= cfg.m_max; ++m)
            for (const auto& f : families) {
                auto t = f.witness(m);
                if (bound_holds(s, k, t, cfg, unknown)) return accept(s, k, m, t, cfg, !cfg.compare.force_numeric);
            }

    if (cfg.compare.force_numeric) {
        if (unknown)
            return {Verdict::unknown("no grid point (k, m) up to (" + std::to_string(cfg.k_max) + ", " +
                                     std::to_string(cfg.m_max) + ") gave a conclusive bound"),
                    std::nullopt};
        Certificate c;
        c.window = {cfg.compare.window_first, cfg.compare.window_last};
        c.detail = "sampling rejected s(S) = O(D_k(s(S)) s(T)) at every grid point";
        return {Verdict::no(std::move(c), false), std::nullopt};
    }

    // Exact decision: (S) is J-soft iff S lies in (S)J.
    const auto decision = member(s, IdealDesc::product(IdealDesc::principal(s), j), cfg);
    if (decision.is_no()) {
        Certificate c = decision.certificate();
        c.detail = "S is not in (S)J: " + c.detail;
        return {Verdict::no(std::move(c), true), std::nullopt};
    }
    for (const auto& f : families) {
        const Index k = f.extension_k;
        const auto works = [&](Index m) { return detail::dominated(s, SeqExpr::product(ampliate(s, k), f.witness(m))); };
        // the predicate is monotone in m; probe far out before committing to a search
        if (!works(Index{1} << 40)) continue;
        const Index m = detail::minimal_order(works);
        return accept(s, k, m, f.witness(m), cfg, true);
    }
    return {Verdict::unknown("S lies in (S)J but no structured witness T was found"), std::nullopt};
}

} // namespace subideal
