#pragma once

// Property checks shared by the unit suite and the acceptance gate. Each
// returns a tally so callers decide how to report.

#include "support.hpp"

#include <functional>
#include <string>

namespace subideal::test {

struct Tally {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what)
    {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }

    bool ok() const { return failures == 0; }
};

inline Tally monotonicity(ExprGen& gen, int count, Index span = 2000)
{
    Tally t;
    for (int i = 0; i < count; ++i) {
        const auto e = gen.expr();
        bool ok = true;
        long double prev = log_eval(e, 1);
        for (Index n = 2; n <= span && ok; ++n) {
            const long double cur = log_eval(e, n);
            // exact where possible, otherwise logs with rounding slack
            if (cur > prev + 1e-15L * (1 + std::fabs(prev))) {
                const auto a = eval_exact(e, n - 1), b = eval_exact(e, n);
                ok = a && b ? *b <= *a : reference_value(e, n) <= reference_value(e, n - 1);
            }
            prev = cur;
        }
        t.record(ok, "non-monotone: " + e.to_string());
    }
    return t;
}

inline Tally ampliation_algebra(ExprGen& gen, int count, Index span = 1000)
{
    Tally t;
    for (int i = 0; i < count; ++i) {
        const auto e = gen.expr();
        const Index m = 1 + gen.pick(4), k = 1 + gen.pick(4);
        const auto nested = SeqExpr::ampliate_node(m, SeqExpr::ampliate_node(k, e));
        const auto flat = SeqExpr::ampliate_node(m * k, e);
        const auto undo = SeqExpr::decimate_node(m, SeqExpr::ampliate_node(m, e));
        const auto base = normalized(e);
        bool ok = ampliate(base, 1) == base && ampliate(ampliate(base, k), m) == ampliate(base, m * k) &&
                  decimate(ampliate(base, m), m) == base;
        for (Index n = 1; n <= span && ok; ++n) {
            const auto x = eval_exact(e, n), y = eval_exact(undo, n);
            const auto a = eval_exact(nested, n), b = eval_exact(flat, n);
            ok = (x && y ? *x == *y : log_eval(e, n) == log_eval(undo, n)) &&
                 (a && b ? *a == *b : log_eval(nested, n) == log_eval(flat, n));
        }
        t.record(ok, "ampliation algebra fails for " + e.to_string());
    }
    return t;
}

/// A conclusive numeric verdict never contradicts the symbolic one.
inline Tally symbolic_numeric_agreement(ExprGen& gen, int count, Tally* conclusive = nullptr)
{
    Tally t;
    ComparisonConfig cfg;
    for (int i = 0; i < count; ++i) {
        const auto a = gen.expr(1);
        const auto b = gen.expr(1);
        const auto check = [&](const Verdict& sym, const Verdict& num, const char* rel) {
            if (conclusive) conclusive->record(!num.is_unknown(), "");
            t.record(num.is_unknown() || num.outcome() == sym.outcome(),
                     std::string(rel) + "(" + a.to_string() + ", " + b.to_string() + "): symbolic " +
                         to_string(sym.outcome()) + ", sampled " + to_string(num.outcome()));
        };
        check(compare_O(a, b), numeric_compare_O(a, b, cfg), "O");
        check(compare_o(a, b), numeric_compare_o(a, b, cfg), "o");
    }
    return t;
}

/// Membership-level commutativity, associativity and distributivity.
inline Tally semiring_laws(ExprGen& gen, int count, int probes = 6)
{
    Tally t;
    const auto same = [](const IdealDesc& x, const IdealDesc& y, const std::vector<SeqExpr>& etas) {
        for (const auto& eta : etas)
            if (member(eta, x).outcome() != member(eta, y).outcome()) return false;
        return ideal_equal(x, y).is_yes();
    };
    for (int i = 0; i < count; ++i) {
        const auto I = IdealDesc::principal(gen.generator());
        const auto J = IdealDesc::principal(gen.generator());
        const auto K = IdealDesc::principal(gen.generator());
        std::vector<SeqExpr> etas;
        for (int p = 0; p < probes; ++p) etas.push_back(gen.expr());
        using D = IdealDesc;
        const std::string tag = " for I=" + I.to_string() + " J=" + J.to_string() + " K=" + K.to_string();
        t.record(same(D::product(I, J), D::product(J, I), etas), "IJ != JI" + tag);
        t.record(same(D::sum(I, J), D::sum(J, I), etas), "I+J != J+I" + tag);
        t.record(same(D::product(D::product(I, J), K), D::product(I, D::product(J, K)), etas), "(IJ)K != I(JK)" + tag);
        t.record(same(D::product(I, D::sum(J, K)), D::sum(D::product(I, J), D::product(I, K)), etas),
                 "I(J+K) != IJ+IK" + tag);
        t.record(same(D::product(I, D::compact()), D::product(D::compact(), I), etas), "IK != KI" + tag);
    }
    return t;
}

/// Softness bit, B(H)-ideal verdict and chain collapse agree.
inline Tally report_coherence(ExprGen& gen, int count)
{
    Tally t;
    const auto J = IdealDesc::compact();
    for (int i = 0; i < count; ++i) {
        const auto s = gen.classic();
        const auto r = classify_principal(s, J);
        const auto soft = r.softness.verdict.outcome();
        bool ok = r.is_bh_ideal.outcome() == soft;
        for (std::size_t l = 1; l < r.chain.size(); ++l) {
            const auto st = r.chain[l].status;
            if (soft == Outcome::Yes) ok = ok && st == LinkStatus::Equal;
            if (soft == Outcome::No) ok = ok && st == LinkStatus::Strict;
        }
        ok = ok && (soft == Outcome::Yes) == r.collapse_target.has_value();
        ok = ok && (soft != Outcome::Yes) == nonlinearity_witness(s, J).is_yes();
        t.record(ok, "incoherent report for " + s.to_string());
    }
    return t;
}

inline bool same_report(const SubidealReport& a, const SubidealReport& b)
{
    if (a.softness.verdict.outcome() != b.softness.verdict.outcome()) return false;
    if (a.is_bh_ideal.outcome() != b.is_bh_ideal.outcome()) return false;
    if (a.collapse_target.has_value() != b.collapse_target.has_value()) return false;
    if (a.collapse_target && !(*a.collapse_target == *b.collapse_target)) return false;
    if (!(a.j == b.j) || a.generators.size() != b.generators.size()) return false;
    for (std::size_t i = 0; i < a.chain.size(); ++i)
        if (a.chain[i].status != b.chain[i].status || a.chain[i].basis != b.chain[i].basis) return false;
    return true;
}

inline Tally singleton_consistency(ExprGen& gen, int count)
{
    Tally t;
    for (int i = 0; i < count; ++i) {
        const auto s = gen.classic();
        const auto J = gen.pick(2) ? IdealDesc::compact() : IdealDesc::principal(s);
        t.record(same_report(classify_finitely_generated({s}, J), classify_principal(s, J)),
                 "singleton mismatch for " + s.to_string() + " in " + J.to_string());
    }
    return t;
}

} // namespace subideal::test
