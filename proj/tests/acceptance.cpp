// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "properties.hpp"

#include "subideal/oracle.hpp"
#include "subideal/query.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace subideal;
using namespace subideal::test;

namespace {

constexpr double kSoftBudget = 0.1;      // seconds per softness query
constexpr double kOracleBudget = 1.0;    // seconds per oracle run
constexpr double kPropertyBudget = 30.0; // seconds for the whole property suite
constexpr double kRatioTol = 1e-3;
constexpr double kDivergence = 1e3;
constexpr Index kOracleN = 1'000'000;
constexpr Index kSplitN = 100'000;

constexpr int kCoherenceCases = 50;
constexpr int kSemiringCases = 100;
constexpr int kAlgebraCases = 100;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void tally(Check& o, const Tally& t, const std::string& name)
{
    o.expect(t.cases > 0, name + ": no cases");
    o.expect(t.ok(), name + ": " + std::to_string(t.failures) + "/" + std::to_string(t.cases) + " failed, first: " +
                         t.first_failure);
}

SeqExpr pw(Rational p)
{
    return SeqExpr::power_log(std::move(p));
}

Check softness_regression()
{
    Check o;
    RunResult yes, no;
    const double ty = seconds([&] { yes = run(parse_query(std::string_view("soft geo(1/2) KH"))); });
    const double tn = seconds([&] { no = run(parse_query(std::string_view("soft pow(1) KH"))); });
    const auto g = is_soft(SeqExpr::geometric(Rational(1, 2)), IdealDesc::compact());
    o.expect(g.verdict.is_yes() && g.verdict.witness().k == 2, "geo(1/2) is not soft with k=2");
    o.expect(yes.exit_code == 0 && yes.output.rfind("Yes", 0) == 0 && yes.output.find("k=2") != std::string::npos,
             "cli: " + yes.output);
    o.expect(is_soft(pw(1), IdealDesc::compact()).verdict.is_no(), "pow(1) is not No");
    o.expect(no.exit_code == 0 && no.output.rfind("No", 0) == 0, "cli: " + no.output);
    o.expect(ty < kSoftBudget, "geo query took " + fmt("%.3f s", ty));
    o.expect(tn < kSoftBudget, "pow query took " + fmt("%.3f s", tn));
    if (o.ok) o.detail = "times " + fmt("%.4f", ty) + " s, " + fmt("%.4f s", tn);
    return o;
}

Check ratio_oracle()
{
    Check o;
    std::string times;
    for (Index m : {2, 3, 5}) {
        OracleReport r;
        const double t = seconds([&] { r = verify_ratio_1_over_m(m, kOracleN, kRatioTol); });
        o.expect(r.passed, "m=" + std::to_string(m) + ": " + r.note);
        o.expect(std::abs(r.observed.back().second - 1.0 / m) <= kRatioTol, "m=" + std::to_string(m) + " tail off");
        o.expect(t < kOracleBudget, "m=" + std::to_string(m) + " took " + fmt("%.3f s", t));
        times += (times.empty() ? "" : ", ") + fmt("%.3f", t);
    }
    if (o.ok) o.detail = "times " + times + " s";
    return o;
}

Check divergence_oracle()
{
    Check o;
    for (Index m : {1, 4}) {
        OracleReport r;
        const double t = seconds([&] { r = verify_divergence_E2(m, kOracleN, kDivergence); });
        o.expect(r.passed, "m=" + std::to_string(m) + ": " + r.note);
        o.expect(t < kOracleBudget, "m=" + std::to_string(m) + " took " + fmt("%.3f s", t));
    }
    const auto v = member(pw(2), IdealDesc::principal(pw(3)));
    o.expect(v.is_no() && v.symbolic(), "member(pow(2), prin(pow(3))) is not a symbolic No");
    return o;
}

Check collapse_classification()
{
    Check o;
    const auto KH = IdealDesc::compact();
    const auto soft = classify_principal(SeqExpr::geometric(Rational(1, 2)), KH);
    for (std::size_t i = 2; i < soft.chain.size(); ++i)
        o.expect(soft.chain[i].status == LinkStatus::Equal, "geo(1/2): link " + std::to_string(i) + " not equal");
    o.expect(soft.is_bh_ideal.is_yes(), "geo(1/2) does not collapse");

    const auto hard = classify_principal(pw(1), KH);
    for (std::size_t i = 2; i < hard.chain.size(); ++i)
        o.expect(hard.chain[i].status == LinkStatus::Strict, "pow(1): link " + std::to_string(i) + " not strict");
    o.expect(nonlinearity_witness(pw(1), KH).is_yes(), "pow(1) has no nonlinearity witness");

    ExprGen gen(1004);
    tally(o, report_coherence(gen, kCoherenceCases), "coherence");
    return o;
}

Check finitely_generated()
{
    Check o;
    const auto even = decimate(pw(1), 2);
    const auto odd = SeqExpr::scale(2, even);
    o.expect(two_generator_principality(odd, even, IdealDesc::compact()).is_no(), "interleaved pair is not No");
    ExprGen gen(1005);
    tally(o, singleton_consistency(gen, kCoherenceCases), "singleton");
    return o;
}

Check semiring()
{
    Check o;
    ExprGen gen(1006);
    tally(o, semiring_laws(gen, kSemiringCases), "semiring");
    const auto cube = reduce_product(IdealDesc::power(IdealDesc::principal(pw(1)), 3));
    o.expect(ideal_equal(cube, IdealDesc::principal(pw(3))).is_yes(), "prin(pow(1))^3 differs from prin(pow(3))");
    for (const auto& eta : {pw(2), pw(3), pw(4), SeqExpr::power_log(3, 1), SeqExpr::power_log(3, -1)})
        o.expect(member(eta, cube).outcome() == member(eta, IdealDesc::principal(pw(3))).outcome(),
                 "membership differs for " + eta.to_string());
    return o;
}

Check factorization()
{
    Check o;
    const auto g = IdealDesc::principal(SeqExpr::geometric(Rational(1, 2)));
    const std::vector<std::tuple<SeqExpr, IdealDesc, IdealDesc>> triples = {
        {SeqExpr::geometric(Rational(1, 4)), g, g},
        {pw(3), IdealDesc::principal(pw(1)), IdealDesc::principal(pw(2))},
        {pw(1), IdealDesc::compact(), IdealDesc::compact()},
    };
    for (const auto& [c, I, J] : triples) {
        const auto r = verify_product_split(c, I, J, kSplitN);
        o.expect(r.passed, c.to_string() + ": " + r.note);
        double err = 0;
        for (const auto& [n, v] : r.observed) err = std::max(err, std::abs(v - 1.0));
        o.expect(err == 0.0, c.to_string() + ": reconstruction error " + fmt("%.3g", err));
    }
    return o;
}

Check sequence_algebra()
{
    Check o;
    const double t = seconds([&] {
        ExprGen a(1008), b(1009), c(1010), d(1011), e(1012), f(1013);
        tally(o, monotonicity(a, kAlgebraCases), "monotonicity");
        tally(o, ampliation_algebra(b, kAlgebraCases), "ampliation");
        tally(o, symbolic_numeric_agreement(c, kAlgebraCases), "agreement");
        tally(o, semiring_laws(d, kSemiringCases), "semiring");
        tally(o, report_coherence(e, kCoherenceCases), "coherence");
        tally(o, singleton_consistency(f, kCoherenceCases), "singleton");
    });
    o.expect(t < kPropertyBudget, "property suite took " + fmt("%.1f s", t));
    if (o.ok) o.detail = "property suite " + fmt("%.2f s", t);
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
        {"1 softness regression", softness_regression},
        {"2 ratio-limit oracle", ratio_oracle},
        {"3 divergence oracle", divergence_oracle},
        {"4 collapse classification", collapse_classification},
        {"5 finitely generated", finitely_generated},
        {"6 semiring properties", semiring},
        {"7 factorization oracle", factorization},
        {"8 sequence algebra", sequence_algebra},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Check o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("threw: ") + e.what();
        }
        failed += !o.ok;
        std::printf("%s  %s%s%s\n", o.ok ? "PASS" : "FAIL", name, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
