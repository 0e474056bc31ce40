#include "support.hpp"

#include "subideal/oracle.hpp"

#include <doctest.h>

using namespace subideal;
using subideal::test::Big;
using subideal::test::reference_value;

namespace {

SeqExpr pw(Rational p, Rational q = 0)
{
    return SeqExpr::power_log(std::move(p), std::move(q));
}

SeqExpr geo(Rational r)
{
    return SeqExpr::geometric(std::move(r));
}

const IdealDesc KH = IdealDesc::compact();

IdealDesc prin(const SeqExpr& e)
{
    return IdealDesc::principal(e);
}

// s-numbers of the two halves of diag(1/n): odd positions 1, 1/3, 1/5, ... and even 1/2, 1/4, ...
// The even half is exactly dec(2, pow(1)); the odd half 1/(2n-1) is modelled by the
// equivalent 1/n = scale(2, dec(2, pow(1))).
SeqExpr odd_half()
{
    return SeqExpr::scale(2, decimate(pw(1), 2));
}

SeqExpr even_half()
{
    return decimate(pw(1), 2);
}

} // namespace

TEST_CASE("classify_principal examples")
{
    const auto g = geo(Rational(1, 2));
    const auto soft = classify_principal(g, KH);
    CHECK(soft.is_bh_ideal.is_yes());
    REQUIRE(soft.collapse_target);
    CHECK(*soft.collapse_target == prin(g));
    for (std::size_t i = 1; i < 5; ++i) CHECK(soft.chain[i].status == LinkStatus::Equal);

    const auto hard = classify_principal(pw(1), KH);
    CHECK(hard.is_bh_ideal.is_no());
    CHECK_FALSE(hard.collapse_target);
    for (std::size_t i = 1; i < 5; ++i) CHECK(hard.chain[i].status == LinkStatus::Strict);
    CHECK(hard.chain[0].status == LinkStatus::Equal); // K(H) is idempotent

    const auto fin = classify_principal(SeqExpr::finite({1, 1}), KH);
    CHECK(fin.is_bh_ideal.is_yes());
    REQUIRE(fin.collapse_target);
    CHECK(*fin.collapse_target == IdealDesc::finite_rank());

    CHECK_THROWS_AS(classify_principal(pw(1), prin(pw(2))), PreconditionError);
}

TEST_CASE("chain positions are listed in order")
{
    const auto r = classify_principal(pw(1), KH);
    CHECK(to_string(r.chain.front().lower) == "J(S)J");
    CHECK(to_string(r.chain.back().upper) == "(S)");
    for (std::size_t i = 1; i < r.chain.size(); ++i) CHECK(r.chain[i].lower == r.chain[i - 1].upper);
}

TEST_CASE("probe_chain_link")
{
    const auto strict = probe_chain_link(pw(1), prin(pw(1)));
    REQUIRE(strict.is_no());
    CHECK(strict.certificate().detail.find("pow(2)") != std::string::npos);
    CHECK(strict.certificate().detail.find("prin(pow(3))") != std::string::npos);

    CHECK(probe_chain_link(pw(1), KH).is_yes());
    CHECK(probe_chain_link(geo(Rational(1, 3)), KH).is_yes());
}

TEST_CASE("probe_chain_link on a geometric principal J")
{
    // gen*S = 4^-n against J(S)J = (8^-n); frozen expectation Yes, through softness
    const auto g = geo(Rational(1, 2));
    const auto v = probe_chain_link(g, prin(g));
    CHECK(v.is_yes());

    CHECK(member(geo(Rational(1, 4)), reduce_product(IdealDesc::product(prin(g), IdealDesc::product(prin(g), prin(g)))))
              .is_yes());
    // independent: 4^-n / 8^-ceil(n/2) is 2 at n = 1 and 2^(-n/2) for even n
    Big worst = 0;
    for (Index n = 1; n <= 2000; ++n) {
        const Big r = reference_value(geo(Rational(1, 4)), n) / reference_value(ampliate(geo(Rational(1, 8)), 2), n);
        worst = std::max(worst, r);
    }
    CHECK(static_cast<double>(worst) == doctest::Approx(2.0));
}

TEST_CASE("classify_finitely_generated")
{
    const auto pair = classify_finitely_generated({odd_half(), even_half()}, KH);
    CHECK(pair.is_bh_ideal.is_no());
    CHECK(pair.generators.size() == 2);

    const auto geos = classify_finitely_generated({geo(Rational(1, 2)), geo(Rational(1, 4))}, KH);
    CHECK(geos.is_bh_ideal.is_yes());
    REQUIRE(geos.collapse_target);
    CHECK(ideal_equal(*geos.collapse_target, prin(geo(Rational(1, 2)))).is_yes());
    CHECK(geos.softness.verdict.witness().k == 2);

    CHECK_THROWS_AS(classify_finitely_generated({}, KH), PreconditionError);
    CHECK_THROWS_AS(classify_finitely_generated({pw(1)}, prin(pw(2))), PreconditionError);
}

TEST_CASE("interleaved halves of diag(1/n) have the modelled s-numbers")
{
    const Index N = 2000;
    std::vector<std::complex<double>> odd(N), even(N);
    for (Index i = 1; i <= N; ++i) (i % 2 ? odd : even)[i - 1] = 1.0 / static_cast<double>(i);
    const auto so = singular_values(TruncatedOperator::diagonal(odd));
    const auto se = singular_values(TruncatedOperator::diagonal(even));
    for (Index n = 1; n <= N / 2; ++n) {
        CHECK(so[n - 1] == doctest::Approx(1.0 / (2.0 * n - 1)));
        CHECK(se[n - 1] == doctest::Approx(static_cast<double>(eval(even_half(), n).approx())));
        const double r = so[n - 1] / static_cast<double>(eval(odd_half(), n).approx());
        CHECK(r >= 0.5);
        CHECK(r <= 1.0 + 1e-12);
    }
}

TEST_CASE("two_generator_principality")
{
    CHECK(two_generator_principality(odd_half(), even_half(), KH).is_no());
    const auto g = geo(Rational(1, 2));
    CHECK(two_generator_principality(g, SeqExpr::scale(3, g), KH).is_yes());
    const auto f = SeqExpr::finite({1});
    CHECK(two_generator_principality(f, SeqExpr::scale(2, f), prin(pw(1))).is_yes());
    CHECK_THROWS_AS(two_generator_principality(g, pw(1), KH), PreconditionError);
}

TEST_CASE("nonlinearity_witness")
{
    CHECK(nonlinearity_witness(pw(1), KH).is_yes());
    CHECK(nonlinearity_witness(geo(Rational(1, 2)), KH).is_no());
    CHECK(nonlinearity_witness(SeqExpr::finite({1}), KH).is_no());
}

TEST_CASE("sequence-level facts behind the non-equality examples")
{
    // 1/(2n-1) is equivalent to 1/n; neither lies in (1/n)K(H)
    const auto rep = SeqExpr::scale(Rational(1, 2), pw(1));
    for (Index n = 1; n <= 1000; ++n) {
        const double r = (1.0 / (2.0 * n - 1)) / static_cast<double>(eval(rep, n).approx());
        CHECK(r >= 1.0);
        CHECK(r <= 2.0);
    }
    CHECK(member(rep, reduce_product(IdealDesc::product(prin(pw(1)), KH))).is_no());
}

TEST_CASE("unknown softness leaves the chain undecided")
{
    EngineConfig cfg;
    cfg.compare.force_numeric = true;
    cfg.k_max = 2;
    // 1/log(n+1): sampling cannot settle the decimation ratio on the default window
    const auto s = pw(0, 1);
    const auto r = classify_principal(s, KH, cfg);
    if (r.softness.verdict.is_unknown()) {
        CHECK(r.is_bh_ideal.is_unknown());
        for (std::size_t i = 1; i < 5; ++i) CHECK(r.chain[i].status == LinkStatus::Unknown);
        CHECK_FALSE(r.collapse_target);
    } else {
        CHECK(r.softness.verdict.is_no());
    }
}
