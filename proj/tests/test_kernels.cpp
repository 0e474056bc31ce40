#include "support.hpp"

#include "subideal/kernels.hpp"

#include <doctest.h>

#include <cmath>

using namespace subideal;
namespace k = subideal::kernels;

TEST_CASE("ratio conventions")
{
    const auto f = SeqExpr::finite({1});
    const auto p = SeqExpr::power_log(1);
    CHECK(k::log_ratio_at(f, p, 2) == -INFINITY);
    CHECK(k::log_ratio_at(p, f, 2) == INFINITY);
    CHECK(k::log_ratio_at(p, p, 9) == 0);
}

TEST_CASE("serial and parallel kernels agree bit for bit")
{
    test::ExprGen gen(501);
    for (int t = 0; t < 25; ++t) {
        const auto a = gen.expr();
        const auto b = gen.expr();
        const Index first = 1 + gen.pick(50), last = first + 20'000;

        CHECK(k::serial::log_values(a, first, last) == k::parallel::log_values(a, first, last));

        std::vector<Index> idx;
        for (Index n = first; n <= last; n += 1 + gen.pick(300)) idx.push_back(n);
        const auto s = k::serial::sample_log_ratio(a, b, idx);
        const auto p = k::parallel::sample_log_ratio(a, b, idx);
        REQUIRE(s.size() == p.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[i].index == p[i].index);
            CHECK((s[i].log_ratio == p[i].log_ratio || (std::isnan(s[i].log_ratio) && std::isnan(p[i].log_ratio))));
        }

        const auto es = k::serial::log_ratio_extrema(a, b, first, last);
        const auto ep = k::parallel::log_ratio_extrema(a, b, first, last);
        CHECK(es.max_log == ep.max_log);
        CHECK(es.min_log == ep.min_log);
        CHECK(es.argmax == ep.argmax);
        CHECK(es.argmin == ep.argmin);

        const auto vals = k::serial::log_values(b, first, last);
        CHECK(k::serial::max_abs_deviation(vals, -3.0L) == k::parallel::max_abs_deviation(vals, -3.0L));
    }
}

TEST_CASE("extrema ties resolve to the smallest index")
{
    const auto p = SeqExpr::power_log(1);
    const auto e = k::parallel::log_ratio_extrema(p, p, 10, 5000);
    CHECK(e.argmax == 10);
    CHECK(e.argmin == 10);
    const auto s = k::serial::log_ratio_extrema(SeqExpr::power_log(1), ampliate(SeqExpr::power_log(1), 2), 1, 100);
    CHECK(s.argmax == 1);
    // ceil(k/2)/k is 1/2 at every even k; the float ties are only approximate
    CHECK(std::exp(s.min_log) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.argmin % 2 == 0);
    CHECK(k::log_ratio_at(SeqExpr::power_log(1), ampliate(SeqExpr::power_log(1), 2), 2) - s.min_log < 1e-15L);
}

TEST_CASE("empty windows")
{
    const auto p = SeqExpr::power_log(1);
    CHECK(k::serial::log_values(p, 5, 4).empty());
    CHECK(k::parallel::log_values(p, 5, 4).empty());
}
