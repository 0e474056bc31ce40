#include "support.hpp"

#include "subideal/query.hpp"
#include "subideal/report.hpp"

#include <doctest.h>

using namespace subideal;

TEST_CASE("parse examples")
{
    const auto a = parse_seq("amp(2,pow(1))");
    REQUIRE(a.kind() == SeqExpr::Kind::Ampliate);
    CHECK(a.order() == 2);
    CHECK(a.inner() == SeqExpr::power_log(1));

    const auto i = parse_ideal("prod(prin(pow(1)),KH)");
    REQUIRE(i.kind() == IdealDesc::Kind::Product);
    CHECK(i.lhs() == IdealDesc::principal(SeqExpr::power_log(1)));
    CHECK(i.rhs() == IdealDesc::compact());

    CHECK(parse_seq(" pow( 0.5 , -1/4 ) ") == SeqExpr::power_log(Rational(1, 2), Rational(-1, 4)));
    CHECK(parse_seq("fin(3,1,1/2)").values().size() == 3);
    CHECK(parse_ideal("pow(prin(geo(1/2)),3)").exponent() == 3);
    CHECK(parse_ideal("sum(FH,KH)").kind() == IdealDesc::Kind::Sum);
}

TEST_CASE("parse errors are tagged with positions")
{
    CHECK_THROWS_AS(parse_seq("geo(3/2)"), DomainError);
    CHECK_THROWS_AS(parse_seq("pow(0)"), DomainError);
    CHECK_THROWS_AS(parse_seq("fin(1,2)"), DomainError);

    const auto at = [](std::string_view text) -> std::size_t {
        try {
            parse_seq(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(at("pow(1") == 5);
    CHECK(at("pow(1))") == 6);
    CHECK(at("foo(1)") == 0);
    CHECK(at("sum(pow(1),bar(2))") == 11);
    CHECK(at("amp(0,pow(1))") == 4);
    CHECK(at("amp(1/2,pow(1))") == 4);
    CHECK(at("") == 0);
    CHECK_THROWS_AS(parse_ideal("prin(pow(1)"), ParseError);
    CHECK_THROWS_AS(parse_ideal("pow(KH,0)"), ParseError);
    CHECK_THROWS_AS(parse_ideal("XH"), ParseError);
}

TEST_CASE("render and parse round-trip")
{
    test::ExprGen gen(401);
    for (int i = 0; i < 200; ++i) {
        const auto e = gen.expr(3);
        const auto text = e.to_string();
        const auto back = parse_seq(text);
        CHECK(back == e);
        CHECK(back.to_string() == text);
    }
    for (const char* text :
         {"pow(1)", "pow(1/2,2)", "pow(0,1)", "geo(1/2)", "fin(4,2,1)", "scale(3/2,geo(1/3))", "amp(1,pow(1))",
          "dec(3,amp(3,pow(2)))", "sum(geo(1/2),geo(1/4))", "max(pow(1),geo(1/2))", "prod(pow(1),pow(2,-1))"})
        CHECK(parse_seq(text).to_string() == text);
    for (const char* text : {"KH", "FH", "prin(pow(1))", "prod(prin(pow(1)),KH)", "sum(prin(geo(1/2)),FH)",
                             "pow(prin(pow(1)),3)", "prod(pow(KH,2),sum(KH,prin(fin(1))))"})
        CHECK(parse_ideal(text).to_string() == text);
}

TEST_CASE("queries round-trip")
{
    for (const char* line :
         {"soft geo(1/2) KH", "member pow(2) prin(pow(3)) --window 16:4096 --grid 8,8",
          "classify pow(1) KH --json", "classify-fg geo(1/2) geo(1/4) KH --force-numeric",
          "principality2 pow(1) scale(2,pow(1)) KH --tol 0.01", "equal KH pow(KH,2)", "oracle ratio 3 --window 1:1000",
          "oracle split pow(3) prin(pow(1)) prin(pow(2))", "oracle softness geo(1/2) KH --json"}) {
        const auto q = parse_query(std::string_view(line));
        CHECK(render_query(q) == line);
        CHECK(parse_query(render_tokens(q)) == q);
    }
    const auto q = parse_query(std::string_view("member pow(1) KH --tol 0.1"));
    REQUIRE(q.options.tol);
    CHECK(*q.options.tol == 0.1);

    CHECK_THROWS_AS(parse_query(std::string_view("soft geo(1/2)")), UsageError);
    CHECK_THROWS_AS(parse_query(std::string_view("frobnicate geo(1/2) KH")), UsageError);
    CHECK_THROWS_AS(parse_query(std::string_view("soft geo(1/2) KH --window 9:3")), UsageError);
    CHECK_THROWS_AS(parse_query(std::string_view("oracle wobble 2")), UsageError);
    CHECK_THROWS_AS(parse_query(std::string_view("soft geo(2) KH")), DomainError);
}

TEST_CASE("run delivers verdicts and exit codes")
{
    const auto yes = run(parse_query(std::string_view("soft geo(1/2) KH")));
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.rfind("Yes", 0) == 0);
    CHECK(yes.output.find("k=2") != std::string::npos);

    const auto no = run(parse_query(std::string_view("soft pow(1) KH")));
    CHECK(no.exit_code == 0);
    CHECK(no.output.rfind("No", 0) == 0);

    const auto unknown = run(parse_query(std::string_view("member pow(2) prin(pow(3)) --force-numeric")));
    CHECK(unknown.exit_code == 2);

    const auto err = run(parse_query(std::string_view("soft pow(1) prin(pow(2))")));
    CHECK(err.exit_code == 1);

    const auto oracle = run(parse_query(std::string_view("oracle divergence 1 --window 1:10")));
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("FAILED") != std::string::npos);
}

TEST_CASE("machine-readable output is complete and deterministic")
{
    const auto q = parse_query(std::string_view("classify pow(1) KH --json"));
    const auto first = run(q);
    const auto second = run(q);
    CHECK(first.output == second.output);
    const auto doc = nlohmann::json::parse(first.output);
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["config"]["k_max"] == 32);
    const auto& r = doc["result"];
    for (const char* key : {"softness", "is_BH_ideal", "collapse_target", "chain", "generators", "J"})
        CHECK(r.contains(key));
    CHECK(r["is_BH_ideal"]["outcome"] == "No");
    CHECK(r["chain"].size() == 5);
    for (int i = 1; i < 5; ++i) CHECK(r["chain"][i]["status"] == "strict");

    const auto soft = nlohmann::json::parse(run(parse_query(std::string_view("soft geo(1/2) KH --json"))).output);
    CHECK(soft["result"]["verdict"]["witness"]["k"] == 2);
    CHECK(soft["result"]["witness_detail"]["T"] == "amp(2,geo(1/2))");

    const auto oracle = nlohmann::json::parse(run(parse_query(std::string_view("oracle ratio 2 --json"))).output);
    for (const char* key : {"check", "window", "observed", "target", "tolerance", "passed"})
        CHECK(oracle["result"].contains(key));
    CHECK(oracle["result"]["passed"] == true);
}
