#include <catch2/catch_amalgamated.hpp>

#include "twistlab/json_io.hpp"
#include "twistlab/suites.hpp"

using namespace twistlab;

TEST_CASE("polynomial and series JSON round trips") {
    PolyHG p = PolyHG::monomial(2, 0, Rational(1)) + PolyHG::monomial(1, 1, Rational(-22, 7)) +
               PolyHG::monomial(0, 0, Rational(BigInt("123456789012345678901234567890"), BigInt(13)));
    CHECK(poly_from_json(to_json(p)) == p);

    TruncSeries s(p, 4);
    CHECK(series_from_json(to_json(s)) == s);

    // schema fields are exactly as documented
    Json j = to_json(s);
    CHECK(j.contains("terms"));
    CHECK(j["order"] == 4);
    CHECK(j["terms"][0].contains("h"));
    CHECK(j["terms"][0].contains("g"));
    CHECK(j["terms"][0]["num"].is_string());
    CHECK(j["terms"][0]["den"].is_string());
}

TEST_CASE("presentation JSON round trip") {
    Presentation sl = sl12_presentation();
    Json j = to_json(sl);
    Presentation back = presentation_from_json(j);
    CHECK(back.validate().empty());
    CHECK(back.antisymmetry_holds());
    for (Gen x : sl.generators())
        for (Gen y : sl.generators()) CHECK(back.bracket(x, y) == sl.bracket(x, y));
    // malformed input is rejected
    Json bad = j;
    bad["generators"][0]["parity"] = "odd";  // Z is even
    CHECK_THROWS(presentation_from_json(bad));
}

TEST_CASE("element and tensor serialization shape") {
    EnvelopingAlgebra alg(sl12_presentation(), 2);
    TwistKit tk(alg);
    Json je = to_json(tk.sigma());
    CHECK(je["terms"].size() == 2);
    CHECK(je["terms"][0]["monomial"].size() == kNumGens);

    Json jt = tensor_to_json(tk.twist());
    CHECK(jt["rank"] == 2);
    for (auto& t : jt["terms"]) CHECK(t["slots"].size() == 2);
}

TEST_CASE("relation set export schema") {
    frt::FrtKit kit = frt::FrtKit::standard();
    Json j = rules_to_json(kit.rules());
    CHECK(j.size() == 40);
    for (auto& rel : j) {
        CHECK(rel["lhs"].size() == 2);
        for (auto& term : rel["rhs"]) {
            CHECK(term.contains("coeff"));
            CHECK(term.contains("word"));
        }
    }
}

TEST_CASE("reports are byte-identical for a fixed config") {
    SuiteConfig cfg;
    cfg.suite = "validate-algebras";
    Report a = run_suite(cfg), b = run_suite(cfg);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.all_pass());
}

TEST_CASE("report status semantics") {
    Report r;
    r.suite = "demo";
    r.checks.push_back(Check::boolean("ok", true, ""));
    CHECK(r.all_pass());
    r.checks.push_back(Check::inconclusive("deep", "", "budget"));
    CHECK_FALSE(r.all_pass());
    CHECK(r.any_inconclusive());
    CHECK_FALSE(r.any_fail());
    r.checks.push_back(Check::residual("bad", 3, ""));
    CHECK(r.any_fail());  // inconclusive never masks fail
}
