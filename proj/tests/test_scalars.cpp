#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistlab/poly.hpp"

using namespace twistlab;

namespace {

PolyHG H() { return PolyHG::var_h(); }
PolyHG G() { return PolyHG::var_g(); }

PolyHG random_poly(std::mt19937& rng, int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-6, 6), nterms(1, max_terms);
    PolyHG p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(MonomialHG{deg(rng), deg(rng)}, Rational(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic is normalized") {
    Rational a(2, -4);
    CHECK(a.num() == -1);
    CHECK(a.den() == 2);
    CHECK(Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, 4).pow(-2) == Rational(16, 9));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational::rising(Rational(1, 2), 3) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
}

TEST_CASE("polynomial products") {
    CHECK((H() + G()) * (H() - G()) == H() * H() - G() * G());
    PolyHG p = H() * H() + H() * G() + G() * G() * G();
    CHECK(p.truncated(2) == H() * H() + H() * G());
    // (1 + 2h)(1 - 2h) truncated at order 1 is 1
    PolyHG q = (PolyHG(1) + Rational(2) * H()) * (PolyHG(1) - Rational(2) * H());
    CHECK(q.truncated(1) == PolyHG(1));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20260811);
    for (int i = 0; i < 50; ++i) {
        PolyHG a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("truncation is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        PolyHG a = random_poly(rng), b = random_poly(rng);
        for (int n : {0, 1, 2, 3}) {
            CHECK((a * b).truncated(n) == (a.truncated(n) * b.truncated(n)).truncated(n));
            CHECK((a + b).truncated(n) == a.truncated(n) + b.truncated(n));
        }
    }
}

TEST_CASE("series exp and log") {
    int N = 6;
    TruncSeries zero(PolyHG(), N);
    CHECK(series_exp(zero) == TruncSeries::one(N));
    CHECK(series_log(TruncSeries::one(N)) == TruncSeries(PolyHG(), N));

    // exp(2h) at N=2 -> 1 + 2h + 2h^2
    TruncSeries twoh(Rational(2) * H(), 2);
    PolyHG expect = PolyHG(1) + Rational(2) * H() + Rational(2) * (H() * H());
    CHECK(series_exp(twoh) == TruncSeries(expect, 2));

    // log(1-2h) at N=3 -> -2h - 2h^2 - 8h^3/3
    TruncSeries s(PolyHG(1) - Rational(2) * H(), 3);
    PolyHG l = Rational(-2) * H() - Rational(2) * (H() * H()) - Rational(8, 3) * (H() * H() * H());
    CHECK(series_log(s) == TruncSeries(l, 3));

    // exp(log(1+h+g)) at N=6
    TruncSeries u(PolyHG(1) + H() + G(), 6);
    CHECK(series_exp(series_log(u)) == u);
}

TEST_CASE("series log inverts exp on random series") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg(0, 5), coeff(-9, 9);
    for (int i = 0; i < 25; ++i) {
        PolyHG p;
        for (int t = 0; t < 20; ++t) {
            int dh = deg(rng), dg = deg(rng);
            if (dh + dg == 0) dh = 1;  // zero constant term
            p.add_term(MonomialHG{dh, dg}, Rational(coeff(rng)));
        }
        TruncSeries s(p, 6);
        CHECK(series_log(series_exp(s)) == s);
    }
}

TEST_CASE("exp is additive for commuting series") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        PolyHG pa = random_poly(rng), pb = random_poly(rng);
        pa -= PolyHG(pa.constant_term());
        pb -= PolyHG(pb.constant_term());
        TruncSeries a(pa, 5), b(pb, 5);
        CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    }
}

TEST_CASE("series preconditions are enforced") {
    CHECK_THROWS(series_exp(TruncSeries(PolyHG(1), 4)));
    CHECK_THROWS(series_log(TruncSeries(H(), 4)));
    CHECK_THROWS(series_inverse(TruncSeries(H(), 4)));
    TruncSeries inv = series_inverse(TruncSeries(PolyHG(1) - Rational(2) * H(), 4));
    PolyHG geo;
    for (int k = 0; k <= 4; ++k) geo += Rational(2).pow(k) * H().pow(k);
    CHECK(inv == TruncSeries(geo, 4));
}

TEST_CASE("rational function simplification") {
    RatFun a(H() * H() - G() * G(), H() + G());
    CHECK(a == RatFun(H() - G()));
    CHECK(a.is_polynomial());

    RatFun b(Rational(2) * H() * G(), Rational(2) * H());
    CHECK(b == RatFun(G()));

    RatFun c(H() + G(), H() + G());
    CHECK(c == RatFun(Rational(1)));

    CHECK_THROWS(RatFun(H(), PolyHG()));
}

TEST_CASE("ratfun equality is an equivalence on random samples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        PolyHG n = random_poly(rng), d = random_poly(rng), s = random_poly(rng);
        if (d.is_zero() || s.is_zero()) continue;
        RatFun a(n, d);
        RatFun b(n * s, d * s);  // same function, different presentation
        CHECK(a == b);
        CHECK(a + b == Rational(2) * RatFun(n, d));
        RatFun diff = a - b;
        CHECK(diff.is_zero());
    }
}

TEST_CASE("poly gcd properties") {
    std::mt19937 rng(42);
    for (int i = 0; i < 20; ++i) {
        PolyHG a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2), c = random_poly(rng, 3, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        PolyHG d = poly_gcd(a * c, b * c);
        // c divides the gcd of (ac, bc)
        CHECK_NOTHROW(poly_div_exact(d, poly_gcd(d, c)));
        PolyHG g = poly_gcd(a, b);
        if (!g.is_zero()) {
            CHECK_NOTHROW(poly_div_exact(a, g));
            CHECK_NOTHROW(poly_div_exact(b, g));
        }
    }
    CHECK(poly_gcd(H() * H() - G() * G(), H() + G()) == H() + G());
}
