#include <catch2/catch_amalgamated.hpp>

#include "twistlab/superalgebra.hpp"

using namespace twistlab;

TEST_CASE("gl(2) bracket table") {
    auto gl2 = gl2_presentation();
    CHECK(gl2.bracket(Gen::H, Gen::Xp) == GenComb{{Gen::Xp, Rational(2)}});
    CHECK(gl2.bracket(Gen::Xp, Gen::H) == GenComb{{Gen::Xp, Rational(-2)}});
    CHECK(gl2.bracket(Gen::Xp, Gen::Xm) == GenComb{{Gen::H, Rational(1)}});
    CHECK(gl2.bracket(Gen::Z, Gen::Xm).empty());
    CHECK_THROWS(gl2.bracket(Gen::Vp, Gen::Z));
}

TEST_CASE("sl(1/2) bracket table") {
    auto sl = sl12_presentation();
    CHECK(sl.bracket(Gen::Vp, Gen::Vbp) == GenComb{{Gen::Xp, Rational(1)}});
    // anticommutator is symmetric for odd pairs
    CHECK(sl.bracket(Gen::Vbp, Gen::Vp) == GenComb{{Gen::Xp, Rational(1)}});
    CHECK(sl.bracket(Gen::Vbp, Gen::Vm) == GenComb{{Gen::Z, Rational(1, 2)}, {Gen::H, Rational(1, 2)}});
    CHECK(sl.bracket(Gen::Xp, Gen::Vm) == GenComb{{Gen::Vp, Rational(-1)}});
    CHECK(sl.bracket(Gen::Xm, Gen::Vbp) == GenComb{{Gen::Vbm, Rational(1)}});
    CHECK(sl.bracket(Gen::Z, Gen::Vbp) == GenComb{{Gen::Vbp, Rational(-1)}});
    CHECK(sl.bracket(Gen::Vp, Gen::Vp).empty());
}

TEST_CASE("graded antisymmetry holds for both presentations") {
    CHECK(gl2_presentation().antisymmetry_holds());
    CHECK(sl12_presentation().antisymmetry_holds());
}

TEST_CASE("graded Jacobi residuals vanish on all triples") {
    CHECK(gl2_presentation().validate().empty());   // 4^3 triples
    CHECK(sl12_presentation().validate().empty());  // 8^3 triples
}

TEST_CASE("a deliberately flipped structure constant breaks Jacobi") {
    auto sl = sl12_presentation();
    sl.set_bracket(Gen::Vbp, Gen::Vm, {{Gen::Z, Rational(1, 2)}, {Gen::H, Rational(-1, 2)}});
    CHECK_FALSE(sl.validate().empty());
}

TEST_CASE("subalgebra checks") {
    auto gl2 = gl2_presentation();
    auto sl = sl12_presentation();
    CHECK(subalgebra_check(gl2, sl));

    // {Z} alone is closed: only [Z,Z] = 0 is examined
    Presentation justz("z", {Gen::Z});
    justz.set_bracket(Gen::Z, Gen::Z, {});
    CHECK(subalgebra_check(justz, sl));

    // {H, X+, v-} is not closed: [X+, v-] = -v+ leaves the span
    Presentation bad("bad", {Gen::H, Gen::Xp, Gen::Vm});
    bad.set_bracket(Gen::H, Gen::Xp, {{Gen::Xp, Rational(2)}});
    bad.set_bracket(Gen::H, Gen::Vm, {{Gen::Vm, Rational(-1)}});
    bad.set_bracket(Gen::Xp, Gen::Vm, {});
    CHECK_FALSE(subalgebra_check(bad, sl));

    // generators must be a subset
    CHECK_FALSE(subalgebra_check(sl, gl2));
}

TEST_CASE("gl(2) is exactly the even part of sl(1/2)") {
    auto sl = sl12_presentation();
    auto gl2 = gl2_presentation();
    for (Gen x : gl2.generators()) {
        CHECK(parity_of(x) == Parity::Even);
        for (Gen y : gl2.generators()) CHECK(gl2.bracket(x, y) == sl.bracket(x, y));
    }
    for (Gen x : sl.generators())
        if (!gl2.contains(x)) CHECK(parity_of(x) == Parity::Odd);
}
