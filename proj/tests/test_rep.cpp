#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistlab/rep.hpp"
#include "twistlab/twist.hpp"

using namespace twistlab;

namespace {
const Presentation& sl12() {
    static Presentation p = sl12_presentation();
    return p;
}
const Presentation& gl2() {
    static Presentation p = gl2_presentation();
    return p;
}
}  // namespace

TEST_CASE("fundamental representation satisfies every relation") {
    RepTable t = derive_fundamental_rep();
    CHECK(verify_representation(t, sl12()));
    // spot checks from the tables
    PolyMatrix comm = t[Gen::H] * t[Gen::Xp] - t[Gen::Xp] * t[Gen::H];
    CHECK(comm == Rational(2) * t[Gen::Xp]);
    CHECK((t[Gen::Vp] * t[Gen::Vp]).is_zero());
    // block supports: X+ lives on the odd block, v's connect even<->odd
    CHECK(t[Gen::Xp].at(1, 2) == PolyHG(1));
    CHECK(t[Gen::Vp].at(0, 2) == PolyHG(1));
    CHECK(t[Gen::Z].at(0, 0) == PolyHG(2));
}

TEST_CASE("spin representations of gl(2)") {
    for (int j2 : {1, 2, 3, 4}) {
        RepTable t = spin_rep_gl2(j2);
        CHECK(verify_representation(t, gl2()));
        // nilpotency of the raising operator
        PolyMatrix pw = PolyMatrix::identity(j2 + 1);
        for (int k = 0; k <= j2; ++k) pw = pw * t[Gen::Xp];
        CHECK(pw.is_zero());
    }
    CHECK_THROWS(spin_rep_gl2(5));
    // j=1/2: rho(H) = diag(1,-1)
    RepTable half = spin_rep_gl2(1);
    CHECK(half[Gen::H].at(0, 0) == PolyHG(1));
    CHECK(half[Gen::H].at(1, 1) == PolyHG(Rational(-1)));
    // Z scalar is configurable and still a representation
    CHECK(verify_representation(spin_rep_gl2(2, Rational(7, 3)), gl2()));
}

TEST_CASE("evaluation is an algebra homomorphism") {
    RepTable t = derive_fundamental_rep();
    EnvelopingAlgebra A(sl12(), 4);
    std::mt19937 rng(77);
    const auto& gens = sl12().generators();
    std::uniform_int_distribution<int> pick(0, (int)gens.size() - 1), deg(0, 3), coeff(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        Element a = A.unit(), b = A.unit();
        for (int i = deg(rng); i > 0; --i) a = A.mul(a, A.gen(gens[pick(rng)]));
        for (int i = deg(rng); i > 0; --i) b = A.mul(b, A.gen(gens[pick(rng)]));
        a = Rational(coeff(rng)) * a;
        PolyMatrix ma = evaluate_element(a, t, 3), mb = evaluate_element(b, t, 3);
        CHECK(evaluate_element(A.mul(a, b), t, 3) == ma * mb);
    }
}

TEST_CASE("sigma evaluates exactly through nilpotency") {
    RepTable t = derive_fundamental_rep();
    // rho(sigma) = 2h rho(X+), higher terms vanish
    CHECK(rho_sigma(t) == Rational(2) * (PolyHG::var_h() * t[Gen::Xp]));
    CHECK(rho_sigma_over_2h(t) == t[Gen::Xp]);
    // e^{-sigma} evaluates to I - 2h rho(X+)
    EnvelopingAlgebra A(sl12(), 6);
    TwistKit tk(A);
    PolyMatrix ems = evaluate_element(tk.exp_csigma(Rational(-1)), t, 3);
    PolyMatrix expect = PolyMatrix::identity(3) - Rational(2) * (PolyHG::var_h() * t[Gen::Xp]);
    CHECK(ems == expect);
    // j=1/2 spin rep: sigma = 2h rho(X+) exactly as well
    RepTable half = spin_rep_gl2(1);
    CHECK(rho_sigma(half) == Rational(2) * (PolyHG::var_h() * half[Gen::Xp]));
}

TEST_CASE("F Finv evaluates to the 9x9 identity") {
    RepTable t = derive_fundamental_rep();
    GradedSpace V = GradedSpace::fundamental();
    EnvelopingAlgebra A(sl12(), 6);
    TwistKit tk(A);
    Tensor2 ff = A.mul(tk.twist(), tk.twist_inverse());
    CHECK(evaluate_tensor2(ff, t, V) == PolyMatrix::identity(9));
}

TEST_CASE("9x9 R-matrix block-decomposes into the printed sector blocks") {
    RepTable t = derive_fundamental_rep();
    auto blocks = r_matrix_fundamental_blocks(t);
    CHECK(blocks.off_block_entries == 0);
    CHECK(blocks.ee == PolyMatrix::identity(1));
    CHECK(blocks.eo == rcheck_matrix());
    CHECK(blocks.oo == rbar_matrix());
    // oe sector carries the inverse of the eo block
    CHECK(blocks.oe * blocks.eo == PolyMatrix::identity(2));
    CHECK(blocks.eo * blocks.oe == PolyMatrix::identity(2));
    // h=g=0 gives the identity
    Rational zero(0);
    CHECK(blocks.full.substituted(&zero, &zero) == PolyMatrix::identity(9));
}

TEST_CASE("universal R evaluated at order N matches the exact R to degree N") {
    RepTable t = derive_fundamental_rep();
    GradedSpace V = GradedSpace::fundamental();
    PolyMatrix exact = r_matrix_exact(t);
    for (int N : {2, 4}) {
        EnvelopingAlgebra A(sl12(), N);
        TwistKit tk(A);
        PolyMatrix approx = evaluate_tensor2(tk.universal_r(), t, V);
        CHECK(approx == exact.truncated(N));
    }
}

TEST_CASE("spin-1/2 evaluation of the universal R reproduces Rbar") {
    RepTable half = spin_rep_gl2(1);  // Z -> identity, matching the odd block of the fundamental
    PolyMatrix r = r_matrix_exact(half);
    CHECK(r == rbar_matrix());
}

TEST_CASE("graded Yang-Baxter equation holds exactly") {
    RepTable t = derive_fundamental_rep();
    GradedSpace V = GradedSpace::fundamental();
    PolyMatrix r = r_matrix_exact(t);
    CHECK(ybe_residual(r, V).is_zero());
    // triangularity: (P R)^2 = 1
    PolyMatrix pr = graded_flip_matrix(V) * r;
    CHECK(pr * pr == PolyMatrix::identity(9));
}

TEST_CASE("Rbar alone satisfies the YBE on the 8-dimensional triple space") {
    GradedSpace V2 = GradedSpace::even(2);
    CHECK(ybe_residual(rbar_matrix(), V2).is_zero());
    PolyMatrix pr = graded_flip_matrix(V2) * rbar_matrix();
    CHECK(pr * pr == PolyMatrix::identity(4));
}

TEST_CASE("sign-flipped Rbar entry breaks the YBE") {
    GradedSpace V = GradedSpace::fundamental();
    RepTable t = derive_fundamental_rep();
    auto blocks = r_matrix_fundamental_blocks(t);
    PolyMatrix mutated = blocks.full;
    // flip the h^2 - g^2 entry: in the unpermuted basis it connects
    // (1,1) <- (2,2), i.e. row 1*3+1, col 2*3+2
    mutated.at(4, 8) = -mutated.at(4, 8);
    CHECK(!ybe_residual(mutated, V).is_zero());

    // and on the 4x4 block alone
    PolyMatrix mbar = rbar_matrix();
    mbar.at(0, 3) = -mbar.at(0, 3);
    CHECK(!ybe_residual(mbar, GradedSpace::even(2)).is_zero());
}

TEST_CASE("YBE in spin representations for any central scalar") {
    for (auto z : {Rational(0), Rational(1), Rational(-2, 3)}) {
        RepTable t = spin_rep_gl2(1, z);
        GradedSpace V = GradedSpace::even(2);
        CHECK(ybe_residual(r_matrix_exact(t), V).is_zero());
    }
    // spin-1 (3-dimensional, all even)
    RepTable t1 = spin_rep_gl2(2);
    CHECK(ybe_residual(r_matrix_exact(t1), GradedSpace::even(3)).is_zero());
}
