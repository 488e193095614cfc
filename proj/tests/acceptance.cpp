// Acceptance suite: every closed-form result of the source is re-derived
// and checked exactly, one criterion per block, with hard runtime caps
// where they are part of the contract. Exit status is nonzero if any
// criterion fails; inconclusive results block acceptance as well.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "twistlab/frt_local.hpp"
#include "twistlab/rep.hpp"
#include "twistlab/suites.hpp"
#include "twistlab/twist.hpp"

using namespace twistlab;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void criterion(int number, const std::string& what, bool ok, double seconds, double limit = 0.0) {
    bool time_ok = limit <= 0.0 || seconds < limit;
    if (!ok || !time_ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2fs%s)\n", (ok && time_ok) ? "PASS" : "FAIL", number,
                what.c_str(), seconds, limit > 0 ? (", limit " + std::to_string((int)limit) + "s").c_str() : "");
}

bool checks_pass(const std::vector<Check>& cs) {
    for (auto& c : cs)
        if (c.status != Status::Pass) return false;  // inconclusive blocks acceptance
    return true;
}

}  // namespace

int main() {
    // 1. Algebra validation: graded Jacobi residuals for all 8^3 sl(1/2)
    //    triples exactly zero. Runtime < 1 s.
    {
        Timer t;
        Presentation sl = sl12_presentation();
        bool ok = sl.validate().empty() && sl.antisymmetry_holds() &&
                  gl2_presentation().validate().empty() && subalgebra_check(gl2_presentation(), sl);
        criterion(1, "graded Jacobi over all 8^3 triples is exactly zero", ok, t.seconds(), 1.0);
    }

    // 2. Cocycle: F satisfies the 2-cocycle identity and both counit conditions with
    //    exactly zero residual at rank-3 order N=4. Runtime < 60 s.
    {
        Timer t;
        EnvelopingAlgebra alg(sl12_presentation(), 4);
        TwistKit tk(alg);
        bool ok = checks_pass(tk.verify_cocycle()) && checks_pass(tk.verify_twist_element());
        criterion(2, "cocycle and counit conditions exact at N=4", ok, t.seconds(), 60.0);
    }

    // 3. Closed-form match at N=5: Delta and S for all gl(2) generators
    //    and for vb+, v- against their printed closed forms.
    {
        Timer t;
        EnvelopingAlgebra glalg(gl2_presentation(), 5);
        TwistKit tgl(glalg);
        EnvelopingAlgebra slalg(sl12_presentation(), 5);
        TwistKit tsl(slalg);
        bool ok = checks_pass(tgl.match_gl2_closed_forms()) && checks_pass(tsl.match_sl12_closed_forms());
        criterion(3, "printed coproduct/antipode closed forms match line by line at N=5", ok, t.seconds());
    }

    // 4. Universal R: both constructions agree at N=5, triangularity at
    //    N=5, intertwiner for all 6 generating elements at N=4.
    {
        Timer t;
        EnvelopingAlgebra alg5(sl12_presentation(), 5);
        TwistKit tk5(alg5);
        Tensor2 route_a = alg5.mul(alg5.flip(tk5.twist()), tk5.twist_inverse());
        bool ok = route_a == tk5.universal_r_product_form();
        ok = ok && alg5.mul(alg5.flip(route_a), route_a) == alg5.tensor_unit<2>();
        EnvelopingAlgebra alg4(sl12_presentation(), 4);
        TwistKit tk4(alg4);
        const Tensor2& r4 = tk4.universal_r();
        for (Gen x : {Gen::Z, Gen::H, Gen::Xp, Gen::Xm, Gen::Vbp, Gen::Vm})
            ok = ok && tk4.intertwiner_residual(r4, x) == 0;
        criterion(4, "both universal-R constructions agree at N=5, R21 R = 1 at N=5, intertwiners at N=4", ok,
                  t.seconds());
    }

    // 5. Fundamental R-matrix: exact block decomposition (1) + Rcheck +
    //    Rcheck^{-1} + Rbar entry by entry; graded YBE exact on the
    //    27-dimensional space. Runtime < 10 s.
    {
        Timer t;
        RepTable rep = derive_fundamental_rep();
        auto blocks = r_matrix_fundamental_blocks(rep);
        bool ok = blocks.off_block_entries == 0;
        ok = ok && blocks.ee == PolyMatrix::identity(1);
        ok = ok && blocks.eo == rcheck_matrix();
        ok = ok && blocks.oe * blocks.eo == PolyMatrix::identity(2);
        ok = ok && blocks.oo == rbar_matrix();
        GradedSpace V = GradedSpace::fundamental();
        ok = ok && ybe_residual(blocks.full, V).is_zero();
        PolyMatrix pr = graded_flip_matrix(V) * blocks.full;
        ok = ok && pr * pr == PolyMatrix::identity(9);
        criterion(5, "9x9 R = (1) + Rcheck + Rcheck^{-1} + Rbar exactly; graded YBE exact", ok, t.seconds(),
                  10.0);
    }

    // 6. Jordanian relations and the {A, H', X, Y} Hopf display at N=5.
    {
        Timer t;
        EnvelopingAlgebra alg(gl2_presentation(), 5);
        TwistKit tk(alg);
        bool ok = checks_pass(tk.jordanian_check());
        criterion(6, "Jordanian commutators and their Hopf display match at N=5", ok, t.seconds());
    }

    // 7. FRT: derived relations equivalent to the printed blocks both ways; all
    //    nine detT commutators match the table (coefficients +-2g,
    //    h-free); g=0 centrality; sdetM central within the default
    //    budget; M M^{-1} = M^{-1} M = I3; Delta and eps are algebra
    //    maps; antipode axiom under sdetM = 1. Runtime < 5 min.
    {
        Timer t;
        bool ok = true;
        frt::FrtKit kit = frt::FrtKit::standard();
        ok = ok && checks_pass(kit.relation_audit());
        ok = ok && checks_pass(frt::cross_check_block_relations(kit));
        ok = ok && checks_pass(kit.det_t_suite());
        Rational zero(0);
        frt::FrtKit kit0 = frt::FrtKit::specialized(nullptr, &zero);
        for (uint8_t x = 0; x < frt::kGens; ++x)
            ok = ok && kit0.commutator(frt::FreeElt::of(x), kit0.det_t_element()).is_zero();
        frt::FrtLocal loc(kit);
        ok = ok && checks_pass(loc.localization_consistency());
        ok = ok && checks_pass(loc.t_inverse_checks());
        ok = ok && checks_pass(loc.sdet_centrality());
        ok = ok && checks_pass(loc.m_inverse_checks());
        ok = ok && checks_pass(loc.hopf_map_checks());
        criterion(7, "FRT supergroup: block relations, detT table, sdet centrality, M inverse, Hopf maps", ok,
                  t.seconds(), 300.0);
    }

    // 8. Mutation sensitivity: each documented mutation must be detected.
    {
        Timer t;
        bool ok = true;
        // swapped twist factors break the cocycle identity
        EnvelopingAlgebra alg(sl12_presentation(), 2);
        TwistKit tk(alg);
        ok = ok && !tk.cocycle_residual(tk.twist_with_swapped_factors()).is_zero();
        // sign-flipped Rbar entry breaks the YBE
        PolyMatrix mutated = rbar_matrix();
        mutated.at(0, 3) = -mutated.at(0, 3);
        ok = ok && !ybe_residual(mutated, GradedSpace::even(2)).is_zero();
        // dropped minus sign in the Theta sector is inequivalent
        frt::FrtKit kit = frt::FrtKit::standard();
        bool theta_detected = false;
        for (auto& c : frt::cross_check_block_relations(kit, /*flip_theta_sign=*/true))
            if (c.status == Status::Fail) theta_detected = true;
        ok = ok && theta_detected;
        // dropped Z factor breaks the intertwining property
        EnvelopingAlgebra alg3(sl12_presentation(), 3);
        TwistKit tk3(alg3);
        ok = ok && tk3.intertwiner_residual(tk3.universal_r_without_z_factor(), Gen::Xm) > 0;
        criterion(8, "documented mutations are detected (anti-vacuity)", ok, t.seconds());
    }

    if (g_failures == 0) std::printf("acceptance: all 8 criteria pass\n");
    else std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
