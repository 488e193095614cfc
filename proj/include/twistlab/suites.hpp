#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "twistlab/frt_local.hpp"
#include "twistlab/rep.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// Configuration of a verification run. Orders follow the defaults of the
/// engine: truncation 6 for rank-2 identities, 4 for rank-3 ones.
struct SuiteConfig {
    std::string suite = "all";
    int order = 6;
    int order3 = 4;
    std::string rep = "fundamental";  // or spin:1/2 .. spin:2
    long budget_steps = 100000;
    int budget_len = 24;
    std::optional<Rational> set_h;
    std::optional<Rational> set_g;
    std::string format = "text";

    frt::Budget budget() const {
        frt::Budget b;
        b.max_steps = budget_steps;
        b.max_word_len = budget_len;
        return b;
    }
    const Rational* h_ptr() const { return set_h ? &*set_h : nullptr; }
    const Rational* g_ptr() const { return set_g ? &*set_g : nullptr; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "validate-algebras", "cocycle",       "hopf-gl2", "hopf-sl12", "rmatrix-universal",
        "rmatrix-fundamental", "ybe",         "jordanian", "frt-relations", "frt-det",
        "frt-sdet",          "frt-inverse"};
    return names;
}

namespace detail_suites {

inline void echo_config(Report& r, const SuiteConfig& cfg, bool frt_suite) {
    r.config.push_back({"order", std::to_string(cfg.order)});
    r.config.push_back({"order3", std::to_string(cfg.order3)});
    if (frt_suite) {
        r.config.push_back({"budget_steps", std::to_string(cfg.budget_steps)});
        r.config.push_back({"budget_len", std::to_string(cfg.budget_len)});
    }
    if (cfg.set_h) r.config.push_back({"h", cfg.set_h->str()});
    if (cfg.set_g) r.config.push_back({"g", cfg.set_g->str()});
    if (cfg.rep != "fundamental") r.config.push_back({"rep", cfg.rep});
}

/// Runs a block of checks, converting a budget blowout into a single
/// inconclusive entry instead of losing the whole suite.
inline void guarded(Report& r, const std::string& stage, const std::function<std::vector<Check>()>& f) {
    try {
        for (auto& c : f()) r.checks.push_back(c);
    } catch (const frt::BudgetExceeded& e) {
        r.checks.push_back(Check::inconclusive(stage, "", e.what()));
    }
}

inline RepTable rep_from_selector(const std::string& sel) {
    if (sel == "fundamental") return derive_fundamental_rep();
    if (sel.rfind("spin:", 0) == 0) {
        std::string j = sel.substr(5);
        int j2;
        if (j == "1/2")
            j2 = 1;
        else if (j == "1")
            j2 = 2;
        else if (j == "3/2")
            j2 = 3;
        else if (j == "2")
            j2 = 4;
        else
            throw std::domain_error("unsupported spin: " + j);
        return spin_rep_gl2(j2);
    }
    throw std::domain_error("unknown representation selector: " + sel);
}

inline GradedSpace space_from_selector(const std::string& sel) {
    if (sel == "fundamental") return GradedSpace::fundamental();
    return GradedSpace::even((int)rep_from_selector(sel).at(Gen::H).rows());
}

}  // namespace detail_suites

inline Report run_validate_algebras(const SuiteConfig&) {
    Report r;
    r.suite = "validate-algebras";
    Presentation gl2 = gl2_presentation(), sl = sl12_presentation();
    r.checks.push_back(Check::boolean("gl(2) graded antisymmetry", gl2.antisymmetry_holds(), "Eq. (3.1)"));
    r.checks.push_back(Check::residual("gl(2) graded Jacobi over 4^3 triples", (long)gl2.validate().size(),
                                       "Eq. (3.1)"));
    r.checks.push_back(Check::boolean("sl(1/2) graded antisymmetry", sl.antisymmetry_holds(), "Eq. (4.1)"));
    r.checks.push_back(Check::residual("sl(1/2) graded Jacobi over 8^3 triples", (long)sl.validate().size(),
                                       "Eq. (4.1) \"They satisfy the relations\""));
    r.checks.push_back(Check::boolean("gl(2) is a subalgebra of sl(1/2)", subalgebra_check(gl2, sl),
                                      "§4 \"form a gl(2) subalgebra\""));
    return r;
}

inline Report run_cocycle(const SuiteConfig& cfg) {
    Report r;
    r.suite = "cocycle";
    EnvelopingAlgebra alg(sl12_presentation(), cfg.order3);
    TwistKit tk(alg);
    for (auto& c : tk.verify_cocycle()) r.checks.push_back(c);
    for (auto& c : tk.verify_twist_element()) r.checks.push_back(c);
    return r;
}

inline Report run_hopf_gl2(const SuiteConfig& cfg) {
    Report r;
    r.suite = "hopf-gl2";
    EnvelopingAlgebra alg(gl2_presentation(), cfg.order);
    TwistKit tk(alg);
    for (auto& c : tk.match_gl2_closed_forms()) r.checks.push_back(c);
    return r;
}

inline Report run_hopf_sl12(const SuiteConfig& cfg) {
    Report r;
    r.suite = "hopf-sl12";
    EnvelopingAlgebra alg(sl12_presentation(), cfg.order);
    TwistKit tk(alg);
    for (auto& c : tk.match_sl12_closed_forms()) r.checks.push_back(c);
    // restriction consistency with the gl(2) engine
    EnvelopingAlgebra glalg(gl2_presentation(), cfg.order);
    TwistKit tgl(glalg);
    long bad = 0;
    for (Gen x : {Gen::Z, Gen::H, Gen::Xp, Gen::Xm}) {
        if (!(tk.coproduct(x) == tgl.coproduct(x))) ++bad;
        if (!(tk.antipode(x) == tgl.antipode(x))) ++bad;
    }
    r.checks.push_back(Check::residual("sl(1/2) tables restrict to the gl(2) tables", bad,
                                       "§4 \"have already been given in\" Eq. (3.3)"));
    return r;
}

inline Report run_hopf_axioms(const SuiteConfig& cfg) {
    Report r;
    r.suite = "hopf-axioms";
    // coassociativity is a rank-3 computation, so this suite runs at order3
    EnvelopingAlgebra alg(sl12_presentation(), cfg.order3);
    TwistKit tk(alg);
    for (auto& c : tk.verify_hopf_axioms()) r.checks.push_back(c);
    return r;
}

inline Report run_rmatrix_universal(const SuiteConfig& cfg) {
    Report r;
    r.suite = "rmatrix-universal";
    EnvelopingAlgebra alg(sl12_presentation(), cfg.order);
    TwistKit tk(alg);
    Tensor2 route_a = alg.mul(alg.flip(tk.twist()), tk.twist_inverse());
    Tensor2 route_b = tk.universal_r_product_form();
    r.checks.push_back(Check::residual("F21 F^{-1} agrees with the four-exponential product form",
                                       (route_a - route_b).term_count(),
                                       "Eq. (2.3) + Eq. (3.4)"));
    r.checks.push_back(Check::residual("R21 R = 1(x)1",
                                       (alg.mul(alg.flip(route_a), route_a) - alg.tensor_unit<2>()).term_count(),
                                       "§2 \"a triangular Hopf algebra\""));
    // intertwiner and the rank-3 hexagons at the rank-3 order
    EnvelopingAlgebra alg3(sl12_presentation(), cfg.order3);
    TwistKit tk3(alg3);
    for (auto& c : tk3.verify_r_properties({Gen::Z, Gen::H, Gen::Xp, Gen::Xm, Gen::Vbp, Gen::Vm}))
        r.checks.push_back(c);
    return r;
}

inline Report run_rmatrix_fundamental(const SuiteConfig& cfg) {
    Report r;
    r.suite = "rmatrix-fundamental";
    RepTable t = derive_fundamental_rep();
    r.checks.push_back(Check::boolean("fundamental representation satisfies the defining relations",
                                      verify_representation(t, sl12_presentation()), "Eq. (4.1)"));
    auto blocks = r_matrix_fundamental_blocks(t);
    r.checks.push_back(Check::residual("9x9 R block-diagonalizes over parity sectors",
                                       blocks.off_block_entries, "Eq. (4.4)"));
    r.checks.push_back(Check::residual("ee block = (1)",
                                       (blocks.ee - PolyMatrix::identity(1)).nonzero_entries(), "Eq. (4.4)"));
    r.checks.push_back(Check::residual("eo block = Rcheck", (blocks.eo - rcheck_matrix()).nonzero_entries(),
                                       "Eq. (4.5) \"Rcheck = [[1, 2g],[0, 1]]\""));
    r.checks.push_back(Check::residual("oe block inverts the eo block",
                                       (blocks.oe * blocks.eo - PolyMatrix::identity(2)).nonzero_entries(),
                                       "Eq. (4.4) \"direct sum of four matrices\""));
    r.checks.push_back(Check::residual("oo block = Rbar", (blocks.oo - rbar_matrix()).nonzero_entries(),
                                       "Eq. (4.5)"));
    // series pipeline agrees with the exact evaluation through degree N
    EnvelopingAlgebra alg(sl12_presentation(), cfg.order3);
    TwistKit tk(alg);
    PolyMatrix approx = evaluate_tensor2(tk.universal_r(), t, GradedSpace::fundamental());
    r.checks.push_back(Check::residual("universal R at order N matches the exact R through degree N",
                                       (approx - blocks.full.truncated(cfg.order3)).nonzero_entries(),
                                       "Eq. (3.4) evaluated"));
    return r;
}

inline Report run_ybe(const SuiteConfig& cfg) {
    Report r;
    r.suite = "ybe";
    RepTable t = detail_suites::rep_from_selector(cfg.rep);
    GradedSpace V = detail_suites::space_from_selector(cfg.rep);
    PolyMatrix rm = r_matrix_exact(t).substituted(cfg.h_ptr(), cfg.g_ptr());
    r.checks.push_back(Check::residual("graded YBE R12 R13 R23 = R23 R13 R12",
                                       ybe_residual(rm, V).nonzero_entries(),
                                       "§2 triangularity, matrix shadow"));
    PolyMatrix pr = graded_flip_matrix(V) * rm;
    r.checks.push_back(Check::residual("(P R)^2 = 1", (pr * pr - PolyMatrix::identity(pr.rows())).nonzero_entries(),
                                       "§2 \"a triangular Hopf algebra\""));
    if (cfg.rep == "fundamental") {
        GradedSpace V2 = GradedSpace::even(2);
        PolyMatrix rb = rbar_matrix().substituted(cfg.h_ptr(), cfg.g_ptr());
        r.checks.push_back(Check::residual("Rbar alone satisfies the YBE on (C^2)^3",
                                           ybe_residual(rb, V2).nonzero_entries(),
                                           "§4 \"R-matrix (3.4) in the fundamental representation of gl(2)\""));
    }
    return r;
}

inline Report run_jordanian(const SuiteConfig& cfg) {
    Report r;
    r.suite = "jordanian";
    EnvelopingAlgebra alg(gl2_presentation(), cfg.order);
    TwistKit tk(alg);
    for (auto& c : tk.jordanian_check()) r.checks.push_back(c);
    return r;
}

inline Report run_frt_relations(const SuiteConfig& cfg) {
    Report r;
    r.suite = "frt-relations";
    frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
    detail_suites::guarded(r, "relation audit", [&] { return kit.relation_audit(); });
    detail_suites::guarded(r, "printed-block cross-check", [&] { return frt::cross_check_block_relations(kit); });
    return r;
}

inline Report run_frt_det(const SuiteConfig& cfg) {
    Report r;
    r.suite = "frt-det";
    frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
    detail_suites::guarded(r, "detT commutators", [&] { return kit.det_t_suite(); });
    // the g = 0 system: detT becomes central
    detail_suites::guarded(r, "g=0 centrality", [&]() -> std::vector<Check> {
        Rational zero(0);
        frt::FrtKit kit0 = frt::FrtKit::specialized(cfg.h_ptr(), &zero, cfg.budget());
        long bad = 0;
        for (uint8_t x = 0; x < frt::kGens; ++x)
            if (!kit0.commutator(frt::FreeElt::of(x), kit0.det_t_element()).is_zero()) ++bad;
        return {Check::residual("g=0 specialization makes detT central", bad,
                                "§5 \"the noncommutativity is independent of h\"")};
    });
    return r;
}

inline Report run_frt_sdet(const SuiteConfig& cfg) {
    Report r;
    r.suite = "frt-sdet";
    frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
    try {
        frt::FrtLocal loc(kit);
        detail_suites::guarded(r, "localization consistency", [&] { return loc.localization_consistency(); });
        detail_suites::guarded(r, "sdet centrality", [&] { return loc.sdet_centrality(); });
    } catch (const frt::BudgetExceeded& e) {
        r.checks.push_back(Check::inconclusive("localization setup", "", e.what()));
    }
    return r;
}

inline Report run_frt_inverse(const SuiteConfig& cfg) {
    Report r;
    r.suite = "frt-inverse";
    frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
    try {
        frt::FrtLocal loc(kit);
        detail_suites::guarded(r, "localization consistency", [&] { return loc.localization_consistency(); });
        detail_suites::guarded(r, "T inverse", [&] { return loc.t_inverse_checks(); });
        detail_suites::guarded(r, "M inverse", [&] { return loc.m_inverse_checks(); });
        detail_suites::guarded(r, "Hopf maps of M", [&] { return loc.hopf_map_checks(); });
    } catch (const frt::BudgetExceeded& e) {
        r.checks.push_back(Check::inconclusive("localization setup", "", e.what()));
    }
    return r;
}

inline Report run_suite(const SuiteConfig& cfg) {
    using Runner = std::function<Report(const SuiteConfig&)>;
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"validate-algebras", run_validate_algebras},
        {"cocycle", run_cocycle},
        {"hopf-gl2", run_hopf_gl2},
        {"hopf-sl12", run_hopf_sl12},
        {"hopf-axioms", run_hopf_axioms},
        {"rmatrix-universal", run_rmatrix_universal},
        {"rmatrix-fundamental", run_rmatrix_fundamental},
        {"ybe", run_ybe},
        {"jordanian", run_jordanian},
        {"frt-relations", run_frt_relations},
        {"frt-det", run_frt_det},
        {"frt-sdet", run_frt_sdet},
        {"frt-inverse", run_frt_inverse},
    };
    auto clock = std::chrono::steady_clock::now;
    if (cfg.suite == "all") {
        Report all;
        all.suite = "all";
        auto t0 = clock();
        for (auto& [name, runner] : table) {
            if (name == "hopf-axioms") continue;  // folded into the run below
            Report sub = runner(cfg);
            for (auto& c : sub.checks) {
                c.name = name + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        Report axioms = run_hopf_axioms(cfg);
        for (auto& c : axioms.checks) {
            c.name = "hopf-axioms: " + c.name;
            all.checks.push_back(std::move(c));
        }
        all.seconds = std::chrono::duration<double>(clock() - t0).count();
        detail_suites::echo_config(all, cfg, true);
        return all;
    }
    for (auto& [name, runner] : table)
        if (name == cfg.suite) {
            auto t0 = clock();
            Report r = runner(cfg);
            r.seconds = std::chrono::duration<double>(clock() - t0).count();
            bool is_frt = cfg.suite.rfind("frt", 0) == 0;
            detail_suites::echo_config(r, cfg, is_frt);
            return r;
        }
    throw std::domain_error("unknown suite: " + cfg.suite);
}

}  // namespace twistlab
