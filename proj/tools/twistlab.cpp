#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "twistlab/json_io.hpp"
#include "twistlab/suites.hpp"

using namespace twistlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

void apply_set(SuiteConfig& cfg, const std::vector<std::string>& sets) {
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--set expects name=value");
        std::string name = s.substr(0, eq), value = s.substr(eq + 1);
        if (name == "h")
            cfg.set_h = Rational::parse(value);
        else if (name == "g")
            cfg.set_g = Rational::parse(value);
        else
            throw CLI::ValidationError("--set supports only h and g");
    }
}

void apply_budget(SuiteConfig& cfg, const std::string& budget) {
    if (budget.empty()) return;
    size_t pos = 0;
    while (pos < budget.size()) {
        size_t comma = budget.find(',', pos);
        std::string item = budget.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--budget expects steps=K,len=L");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "steps")
            cfg.budget_steps = std::stol(value);
        else if (key == "len")
            cfg.budget_len = std::stoi(value);
        else
            throw CLI::ValidationError("--budget supports steps= and len=");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (cfg.budget_steps <= 0 || cfg.budget_len <= 0)
        throw CLI::ValidationError("budgets must be positive");
}

int emit_report(const Report& report, const std::string& format) {
    if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << report_text(report);
    if (report.any_fail()) return kExitFail;
    if (report.any_inconclusive()) return kExitInconclusive;
    return kExitPass;
}

int run_dump(const std::string& what, const SuiteConfig& cfg) {
    bool json = cfg.format == "json";
    auto emit = [&](const Json& j, const std::string& text) {
        if (json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text << "\n";
        return kExitPass;
    };

    if (what == "sigma" || what == "F" || what == "R" || what.rfind("coproduct:", 0) == 0 ||
        what.rfind("antipode:", 0) == 0) {
        EnvelopingAlgebra alg(sl12_presentation(), cfg.order);
        TwistKit tk(alg);
        if (what == "sigma") return emit(to_json(tk.sigma()), tk.sigma().str());
        if (what == "F") return emit(tensor_to_json(tk.twist()), tk.twist().str());
        if (what == "R") return emit(tensor_to_json(tk.universal_r()), tk.universal_r().str());
        std::string genname = what.substr(what.find(':') + 1);
        auto g = gen_from_name(genname);
        if (!g) {
            std::cerr << "unknown generator: " << genname << "\n";
            return kExitUsage;
        }
        if (what.rfind("coproduct:", 0) == 0)
            return emit(tensor_to_json(tk.coproduct(*g)), tk.coproduct(*g).str());
        return emit(to_json(tk.antipode(*g)), tk.antipode(*g).str());
    }
    if (what == "rmatrix99") {
        PolyMatrix r = r_matrix_exact(derive_fundamental_rep()).substituted(cfg.h_ptr(), cfg.g_ptr());
        std::string text;
        for (int i = 0; i < r.rows(); ++i) {
            for (int j = 0; j < r.cols(); ++j) text += (j ? " | " : "") + r.at(i, j).str();
            text += "\n";
        }
        return emit(to_json(r), text);
    }
    if (what == "relations") {
        frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
        std::string text;
        for (auto& [lhs, rhs] : kit.rules().all_rules())
            text += frt::word_str(lhs) + " -> " + rhs.str() + "\n";
        return emit(rules_to_json(kit.rules()), text);
    }
    if (what == "detT") {
        frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
        return emit(to_json(kit.det_t_element()), kit.det_t_element().str());
    }
    if (what == "sdet") {
        frt::FrtKit kit = frt::FrtKit::specialized(cfg.h_ptr(), cfg.g_ptr(), cfg.budget());
        frt::FrtLocal loc(kit);
        frt::LocElt s = loc.sdet();
        return emit(to_json(s), loc_str(s));
    }
    std::cerr << "unknown dump selector: " << what << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistlab: exact verification of the two-parameter twist of U(gl(2)) and U(sl(1/2))"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::vector<std::string> sets;
    std::string budget_arg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", cfg.order, "truncation order for rank-2 series identities")
            ->check(CLI::PositiveNumber);
        sub->add_option("--order3", cfg.order3, "truncation order for rank-3 identities")
            ->check(CLI::PositiveNumber);
        sub->add_option("--rep", cfg.rep, "representation selector: fundamental or spin:j (j = 1/2..2)");
        sub->add_option("--set", sets, "fix a deformation parameter, e.g. --set h=1/2 --set g=0");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--budget", budget_arg, "rewrite budgets, e.g. steps=100000,len=24");
    };

    std::string suite, selector;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "one of: all, " + [] {
                           std::string s;
                           for (auto& n : suite_names()) s += s.empty() ? n : ", " + n;
                           return s;
                       }())
        ->required();
    add_common(verify);

    CLI::App* dump = app.add_subcommand("dump", "print an engine artifact");
    dump->add_option("selector", selector,
                     "sigma|F|R|coproduct:<gen>|antipode:<gen>|rmatrix99|relations|detT|sdet")
        ->required();
    add_common(dump);

    try {
        app.parse(argc, argv);
        apply_set(cfg, sets);
        apply_budget(cfg, budget_arg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            cfg.suite = suite;
            if (cfg.suite != "all") {
                bool known = cfg.suite == "hopf-axioms";
                for (auto& n : suite_names()) known = known || n == cfg.suite;
                if (!known) {
                    std::cerr << "unknown suite: " << cfg.suite << "\n";
                    return kExitUsage;
                }
            }
            return emit_report(run_suite(cfg), cfg.format);
        }
        return run_dump(selector, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
