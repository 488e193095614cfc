#pragma once

#include <json.hpp>

#include "twistlab/frt_local.hpp"
#include "twistlab/rep.hpp"
#include "twistlab/report.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

// Insertion-ordered JSON keeps reports byte-reproducible for a fixed config.
using Json = nlohmann::ordered_json;

inline Json to_json(const PolyHG& p) {
    Json terms = Json::array();
    for (auto& [m, c] : p.terms())
        terms.push_back({{"h", m.h}, {"g", m.g}, {"num", c.num().str()}, {"den", c.den().str()}});
    return Json{{"terms", std::move(terms)}};
}

inline PolyHG poly_from_json(const Json& j) {
    PolyHG p;
    for (auto& t : j.at("terms"))
        p.add_term(MonomialHG{t.at("h").get<int>(), t.at("g").get<int>()},
                   Rational(BigInt(t.at("num").get<std::string>()), BigInt(t.at("den").get<std::string>())));
    return p;
}

inline Json to_json(const TruncSeries& s) {
    Json j = to_json(s.poly());
    j["order"] = s.order();
    return j;
}

inline TruncSeries series_from_json(const Json& j) {
    return TruncSeries(poly_from_json(j), j.at("order").get<int>());
}

inline Json to_json(const Element& e) {
    Json terms = Json::array();
    for (auto& [k, c] : e.terms()) {
        Json mono = Json::array();
        for (int i = 0; i < kNumGens; ++i) mono.push_back(k[0].e[i]);
        terms.push_back({{"monomial", std::move(mono)}, {"coeff", to_json(c)}});
    }
    return Json{{"terms", std::move(terms)}};
}

template <int R>
inline Json tensor_to_json(const Tensor<R>& t) {
    Json terms = Json::array();
    for (auto& [k, c] : t.terms()) {
        Json slots = Json::array();
        for (int s = 0; s < R; ++s) {
            Json mono = Json::array();
            for (int i = 0; i < kNumGens; ++i) mono.push_back(k[s].e[i]);
            slots.push_back(std::move(mono));
        }
        terms.push_back({{"slots", std::move(slots)}, {"coeff", to_json(c)}});
    }
    return Json{{"rank", R}, {"terms", std::move(terms)}};
}

inline Json to_json(const Presentation& p) {
    Json gens = Json::array();
    for (Gen x : p.generators())
        gens.push_back({{"name", gen_name(x)}, {"parity", parity_of(x) == Parity::Odd ? "odd" : "even"}});
    Json brackets = Json::array();
    for (Gen x : p.generators())
        for (Gen y : p.generators()) {
            if (static_cast<int>(x) > static_cast<int>(y)) continue;
            GenComb rhs = p.bracket(x, y);
            Json comb = Json::array();
            for (auto& [t, c] : rhs) comb.push_back({{"gen", gen_name(t)}, {"coeff", c.str()}});
            brackets.push_back({{"x", gen_name(x)}, {"y", gen_name(y)}, {"rhs", std::move(comb)}});
        }
    return Json{{"name", p.name()}, {"generators", std::move(gens)}, {"brackets", std::move(brackets)}};
}

inline Presentation presentation_from_json(const Json& j) {
    std::vector<Gen> gens;
    for (auto& g : j.at("generators")) {
        auto parsed = gen_from_name(g.at("name").get<std::string>());
        if (!parsed) throw std::domain_error("presentation_from_json: unknown generator name");
        bool odd = g.at("parity").get<std::string>() == "odd";
        if (odd != (parity_of(*parsed) == Parity::Odd))
            throw std::domain_error("presentation_from_json: parity mismatch for " +
                                    std::string(gen_name(*parsed)));
        gens.push_back(*parsed);
    }
    Presentation p(j.value("name", "loaded"), gens);
    for (auto& b : j.at("brackets")) {
        auto x = gen_from_name(b.at("x").get<std::string>());
        auto y = gen_from_name(b.at("y").get<std::string>());
        if (!x || !y) throw std::domain_error("presentation_from_json: unknown bracket generator");
        GenComb rhs;
        for (auto& t : b.at("rhs")) {
            auto g = gen_from_name(t.at("gen").get<std::string>());
            if (!g) throw std::domain_error("presentation_from_json: unknown rhs generator");
            comb_add(rhs, *g, Rational::parse(t.at("coeff").get<std::string>()));
        }
        p.set_bracket(*x, *y, std::move(rhs));
    }
    return p;
}

inline Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const frt::FreeElt& e) {
    Json terms = Json::array();
    for (auto& [w, c] : e.terms()) {
        Json word = Json::array();
        for (uint8_t x : w) word.push_back(frt::frt_name(x));
        terms.push_back({{"coeff", to_json(c)}, {"word", std::move(word)}});
    }
    return terms;
}

inline Json rules_to_json(const frt::RewriteSystem& rws) {
    Json out = Json::array();
    for (auto& [lhs, rhs] : rws.all_rules()) {
        Json l = Json::array();
        for (uint8_t x : lhs) l.push_back(frt::frt_name(x));
        out.push_back({{"lhs", std::move(l)}, {"rhs", to_json(rhs)}});
    }
    return out;
}

inline Json to_json(const frt::LocElt& e) {
    Json terms = Json::array();
    for (auto& [k, c] : e.terms()) {
        Json word = Json::array();
        for (uint8_t x : k.w) word.push_back(frt::frt_name(x));
        terms.push_back({{"word", std::move(word)},
                         {"detT_inv_pow", k.d},
                         {"w_inv_pow", k.wv},
                         {"coeff", to_json(c)}});
    }
    return terms;
}

inline std::string loc_str(const frt::LocElt& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : e.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string cs = c.str();
        bool simple = cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos;
        out += simple ? cs : "(" + cs + ")";
        if (!k.w.empty()) out += "*" + frt::word_str(k.w);
        if (k.d) out += "*detT^-" + std::to_string(k.d);
        if (k.wv) out += "*w^-" + std::to_string(k.wv);
    }
    return out;
}

inline Json to_json(const Check& c) {
    Json j{{"name", c.name},
           {"status", status_name(c.status)},
           {"residual_terms", c.residual_terms},
           {"anchor", c.anchor}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline Json to_json(const Report& r) {
    Json cfg = Json::object();
    for (auto& [k, v] : r.config) cfg[k] = v;
    Json checks = Json::array();
    for (auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"suite", r.suite}, {"config", std::move(cfg)}, {"checks", std::move(checks)}};
}

inline std::string report_text(const Report& r) {
    std::string out = "suite: " + r.suite + "\n";
    for (auto& [k, v] : r.config) out += "  " + k + " = " + v + "\n";
    for (auto& c : r.checks) {
        out += std::string("  [") + (c.status == Status::Pass          ? "PASS"
                                     : c.status == Status::Fail        ? "FAIL"
                                                                       : "INCONCLUSIVE") +
               "] " + c.name;
        if (c.residual_terms) out += " (residual terms: " + std::to_string(c.residual_terms) + ")";
        if (!c.anchor.empty()) out += "  -- " + c.anchor;
        if (!c.note.empty()) out += "  [" + c.note + "]";
        out += "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "  (%.3fs)\n", r.seconds);
    out += buf;
    return out;
}

}  // namespace twistlab
