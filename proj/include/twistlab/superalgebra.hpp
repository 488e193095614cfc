#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

/// Generators in the fixed PBW order Z < H < X+ < X- < v+ < v- < vb+ < vb-.
enum class Gen : uint8_t { Z = 0, H, Xp, Xm, Vp, Vm, Vbp, Vbm };

constexpr int kNumGens = 8;

inline Parity parity_of(Gen x) { return static_cast<int>(x) < 4 ? Parity::Even : Parity::Odd; }
inline bool is_odd(Gen x) { return parity_of(x) == Parity::Odd; }

inline const char* gen_name(Gen x) {
    static const char* names[] = {"Z", "H", "Xp", "Xm", "vp", "vm", "vbp", "vbm"};
    return names[static_cast<int>(x)];
}

inline std::optional<Gen> gen_from_name(const std::string& s) {
    for (int i = 0; i < kNumGens; ++i)
        if (s == gen_name(static_cast<Gen>(i))) return static_cast<Gen>(i);
    return std::nullopt;
}

/// Linear combination of generators with rational coefficients: the value
/// space of the graded bracket.
using GenComb = std::map<Gen, Rational>;

inline GenComb& comb_add(GenComb& a, Gen x, const Rational& c) {
    if (c.is_zero()) return a;
    auto [it, fresh] = a.emplace(x, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
    return a;
}
inline GenComb& comb_add(GenComb& a, const GenComb& b, const Rational& scale = Rational(1)) {
    for (auto& [x, c] : b) comb_add(a, x, scale * c);
    return a;
}

struct JacobiResidual {
    Gen x, y, z;
    GenComb residual;
};

/// A Lie superalgebra presentation: generators with parities and the
/// structure constants of the graded bracket. One orientation is stored
/// per unordered pair; the other follows from graded antisymmetry
/// [x,y] = -(-1)^{|x||y|} [y,x].
class Presentation {
public:
    Presentation(std::string name, std::vector<Gen> gens) : name_(std::move(name)), gens_(std::move(gens)) {
        for (Gen x : gens_) member_.insert(x);
    }

    const std::string& name() const { return name_; }
    const std::vector<Gen>& generators() const { return gens_; }
    bool contains(Gen x) const { return member_.count(x) > 0; }

    void set_bracket(Gen x, Gen y, GenComb rhs) {
        for (auto& [t, c] : rhs)
            if (!contains(t)) throw std::domain_error("Presentation: bracket target outside algebra");
        table_[{x, y}] = std::move(rhs);
    }

    /// Graded bracket of two generators: [x,y] for even pairs and mixed
    /// pairs, {x,y} when both are odd.
    GenComb bracket(Gen x, Gen y) const {
        if (!contains(x) || !contains(y))
            throw std::domain_error("Presentation: unknown generator in bracket");
        auto it = table_.find({x, y});
        if (it != table_.end()) return it->second;
        auto rev = table_.find({y, x});
        if (rev != table_.end()) {
            GenComb out;
            Rational s = (is_odd(x) && is_odd(y)) ? Rational(1) : Rational(-1);
            comb_add(out, rev->second, s);
            return out;
        }
        return {};
    }

    GenComb bracket(Gen x, const GenComb& ys) const {
        GenComb out;
        for (auto& [y, c] : ys) comb_add(out, bracket(x, y), c);
        return out;
    }

    /// All generator triples with nonzero graded Jacobi residual
    ///   (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
    std::vector<JacobiResidual> validate() const {
        std::vector<JacobiResidual> bad;
        for (Gen x : gens_)
            for (Gen y : gens_)
                for (Gen z : gens_) {
                    GenComb r;
                    auto sgn = [](Gen a, Gen b) {
                        return (is_odd(a) && is_odd(b)) ? Rational(-1) : Rational(1);
                    };
                    comb_add(r, bracket(x, bracket(y, z)), sgn(x, z));
                    comb_add(r, bracket(y, bracket(z, x)), sgn(y, x));
                    comb_add(r, bracket(z, bracket(x, y)), sgn(z, y));
                    if (!r.empty()) bad.push_back({x, y, z, std::move(r)});
                }
        return bad;
    }

    /// Graded antisymmetry audit over every stored pair, checked against
    /// the completed table.
    bool antisymmetry_holds() const {
        for (Gen x : gens_)
            for (Gen y : gens_) {
                GenComb lhs = bracket(x, y);
                GenComb rhs;
                Rational s = (is_odd(x) && is_odd(y)) ? Rational(1) : Rational(-1);
                comb_add(rhs, bracket(y, x), s);
                if (lhs != rhs) return false;
            }
        return true;
    }

private:
    std::string name_;
    std::vector<Gen> gens_;
    std::set<Gen> member_;
    std::map<std::pair<Gen, Gen>, GenComb> table_;
};

/// True iff sub's generators are a subset of sup's, every bracket of sub
/// matches sup, and sup's brackets among sub's generators stay in sub's span.
inline bool subalgebra_check(const Presentation& sub, const Presentation& sup) {
    for (Gen x : sub.generators())
        if (!sup.contains(x)) return false;
    for (Gen x : sub.generators())
        for (Gen y : sub.generators()) {
            GenComb expect = sup.bracket(x, y);
            for (auto& [t, c] : expect)
                if (!sub.contains(t)) return false;
            if (sub.bracket(x, y) != expect) return false;
        }
    return true;
}

inline Presentation gl2_presentation() {
    Presentation p("gl2", {Gen::Z, Gen::H, Gen::Xp, Gen::Xm});
    p.set_bracket(Gen::H, Gen::Xp, {{Gen::Xp, Rational(2)}});
    p.set_bracket(Gen::H, Gen::Xm, {{Gen::Xm, Rational(-2)}});
    p.set_bracket(Gen::Xp, Gen::Xm, {{Gen::H, Rational(1)}});
    p.set_bracket(Gen::Z, Gen::H, {});
    p.set_bracket(Gen::Z, Gen::Xp, {});
    p.set_bracket(Gen::Z, Gen::Xm, {});
    return p;
}

/// The sl(1/2) table: four even generators carrying the gl(2) subalgebra
/// and four odd ones with anticommutator brackets.
inline Presentation sl12_presentation() {
    Presentation p("sl12", {Gen::Z, Gen::H, Gen::Xp, Gen::Xm, Gen::Vp, Gen::Vm, Gen::Vbp, Gen::Vbm});
    const Rational one(1), two(2), half(1, 2);

    p.set_bracket(Gen::H, Gen::Xp, {{Gen::Xp, two}});
    p.set_bracket(Gen::H, Gen::Xm, {{Gen::Xm, -two}});
    p.set_bracket(Gen::Xp, Gen::Xm, {{Gen::H, one}});
    p.set_bracket(Gen::Z, Gen::H, {});
    p.set_bracket(Gen::Z, Gen::Xp, {});
    p.set_bracket(Gen::Z, Gen::Xm, {});

    // [X+-, v-+] = -v+-,  [X+-, vb-+] = vb+-
    p.set_bracket(Gen::Xp, Gen::Vm, {{Gen::Vp, -one}});
    p.set_bracket(Gen::Xm, Gen::Vp, {{Gen::Vm, -one}});
    p.set_bracket(Gen::Xp, Gen::Vbm, {{Gen::Vbp, one}});
    p.set_bracket(Gen::Xm, Gen::Vbp, {{Gen::Vbm, one}});
    p.set_bracket(Gen::Xp, Gen::Vp, {});
    p.set_bracket(Gen::Xm, Gen::Vm, {});
    p.set_bracket(Gen::Xp, Gen::Vbp, {});
    p.set_bracket(Gen::Xm, Gen::Vbm, {});

    // [Z, v+-] = v+-,  [Z, vb+-] = -vb+-
    p.set_bracket(Gen::Z, Gen::Vp, {{Gen::Vp, one}});
    p.set_bracket(Gen::Z, Gen::Vm, {{Gen::Vm, one}});
    p.set_bracket(Gen::Z, Gen::Vbp, {{Gen::Vbp, -one}});
    p.set_bracket(Gen::Z, Gen::Vbm, {{Gen::Vbm, -one}});

    // [H, v+-] = +-v+-,  [H, vb+-] = +-vb+-
    p.set_bracket(Gen::H, Gen::Vp, {{Gen::Vp, one}});
    p.set_bracket(Gen::H, Gen::Vm, {{Gen::Vm, -one}});
    p.set_bracket(Gen::H, Gen::Vbp, {{Gen::Vbp, one}});
    p.set_bracket(Gen::H, Gen::Vbm, {{Gen::Vbm, -one}});

    // vanishing anticommutators among the v's and among the vb's
    p.set_bracket(Gen::Vp, Gen::Vp, {});
    p.set_bracket(Gen::Vm, Gen::Vm, {});
    p.set_bracket(Gen::Vbp, Gen::Vbp, {});
    p.set_bracket(Gen::Vbm, Gen::Vbm, {});
    p.set_bracket(Gen::Vp, Gen::Vm, {});
    p.set_bracket(Gen::Vbp, Gen::Vbm, {});

    // {v+-, vb+-} = X+-,  {vb+-, v-+} = (Z +- H)/2
    p.set_bracket(Gen::Vp, Gen::Vbp, {{Gen::Xp, one}});
    p.set_bracket(Gen::Vm, Gen::Vbm, {{Gen::Xm, one}});
    p.set_bracket(Gen::Vbp, Gen::Vm, {{Gen::Z, half}, {Gen::H, half}});
    p.set_bracket(Gen::Vbm, Gen::Vp, {{Gen::Z, half}, {Gen::H, -half}});
    return p;
}

}  // namespace twistlab
