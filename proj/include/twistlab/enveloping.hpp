#pragma once

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/poly.hpp"
#include "twistlab/superalgebra.hpp"

namespace twistlab {

/// PBW monomial: exponent vector over the fixed generator order
/// Z < H < X+ < X- < v+ < v- < vb+ < vb-. Odd exponents are 0 or 1.
struct PBWMonomial {
    std::array<uint16_t, kNumGens> e{};

    static PBWMonomial unit() { return {}; }
    static PBWMonomial of(Gen x) {
        PBWMonomial m;
        m.e[static_cast<int>(x)] = 1;
        return m;
    }

    bool is_unit() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    int degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
    Parity parity() const {
        int p = 0;
        for (int i = 4; i < kNumGens; ++i) p += e[i];
        return (p % 2) ? Parity::Odd : Parity::Even;
    }
    int max_letter() const {  // -1 for the unit monomial
        for (int i = kNumGens - 1; i >= 0; --i)
            if (e[i]) return i;
        return -1;
    }
    std::vector<uint8_t> letters() const {
        std::vector<uint8_t> w;
        for (int i = 0; i < kNumGens; ++i)
            for (int k = 0; k < e[i]; ++k) w.push_back(static_cast<uint8_t>(i));
        return w;
    }

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.e <=> b.e;
    }

    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        for (int i = 0; i < kNumGens; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += gen_name(static_cast<Gen>(i));
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }
};

/// Rank-R graded tensor power of the enveloping algebra, as a linear
/// combination of monomial tuples with TruncSeries coefficients.
/// Multiplication carries the Koszul sign; see EnvelopingAlgebra::mul.
template <int R>
class Tensor {
public:
    using Key = std::array<PBWMonomial, R>;
    using TermMap = std::map<Key, TruncSeries>;

    Tensor() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Key& k, const TruncSeries& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor operator-() const {
        Tensor r;
        for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    Tensor& operator+=(const Tensor& o) {
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    friend Tensor operator*(const TruncSeries& s, const Tensor& t) {
        Tensor r;
        for (auto& [k, c] : t.terms_) r.add_term(k, s * c);
        return r;
    }
    friend Tensor operator*(const Rational& s, const Tensor& t) {
        Tensor r;
        if (s.is_zero()) return r;
        for (auto& [k, c] : t.terms_) r.add_term(k, s * c);
        return r;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

    /// Smallest total (h,g)-degree over all coefficients; -1 when zero.
    int min_coeff_degree() const {
        int m = -1;
        for (auto& [k, c] : terms_) {
            int d = c.min_total_degree();
            if (m < 0 || d < m) m = d;
        }
        return m;
    }

    Parity term_parity(const Key& k) const {
        int p = 0;
        for (auto& m : k) p += m.parity() == Parity::Odd ? 1 : 0;
        return (p % 2) ? Parity::Odd : Parity::Even;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string coeff = c.str();
            bool simple = coeff.find(" + ") == std::string::npos && coeff.find(" - ") == std::string::npos;
            out += simple ? coeff : "(" + coeff + ")";
            out += " * ";
            for (int i = 0; i < R; ++i) {
                if (i) out += " (x) ";
                out += k[i].str();
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

using Element = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

namespace detail {
using MonoComb = std::map<PBWMonomial, Rational>;
inline void mono_add(MonoComb& a, const PBWMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}
}  // namespace detail

/// PBW engine over a fixed presentation: straightens products into normal
/// form using the structure constants, and carries the undeformed Hopf
/// maps. All coefficients are TruncSeries of the engine's order.
class EnvelopingAlgebra {
public:
    EnvelopingAlgebra(Presentation p, int order) : pres_(std::move(p)), order_(order) {
        if (order < 0) throw std::domain_error("EnvelopingAlgebra: negative order");
    }

    const Presentation& presentation() const { return pres_; }
    int order() const { return order_; }

    TruncSeries scalar(const Rational& c) const { return TruncSeries::constant(c, order_); }
    TruncSeries scalar(const PolyHG& p) const { return TruncSeries(p, order_); }

    Element zero() const { return Element(); }
    Element unit() const {
        Element e;
        e.add_term({PBWMonomial::unit()}, scalar(Rational(1)));
        return e;
    }
    Element gen(Gen x) const {
        if (!pres_.contains(x)) throw std::domain_error("gen outside presentation");
        Element e;
        e.add_term({PBWMonomial::of(x)}, scalar(Rational(1)));
        return e;
    }
    template <int R>
    Tensor<R> tensor_unit() const {
        Tensor<R> t;
        typename Tensor<R>::Key k;
        k.fill(PBWMonomial::unit());
        t.add_term(k, scalar(Rational(1)));
        return t;
    }

    /// a (x) b as a formal tensor product of two elements.
    Tensor2 tensor_of(const Element& a, const Element& b) const {
        Tensor2 t;
        for (auto& [ka, ca] : a.terms())
            for (auto& [kb, cb] : b.terms()) t.add_term({ka[0], kb[0]}, ca * cb);
        return t;
    }

    /// Product with PBW normalization per slot and the Koszul sign
    /// (-1)^{sum_{i<j} |a_j||b_i|} for crossing slots.
    template <int R>
    Tensor<R> mul(const Tensor<R>& a, const Tensor<R>& b) {
        Tensor<R> out;
        for (auto& [ka, ca] : a.terms()) {
            std::array<int, R> pa;
            for (int i = 0; i < R; ++i) pa[i] = ka[i].parity() == Parity::Odd ? 1 : 0;
            for (auto& [kb, cb] : b.terms()) {
                int cross = 0;
                for (int j = 1; j < R; ++j)
                    if (pa[j])
                        for (int i = 0; i < j; ++i)
                            if (kb[i].parity() == Parity::Odd) ++cross;
                TruncSeries coeff = ca * cb;
                if (cross % 2) coeff = -coeff;
                if (coeff.is_zero()) continue;
                // straighten every slot, then take the outer product
                std::array<const detail::MonoComb*, R> slot;
                std::array<detail::MonoComb, R> storage;
                bool dead = false;
                for (int i = 0; i < R && !dead; ++i) {
                    storage[i] = product_monomials(ka[i], kb[i]);
                    slot[i] = &storage[i];
                    if (storage[i].empty()) dead = true;
                }
                if (dead) continue;
                typename Tensor<R>::Key key;
                accumulate_outer<R>(out, slot, key, Rational(1), 0, coeff);
            }
        }
        return out;
    }

    template <int R>
    Tensor<R> commutator(const Tensor<R>& a, const Tensor<R>& b) {
        return mul(a, b) - mul(b, a);
    }

    /// exp of an element/tensor all of whose coefficients have (h,g)-degree
    /// at least 1, so the sum terminates at the truncation order.
    template <int R>
    Tensor<R> exp(const Tensor<R>& t) {
        if (!t.is_zero() && t.min_coeff_degree() < 1)
            throw std::domain_error("exp: argument has a coefficient of (h,g)-degree 0");
        Tensor<R> acc = tensor_unit<R>();
        Tensor<R> pw = acc;
        for (int k = 1; k <= order_; ++k) {
            pw = mul(pw, t);
            if (pw.is_zero()) break;
            acc += Rational::factorial(k).inverse() * pw;
        }
        return acc;
    }

    /// Inverse of 1 + (terms of coefficient degree >= 1).
    template <int R>
    Tensor<R> inverse(const Tensor<R>& t) {
        typename Tensor<R>::Key unit_key;
        unit_key.fill(PBWMonomial::unit());
        Tensor<R> v = t;
        auto it = t.terms().find(unit_key);
        if (it == t.terms().end() || !(it->second.poly().constant_term().is_one()))
            throw std::domain_error("inverse: unit coefficient is not 1");
        v -= tensor_unit<R>();
        if (!v.is_zero() && v.min_coeff_degree() < 1)
            throw std::domain_error("inverse: non-unit part has degree-0 coefficient");
        Tensor<R> acc = tensor_unit<R>();
        Tensor<R> pw = acc;
        for (int k = 1; k <= order_; ++k) {
            pw = mul(pw, v);
            if (pw.is_zero()) break;
            acc += (k % 2 ? Rational(-1) : Rational(1)) * pw;
        }
        return acc;
    }

    // ---- undeformed Hopf structure ----

    /// Coproduct D0(x) = x(x)1 + 1(x)x extended as an algebra map.
    Tensor2 delta0(const Element& a) {
        Tensor2 out;
        for (auto& [k, c] : a.terms()) {
            const auto& t = delta0_monomial(k[0]);
            for (auto& [key, r] : t) out.add_term(key, r * c);
        }
        return out;
    }

    Tensor3 delta0_left(const Tensor2& t) {  // (D0 (x) id)
        Tensor3 out;
        for (auto& [k, c] : t.terms()) {
            const auto& d = delta0_monomial(k[0]);
            for (auto& [key, r] : d) out.add_term({key[0], key[1], k[1]}, r * c);
        }
        return out;
    }
    Tensor3 delta0_right(const Tensor2& t) {  // (id (x) D0)
        Tensor3 out;
        for (auto& [k, c] : t.terms()) {
            const auto& d = delta0_monomial(k[1]);
            for (auto& [key, r] : d) out.add_term({k[0], key[0], key[1]}, r * c);
        }
        return out;
    }

    TruncSeries eps0(const Element& a) const {
        auto it = a.terms().find({PBWMonomial::unit()});
        return it == a.terms().end() ? TruncSeries(PolyHG(), order_) : it->second;
    }

    /// Antipode S0(x) = -x extended as a graded anti-automorphism.
    Element s0(const Element& a) {
        Element out;
        for (auto& [k, c] : a.terms()) {
            const auto& r = s0_monomial(k[0]);
            for (auto& [m, q] : r) out.add_term({m}, q * c);
        }
        return out;
    }

    /// m(id (x) S0): applies S0 to the second slot and multiplies down.
    Element flatten_s0_right(const Tensor2& t) {
        Element out;
        for (auto& [k, c] : t.terms()) {
            const auto& s = s0_monomial(k[1]);
            for (auto& [m, q] : s) {
                detail::MonoComb prod = product_monomials(k[0], m);
                for (auto& [mm, r] : prod) out.add_term({mm}, (q * r) * c);
            }
        }
        return out;
    }

    /// Multiplication map m: a(x)b -> a*b.
    Element flatten(const Tensor2& t) {
        Element out;
        for (auto& [k, c] : t.terms()) {
            detail::MonoComb prod = product_monomials(k[0], k[1]);
            for (auto& [mm, r] : prod) out.add_term({mm}, r * c);
        }
        return out;
    }

    /// Graded flip a(x)b -> (-1)^{|a||b|} b(x)a.
    Tensor2 flip(const Tensor2& t) const {
        Tensor2 out;
        for (auto& [k, c] : t.terms()) {
            bool neg = k[0].parity() == Parity::Odd && k[1].parity() == Parity::Odd;
            out.add_term({k[1], k[0]}, neg ? -c : c);
        }
        return out;
    }

    Tensor3 embed12(const Tensor2& t) const {
        Tensor3 out;
        for (auto& [k, c] : t.terms()) out.add_term({k[0], k[1], PBWMonomial::unit()}, c);
        return out;
    }
    Tensor3 embed23(const Tensor2& t) const {
        Tensor3 out;
        for (auto& [k, c] : t.terms()) out.add_term({PBWMonomial::unit(), k[0], k[1]}, c);
        return out;
    }
    Tensor3 embed13(const Tensor2& t) const {
        Tensor3 out;
        for (auto& [k, c] : t.terms()) out.add_term({k[0], PBWMonomial::unit(), k[1]}, c);
        return out;
    }

    /// PBW product of two normal monomials, memoized.
    detail::MonoComb product_monomials(const PBWMonomial& a, const PBWMonomial& b) {
        if (b.is_unit()) return {{a, Rational(1)}};
        if (a.is_unit()) return {{b, Rational(1)}};
        {
            std::scoped_lock lk(memo_mutex_);
            auto it = prod_memo_.find({a, b});
            if (it != prod_memo_.end()) return it->second;
        }
        detail::MonoComb acc{{a, Rational(1)}};
        for (uint8_t letter : b.letters()) {
            detail::MonoComb next;
            for (auto& [m, c] : acc) {
                detail::MonoComb step = mul_gen(m, letter);
                for (auto& [mm, q] : step) detail::mono_add(next, mm, c * q);
            }
            acc = std::move(next);
            if (acc.empty()) break;
        }
        {
            std::scoped_lock lk(memo_mutex_);
            prod_memo_.emplace(std::make_pair(a, b), acc);
        }
        return acc;
    }

private:
    template <int R>
    void accumulate_outer(Tensor<R>& out, const std::array<const detail::MonoComb*, R>& slot,
                          typename Tensor<R>::Key& key, Rational r, int i, const TruncSeries& coeff) {
        if (i == R) {
            out.add_term(key, r * coeff);
            return;
        }
        for (auto& [m, c] : *slot[i]) {
            key[i] = m;
            accumulate_outer<R>(out, slot, key, r * c, i + 1, coeff);
        }
    }

    // Right-multiplication of a normal monomial by one generator.
    detail::MonoComb mul_gen(const PBWMonomial& m, uint8_t g) {
        {
            std::scoped_lock lk(memo_mutex_);
            auto it = mulgen_memo_.find({m, g});
            if (it != mulgen_memo_.end()) return it->second;
        }
        detail::MonoComb result;
        Gen gg = static_cast<Gen>(g);
        int last = m.max_letter();
        if (last < (int)g) {
            PBWMonomial n = m;
            n.e[g] += 1;
            result = {{n, Rational(1)}};
        } else if (last == (int)g) {
            if (!is_odd(gg)) {
                PBWMonomial n = m;
                n.e[g] += 1;
                result = {{n, Rational(1)}};
            } else {
                // odd square: x*x = (1/2){x,x}
                PBWMonomial mp = m;
                mp.e[g] -= 1;
                GenComb br = pres_.bracket(gg, gg);
                for (auto& [y, c] : br) {
                    detail::MonoComb t = mul_gen(mp, static_cast<uint8_t>(y));
                    for (auto& [mm, q] : t) detail::mono_add(result, mm, Rational(1, 2) * c * q);
                }
            }
        } else {
            // m = m' * x with x > g:  m*g = (-1)^{|x||g|} (m'*g)*x + m'*[x,g]
            Gen x = static_cast<Gen>(last);
            PBWMonomial mp = m;
            mp.e[last] -= 1;
            bool neg = is_odd(x) && is_odd(gg);
            detail::MonoComb left = mul_gen(mp, g);
            for (auto& [n, c] : left) {
                detail::MonoComb t = mul_gen(n, static_cast<uint8_t>(last));
                for (auto& [mm, q] : t) detail::mono_add(result, mm, neg ? -(c * q) : c * q);
            }
            GenComb br = pres_.bracket(x, gg);
            for (auto& [y, c] : br) {
                detail::MonoComb t = mul_gen(mp, static_cast<uint8_t>(y));
                for (auto& [mm, q] : t) detail::mono_add(result, mm, c * q);
            }
        }
        {
            std::scoped_lock lk(memo_mutex_);
            mulgen_memo_.emplace(std::make_pair(m, g), result);
        }
        return result;
    }

    using Tensor2Rat = std::map<std::array<PBWMonomial, 2>, Rational>;

    const Tensor2Rat& delta0_monomial(const PBWMonomial& m) {
        {
            std::scoped_lock lk(memo_mutex_);
            auto it = delta0_memo_.find(m);
            if (it != delta0_memo_.end()) return it->second;
        }
        Tensor2Rat acc{{{PBWMonomial::unit(), PBWMonomial::unit()}, Rational(1)}};
        for (uint8_t letter : m.letters()) {
            Tensor2Rat next;
            PBWMonomial lm = PBWMonomial::of(static_cast<Gen>(letter));
            bool odd = is_odd(static_cast<Gen>(letter));
            for (auto& [key, c] : acc) {
                // * (x (x) 1): x crosses the slot-2 content
                {
                    bool neg = odd && key[1].parity() == Parity::Odd;
                    detail::MonoComb p0 = product_monomials(key[0], lm);
                    for (auto& [mm, q] : p0) {
                        Rational v = c * q;
                        if (neg) v = -v;
                        Tensor2Rat::key_type k2{mm, key[1]};
                        auto [it2, fresh] = next.emplace(k2, v);
                        if (!fresh) {
                            it2->second += v;
                            if (it2->second.is_zero()) next.erase(it2);
                        }
                    }
                }
                // * (1 (x) x): nothing is crossed
                {
                    detail::MonoComb p1 = product_monomials(key[1], lm);
                    for (auto& [mm, q] : p1) {
                        Tensor2Rat::key_type k2{key[0], mm};
                        auto [it2, fresh] = next.emplace(k2, c * q);
                        if (!fresh) {
                            it2->second += c * q;
                            if (it2->second.is_zero()) next.erase(it2);
                        }
                    }
                }
            }
            acc = std::move(next);
        }
        std::scoped_lock lk(memo_mutex_);
        return delta0_memo_.emplace(m, std::move(acc)).first->second;
    }

    const detail::MonoComb& s0_monomial(const PBWMonomial& m) {
        {
            std::scoped_lock lk(memo_mutex_);
            auto it = s0_memo_.find(m);
            if (it != s0_memo_.end()) return it->second;
        }
        auto w = m.letters();
        int odd_count = 0;
        for (uint8_t l : w)
            if (is_odd(static_cast<Gen>(l))) ++odd_count;
        // S0(x1...xn) = (-1)^n (-1)^{C(odd_count,2)} xn...x1
        bool neg = (w.size() % 2) != 0;
        if (((odd_count * (odd_count - 1) / 2) % 2) != 0) neg = !neg;
        detail::MonoComb acc{{PBWMonomial::unit(), neg ? Rational(-1) : Rational(1)}};
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            detail::MonoComb next;
            for (auto& [mm, c] : acc) {
                detail::MonoComb t = mul_gen(mm, *it);
                for (auto& [m2, q] : t) detail::mono_add(next, m2, c * q);
            }
            acc = std::move(next);
            if (acc.empty()) break;
        }
        std::scoped_lock lk(memo_mutex_);
        return s0_memo_.emplace(m, std::move(acc)).first->second;
    }

    Presentation pres_;
    int order_;

    std::mutex memo_mutex_;
    std::map<std::pair<PBWMonomial, uint8_t>, detail::MonoComb> mulgen_memo_;
    std::map<std::pair<PBWMonomial, PBWMonomial>, detail::MonoComb> prod_memo_;
    std::map<PBWMonomial, Tensor2Rat> delta0_memo_;
    std::map<PBWMonomial, detail::MonoComb> s0_memo_;
};

}  // namespace twistlab
