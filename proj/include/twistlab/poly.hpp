#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

/// Exponent pair of a monomial h^i g^j. Ordered graded-lexicographically
/// with h > g; maps below store terms leading-monomial first.
struct MonomialHG {
    int h = 0;
    int g = 0;

    int total() const { return h + g; }

    friend bool operator==(const MonomialHG&, const MonomialHG&) = default;
    friend std::strong_ordering operator<=>(const MonomialHG& a, const MonomialHG& b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        return a.h <=> b.h;
    }
};

struct GrlexDescending {
    bool operator()(const MonomialHG& a, const MonomialHG& b) const { return a > b; }
};

/// Exact bivariate polynomial in the deformation parameters (h, g) over
/// Rational coefficients. Zero coefficients are never stored.
class PolyHG {
public:
    using TermMap = std::map<MonomialHG, Rational, GrlexDescending>;

    PolyHG() = default;
    PolyHG(const Rational& c) {
        if (!c.is_zero()) terms_[MonomialHG{0, 0}] = c;
    }
    PolyHG(long c) : PolyHG(Rational(c)) {}

    static PolyHG var_h() { return monomial(1, 0, Rational(1)); }
    static PolyHG var_g() { return monomial(0, 1, Rational(1)); }
    static PolyHG monomial(int i, int j, const Rational& c) {
        PolyHG p;
        if (!c.is_zero()) p.terms_[MonomialHG{i, j}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == MonomialHG{0, 0} && terms_.begin()->second.is_one(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MonomialHG{0, 0});
    }
    Rational constant_term() const {
        auto it = terms_.find(MonomialHG{0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
    int min_total_degree() const {
        int m = std::numeric_limits<int>::max();
        for (auto& [mono, c] : terms_) m = std::min(m, mono.total());
        return terms_.empty() ? -1 : m;
    }
    MonomialHG leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("PolyHG: leading monomial of zero");
        return terms_.begin()->first;
    }
    Rational leading_coeff() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    void add_term(const MonomialHG& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolyHG operator-() const {
        PolyHG r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    PolyHG& operator+=(const PolyHG& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolyHG& operator-=(const PolyHG& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PolyHG operator+(PolyHG a, const PolyHG& b) { return a += b; }
    friend PolyHG operator-(PolyHG a, const PolyHG& b) { return a -= b; }

    friend PolyHG operator*(const PolyHG& a, const PolyHG& b) {
        PolyHG r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term(MonomialHG{ma.h + mb.h, ma.g + mb.g}, ca * cb);
        return r;
    }
    PolyHG& operator*=(const PolyHG& o) { return *this = *this * o; }
    friend PolyHG operator*(const Rational& c, const PolyHG& p) {
        PolyHG r;
        if (c.is_zero()) return r;
        for (auto& [m, x] : p.terms_) r.terms_[m] = c * x;
        return r;
    }

    friend bool operator==(const PolyHG& a, const PolyHG& b) { return a.terms_ == b.terms_; }

    PolyHG truncated(int max_total) const {
        PolyHG r;
        for (auto& [m, c] : terms_)
            if (m.total() <= max_total) r.terms_[m] = c;
        return r;
    }

    /// Exact division by h^k; throws if some term has h-degree < k.
    PolyHG shifted_down_h(int k) const {
        PolyHG r;
        for (auto& [m, c] : terms_) {
            if (m.h < k) throw std::domain_error("PolyHG: not divisible by h^" + std::to_string(k));
            r.terms_[MonomialHG{m.h - k, m.g}] = c;
        }
        return r;
    }

    bool divisible_by_g() const {
        for (auto& [m, c] : terms_)
            if (m.g == 0) return false;
        return true;
    }
    bool free_of_h() const {
        for (auto& [m, c] : terms_)
            if (m.h != 0) return false;
        return true;
    }

    /// Substitute fixed rational values for h and/or g (nullptr = keep).
    PolyHG substituted(const Rational* hv, const Rational* gv) const {
        PolyHG r;
        for (auto& [m, c] : terms_) {
            Rational coeff = c;
            MonomialHG mono = m;
            if (hv) {
                coeff *= hv->pow(m.h);
                mono.h = 0;
            }
            if (gv) {
                coeff *= gv->pow(m.g);
                mono.g = 0;
            }
            r.add_term(mono, coeff);
        }
        return r;
    }

    Rational eval(const Rational& hv, const Rational& gv) const {
        Rational r(0);
        for (auto& [m, c] : terms_) r += c * hv.pow(m.h) * gv.pow(m.g);
        return r;
    }

    PolyHG pow(int e) const {
        PolyHG r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            first = false;
            std::string vars;
            if (m.h > 0) vars += m.h == 1 ? "h" : "h^" + std::to_string(m.h);
            if (m.g > 0) {
                if (!vars.empty()) vars += "*";
                vars += m.g == 1 ? "g" : "g^" + std::to_string(m.g);
            }
            if (vars.empty())
                out += a.str();
            else if (a.is_one())
                out += vars;
            else
                out += a.str() + "*" + vars;
        }
        return out;
    }

private:
    TermMap terms_;
};

namespace detail {

// Univariate polynomials over Rational, used by the bivariate gcd below.
using UniPoly = std::vector<Rational>;  // index = degree, no trailing zeros

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::domain_error("uni_rem: zero divisor");
    while (a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        uni_trim(a);
        if (a.size() < b.size()) break;
        // a.back() is now zero-trimmed; loop continues with lower degree
    }
    return a;
}
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;  // monic
    }
    return a;
}

// View of a PolyHG as a univariate polynomial in h over Q[g].
inline std::map<int, UniPoly> by_h_degree(const PolyHG& p) {
    std::map<int, UniPoly> out;
    for (auto& [m, c] : p.terms()) {
        UniPoly& u = out[m.h];
        if ((int)u.size() <= m.g) u.resize(m.g + 1, Rational(0));
        u[m.g] = c;
    }
    return out;
}

inline PolyHG from_h_map(const std::map<int, UniPoly>& m) {
    PolyHG p;
    for (auto& [dh, u] : m)
        for (size_t dg = 0; dg < u.size(); ++dg) p.add_term(MonomialHG{dh, (int)dg}, u[dg]);
    return p;
}

}  // namespace detail

/// gcd of bivariate polynomials over Q, computed by the classical
/// content/primitive-part pseudo-remainder sequence in the h variable.
/// Result is normalized with leading coefficient 1 (grlex, h > g).
inline PolyHG poly_gcd(const PolyHG& a, const PolyHG& b);

namespace detail {

struct HPoly {  // polynomial in h with UniPoly (in g) coefficients
    std::vector<UniPoly> c;  // index = h-degree
    void trim() {
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
};

inline HPoly to_hpoly(const PolyHG& p) {
    HPoly r;
    for (auto& [m, coeff] : p.terms()) {
        if ((int)r.c.size() <= m.h) r.c.resize(m.h + 1);
        UniPoly& u = r.c[m.h];
        if ((int)u.size() <= m.g) u.resize(m.g + 1, Rational(0));
        u[m.g] = coeff;
    }
    for (auto& u : r.c) uni_trim(u);
    r.trim();
    return r;
}

inline PolyHG from_hpoly(const HPoly& p) {
    PolyHG out;
    for (size_t dh = 0; dh < p.c.size(); ++dh)
        for (size_t dg = 0; dg < p.c[dh].size(); ++dg)
            out.add_term(MonomialHG{(int)dh, (int)dg}, p.c[dh][dg]);
    return out;
}

inline UniPoly hpoly_content(const HPoly& p) {
    UniPoly g;
    for (auto& u : p.c)
        if (!u.empty()) g = g.empty() ? u : uni_gcd(g, u);
    if (!g.empty()) {
        Rational lc = g.back();
        UniPoly gg = g;
        for (auto& x : gg) x /= lc;
        return gg;
    }
    return g;
}

inline UniPoly uni_div_exact(const UniPoly& a, const UniPoly& b) {
    // exact division, used for primitive parts
    UniPoly rem = a, q;
    if (b.empty()) throw std::domain_error("uni_div_exact: zero divisor");
    if (rem.size() < b.size()) {
        uni_trim(rem);
        if (!rem.empty()) throw std::domain_error("uni_div_exact: not divisible");
        return {};
    }
    q.assign(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational f = rem.back() / b.back();
        size_t off = rem.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
        uni_trim(rem);
    }
    if (!rem.empty()) throw std::domain_error("uni_div_exact: not divisible");
    uni_trim(q);
    return q;
}

inline HPoly hpoly_scale_div(const HPoly& p, const UniPoly& d) {
    HPoly r = p;
    for (auto& u : r.c)
        if (!u.empty()) u = uni_div_exact(u, d);
    return r;
}

inline HPoly hpoly_primitive(const HPoly& p) {
    if (p.zero()) return p;
    UniPoly ct = hpoly_content(p);
    return hpoly_scale_div(p, ct);
}

// Pseudo-remainder of a by b in the h variable.
inline HPoly hpoly_prem(HPoly a, const HPoly& b) {
    if (b.zero()) throw std::domain_error("hpoly_prem: zero divisor");
    const UniPoly& lb = b.c.back();
    while (!a.zero() && a.deg() >= b.deg()) {
        UniPoly la = a.c.back();
        int shift = a.deg() - b.deg();
        // a := lb * a - la * h^shift * b
        HPoly next;
        next.c.resize(std::max(a.c.size(), b.c.size() + shift));
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!a.c[i].empty()) next.c[i] = uni_mul(lb, a.c[i]);
        for (size_t i = 0; i < b.c.size(); ++i) {
            if (b.c[i].empty()) continue;
            UniPoly t = uni_mul(la, b.c[i]);
            UniPoly& dst = next.c[i + shift];
            if (dst.size() < t.size()) dst.resize(t.size(), Rational(0));
            for (size_t j = 0; j < t.size(); ++j) dst[j] -= t[j];
            uni_trim(dst);
        }
        next.trim();
        a = std::move(next);
    }
    return a;
}

}  // namespace detail

inline PolyHG poly_gcd(const PolyHG& a, const PolyHG& b) {
    using namespace detail;
    if (a.is_zero() && b.is_zero()) return PolyHG();
    if (a.is_zero() || b.is_zero()) {
        PolyHG n = a.is_zero() ? b : a;
        return n.leading_coeff().inverse() * n;
    }
    HPoly pa = to_hpoly(a), pb = to_hpoly(b);
    UniPoly ca = hpoly_content(pa), cb = hpoly_content(pb);
    UniPoly cg = uni_gcd(ca, cb);
    HPoly u = hpoly_primitive(pa), v = hpoly_primitive(pb);
    if (u.deg() < v.deg()) std::swap(u, v);
    while (!v.zero()) {
        HPoly r = hpoly_prem(u, v);
        u = std::move(v);
        v = hpoly_primitive(r);
    }
    u = hpoly_primitive(u);
    // multiply back the content gcd
    HPoly res = u;
    for (auto& coeff : res.c)
        if (!coeff.empty()) coeff = uni_mul(coeff, cg);
    PolyHG out = from_hpoly(res);
    if (!out.is_zero()) out = out.leading_coeff().inverse() * out;
    return out;
}

/// Exact polynomial division: returns q with a = q*b; throws otherwise.
inline PolyHG poly_div_exact(const PolyHG& a, const PolyHG& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: zero divisor");
    PolyHG rem = a, q;
    MonomialHG lb = b.leading_monomial();
    Rational cb = b.leading_coeff();
    while (!rem.is_zero()) {
        MonomialHG la = rem.leading_monomial();
        if (la.h < lb.h || la.g < lb.g) throw std::domain_error("poly_div_exact: not divisible");
        MonomialHG qm{la.h - lb.h, la.g - lb.g};
        Rational qc = rem.leading_coeff() / cb;
        q.add_term(qm, qc);
        rem -= PolyHG::monomial(qm.h, qm.g, qc) * b;
    }
    return q;
}

/// Formal power series in (h, g) truncated at a fixed total degree.
/// All arithmetic is closed under the truncation; mixing two orders
/// truncates to the smaller one.
class TruncSeries {
public:
    TruncSeries() : order_(0) {}
    TruncSeries(PolyHG p, int order) : poly_(p.truncated(order)), order_(order) {}
    static TruncSeries constant(const Rational& c, int order) { return TruncSeries(PolyHG(c), order); }
    static TruncSeries one(int order) { return constant(Rational(1), order); }

    const PolyHG& poly() const { return poly_; }
    int order() const { return order_; }
    bool is_zero() const { return poly_.is_zero(); }
    int min_total_degree() const { return poly_.min_total_degree(); }

    TruncSeries operator-() const { return TruncSeries(-poly_, order_); }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order_, b.order_);
        return TruncSeries(a.poly_ + b.poly_, n);
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order_, b.order_);
        return TruncSeries(a.poly_ - b.poly_, n);
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order_, b.order_);
        return TruncSeries(a.poly_ * b.poly_, n);
    }
    friend TruncSeries operator*(const Rational& c, const TruncSeries& s) {
        return TruncSeries(c * s.poly_, s.order_);
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.poly_ == b.poly_;
    }

    TruncSeries truncated(int n) const { return TruncSeries(poly_, std::min(n, order_)); }

    std::string str() const { return poly_.str(); }

private:
    PolyHG poly_;
    int order_;
};

/// exp of a series with zero constant term (finite sum at the truncation).
inline TruncSeries series_exp(const TruncSeries& s) {
    if (!s.poly().constant_term().is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    TruncSeries acc = TruncSeries::one(s.order());
    TruncSeries pw = acc;
    for (int k = 1; k <= s.order(); ++k) {
        pw *= s;
        if (pw.is_zero()) break;
        acc += Rational::factorial(k).inverse() * pw;
    }
    return acc;
}

/// log of a series with constant term 1.
inline TruncSeries series_log(const TruncSeries& s) {
    if (!s.poly().constant_term().is_one())
        throw std::domain_error("series_log: constant term is not 1");
    TruncSeries u = s - TruncSeries::one(s.order());
    TruncSeries acc(PolyHG(), s.order());
    TruncSeries pw = TruncSeries::one(s.order());
    for (int k = 1; k <= s.order(); ++k) {
        pw *= u;
        if (pw.is_zero()) break;
        Rational c = Rational(k).inverse();
        if (k % 2 == 0) c = -c;
        acc += c * pw;
    }
    return acc;
}

/// Inverse of a series whose constant term is nonzero.
inline TruncSeries series_inverse(const TruncSeries& s) {
    Rational c = s.poly().constant_term();
    if (c.is_zero()) throw std::domain_error("series_inverse: zero constant term");
    TruncSeries v = c.inverse() * s - TruncSeries::one(s.order());  // min degree >= 1
    TruncSeries acc = TruncSeries::one(s.order());
    TruncSeries pw = acc;
    for (int k = 1; k <= s.order(); ++k) {
        pw *= v;
        if (pw.is_zero()) break;
        acc += (k % 2 ? Rational(-1) : Rational(1)) * pw;
    }
    return c.inverse() * acc;
}

/// Rational function num/den in canonical form: gcd(num, den) a unit and
/// den monic under grlex(h > g). Equality is structural after simplify.
class RatFun {
public:
    RatFun() : num_(PolyHG()), den_(PolyHG(1)) {}
    RatFun(const Rational& c) : num_(PolyHG(c)), den_(PolyHG(1)) {}
    RatFun(PolyHG n) : num_(std::move(n)), den_(PolyHG(1)) {}
    RatFun(PolyHG n, PolyHG d) : num_(std::move(n)), den_(std::move(d)) { simplify(); }

    const PolyHG& num() const { return num_; }
    const PolyHG& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void simplify() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = PolyHG(1);
            return;
        }
        PolyHG g = poly_gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        Rational lc = den_.leading_coeff();
        if (!lc.is_one()) {
            num_ = lc.inverse() * num_;
            den_ = lc.inverse() * den_;
        }
    }

    PolyHG num_;
    PolyHG den_;
};

}  // namespace twistlab
