#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/enveloping.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

/// Z2-graded vector space: a parity (0/1) per basis index.
struct GradedSpace {
    std::vector<int> parity;
    int dim() const { return (int)parity.size(); }

    /// The fundamental sl(1/2) space: index 0 even, indices 1-2 odd,
    /// matching the supermatrix block layout (e | Psi / Theta | T).
    static GradedSpace fundamental() { return {{0, 1, 1}}; }
    static GradedSpace even(int n) { return {std::vector<int>(n, 0)}; }

    GradedSpace tensor(const GradedSpace& o) const {
        GradedSpace t;
        for (int a : parity)
            for (int b : o.parity) t.parity.push_back((a + b) % 2);
        return t;
    }
};

/// Dense matrix over exact bivariate polynomials.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int r, int c) : rows_(r), cols_(c), a_(r * c) {}

    static PolyMatrix identity(int n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = PolyHG(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    PolyHG& at(int i, int j) { return a_[i * cols_ + j]; }
    const PolyHG& at(int i, int j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }
    long nonzero_entries() const {
        long n = 0;
        for (auto& p : a_)
            if (!p.is_zero()) ++n;
        return n;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    PolyMatrix operator-() const {
        PolyMatrix r = *this;
        for (auto& p : r.a_) p = -p;
        return r;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("PolyMatrix: shape mismatch");
        PolyMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const PolyHG& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const PolyHG& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend PolyMatrix operator*(const PolyHG& s, PolyMatrix m) {
        for (auto& p : m.a_) p = s * p;
        return m;
    }
    friend PolyMatrix operator*(const Rational& s, PolyMatrix m) {
        for (auto& p : m.a_) p = s * p;
        return m;
    }

    PolyMatrix substituted(const Rational* hv, const Rational* gv) const {
        PolyMatrix r = *this;
        for (auto& p : r.a_) p = p.substituted(hv, gv);
        return r;
    }
    PolyMatrix truncated(int n) const {
        PolyMatrix r = *this;
        for (auto& p : r.a_) p = p.truncated(n);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<PolyHG> a_;
};

/// exp of a nilpotent matrix; throws if the argument is not nilpotent.
inline PolyMatrix exp_nilpotent(const PolyMatrix& a) {
    int n = a.rows();
    PolyMatrix acc = PolyMatrix::identity(n);
    PolyMatrix pw = acc;
    for (int k = 1; k <= n; ++k) {
        pw = pw * a;
        if (pw.is_zero()) return acc;
        acc = acc + Rational::factorial(k).inverse() * pw;
    }
    throw std::domain_error("exp_nilpotent: argument is not nilpotent");
}

using RepTable = std::map<Gen, PolyMatrix>;

/// Representation-property residual rho([x,y]) - (rho(x)rho(y) -
/// (-1)^{|x||y|} rho(y)rho(x)) for one generator pair.
inline PolyMatrix rep_residual(const RepTable& t, const Presentation& p, Gen x, Gen y) {
    const PolyMatrix& mx = t.at(x);
    const PolyMatrix& my = t.at(y);
    PolyMatrix lhs = mx * my;
    PolyMatrix yx = my * mx;
    lhs = (is_odd(x) && is_odd(y)) ? lhs + yx : lhs - yx;
    PolyMatrix rhs(mx.rows(), mx.cols());
    for (auto& [g, c] : p.bracket(x, y)) rhs = rhs + c * t.at(g);
    return lhs - rhs;
}

inline bool verify_representation(const RepTable& t, const Presentation& p) {
    for (Gen x : p.generators())
        for (Gen y : p.generators())
            if (!rep_residual(t, p, x, y).is_zero()) return false;
    return true;
}

/// Derives the fundamental 3-dimensional representation by solving the
/// sl(1/2) relations over graded 3x3 matrices with the block-support
/// ansatz (H, Z diagonal; X+- on the odd 2x2 block; v's on the
/// even<->odd connecting entries), gauge-fixed by (X+)_{12} = 1 and
/// (v+)_{02} = 1. Every constraint used is asserted; the full relation
/// table is re-verified pair by pair before returning.
inline RepTable derive_fundamental_rep() {
    auto fail = [](const std::string& why) {
        throw std::logic_error("derive_fundamental_rep: " + why);
    };

    // gauge choices
    Rational x(1);  // X+ = x E12
    Rational p(1);  // v+ = p E02

    // [H, X+] = 2X+ forces h1 - h2 = 2; [X+, X-] = H forces
    // H = diag(0, xy, -xy), so xy = 1.
    Rational y = Rational(1) / x;
    Rational h0(0), h1(1), h2(-1);
    if (h1 - h2 != Rational(2)) fail("[H,X+] = 2X+ unsatisfiable");

    // {vb-, v+} = (Z - H)/2 has no E11 part, so z1 = h1; [Z, v+] = v+
    // forces z0 - z2 = 1 and [Z, v-] = v- forces z0 - z1 = 1.
    Rational z1 = h1;
    Rational z0 = z1 + 1;
    Rational z2 = z0 - 1;
    // {vb+, v-} = (Z + H)/2 has no E22 part: z2 + h2 = 0.
    if (z2 + h2 != Rational(0)) fail("{vb+,v-} = (Z+H)/2 unsatisfiable");

    // {v+, vb+} = X+ gives r p = x; [X+, v-] = -v+ gives q = p;
    // {vb-, v+} = (Z - H)/2 gives s p = (z0 - h0)/2.
    Rational r = x / p;
    Rational q = p;
    Rational s = (z0 - h0) / (Rational(2) * p);
    // consistency: {vb+, v-} E00 entry is r q = (z0 + h0)/2
    if (r * q != (z0 + h0) / Rational(2)) fail("{vb+,v-} scalar system inconsistent");

    auto E = [](int i, int j, const Rational& c) {
        PolyMatrix m(3, 3);
        m.at(i, j) = PolyHG(c);
        return m;
    };
    RepTable t;
    t[Gen::Z] = E(0, 0, z0) + E(1, 1, z1) + E(2, 2, z2);
    t[Gen::H] = E(0, 0, h0) + E(1, 1, h1) + E(2, 2, h2);
    t[Gen::Xp] = E(1, 2, x);
    t[Gen::Xm] = E(2, 1, y);
    t[Gen::Vp] = E(0, 2, p);
    t[Gen::Vm] = E(0, 1, q);
    t[Gen::Vbp] = E(1, 0, r);
    t[Gen::Vbm] = E(2, 0, s);

    Presentation sl = sl12_presentation();
    for (Gen a : sl.generators())
        for (Gen b : sl.generators())
            if (!rep_residual(t, sl, a, b).is_zero())
                throw std::logic_error(std::string("derive_fundamental_rep: relation [") + gen_name(a) +
                                       "," + gen_name(b) + "] fails in the candidate solution");
    return t;
}

/// Standard (2j+1)-dimensional highest-weight gl(2) representation with a
/// configurable central scalar for Z. j2 = 2j must be in {1,2,3,4}.
inline RepTable spin_rep_gl2(int j2, const Rational& z_scalar = Rational(1)) {
    if (j2 < 1 || j2 > 4) throw std::domain_error("spin_rep_gl2: 2j must be 1..4");
    int n = j2 + 1;
    PolyMatrix H(n, n), Xp(n, n), Xm(n, n), Z(n, n);
    for (int k = 0; k < n; ++k) {
        H.at(k, k) = PolyHG(Rational(j2 - 2 * k));
        Z.at(k, k) = PolyHG(z_scalar);
    }
    for (int k = 1; k < n; ++k) {
        // X+ e_k = k(2j+1-k) e_{k-1}, X- e_k = e_{k+1}
        Xp.at(k - 1, k) = PolyHG(Rational((long)k * (j2 + 1 - k)));
        Xm.at(k, k - 1) = PolyHG(1);
    }
    RepTable t;
    t[Gen::Z] = Z;
    t[Gen::H] = H;
    t[Gen::Xp] = Xp;
    t[Gen::Xm] = Xm;
    return t;
}

/// Exact image of sigma = -ln(1 - 2h X+): finite because rho(X+) is
/// nilpotent in any finite-dimensional representation here.
inline PolyMatrix rho_sigma(const RepTable& t) {
    const PolyMatrix& xp = t.at(Gen::Xp);
    int n = xp.rows();
    PolyMatrix acc(n, n);
    PolyMatrix pw = PolyMatrix::identity(n);
    PolyHG h = PolyHG::var_h();
    for (int k = 1; k <= n; ++k) {
        pw = pw * xp;
        if (pw.is_zero()) return acc;
        acc = acc + (Rational(2).pow(k) / Rational(k)) * (h.pow(k) * pw);
    }
    throw std::domain_error("rho_sigma: rho(X+) is not nilpotent");
}

/// Exact image of sigma/2h (polynomial in h by the overall h factor).
inline PolyMatrix rho_sigma_over_2h(const RepTable& t) {
    const PolyMatrix& xp = t.at(Gen::Xp);
    int n = xp.rows();
    PolyMatrix acc(n, n);
    PolyMatrix pw = PolyMatrix::identity(n);
    PolyHG h = PolyHG::var_h();
    for (int k = 1; k <= n; ++k) {
        pw = pw * xp;
        if (pw.is_zero()) return acc;
        acc = acc + (Rational(2).pow(k - 1) / Rational(k)) * (h.pow(k - 1) * pw);
    }
    throw std::domain_error("rho_sigma_over_2h: rho(X+) is not nilpotent");
}

/// Evaluates a PBW element: coefficients become their polynomial parts,
/// monomials become ordered products of generator images.
inline PolyMatrix evaluate_element(const Element& e, const RepTable& t, int dim) {
    PolyMatrix out(dim, dim);
    for (auto& [k, c] : e.terms()) {
        PolyMatrix m = PolyMatrix::identity(dim);
        for (uint8_t letter : k[0].letters()) m = m * t.at(static_cast<Gen>(letter));
        out = out + c.poly() * m;
    }
    return out;
}

inline PolyMatrix evaluate_element_mono(const PBWMonomial& m, const RepTable& t, int dim) {
    PolyMatrix out = PolyMatrix::identity(dim);
    for (uint8_t letter : m.letters()) out = out * t.at(static_cast<Gen>(letter));
    return out;
}

/// Evaluates a rank-2 tensor on the ordered tensor basis with the Koszul
/// sign folded in: the term a(x)b contributes
/// (-1)^{|b| |col_1|} rho(a)[i,j] rho(b)[k,l] at ((ik),(jl)).
inline PolyMatrix evaluate_tensor2(const Tensor2& e, const RepTable& t, const GradedSpace& V) {
    int d = V.dim();
    PolyMatrix out(d * d, d * d);
    for (auto& [key, c] : e.terms()) {
        PolyMatrix ma = evaluate_element_mono(key[0], t, d), mb = evaluate_element_mono(key[1], t, d);
        int pb = key[1].parity() == Parity::Odd ? 1 : 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (ma.at(i, j).is_zero()) continue;
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        if (mb.at(k, l).is_zero()) continue;
                        PolyHG v = c.poly() * ma.at(i, j) * mb.at(k, l);
                        if (pb && V.parity[j]) v = -v;
                        out.at(i * d + k, j * d + l) += v;
                    }
            }
    }
    return out;
}

/// Ungraded Kronecker product (enough for even operators).
inline PolyMatrix kron_plain(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero()) out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

/// Exact R-matrix in a representation: the four-exponential product
/// evaluated through nilpotent matrix exponentials, polynomial in (h, g).
inline PolyMatrix r_matrix_exact(const RepTable& t) {
    PolyHG g = PolyHG::var_g();
    const PolyMatrix& Z = t.at(Gen::Z);
    const PolyMatrix& H = t.at(Gen::H);
    PolyMatrix sig = rho_sigma(t);
    PolyMatrix sig2h = rho_sigma_over_2h(t);
    PolyMatrix e1 = exp_nilpotent(kron_plain(Z, g * sig2h));
    PolyMatrix e2 = exp_nilpotent(kron_plain(Rational(-1, 2) * sig, H));
    PolyMatrix e3 = exp_nilpotent(kron_plain(H, Rational(1, 2) * sig));
    PolyMatrix e4 = exp_nilpotent(kron_plain(Rational(-1) * (g * sig2h), Z));
    return e1 * (e2 * (e3 * e4));
}

/// Indices of V(x)V grouped into parity sectors ee | eo | oe | oo,
/// lexicographic inside each sector.
inline std::vector<int> sector_permutation(const GradedSpace& V) {
    std::vector<int> perm;
    int d = V.dim();
    for (auto [pi, pj] : {std::pair<int, int>{0, 0}, {0, 1}, {1, 0}, {1, 1}})
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (V.parity[i] == pi && V.parity[j] == pj) perm.push_back(i * d + j);
    return perm;
}

inline PolyMatrix permute_basis(const PolyMatrix& m, const std::vector<int>& perm) {
    PolyMatrix out((int)perm.size(), (int)perm.size());
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = 0; b < perm.size(); ++b) out.at((int)a, (int)b) = m.at(perm[a], perm[b]);
    return out;
}

/// The printed sector blocks of the fundamental R-matrix.
inline PolyMatrix rcheck_matrix() {  // 2x2 block acting on the even(x)odd sector
    PolyMatrix m = PolyMatrix::identity(2);
    m.at(0, 1) = Rational(2) * PolyHG::var_g();
    return m;
}
inline PolyMatrix rbar_matrix() {  // 4x4 gl(2) block
    PolyHG h = PolyHG::var_h(), g = PolyHG::var_g();
    PolyMatrix m = PolyMatrix::identity(4);
    m.at(0, 1) = h + g;
    m.at(0, 2) = -(h + g);
    m.at(0, 3) = h * h - g * g;
    m.at(1, 3) = h - g;
    m.at(2, 3) = -h + g;
    return m;
}

struct RMatrixBlocks {
    PolyMatrix full;     // 9x9 on the plain tensor basis
    PolyMatrix sectors;  // same matrix on the sector-ordered basis
    PolyMatrix ee, eo, oe, oo;
    long off_block_entries = 0;
};

inline RMatrixBlocks r_matrix_fundamental_blocks(const RepTable& t) {
    GradedSpace V = GradedSpace::fundamental();
    RMatrixBlocks out;
    out.full = r_matrix_exact(t);
    auto perm = sector_permutation(V);
    out.sectors = permute_basis(out.full, perm);
    auto slice = [&](int r0, int c0, int n) {
        PolyMatrix b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.at(i, j) = out.sectors.at(r0 + i, c0 + j);
        return b;
    };
    out.ee = slice(0, 0, 1);
    out.eo = slice(1, 1, 2);
    out.oe = slice(3, 3, 2);
    out.oo = slice(5, 5, 4);
    // count anything outside the diagonal blocks
    int stops[] = {0, 1, 3, 5, 9};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            int bi = 0, bj = 0;
            while (i >= stops[bi + 1]) ++bi;
            while (j >= stops[bj + 1]) ++bj;
            if (bi != bj && !out.sectors.at(i, j).is_zero()) ++out.off_block_entries;
        }
    return out;
}

/// Graded embedding of a two-site matrix into sites (1,3) of the triple
/// tensor space: entry sign (-1)^{(|k|+|z|)|y|} with the middle index y
/// untouched; reduces to the plain embedding for even R.
inline PolyMatrix embed13_matrix(const PolyMatrix& r, const GradedSpace& V) {
    int d = V.dim();
    PolyMatrix out(d * d * d, d * d * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int x = 0; x < d; ++x)
                for (int z = 0; z < d; ++z) {
                    const PolyHG& v = r.at(i * d + k, x * d + z);
                    if (v.is_zero()) continue;
                    int termpar = (V.parity[k] + V.parity[z]) % 2;
                    for (int y = 0; y < d; ++y) {
                        PolyHG w = v;
                        if (termpar && V.parity[y]) w = -w;
                        out.at((i * d + y) * d + k, (x * d + y) * d + z) = w;
                    }
                }
    return out;
}

/// Graded Yang-Baxter residual R12 R13 R23 - R23 R13 R12 on V(x)V(x)V.
inline PolyMatrix ybe_residual(const PolyMatrix& r, const GradedSpace& V) {
    int d = V.dim();
    PolyMatrix id = PolyMatrix::identity(d);
    PolyMatrix r12 = kron_plain(r, id);
    PolyMatrix r23 = kron_plain(id, r);
    PolyMatrix r13 = embed13_matrix(r, V);
    return r12 * (r13 * r23) - r23 * (r13 * r12);
}

/// Graded flip on V(x)V: P (e_k (x) e_l) = (-1)^{|k||l|} e_l (x) e_k.
inline PolyMatrix graded_flip_matrix(const GradedSpace& V) {
    int d = V.dim();
    PolyMatrix p(d * d, d * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Rational s = (V.parity[k] && V.parity[l]) ? Rational(-1) : Rational(1);
            p.at(l * d + k, k * d + l) = PolyHG(s);
        }
    return p;
}

}  // namespace twistlab
