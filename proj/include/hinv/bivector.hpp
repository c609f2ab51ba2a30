#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hinv/poly.hpp"

namespace hinv {

struct VectorField {
    VarSpace vs;
    std::vector<Poly> components;  // length n

    explicit VectorField(const VarSpace& vs_) : vs(vs_), components(vs_.n(), Poly(vs_)) {}

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Structured pass/fail of a single check; a failing check carries the first
// witness (index tuple plus the offending nonzero polynomial).
struct VerificationReport {
    struct Witness {
        std::vector<int> indices;
        Poly value;
    };

    std::string check;
    bool pass = true;
    std::optional<Witness> witness;

    static VerificationReport ok(std::string name) { return {std::move(name), true, std::nullopt}; }
    static VerificationReport fail(std::string name, std::vector<int> idx, Poly value) {
        return {std::move(name), false, Witness{std::move(idx), std::move(value)}};
    }
};

// Antisymmetric n x n matrix of polynomials; only the strict upper triangle
// is stored, entry(j,i) = -entry(i,j), diagonal is zero.
class Bivector {
public:
    explicit Bivector(VarSpace vs) : vs_(std::move(vs)) {}

    const VarSpace& space() const { return vs_; }
    int n() const { return vs_.n(); }

    void set_entry(int i, int j, Poly p) {
        check_index(i);
        check_index(j);
        require_same_space(vs_, p.space());
        if (i == j) {
            if (!p.is_zero()) throw std::invalid_argument("diagonal entries must be zero");
            return;
        }
        if (i > j) {
            std::swap(i, j);
            p = -p;
        }
        if (p.is_zero())
            upper_.erase({i, j});
        else
            upper_.insert_or_assign({i, j}, std::move(p));
    }

    // Antisymmetric extension: valid for any pair of indices.
    Poly entry(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) return Poly::zero(vs_);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = upper_.find({i, j});
        if (it == upper_.end()) return Poly::zero(vs_);
        return flip ? -it->second : it->second;
    }

    const std::map<std::pair<int, int>, Poly>& upper_entries() const { return upper_; }

    bool operator==(const Bivector& o) const { return vs_ == o.vs_ && upper_ == o.upper_; }

private:
    void check_index(int i) const {
        if (i < 0 || i >= vs_.n()) throw std::out_of_range("bivector index out of range");
    }

    VarSpace vs_;
    std::map<std::pair<int, int>, Poly> upper_;
};

// {f,g} = sum_{i<j} P_ij (d_i f d_j g - d_j f d_i g)
inline Poly bracket(const Bivector& B, const Poly& f, const Poly& g) {
    require_same_space(B.space(), f.space());
    require_same_space(B.space(), g.space());
    Poly r(B.space());
    for (const auto& [ij, p] : B.upper_entries()) {
        auto [i, j] = ij;
        r += p * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
    }
    return r;
}

// J_ijk = sum_l (P_il d_l P_jk + P_jl d_l P_ki + P_kl d_l P_ij), entries read
// antisymmetrically. Vanishes identically iff the Jacobi identity holds on
// the coordinate triple.
inline Poly jacobiator(const Bivector& B, int i, int j, int k) {
    if (i == j || j == k || i == k) throw std::invalid_argument("jacobiator needs distinct indices");
    const int n = B.n();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw std::out_of_range("jacobiator index out of range");
    Poly r(B.space());
    Poly pjk = B.entry(j, k), pki = B.entry(k, i), pij = B.entry(i, j);
    for (int l = 0; l < n; ++l) {
        r += B.entry(i, l) * pjk.partial(l);
        r += B.entry(j, l) * pki.partial(l);
        r += B.entry(k, l) * pij.partial(l);
    }
    return r;
}

inline VerificationReport is_poisson(const Bivector& B) {
    const int n = B.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Poly J = jacobiator(B, i, j, k);
                if (!J.is_zero()) return VerificationReport::fail("jacobi", {i, j, k}, std::move(J));
            }
    return VerificationReport::ok("jacobi");
}

// Modular vector field: component i is 2 * sum_j dP_ij/dx_j. The factor 2
// matches the usual divergence normalization; only vanishing matters.
inline VectorField modular_field(const Bivector& B) {
    const int n = B.n();
    VectorField v(B.space());
    for (int i = 0; i < n; ++i) {
        Poly s(B.space());
        for (int j = 0; j < n; ++j) s += B.entry(i, j).partial(j);
        v.components[i] = s * Rational(2);
    }
    return v;
}

// Divergence criterion for unimodularity. With full_check=false only
// component 0 is tested, which suffices for H-invariant tensors.
inline VerificationReport is_unimodular_div(const Bivector& B, bool full_check = true) {
    VectorField v = modular_field(B);
    const int limit = full_check ? B.n() : 1;
    for (int i = 0; i < limit; ++i)
        if (!v.components[i].is_zero())
            return VerificationReport::fail("unimodular", {i}, v.components[i]);
    return VerificationReport::ok("unimodular");
}

// f is a Casimir iff {x_i, f} = 0 for every coordinate (enough by Leibniz).
inline VerificationReport is_casimir(const Bivector& B, const Poly& f) {
    require_same_space(B.space(), f.space());
    for (int i = 0; i < B.n(); ++i) {
        Poly b = bracket(B, Poly::coordinate(B.space(), i), f);
        if (!b.is_zero()) return VerificationReport::fail("casimir", {i}, std::move(b));
    }
    return VerificationReport::ok("casimir");
}

namespace detail {

// sb / sa for two single-term parameter monomials with coefficient 1.
inline Poly fb_to_fa_shift(const Poly& sa, const Poly& sb) {
    Monomial m = sa.leading_monomial();
    for (auto& [_, e] : m.param) e = -e;
    Poly inv(sa.space());
    inv.add_term(std::move(m), 1);
    return inv * sb;
}

// Exact polynomial quotient a/b (throws if the division is not exact).
// Laurent parameter exponents are first cleared so the long division runs
// in a genuine polynomial ring under the canonical monomial order.
inline Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Poly::zero(a.space());
    require_same_space(a.space(), b.space());

    auto min_param_exps = [](const Poly& p) {
        std::map<int, int> mins;
        for (const auto& [m, _] : p.terms())
            for (const auto& [idx, e] : m.param) {
                auto it = mins.find(idx);
                if (it == mins.end())
                    mins[idx] = std::min(e, 0);
                else
                    it->second = std::min(it->second, e);
            }
        return mins;
    };
    auto shift_mono = [&](const Poly& p, int sign) {
        Monomial m{std::vector<int>(p.space().n(), 0), {}};
        for (const auto& [idx, e] : min_param_exps(p))
            if (e < 0) m.param[idx] = -e * sign;
        Poly s(p.space());
        s.add_term(std::move(m), 1);
        return s;
    };

    Poly sa = shift_mono(a, 1), sb = shift_mono(b, 1);
    Poly fa = a * sa, fb = b * sb;

    Poly q(a.space());
    Poly r = fa;
    const Monomial& ltb = fb.leading_monomial();
    const Rational& lcb = fb.leading_coeff();
    std::size_t guard = 0;
    while (!r.is_zero()) {
        Monomial qm;
        if (!mono_try_divide(r.leading_monomial(), ltb, qm))
            throw std::domain_error("polynomial division is not exact");
        Poly t(a.space());
        t.add_term(std::move(qm), r.leading_coeff() / lcb);
        q += t;
        r -= t * fb;
        if (++guard > 1000000) throw std::domain_error("polynomial division did not terminate");
    }
    // a/b = q * sb / sa
    return q * fb_to_fa_shift(sa, sb);
}

// Fraction-free Gaussian elimination (Bareiss). Laurent parameter content is
// cleared per row up front; every interior division is exact.
inline Poly det_bareiss(std::vector<std::vector<Poly>> m, const VarSpace& vs) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(vs, 1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

    // clear negative parameter exponents row by row, tracking the total shift
    Monomial total_shift{std::vector<int>(vs.n(), 0), {}};
    for (auto& row : m) {
        std::map<int, int> mins;
        for (const auto& p : row)
            for (const auto& [mono, _] : p.terms())
                for (const auto& [idx, e] : mono.param)
                    if (e < 0) {
                        auto it = mins.find(idx);
                        if (it == mins.end())
                            mins[idx] = e;
                        else
                            it->second = std::min(it->second, e);
                    }
        if (mins.empty()) continue;
        Monomial sm{std::vector<int>(vs.n(), 0), {}};
        for (const auto& [idx, e] : mins) sm.param[idx] = -e;
        Poly shift(vs);
        shift.add_term(sm, 1);
        for (auto& p : row) p = p * shift;
        total_shift = mono_mul(total_shift, sm);
    }

    int sign = 1;
    Poly prev = Poly::constant(vs, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Poly::zero(vs);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = detail::div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1] * Rational(sign);
    // undo the row shifts
    for (auto& [_, e] : total_shift.param) e = -e;
    Poly unshift(vs);
    unshift.add_term(std::move(total_shift), 1);
    return det * unshift;
}

}  // namespace detail

// Jacobian Poisson structure: entry P_ij = mult * det of the n x n matrix
// whose first two rows are the unit vectors e_i, e_j and whose remaining
// rows are the gradients of the n-2 Casimir candidates.
inline Bivector jps_from_casimirs(const VarSpace& vs, const std::vector<Poly>& casimirs,
                                  const Poly& mult) {
    const int n = vs.n();
    if (static_cast<int>(casimirs.size()) != n - 2)
        throw std::invalid_argument("jps_from_casimirs needs exactly n-2 Casimirs");
    require_same_space(vs, mult.space());
    std::vector<std::vector<Poly>> grads;
    for (const auto& q : casimirs) {
        require_same_space(vs, q.space());
        std::vector<Poly> g;
        for (int l = 0; l < n; ++l) g.push_back(q.partial(l));
        grads.push_back(std::move(g));
    }
    Bivector B(vs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::vector<Poly>> mat;
            std::vector<Poly> ei(n, Poly::zero(vs)), ej(n, Poly::zero(vs));
            ei[i] = Poly::constant(vs, 1);
            ej[j] = Poly::constant(vs, 1);
            mat.push_back(std::move(ei));
            mat.push_back(std::move(ej));
            for (const auto& g : grads) mat.push_back(g);
            B.set_entry(i, j, mult * detail::det_bareiss(std::move(mat), vs));
        }
    return B;
}

// The quadratic combination P_ij P_kl + P_ki P_jl + P_jk P_il for the cyclic
// permutation (i,j,k,l,m) = (m+1, m+2, m+3, m+4, m) of (0..4).
inline Poly wedge_square_cyclic5(const Bivector& B, int m) {
    if (B.n() != 5) throw std::invalid_argument("wedge_square_cyclic5 requires n = 5");
    if (m < 0 || m >= 5) throw std::out_of_range("cyclic index out of range");
    int i = (m + 1) % 5, j = (m + 2) % 5, k = (m + 3) % 5, l = (m + 4) % 5;
    return B.entry(i, j) * B.entry(k, l) + B.entry(k, i) * B.entry(j, l) +
           B.entry(j, k) * B.entry(i, l);
}

}  // namespace hinv
