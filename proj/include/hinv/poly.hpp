#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "hinv/monomial.hpp"
#include "hinv/rational.hpp"
#include "hinv/varspace.hpp"

namespace hinv {

// tau-degree of a polynomial: a residue mod n when all monomials agree,
// Mixed otherwise. The zero polynomial reports residue 0.
struct TauDegree {
    bool mixed = false;
    int residue = 0;

    static TauDegree of(int r) { return {false, r}; }
    static TauDegree mixed_tag() { return {true, 0}; }
    bool is_homogeneous() const { return !mixed; }
    bool operator==(const TauDegree&) const = default;
};

// Sparse exact multivariate polynomial over Q: polynomial in the cyclic
// coordinates, Laurent in the parameters. Immutable value semantics; every
// operation returns a normalized result (no zero coefficients stored).
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit Poly(VarSpace vs) : vs_(std::move(vs)) {}

    static Poly zero(const VarSpace& vs) { return Poly(vs); }

    static Poly constant(const VarSpace& vs, Rational c) {
        Poly p(vs);
        p.add_term(Monomial{std::vector<int>(vs.n(), 0), {}}, std::move(c));
        return p;
    }

    static Poly coordinate(const VarSpace& vs, int i, int exp = 1) {
        if (i < 0 || i >= vs.n()) throw std::out_of_range("coordinate index out of range");
        if (exp < 0) throw std::domain_error("negative exponent on a coordinate");
        Monomial m{std::vector<int>(vs.n(), 0), {}};
        m.coord[i] = exp;
        Poly p(vs);
        p.add_term(std::move(m), 1);
        return p;
    }

    static Poly parameter(const VarSpace& vs, std::string_view name, int exp = 1) {
        int idx = vs.param_index(name);
        if (idx < 0) throw std::invalid_argument("unknown parameter: " + std::string(name));
        Monomial m{std::vector<int>(vs.n(), 0), {}};
        if (exp != 0) m.param[idx] = exp;
        Poly p(vs);
        p.add_term(std::move(m), 1);
        return p;
    }

    const VarSpace& space() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(Monomial m, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        require_same_space(vs_, o.vs_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        require_same_space(vs_, o.vs_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(vs_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_space(a.vs_, b.vs_);
        Poly r(a.vs_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend Poly operator*(Poly a, const Rational& c) {
        if (c == 0) return Poly(a.vs_);
        for (auto& [_, coef] : a.terms_) coef *= c;
        return a;
    }

    friend Poly operator*(const Rational& c, Poly a) { return std::move(a) * c; }

    bool operator==(const Poly& o) const { return vs_ == o.vs_ && terms_ == o.terms_; }

    // Integer power; negative exponents require an invertible polynomial
    // (a single coordinate-free term).
    Poly pow(int k) const {
        if (k < 0) return inverted().pow(-k);
        Poly r = constant(vs_, 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Poly partial(int i) const {
        if (i < 0 || i >= vs_.n()) throw std::out_of_range("coordinate index out of range");
        Poly r(vs_);
        for (const auto& [m, c] : terms_) {
            if (m.coord[i] == 0) continue;
            Monomial d = m;
            d.coord[i] -= 1;
            r.add_term(std::move(d), c * m.coord[i]);
        }
        return r;
    }

    // sigma^s: the exponent of x_{i+s mod n} in the image equals the exponent
    // of x_i in the source; coefficients and parameters are untouched.
    Poly sigma(int s) const {
        int n = vs_.n();
        s = ((s % n) + n) % n;
        if (s == 0) return *this;
        Poly r(vs_);
        for (const auto& [m, c] : terms_) {
            Monomial sm = m;
            for (int i = 0; i < n; ++i) sm.coord[(i + s) % n] = m.coord[i];
            r.terms_.emplace(std::move(sm), c);
        }
        return r;
    }

    TauDegree tau_degree() const {
        if (terms_.empty()) return TauDegree::of(0);
        int r = terms_.begin()->first.tau_residue();
        for (const auto& [m, _] : terms_)
            if (m.tau_residue() != r) return TauDegree::mixed_tag();
        return TauDegree::of(r);
    }

    struct XDegree {
        int min = 0;
        int max = 0;
        bool zero = true;
    };

    // Total coordinate degree range; parameters do not count.
    XDegree x_degree() const {
        XDegree d;
        for (const auto& [m, _] : terms_) {
            int t = m.coord_degree();
            if (d.zero) {
                d = {t, t, false};
            } else {
                d.min = std::min(d.min, t);
                d.max = std::max(d.max, t);
            }
        }
        return d;
    }

    bool is_x_homogeneous() const {
        auto d = x_degree();
        return d.zero || d.min == d.max;
    }

    // Exact parameter substitution. Values live over `out`; parameters of
    // *this not covered by `assign` must exist in `out` under the same name.
    // A parameter occurring with a negative exponent needs an invertible
    // value (in particular, not zero).
    Poly substitute(const std::map<std::string, Poly>& assign, const VarSpace& out) const {
        if (out.n() != vs_.n()) throw std::invalid_argument("substitute: coordinate count differs");
        for (const auto& [name, value] : assign)
            if (!(value.space() == out))
                throw std::invalid_argument("substitute: value for " + name + " not over target space");
        Poly r(out);
        for (const auto& [m, c] : terms_) {
            Monomial carried{m.coord, {}};
            Poly factor = Poly::constant(out, c);
            for (const auto& [pidx, e] : m.param) {
                const std::string& name = vs_.params()[pidx];
                auto it = assign.find(name);
                if (it == assign.end()) {
                    int oidx = out.param_index(name);
                    if (oidx < 0)
                        throw std::invalid_argument("substitute: parameter " + name +
                                                    " absent from target space");
                    carried.param[oidx] = e;
                } else {
                    factor = factor * it->second.pow(e);
                }
            }
            Poly term(out);
            term.add_term(std::move(carried), 1);
            r += factor * term;
        }
        return r;
    }

    // Convenience: rational values, parameters kept in the same space.
    Poly substitute(const std::map<std::string, Rational>& assign) const {
        std::map<std::string, Poly> lifted;
        for (const auto& [name, value] : assign) lifted.emplace(name, Poly::constant(vs_, value));
        return substitute(lifted, vs_);
    }

    const Rational& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }

    // Canonical printing; round-trips through parse_poly.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string factors = factor_str(m);
            if (factors.empty()) {
                os << rational_str(a);
            } else if (a == 1) {
                os << factors;
            } else {
                os << rational_str(a) << "*" << factors;
            }
        }
        return os.str();
    }

    // Total order on polynomials over the same space, for deterministic
    // sorting of constraint sets.
    static int compare(const Poly& a, const Poly& b) {
        MonomialOrder lt;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (lt(ia->first, ib->first)) return -1;
            if (lt(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
        if (ia != a.terms_.end()) return -1;
        if (ib != b.terms_.end()) return 1;
        return 0;
    }

private:
    Poly inverted() const {
        if (terms_.empty())
            throw std::domain_error("division by zero (inverting the zero polynomial)");
        if (terms_.size() != 1)
            throw std::domain_error("cannot invert a polynomial that is not a single term");
        const auto& [m, c] = *terms_.begin();
        if (m.coord_degree() != 0)
            throw std::domain_error("cannot invert a term containing coordinates");
        Monomial inv = m;
        for (auto& [_, e] : inv.param) e = -e;
        Poly r(vs_);
        r.add_term(std::move(inv), Rational(1) / c);
        return r;
    }

    std::string factor_str(const Monomial& m) const {
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < vs_.n(); ++i) {
            if (m.coord[i] == 0) continue;
            if (any) os << "*";
            os << "x" << i;
            if (m.coord[i] != 1) os << "^" << m.coord[i];
            any = true;
        }
        for (const auto& [pidx, e] : m.param) {
            if (any) os << "*";
            os << vs_.params()[pidx];
            if (e != 1) os << "^" << e;
            any = true;
        }
        return os.str();
    }

    VarSpace vs_;
    TermMap terms_;
};

inline Poly operator*(const Poly& a, long c) { return a * Rational(c); }
inline Poly operator*(long c, const Poly& a) { return a * Rational(c); }

}  // namespace hinv
