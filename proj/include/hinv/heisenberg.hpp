#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hinv/bivector.hpp"
#include "hinv/poly.hpp"

namespace hinv {

// Builds the bivector generated by the base entries P_d^0 = slots[d-1]
// (one per band d = 1..floor(n/2)): the entry between x_a and x_{a+d} is
// sigma^a(P_d^0), assigned the first time each unordered pair is met.
inline Bivector bivector_from_slots(const VarSpace& vs, const std::vector<Poly>& slots) {
    const int n = vs.n();
    if (static_cast<int>(slots.size()) != n / 2)
        throw std::invalid_argument("expected floor(n/2) band polynomials");
    Bivector B(vs);
    for (int d = 1; d <= n / 2; ++d) {
        const Poly& base = slots[d - 1];
        require_same_space(vs, base.space());
        for (int a = 0; a < n; ++a) {
            int b = (a + d) % n;
            int lo = std::min(a, b), hi = std::max(a, b);
            if (!B.entry(lo, hi).is_zero()) continue;  // even-n middle band: pair met twice
            Poly v = base.sigma(a);
            if (a > b) v = -v;
            B.set_entry(lo, hi, std::move(v));
        }
    }
    return B;
}

// sigma-invariance: P_{i+1,j+1} must equal sigma(P_ij) for every pair,
// indices mod n (entries read antisymmetrically).
inline VerificationReport is_sigma_invariant(const Bivector& B) {
    const int n = B.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly diff = B.entry((i + 1) % n, (j + 1) % n) - B.entry(i, j).sigma(1);
            if (!diff.is_zero()) return VerificationReport::fail("sigma", {i, j}, std::move(diff));
        }
    return VerificationReport::ok("sigma");
}

// tau-invariance via tau-degree residues: each nonzero P_ij must be
// tau-homogeneous of residue i+j mod n.
inline VerificationReport is_tau_invariant(const Bivector& B) {
    const int n = B.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly e = B.entry(i, j);
            if (e.is_zero()) continue;
            TauDegree td = e.tau_degree();
            if (td.mixed || td.residue != (i + j) % n)
                return VerificationReport::fail("tau", {i, j}, std::move(e));
        }
    return VerificationReport::ok("tau");
}

// Coordinate degrees compatible with combined sigma/tau invariance.
inline bool admissible_degree(int n, int N) { return ((N - 2) % n + n) % n == 0; }

struct Provenance {
    std::string param;
    int slot = 0;           // band index d
    std::string monomial;   // base monomial in P_d^0
    Rational coeff;         // +1 or -1 contribution of the parameter
};

// An H-invariant tensor whose entries are linear in free parameter symbols:
// sigma-invariant, tau-invariant, and antisymmetric for every parameter value.
struct GenericTensor {
    Bivector bivector;
    std::vector<std::string> params;
    std::vector<Provenance> provenance;

    // Rational instantiation; the result lives over a parameter-free space.
    Bivector instantiate(const std::vector<Rational>& values) const {
        if (values.size() != params.size())
            throw std::invalid_argument("instantiate: wrong number of parameter values");
        VarSpace out(bivector.space().n(), {});
        std::map<std::string, Poly> assign;
        for (std::size_t i = 0; i < params.size(); ++i)
            assign.emplace(params[i], Poly::constant(out, values[i]));
        Bivector B(out);
        for (const auto& [ij, p] : bivector.upper_entries())
            B.set_entry(ij.first, ij.second, p.substitute(assign, out));
        return B;
    }
};

namespace detail {

inline void enumerate_exps(int n, int remaining, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exps(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

inline int tau_residue_of(const std::vector<int>& exps) {
    long long s = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) s += static_cast<long long>(i) * exps[i];
    return static_cast<int>(s % static_cast<long long>(exps.size()));
}

inline std::string exps_str(const VarSpace& vs, const std::vector<int>& exps) {
    Poly p(vs);
    p.add_term(Monomial{exps, {}}, 1);
    return p.str();
}

// Classification names A1.., B1.., C for the quadratic tensors with n <= 6.
// The band-d monomials x_l x_{d-l} are numbered in the order
// l = 0, d+1, d-1, d+2, d-2, ... used by the classification displays.
inline std::vector<std::vector<int>> band_pairs_classification_order(int n, int d) {
    std::vector<int> ls = {0};
    for (int step = 1; step < n; ++step) {
        ls.push_back(((d + step) % n + n) % n);
        ls.push_back(((d - step) % n + n) % n);
    }
    std::vector<std::vector<int>> out;
    for (int l : ls) {
        int r = ((d - l) % n + n) % n;
        std::vector<int> exps(n, 0);
        exps[l] += 1;
        exps[r] += 1;
        if (std::find(out.begin(), out.end(), exps) == out.end()) out.push_back(exps);
    }
    return out;
}

}  // namespace detail

// The general sigma/tau-invariant antisymmetric tensor with x-homogeneous
// entries of total degree N: each band gets one fresh parameter per
// admissible base monomial, entries are propagated by sigma, and the
// tau-invariance and even-n middle-band antisymmetry constraints are solved
// by eliminating dependent parameters. The parameter list is empty exactly
// when the constraints force the tensor to vanish.
inline GenericTensor generic_invariant_homogeneous(int n, int N) {
    if (n < 3) throw std::invalid_argument("generic tensor needs n >= 3");
    if (N < 1) throw std::invalid_argument("degree must be >= 1");
    const int bands = n / 2;

    // base monomials per band: degree N, tau-residue d
    std::vector<std::vector<std::vector<int>>> slot_monos(bands);
    {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        detail::enumerate_exps(n, N, cur, all);
        std::sort(all.begin(), all.end(), std::greater<>());
        for (const auto& e : all) {
            int r = detail::tau_residue_of(e);
            if (r >= 1 && r <= bands) slot_monos[r - 1].push_back(e);
        }
    }
    if (N == 2) {
        // classification ordering for quadratic bands
        for (int d = 1; d <= bands; ++d) {
            auto want = detail::band_pairs_classification_order(n, d);
            if (want.size() == slot_monos[d - 1].size()) slot_monos[d - 1] = want;
        }
    }

    // one tentative parameter per base monomial
    std::vector<std::pair<int, int>> owner;  // param -> (band index, monomial index)
    for (int d = 1; d <= bands; ++d)
        for (std::size_t m = 0; m < slot_monos[d - 1].size(); ++m)
            owner.emplace_back(d, static_cast<int>(m));
    const std::size_t total = owner.size();

    // tau-invariance: the entry between x_a and x_{a+d} carries sigma^a of the
    // band polynomial, and shifting a degree-N residue-d monomial by a moves
    // its residue to d + a*N, which must match the required (2a + d) mod n.
    // The condition is uniform across the band, so a mismatch at any
    // propagated position kills the whole band.
    enum class Status { Free, Zero, Alias };
    std::vector<Status> status(total, Status::Free);
    std::vector<int> alias_of(total, -1);  // value = -param[alias_of]
    for (std::size_t p = 0; p < total; ++p) {
        int d = owner[p].first;
        int shifts = (2 * d == n) ? n / 2 : n;  // middle-band pairs are met once
        for (int a = 1; a < shifts; ++a)
            if ((static_cast<long long>(a) * (N - 2)) % n != 0) status[p] = Status::Zero;
    }

    // even n: antisymmetry of the middle band, sigma^{n/2}(P) = -P
    if (n % 2 == 0 && bands >= 1) {
        const auto& monos = slot_monos[bands - 1];
        int base = 0;
        for (int d = 1; d < bands; ++d) base += static_cast<int>(slot_monos[d - 1].size());
        auto shifted = [&](const std::vector<int>& e) {
            std::vector<int> r(n);
            for (int i = 0; i < n; ++i) r[(i + n / 2) % n] = e[i];
            return r;
        };
        std::map<std::vector<int>, std::size_t> position;
        for (std::size_t i = 0; i < monos.size(); ++i) position.emplace(monos[i], i);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            auto img = shifted(monos[i]);
            auto it = position.find(img);
            int pi = base + static_cast<int>(i);
            if (it == position.end()) {
                // image falls outside this residue class, so it cannot cancel
                status[pi] = Status::Zero;
                continue;
            }
            std::size_t j = it->second;
            int pj = base + static_cast<int>(j);
            if (i == j) {
                status[pi] = Status::Zero;
            } else if (status[pi] == Status::Zero || status[pj] == Status::Zero) {
                status[pi] = status[pj] = Status::Zero;
            } else if (i < j) {
                // the lexicographically larger base monomial keeps the parameter
                std::size_t keep = monos[i] > monos[j] ? i : j;
                std::size_t drop = keep == i ? j : i;
                status[base + static_cast<int>(drop)] = Status::Alias;
                alias_of[base + static_cast<int>(drop)] = base + static_cast<int>(keep);
            }
        }
    }

    // public names and orientation signs
    const bool classification_names = (N == 2 && n <= 6);
    std::vector<std::string> pub_name(total);
    std::vector<Rational> pub_sign(total, 1);
    std::vector<std::string> free_params;
    for (std::size_t p = 0; p < total; ++p) {
        if (status[p] != Status::Free) continue;
        auto [d, m] = owner[p];
        std::string name;
        if (classification_names) {
            std::string letter(1, static_cast<char>('A' + d - 1));
            bool bare = false;
            if (n % 2 == 0 && d == bands) {
                int alive = 0;
                int base = 0;
                for (int dd = 1; dd < bands; ++dd)
                    base += static_cast<int>(slot_monos[dd - 1].size());
                for (std::size_t k = 0; k < slot_monos[bands - 1].size(); ++k)
                    if (status[base + k] == Status::Free) ++alive;
                bare = (alive == 1);
            }
            name = bare ? letter : letter + std::to_string(m + 1);
            // the dim-4 classification orients A2 and B against the raw slots
            if (n == 4 && ((d == 1 && m == 1) || d == 2)) pub_sign[p] = -1;
        } else {
            name = "p" + std::to_string(d) + "_" + std::to_string(m);
        }
        pub_name[p] = name;
        free_params.push_back(name);
    }

    // assemble the band polynomials over the surviving parameters only
    VarSpace vs_out(n, free_params);
    std::vector<Poly> slots;
    std::vector<Provenance> prov;
    {
        std::size_t p = 0;
        for (int d = 1; d <= bands; ++d) {
            Poly s(vs_out);
            for (std::size_t m = 0; m < slot_monos[d - 1].size(); ++m, ++p) {
                Rational coeff = 0;
                std::string pname;
                if (status[p] == Status::Free) {
                    coeff = pub_sign[p];
                    pname = pub_name[p];
                } else if (status[p] == Status::Alias) {
                    int tgt = alias_of[p];
                    coeff = -pub_sign[tgt];
                    pname = pub_name[tgt];
                }
                if (coeff == 0) continue;
                Monomial mono{slot_monos[d - 1][m], {}};
                mono.param[vs_out.param_index(pname)] = 1;
                s.add_term(std::move(mono), coeff);
                prov.push_back({pname, d, detail::exps_str(vs_out, slot_monos[d - 1][m]), coeff});
            }
            slots.push_back(std::move(s));
        }
    }
    Bivector out = bivector_from_slots(vs_out, slots);
    return {std::move(out), std::move(free_params), std::move(prov)};
}

inline GenericTensor generic_invariant_quadratic(int n) {
    return generic_invariant_homogeneous(n, 2);
}

}  // namespace hinv
