#ifndef FIELDGEOM_MPOLY_GCD_HPP
#define FIELDGEOM_MPOLY_GCD_HPP

#include <map>
#include <utility>

#include "fieldgeom/mpoly.hpp"

namespace fieldgeom {

/*
 * Multivariate gcd over Q[t1..tn]: content extraction on the top occurring
 * variable plus a subresultant pseudo-remainder sequence on the primitive
 * parts. Coefficient arithmetic stays in the polynomial ring throughout;
 * the only divisions are exact. Result is monic under the grlex order.
 */

namespace detail {

// View of p as a univariate polynomial in `var`; coefficients keep the full
// variable space with exponent 0 in `var`.
using UniView = std::map<unsigned, MPoly>;

inline UniView uni_view(const MPoly& p, int var) {
    UniView v;
    for (unsigned k = 0; k <= p.degree_in(var); ++k) {
        MPoly c = p.coeff_of(var, k);
        if (!c.is_zero()) v.emplace(k, std::move(c));
    }
    return v;
}

inline MPoly from_uni(const UniView& v, int var, int nvars) {
    MPoly p(nvars);
    MPoly x = MPoly::variable(nvars, var);
    for (const auto& [k, c] : v) p += c * x.pow(k);
    return p;
}

inline unsigned uni_degree(const UniView& v) { return v.empty() ? 0 : v.rbegin()->first; }

inline const MPoly& uni_lc(const UniView& v) { return v.rbegin()->second; }

inline UniView uni_scale(const UniView& v, const MPoly& s) {
    UniView r;
    for (const auto& [k, c] : v) {
        MPoly p = c * s;
        if (!p.is_zero()) r.emplace(k, std::move(p));
    }
    return r;
}

inline UniView uni_divide_exact(const UniView& v, const MPoly& d) {
    UniView r;
    for (const auto& [k, c] : v) r.emplace(k, MPoly::divide_exact(c, d));
    return r;
}

inline UniView uni_sub(UniView a, const UniView& b) {
    for (const auto& [k, c] : b) {
        auto it = a.find(k);
        if (it == a.end()) {
            a.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

// Shift exponents: multiply by var^s.
inline UniView uni_shift(const UniView& v, unsigned s) {
    UniView r;
    for (const auto& [k, c] : v) r.emplace(k + s, c);
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b > 0): prem = lc(b)^(da-db+1) * a  mod b.
inline UniView uni_prem(UniView a, const UniView& b) {
    unsigned db = uni_degree(b);
    const MPoly& bl = uni_lc(b);
    long steps = static_cast<long>(uni_degree(a)) - static_cast<long>(db) + 1;
    while (!a.empty() && uni_degree(a) >= db) {
        unsigned shift = uni_degree(a) - db;
        UniView t = uni_shift(uni_scale(b, uni_lc(a)), shift);
        a = uni_sub(uni_scale(a, bl), t);
        --steps;
    }
    // Pad the premultiplier so the total factor is exactly lc(b)^(da-db+1).
    for (; steps > 0; --steps) a = uni_scale(a, bl);
    return a;
}

} // namespace detail

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

// gcd of the coefficients of the univariate view (the content w.r.t. var).
inline MPoly uni_content(const UniView& v, int nvars) {
    MPoly g = MPoly::zero(nvars);
    for (const auto& [k, c] : v) {
        g = mpoly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Subresultant PRS gcd of primitive parts, both of positive degree in var.
inline UniView subresultant_gcd(UniView p, UniView q, int nvars) {
    if (uni_degree(p) < uni_degree(q)) std::swap(p, q);
    MPoly g = MPoly::one(nvars), h = MPoly::one(nvars);
    for (;;) {
        unsigned delta = uni_degree(p) - uni_degree(q);
        UniView r = uni_prem(p, q);
        if (r.empty()) return q;
        if (uni_degree(r) == 0) {
            // Nonzero constant remainder in var: primitive parts are coprime.
            UniView one;
            one.emplace(0, MPoly::one(nvars));
            return one;
        }
        p = std::move(q);
        MPoly divisor = g * h.pow(delta);
        q = uni_divide_exact(r, divisor);
        g = uni_lc(p);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = MPoly::divide_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
}

} // namespace detail

inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    const int n = a.nvars();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly::one(n);

    int var = std::max(a.top_variable(), b.top_variable());
    detail::UniView va = detail::uni_view(a, var);
    detail::UniView vb = detail::uni_view(b, var);

    MPoly ca = detail::uni_content(va, n);
    MPoly cb = detail::uni_content(vb, n);
    MPoly c = mpoly_gcd(ca, cb);

    detail::UniView pa = detail::uni_divide_exact(va, ca);
    detail::UniView pb = detail::uni_divide_exact(vb, cb);

    if (detail::uni_degree(pa) == 0 || detail::uni_degree(pb) == 0)
        return c.monic();

    detail::UniView gv = detail::subresultant_gcd(std::move(pa), std::move(pb), n);
    MPoly raw = detail::from_uni(gv, var, n);
    // Make the PRS result primitive again before attaching the content gcd.
    MPoly rc = detail::uni_content(gv, n);
    MPoly prim = MPoly::divide_exact(raw, rc);
    return (c * prim).monic();
}

} // namespace fieldgeom

#endif
