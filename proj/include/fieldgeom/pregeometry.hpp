#ifndef FIELDGEOM_PREGEOMETRY_HPP
#define FIELDGEOM_PREGEOMETRY_HPP

#include <optional>
#include <variant>

#include "fieldgeom/extension.hpp"
#include "fieldgeom/ffmatrix.hpp"

namespace fieldgeom {

/*
 * The pregeometry (L, acl_K) via the Jacobian criterion: in characteristic
 * zero, rational functions are algebraically dependent over K = Q(S)
 * exactly when the Jacobian matrix restricted to the non-S columns is rank
 * deficient over Q(t1..tn). Closure relative to Q(S) is obtained by
 * deleting the S-columns (the S-rows of a full Jacobian are unit vectors
 * there, so they eliminate those columns).
 */

// Rows: elements; columns: free variables. Row i is d_i^2 times the true
// gradient of x_i = n_i/d_i, a nonzero row scaling that preserves rank.
inline FFMatrix jacobian_matrix(const ExtensionSpec& spec, const ElementSet& xs) {
    const auto& free = spec.free_vars();
    FFMatrix m(static_cast<int>(xs.size()), static_cast<int>(free.size()), spec.nvars());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].nvars() != spec.nvars())
            throw std::invalid_argument("element variable count does not match spec");
        const MPoly& n = xs[i].num();
        const MPoly& d = xs[i].den();
        for (std::size_t j = 0; j < free.size(); ++j) {
            int v = free[j];
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                n.derivative(v) * d - n * d.derivative(v);
        }
    }
    return m;
}

// Transcendence degree of Q(S)(xs) over Q(S).
inline int trdeg(const ExtensionSpec& spec, const ElementSet& xs) {
    if (xs.empty()) return 0;
    return matrix_rank_ff(jacobian_matrix(spec, xs));
}

// y in acl_K(xs), for y in L.
inline bool in_closure(const ExtensionSpec& spec, const RatFunc& y, const ElementSet& xs) {
    ElementSet ext = xs;
    ext.push_back(y);
    return trdeg(spec, ext) == trdeg(spec, xs);
}

inline bool is_independent(const ExtensionSpec& spec, const ElementSet& xs) {
    return trdeg(spec, xs) == static_cast<int>(xs.size());
}

// Greedy maximal independent subset in input order.
inline ElementSet basis_of(const ExtensionSpec& spec, const ElementSet& xs) {
    ElementSet basis;
    int rank = 0;
    for (const auto& x : xs) {
        basis.push_back(x);
        if (trdeg(spec, basis) == rank + 1)
            ++rank;
        else
            basis.pop_back();
    }
    return basis;
}

// Instance check of the exchange condition:
//   a in acl(A+y) \ acl(A)  =>  y in acl(A+a).
// Vacuously true when the antecedent fails.
inline bool exchange_check(const ExtensionSpec& spec, const RatFunc& a, const RatFunc& y,
                           const ElementSet& A) {
    ElementSet Ay = A;
    Ay.push_back(y);
    if (!in_closure(spec, a, Ay) || in_closure(spec, a, A)) return true;
    ElementSet Aa = A;
    Aa.push_back(a);
    return in_closure(spec, y, Aa);
}

// ---------------------------------------------------------------------------
// Independent brute-force dependence oracle.
//
// Searches for a nonzero polynomial P in |xs| fresh indeterminates with
// coefficients in Q[S] (total degree <= max_degree in the fresh variables,
// <= s_degree in the S-variables) such that P(xs) = 0. Clearing the
// denominators of the xs turns the search into an exact homogeneous linear
// system over Q. This never looks at Jacobians, so it cross-checks them.

struct OracleOptions {
    unsigned max_degree = 4;
    unsigned s_degree = 4;
    std::size_t monomial_cap = 2000;
};

struct OracleResult {
    // Annihilator over nvars + |xs| variables: the original S-variables may
    // occur, the fresh indeterminates sit at indices nvars..nvars+|xs|-1.
    std::optional<MPoly> annihilator;
    bool dependent() const { return annihilator.has_value(); }
};

namespace detail {

inline void enumerate_exponents(int nvars, unsigned max_total, Exponents& cur, int pos,
                                unsigned used, std::vector<Exponents>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= max_total; ++e) {
        cur[pos] = e;
        enumerate_exponents(nvars, max_total, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

inline std::vector<Exponents> exponents_up_to(int nvars, unsigned max_total) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    enumerate_exponents(nvars, max_total, cur, 0, 0, out);
    return out;
}

// One basis vector of the kernel of the column-space, or nullopt.
inline std::optional<std::vector<Rational>> kernel_vector(
    std::vector<std::vector<Rational>> m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][col];
        for (int j = col; j < cols; ++j) m[rank][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    int free_col = -1;
    for (int col = 0; col < cols; ++col)
        if (pivot_of_col[col] < 0) { free_col = col; break; }
    if (free_col < 0) return std::nullopt;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (int col = 0; col < free_col; ++col)
        if (pivot_of_col[col] >= 0) v[col] = -m[pivot_of_col[col]][free_col];
    return v;
}

} // namespace detail

inline OracleResult dependence_oracle_bruteforce(const ExtensionSpec& spec, const ElementSet& xs,
                                                 const OracleOptions& opts = {}) {
    const int n = spec.nvars();
    const int m = static_cast<int>(xs.size());
    if (m == 0) return {};
    const unsigned D = opts.max_degree;

    // Fresh-indeterminate exponent patterns, grlex-sorted for determinism.
    std::vector<Exponents> alphas = detail::exponents_up_to(m, D);
    std::sort(alphas.begin(), alphas.end(), GrlexLess{});

    // S-variable exponent patterns.
    std::vector<int> s_vars = spec.k_vars();
    std::vector<Exponents> betas = detail::exponents_up_to(static_cast<int>(s_vars.size()),
                                                           s_vars.empty() ? 0 : opts.s_degree);
    std::sort(betas.begin(), betas.end(), GrlexLess{});

    // Clear denominators: with x_i = n_i/d_i, the monomial prod x_i^a_i times
    // prod d_i^D is the polynomial N_a = prod n_i^a_i * d_i^(D-a_i).
    std::vector<MPoly> cleared;
    cleared.reserve(alphas.size());
    for (const auto& a : alphas) {
        MPoly prod = MPoly::one(n);
        for (int i = 0; i < m; ++i) {
            prod *= xs[i].num().pow(a[i]);
            prod *= xs[i].den().pow(D - a[i]);
        }
        cleared.push_back(std::move(prod));
    }

    // Columns are unknown coefficients c_{a,b}; rows are monomials of
    // t appearing in any t_S^b * N_a.
    std::map<Exponents, int, GrlexLess> row_of;
    std::vector<std::vector<std::pair<int, Rational>>> col_entries;
    for (const auto& b : betas) {
        MPoly sb = MPoly::one(n);
        for (std::size_t k = 0; k < s_vars.size(); ++k)
            sb *= MPoly::variable(n, s_vars[k]).pow(b[k]);
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            MPoly prod = sb * cleared[ai];
            std::vector<std::pair<int, Rational>> entries;
            for (const auto& [e, c] : prod.terms()) {
                auto [it, inserted] = row_of.try_emplace(e, static_cast<int>(row_of.size()));
                if (row_of.size() > opts.monomial_cap)
                    throw std::invalid_argument("brute-force oracle monomial cap exceeded");
                entries.emplace_back(it->second, c);
            }
            col_entries.push_back(std::move(entries));
        }
    }

    const int cols = static_cast<int>(col_entries.size());
    const int rows = static_cast<int>(row_of.size());
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols, Rational(0)));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col_entries[c]) mat[r][c] = v;

    auto kv = detail::kernel_vector(std::move(mat), cols);
    if (!kv) return {};

    // Assemble the annihilator over nvars + m variables.
    MPoly P(n + m);
    int col = 0;
    for (const auto& b : betas) {
        for (const auto& a : alphas) {
            const Rational& c = (*kv)[col++];
            if (c != 0) {
                Exponents e(n + m, 0);
                for (std::size_t k = 0; k < s_vars.size(); ++k) e[s_vars[k]] = b[k];
                for (int i = 0; i < m; ++i) e[n + i] = a[i];
                P += MPoly::monomial(n + m, std::move(e), c);
            }
        }
    }
    return OracleResult{P.monic()};
}

// Substitute the fresh indeterminates of an oracle annihilator by the
// elements themselves; identically zero confirms the relation.
inline RatFunc oracle_substitute(const ExtensionSpec& spec, const MPoly& annihilator,
                                 const ElementSet& xs) {
    const int n = spec.nvars();
    std::vector<RatFunc> images;
    images.reserve(annihilator.nvars());
    for (int j = 0; j < n; ++j) images.push_back(RatFunc::variable(n, j));
    for (const auto& x : xs) images.push_back(x);
    return subst_vars(annihilator, images);
}

} // namespace fieldgeom

#endif
