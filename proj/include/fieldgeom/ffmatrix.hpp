#ifndef FIELDGEOM_FFMATRIX_HPP
#define FIELDGEOM_FFMATRIX_HPP

#include <cstdint>
#include <vector>

#include "fieldgeom/mpoly.hpp"

namespace fieldgeom {

// Rectangular matrix of polynomials, the carrier for Jacobians.
class FFMatrix {
public:
    FFMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          entries_(static_cast<std::size_t>(rows) * cols, MPoly::zero(nvars)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    MPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const MPoly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

private:
    int rows_, cols_, nvars_;
    std::vector<MPoly> entries_;
};

namespace detail {

// Deterministic integer stream for evaluation points (splitmix64).
struct PointStream {
    std::uint64_t state;
    explicit PointStream(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Nonzero integer in a large box, as a rational.
    Rational coordinate() {
        long v = static_cast<long>(next() % 2000001ull) - 1000000;
        if (v == 0) v = 1;
        return Rational(v);
    }
};

// Exact rank of a rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

// Rank at a rational evaluation point. Always a lower bound for the
// symbolic rank; equality certifies full rank exactly.
inline int matrix_rank_at_point(const FFMatrix& m, const std::vector<Rational>& point) {
    std::vector<std::vector<Rational>> num(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) num[i][j] = m.at(i, j).eval(point);
    return detail::rational_rank(std::move(num));
}

// Fraction-free (Bareiss) elimination with full pivoting. Exact.
inline int matrix_rank_symbolic(FFMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> rperm(rows), cperm(cols);
    for (int i = 0; i < rows; ++i) rperm[i] = i;
    for (int j = 0; j < cols; ++j) cperm[j] = j;

    MPoly prev = MPoly::one(m.nvars());
    int rank = 0;
    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        // Pick the nonzero pivot with the fewest terms.
        int pi = -1, pj = -1;
        std::size_t best = 0;
        for (int i = k; i < rows; ++i) {
            for (int j = k; j < cols; ++j) {
                const MPoly& e = m.at(rperm[i], cperm[j]);
                if (e.is_zero()) continue;
                if (pi < 0 || e.term_count() < best) {
                    pi = i;
                    pj = j;
                    best = e.term_count();
                }
            }
        }
        if (pi < 0) break;
        std::swap(rperm[k], rperm[pi]);
        std::swap(cperm[k], cperm[pj]);
        ++rank;

        const MPoly& pivot = m.at(rperm[k], cperm[k]);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                MPoly t = m.at(rperm[i], cperm[j]) * pivot -
                          m.at(rperm[i], cperm[k]) * m.at(rperm[k], cperm[j]);
                m.at(rperm[i], cperm[j]) = MPoly::divide_exact(t, prev);
            }
            m.at(rperm[i], cperm[k]) = MPoly::zero(m.nvars());
        }
        prev = pivot;
    }
    return rank;
}

// Rank over the fraction field Q(t1..tn). A randomized evaluation may
// certify full rank (evaluation rank is never above the symbolic rank);
// any deficiency verdict is recomputed exactly by Bareiss elimination.
inline int matrix_rank_ff(const FFMatrix& m, std::uint64_t seed = 0x5eedf1e1du) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const int full = std::min(m.rows(), m.cols());
    detail::PointStream ps(seed);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rational> point(m.nvars());
        for (auto& c : point) c = ps.coordinate();
        if (matrix_rank_at_point(m, point) == full) return full;
    }
    return matrix_rank_symbolic(m);
}

} // namespace fieldgeom

#endif
