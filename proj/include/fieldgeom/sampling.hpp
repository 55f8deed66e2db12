#ifndef FIELDGEOM_SAMPLING_HPP
#define FIELDGEOM_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "fieldgeom/extension.hpp"

namespace fieldgeom {

// Seeded generator for property tests and the self-test suite. mt19937_64
// output is fixed by the standard; bounded draws avoid std distributions,
// whose results vary across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
    long integer(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty integer range");
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    long nonzero_integer(long lo, long hi) {
        for (;;) {
            long v = integer(lo, hi);
            if (v != 0) return v;
        }
    }

    Rational rational(long lo = -5, long hi = 5, long max_den = 3) {
        return make_rational(integer(lo, hi), nonzero_integer(1, max_den));
    }

    bool chance(double p) { return (next() % 1000000ull) < static_cast<std::uint64_t>(p * 1000000.0); }

    // Derive an independent child stream (for parallel-safe families).
    Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 eng_;
};

inline MPoly random_mpoly(Rng& rng, int nvars, unsigned max_degree, int max_terms,
                          long coeff_bound = 5) {
    MPoly p(nvars);
    int terms = static_cast<int>(rng.integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        unsigned budget = max_degree;
        for (int i = 0; i < nvars && budget > 0; ++i) {
            unsigned d = static_cast<unsigned>(rng.integer(0, static_cast<long>(budget)));
            // Bias exponents down so typical terms stay small.
            if (rng.chance(0.5)) d = d > 1 ? 1 : d;
            e[i] = d;
            budget -= d;
        }
        long c = rng.integer(-coeff_bound, coeff_bound);
        if (c == 0) c = 1;
        p += MPoly::monomial(nvars, std::move(e), Rational(c));
    }
    return p;
}

inline MPoly random_nonzero_mpoly(Rng& rng, int nvars, unsigned max_degree, int max_terms,
                                  long coeff_bound = 5) {
    for (;;) {
        MPoly p = random_mpoly(rng, nvars, max_degree, max_terms, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(Rng& rng, int nvars, unsigned max_degree = 3, int max_terms = 3,
                              bool allow_denominator = true) {
    MPoly num = random_mpoly(rng, nvars, max_degree, max_terms);
    if (allow_denominator && rng.chance(0.3)) {
        MPoly den = random_nonzero_mpoly(rng, nvars, 2, 2);
        return RatFunc(num, den);
    }
    return RatFunc(num);
}

// An element of L \ acl_K(empty): transcendental over K.
inline RatFunc random_transcendental(Rng& rng, const ExtensionSpec& spec, unsigned max_degree = 3,
                                     int max_terms = 3) {
    for (;;) {
        RatFunc f = random_ratfunc(rng, spec.nvars(), max_degree, max_terms);
        for (int v : spec.free_vars())
            if (f.num().depends_on(v) || f.den().depends_on(v)) return f;
    }
}

} // namespace fieldgeom

#endif
