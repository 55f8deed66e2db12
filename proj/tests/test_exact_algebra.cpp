#include <catch2/catch_amalgamated.hpp>

#include "fieldgeom/ffmatrix.hpp"
#include "fieldgeom/mpoly.hpp"
#include "fieldgeom/mpoly_gcd.hpp"
#include "fieldgeom/parse.hpp"
#include "fieldgeom/ratfunc.hpp"
#include "fieldgeom/sampling.hpp"

using namespace fieldgeom;

namespace {

MPoly P(const std::string& s, int nvars) {
    RatFunc f = parse_ratfunc(s, nvars);
    REQUIRE(f.den().is_one());
    return f.num();
}

RatFunc F(const std::string& s, int nvars) { return parse_ratfunc(s, nvars); }

} // namespace

TEST_CASE("polynomial ring operations") {
    MPoly a = P("t1+t2", 2), b = P("t1-t2", 2);
    CHECK(a * b == P("t1^2-t2^2", 2));
    CHECK(a + b == P("2*t1", 2));
    CHECK(a - b == P("2*t2", 2));

    MPoly p = P("t1*t2+1", 2);
    CHECK(p.eval({Rational(2), Rational(3)}) == 7);

    CHECK(P("0", 3).is_zero());
    CHECK(MPoly::zero(2) * a == MPoly::zero(2));
}

TEST_CASE("polynomial gcd") {
    CHECK(mpoly_gcd(P("t1^2-t2^2", 2), P("t1-t2", 2)) == P("t1-t2", 2));
    // Monic normalization under grlex.
    CHECK(mpoly_gcd(P("2*t1^2-2*t2^2", 2), P("4*t1-4*t2", 2)) == P("t1-t2", 2));
    CHECK(mpoly_gcd(P("t1*t2", 2), P("t1+t2", 2)).is_one());
    CHECK(mpoly_gcd(P("0", 2), P("3*t1", 2)) == P("t1", 2));
    CHECK(mpoly_gcd(P("6", 2), P("4*t1", 2)).is_one());

    // Nontrivial three-variable cancellation.
    MPoly g = P("t1*t2+t3^2+1", 3);
    MPoly u = g * P("t1-t3", 3);
    MPoly v = g * P("t2^2+5", 3);
    CHECK(mpoly_gcd(u, v) == g.monic());
}

TEST_CASE("gcd divides both arguments on random samples") {
    Rng rng(101);
    for (int i = 0; i < 30; ++i) {
        MPoly a = random_mpoly(rng, 3, 3, 3);
        MPoly b = random_mpoly(rng, 3, 3, 3);
        MPoly g = mpoly_gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        MPoly q;
        CHECK(MPoly::try_divide(a, g, q));
        CHECK(MPoly::try_divide(b, g, q));
        // Common factors are detected: gcd(a*c, b*c) is divisible by c.
        MPoly c = random_nonzero_mpoly(rng, 3, 2, 2);
        MPoly gc = mpoly_gcd(a * c, b * c);
        if (!a.is_zero() || !b.is_zero()) CHECK(MPoly::try_divide(gc, c, q));
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        MPoly a = random_mpoly(rng, 3, 3, 3);
        MPoly b = random_mpoly(rng, 3, 3, 3);
        MPoly c = random_mpoly(rng, 3, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational function normalization") {
    CHECK(F("(t1^2-1)/(t1-1)", 1) == F("t1+1", 1));
    CHECK(F("(2*t1)/4", 1) == F("t1/2", 1));
    CHECK(F("0/t2", 2) == RatFunc::zero(2));
    CHECK_THROWS_AS(RatFunc(MPoly::one(1), MPoly::zero(1)), std::invalid_argument);

    // Denominator is monic: equality is structural afterwards.
    RatFunc f = RatFunc(P("t2", 2), P("2*t1", 2));
    CHECK(f.den().leading_coeff() == 1);
    CHECK(f == F("t2/(2*t1)", 2));
}

TEST_CASE("normalization is idempotent and cancels factors") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        RatFunc f = random_ratfunc(rng, 3);
        RatFunc g = RatFunc(random_nonzero_mpoly(rng, 3, 2, 2));
        CHECK(RatFunc(f.num(), f.den()) == f);
        CHECK((f * g) / g == f);
        if (!f.is_zero()) CHECK((g / f) * f == g);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(F("t1^2*t2", 3).derivative(0) == F("2*t1*t2", 3));
    CHECK(F("t1/t2", 2).derivative(1) == F("-t1/t2^2", 2));
    CHECK(F("t3", 3).derivative(0) == RatFunc::zero(3));
    CHECK_THROWS_AS(F("t1", 2).derivative(5), std::invalid_argument);

    Rng rng(13);
    for (int i = 0; i < 15; ++i) {
        RatFunc f = random_ratfunc(rng, 3);
        int u = static_cast<int>(rng.integer(0, 2)), v = static_cast<int>(rng.integer(0, 2));
        CHECK(f.derivative(u).derivative(v) == f.derivative(v).derivative(u));
    }
}

TEST_CASE("fraction-free rank") {
    // Symbolic determinant oracle: t1 - t2 != 0 forces rank 2.
    FFMatrix m(2, 2, 2);
    m.at(0, 0) = P("1", 2);
    m.at(0, 1) = P("1", 2);
    m.at(1, 0) = P("t2", 2);
    m.at(1, 1) = P("t1", 2);
    MPoly det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    REQUIRE(det == P("t1-t2", 2));
    REQUIRE(!det.is_zero());
    CHECK(matrix_rank_ff(m) == 2);
    CHECK(matrix_rank_symbolic(m) == 2);

    FFMatrix prop(2, 2, 2);
    prop.at(0, 0) = P("t1", 2);
    prop.at(0, 1) = P("t2", 2);
    prop.at(1, 0) = P("2*t1", 2);
    prop.at(1, 1) = P("2*t2", 2);
    CHECK(matrix_rank_ff(prop) == 1);

    CHECK(matrix_rank_ff(FFMatrix(3, 3, 2)) == 0);
}

TEST_CASE("evaluation rank matches symbolic rank on samples") {
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        int rows = static_cast<int>(rng.integer(1, 4));
        int cols = static_cast<int>(rng.integer(1, 4));
        FFMatrix m(rows, cols, 3);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.chance(0.8)) m.at(r, c) = random_mpoly(rng, 3, 2, 2);
        // Occasionally force dependence.
        if (rows >= 2 && rng.chance(0.4)) {
            for (int c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c).scaled(Rational(3));
        }
        int symbolic = matrix_rank_symbolic(m);
        int best_eval = 0;
        for (int k = 0; k < 5; ++k) {
            std::vector<Rational> point;
            for (int j = 0; j < 3; ++j) point.push_back(Rational(rng.integer(-1000000, 1000000)));
            int er = matrix_rank_at_point(m, point);
            CHECK(er <= symbolic);
            best_eval = std::max(best_eval, er);
        }
        CHECK(best_eval == symbolic);
        CHECK(matrix_rank_ff(m) == symbolic);
    }
}

TEST_CASE("expression grammar") {
    CHECK(F("t1^2 - 2*t1 + 1", 2) == F("(t1-1)^2", 2));
    CHECK(F("t1^-2", 1) == RatFunc::one(1) / F("t1^2", 1));
    CHECK(F("-t1--t2", 2) == F("t2-t1", 2));
    CHECK(F("3/6", 1) == RatFunc::constant(1, make_rational(1, 2)));
    CHECK_THROWS_AS(F("t3", 2), ParseError);
    CHECK_THROWS_AS(F("t1+", 2), ParseError);
    CHECK_THROWS_AS(F("1/(t1-t1)", 2), ParseError);
    CHECK_THROWS_AS(F("t1 t2", 2), ParseError);

    // Round-trip through printing.
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        RatFunc f = random_ratfunc(rng, 3);
        CHECK(parse_ratfunc(f.str(), 3) == f);
    }
}
