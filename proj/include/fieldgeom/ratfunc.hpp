#ifndef FIELDGEOM_RATFUNC_HPP
#define FIELDGEOM_RATFUNC_HPP

#include <optional>
#include <string>
#include <vector>

#include "fieldgeom/mpoly.hpp"
#include "fieldgeom/mpoly_gcd.hpp"

namespace fieldgeom {

// Reduced quotient of multivariate polynomials: gcd(num, den) = 1 and den
// monic under the grlex order. With that normalization, value equality is
// structural equality.
class RatFunc {
public:
    RatFunc() : num_(0), den_(MPoly::one(0)) {}

    explicit RatFunc(const MPoly& p) : num_(p), den_(MPoly::one(p.nvars())) {}

    RatFunc(MPoly num, MPoly den) { normalize(std::move(num), std::move(den)); }

    static RatFunc zero(int nvars) { return RatFunc(MPoly::zero(nvars)); }
    static RatFunc one(int nvars) { return RatFunc(MPoly::one(nvars)); }
    static RatFunc constant(int nvars, const Rational& c) {
        return RatFunc(MPoly::constant(nvars, c));
    }
    static RatFunc variable(int nvars, int i) { return RatFunc(MPoly::variable(nvars, i)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("not a constant");
        return num_.constant_value();
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long e) const {
        if (e == 0) return one(nvars());
        RatFunc base = *this;
        if (e < 0) {
            base = one(nvars()) / base;
            e = -e;
        }
        RatFunc r = one(nvars());
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    // Quotient-rule derivative, reduced.
    RatFunc derivative(int var) const {
        return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                       den_ * den_);
    }

    // Defined wherever the denominator does not vanish.
    std::optional<Rational> eval(const std::vector<Rational>& point) const {
        Rational d = den_.eval(point);
        if (d == 0) return std::nullopt;
        return num_.eval(point) / d;
    }

    RatFunc extended(int new_nvars) const {
        RatFunc r;
        r.num_ = num_.extended(new_nvars);
        r.den_ = den_.extended(new_nvars);
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den_.is_one()) return num_.str(names);
        std::string n = num_.str(names);
        std::string d = den_.str(names);
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize(MPoly num, MPoly den) {
        if (den.is_zero()) throw std::invalid_argument("zero denominator");
        if (num.is_zero()) {
            num_ = MPoly::zero(num.nvars());
            den_ = MPoly::one(num.nvars());
            return;
        }
        MPoly g = mpoly_gcd(num, den);
        if (!g.is_one()) {
            num = MPoly::divide_exact(num, g);
            den = MPoly::divide_exact(den, g);
        }
        Rational lc = den.leading_coeff();
        num_ = num.scaled(1 / lc);
        den_ = den.scaled(1 / lc);
    }

    MPoly num_;
    MPoly den_;
};

// Substitute every variable of p by the given rational functions (all over a
// common target variable space).
inline RatFunc subst_vars(const MPoly& p, const std::vector<RatFunc>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitution image count mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    RatFunc acc = RatFunc::zero(out_vars);
    for (const auto& [e, c] : p.terms()) {
        RatFunc term = RatFunc::constant(out_vars, c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i]) term *= images[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

inline RatFunc subst_vars(const RatFunc& f, const std::vector<RatFunc>& images) {
    return subst_vars(f.num(), images) / subst_vars(f.den(), images);
}

} // namespace fieldgeom

#endif
