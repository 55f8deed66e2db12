#ifndef FIELDGEOM_MPOLY_HPP
#define FIELDGEOM_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fieldgeom/rational.hpp"

namespace fieldgeom {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded lexicographic order: compare total degree first, then exponents
// left to right. Fixed once for the whole library; leading terms, monic
// normalization and canonical printing all refer to it.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficient; every exponent vector has length
// nvars; the zero polynomial is the empty term map.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, const Rational& c) {
        MPoly p(nvars);
        if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
        return p;
    }

    static MPoly one(int nvars) { return constant(nvars, 1); }

    // x_i, zero-based.
    static MPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
        MPoly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static MPoly monomial(int nvars, Exponents e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("exponent vector length mismatch");
        MPoly p(nvars);
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // Constant term (0 if absent).
    Rational constant_value() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    unsigned degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] > 0) return true;
        return false;
    }

    // Largest variable index that occurs, or -1 for constants.
    int top_variable() const {
        int top = -1;
        for (const auto& [e, c] : terms_)
            for (int j = nvars_ - 1; j > top; --j)
                if (e[j] > 0) { top = j; break; }
        return top;
    }

    const Exponents& leading_exponents() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }

    const Rational& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_compatible(b);
        MPoly r(a.nvars_);
        if (a.is_zero() || b.is_zero()) return r;
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Rational& c) const {
        MPoly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    MPoly pow(unsigned n) const {
        MPoly r = one(nvars_), base = *this;
        while (n) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    MPoly derivative(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.terms_.emplace(std::move(d), c * static_cast<long>(e[var]));
        }
        return r;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluation point dimension mismatch");
        // Powers cached per variable up to the needed degree.
        std::vector<std::vector<Rational>> pw(nvars_);
        for (int i = 0; i < nvars_; ++i) pw[i].push_back(Rational(1));
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i) {
                auto& p = pw[i];
                while (p.size() <= e[i]) p.push_back(p.back() * point[i]);
                if (e[i]) t *= p[e[i]];
            }
            acc += t;
        }
        return acc;
    }

    // Same polynomial in a wider variable space (new variables unused).
    MPoly extended(int new_nvars) const {
        if (new_nvars < nvars_) throw std::invalid_argument("cannot shrink variable space");
        MPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents w(new_nvars, 0);
            std::copy(e.begin(), e.end(), w.begin());
            r.terms_.emplace(std::move(w), c);
        }
        return r;
    }

    // Divide by the grlex-leading coefficient.
    MPoly monic() const {
        if (is_zero()) return *this;
        Rational lc = leading_coeff();
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / lc);
        return r;
    }

    // Exact division: returns false if `d` does not divide exactly.
    // Grlex leading-term division; valid over the rational coefficient field.
    static bool try_divide(const MPoly& p, const MPoly& d, MPoly& quotient) {
        p.check_compatible(d);
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        MPoly q(p.nvars_), r = p;
        const Exponents& de = d.leading_exponents();
        const Rational& dc = d.leading_coeff();
        Exponents shift(p.nvars_);
        while (!r.is_zero()) {
            const Exponents& re = r.leading_exponents();
            bool divisible = true;
            for (int i = 0; i < p.nvars_; ++i) {
                if (re[i] < de[i]) { divisible = false; break; }
                shift[i] = re[i] - de[i];
            }
            if (!divisible) return false;
            MPoly t = monomial(p.nvars_, shift, r.leading_coeff() / dc);
            q += t;
            r -= t * d;
        }
        quotient = std::move(q);
        return true;
    }

    static MPoly divide_exact(const MPoly& p, const MPoly& d) {
        MPoly q;
        if (!try_divide(p, d, q)) throw std::logic_error("inexact polynomial division");
        return q;
    }

    // Coefficient of var^k, as a polynomial in the same variable space.
    MPoly coeff_of(int var, unsigned k) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Exponents d = e;
            d[var] = 0;
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print leading term first: iterate grlex-descending.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = total_degree(e) > 0;
            if (!has_vars || a != 1) os << a.get_str();
            bool star = !has_vars || a != 1;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                star = true;
                if (static_cast<std::size_t>(i) < names.size())
                    os << names[i];
                else
                    os << "t" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_compatible(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_;
    TermMap terms_;
};

} // namespace fieldgeom

#endif
