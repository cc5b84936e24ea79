#pragma once

// Sparse multivariate polynomials over the rationals and the apolarity action
// of Q = k[X_1..X_n] on R = k[x_1..x_n] with X_i acting as d/dx_i.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hesslab {

/// Exponent vector of a monomial; one entry per ambient variable.
struct Exponent {
    std::vector<std::uint32_t> powers;

    Exponent() = default;
    explicit Exponent(std::size_t arity) : powers(arity, 0) {}
    Exponent(std::initializer_list<std::uint32_t> p) : powers(p) {}
    explicit Exponent(std::vector<std::uint32_t> p) : powers(std::move(p)) {}

    std::size_t arity() const { return powers.size(); }
    std::uint32_t operator[](std::size_t i) const { return powers[i]; }
    std::uint32_t& operator[](std::size_t i) { return powers[i]; }

    unsigned degree() const { return std::accumulate(powers.begin(), powers.end(), 0u); }

    static Exponent unit(std::size_t arity, std::size_t var) {
        Exponent e(arity);
        e.powers[var] = 1;
        return e;
    }

    bool divides(const Exponent& other) const {
        for (std::size_t i = 0; i < powers.size(); ++i)
            if (powers[i] > other.powers[i]) return false;
        return true;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        Exponent r(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i) r.powers[i] = a.powers[i] + b.powers[i];
        return r;
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded reverse lexicographic order, "a > b".
struct GrevlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (std::size_t i = a.arity(); i-- > 0;)
            if (a.powers[i] != b.powers[i]) return a.powers[i] < b.powers[i];
        return false;
    }
};

/// All monomials of total degree `degree` in `arity` variables, grevlex descending.
inline std::vector<Exponent> monomials_of_degree(std::size_t arity, unsigned degree) {
    std::vector<Exponent> out;
    if (arity == 0) return out;
    Exponent cur(arity);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
        if (var + 1 == arity) {
            cur.powers[var] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            cur.powers[var] = k;
            rec(var + 1, left - k);
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Sparse polynomial with a fixed number of variables. Terms are kept in
/// grevlex-descending order; zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exponent, Rational, GrevlexGreater>;

    Poly() = default;
    explicit Poly(std::size_t arity) : arity_(arity) {}

    static Poly constant(std::size_t arity, const Rational& c) {
        Poly p(arity);
        p.add_term(Exponent(arity), c);
        return p;
    }

    static Poly monomial(const Exponent& e, const Rational& c = Rational(1)) {
        Poly p(e.arity());
        p.add_term(e, c);
        return p;
    }

    static Poly variable(std::size_t arity, std::size_t var) {
        return monomial(Exponent::unit(arity, var));
    }

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }

    /// Constant term (0 when absent).
    Rational constant_term() const {
        auto it = terms_.find(Exponent(arity_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
    }

    /// Leading (grevlex-largest) coefficient; zero polynomial has none.
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.arity() != arity_) throw input_error("exponent arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.arity_);
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Exact value at a rational point.
    Rational eval(std::span<const Rational> point) const {
        if (point.size() != arity_) throw input_error("evaluation point has wrong dimension");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < arity_; ++i)
                if (e.powers[i] != 0) t *= pow(point[i], e.powers[i]);
            sum += t;
        }
        return sum;
    }

    /// Partial derivative in one variable.
    Poly derivative(std::size_t var) const {
        Poly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e.powers[var] == 0) continue;
            Exponent f = e;
            f.powers[var] -= 1;
            r.add_term(f, c * Rational(static_cast<long>(e.powers[var])));
        }
        return r;
    }

    /// Applies a nonzero scalar so that the leading coefficient becomes 1.
    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading_coefficient());
    }

    /// Homogeneous component of the given total degree.
    Poly homogeneous_part(unsigned degree) const {
        Poly r(arity_);
        for (const auto& [e, c] : terms_)
            if (e.degree() == degree) r.terms_.emplace(e, c);
        return r;
    }

private:
    void check_arity(const Poly& o) const {
        if (o.arity_ != arity_) throw input_error("polynomial arity mismatch");
    }

    std::size_t arity_ = 0;
    Terms terms_;
};

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly scale(const Poly& p, const Rational& c) { return p * c; }
inline Rational eval(const Poly& p, std::span<const Rational> a) { return p.eval(a); }

/// True iff p is a nonzero rational multiple of q (both nonzero). On success
/// `ratio` receives the scalar with p = ratio * q.
inline bool proportional(const Poly& p, const Poly& q, Rational* ratio = nullptr) {
    if (p.is_zero() || q.is_zero() || p.size() != q.size()) return false;
    Rational r = p.leading_coefficient() / q.leading_coefficient();
    if (!(p == q * r)) return false;
    if (ratio) *ratio = r;
    return true;
}

/// Element of Q = k[X_1..X_n]; acts on R by differentiation.
struct DiffOp {
    Poly poly;

    DiffOp() = default;
    explicit DiffOp(Poly p) : poly(std::move(p)) {}
    static DiffOp monomial(const Exponent& e) { return DiffOp(Poly::monomial(e)); }

    std::size_t arity() const { return poly.arity(); }
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b) { return DiffOp(a.poly * b.poly); }
    friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

/// prod_i beta_i! / (beta_i - alpha_i)!; caller guarantees alpha <= beta.
inline Rational falling_factorial_weight(const Exponent& alpha, const Exponent& beta) {
    mpz_class w = 1;
    for (std::size_t i = 0; i < alpha.arity(); ++i)
        for (std::uint32_t k = 0; k < alpha.powers[i]; ++k) w *= (beta.powers[i] - k);
    return Rational(w);
}

/// X^alpha o x^beta = (prod beta_i!/(beta_i-alpha_i)!) x^(beta-alpha), extended bilinearly.
inline Poly apply_diff(const DiffOp& op, const Poly& p) {
    if (op.arity() != p.arity()) throw input_error("operator and polynomial arity mismatch");
    Poly r(p.arity());
    for (const auto& [alpha, c] : op.poly.terms()) {
        for (const auto& [beta, e] : p.terms()) {
            if (!alpha.divides(beta)) continue;
            Exponent diff(beta.arity());
            for (std::size_t i = 0; i < beta.arity(); ++i) diff.powers[i] = beta.powers[i] - alpha.powers[i];
            r.add_term(diff, c * e * falling_factorial_weight(alpha, beta));
        }
    }
    return r;
}

/// (sum_i a_i X_i)^d applied to p, as d first-order steps.
inline Poly power_apply(std::span<const Rational> a, unsigned d, const Poly& p) {
    if (a.size() != p.arity()) throw input_error("direction vector has wrong dimension");
    Poly cur = p;
    for (unsigned step = 0; step < d && !cur.is_zero(); ++step) {
        Poly next(p.arity());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) next += cur.derivative(i) * a[i];
        cur = std::move(next);
    }
    return cur;
}

/// Nonzero homogeneous polynomial of degree D: the dual generator F.
class Form {
public:
    explicit Form(Poly p) : poly_(std::move(p)) {
        if (poly_.is_zero()) throw input_error("the zero polynomial is not a valid form");
        if (!poly_.is_homogeneous()) throw input_error("polynomial is not homogeneous");
        degree_ = poly_.total_degree();
    }

    const Poly& poly() const { return poly_; }
    unsigned degree() const { return degree_; }
    std::size_t arity() const { return poly_.arity(); }

    friend bool operator==(const Form&, const Form&) = default;

private:
    Poly poly_;
    unsigned degree_ = 0;
};

} // namespace hesslab
