#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hesslab {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Parses "p", "-p", "p/q" with decimal digits. Denominator must be nonzero.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        auto digits_ok = [](std::string_view t, bool allow_sign) {
            if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false))
            throw input_error("malformed rational literal '" + s + "'");
        if (!num.empty() && num.front() == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw input_error("zero denominator in '" + s + "'");
        return Rational(n, d);
    }

    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const { return value_.get_str(10); }

    /// Always "p/q" (denominator written even when 1); used by JSON reports.
    std::string to_fraction_string() const {
        return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace hesslab
