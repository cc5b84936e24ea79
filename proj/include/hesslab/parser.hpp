#pragma once

// Text form of polynomials.
//
//   poly     := term (("+"|"-") term)*
//   term     := ["-"] factor ("*" factor)*
//   factor   := base ["^" nat]
//   base     := rational | var | "(" poly ")"
//   rational := int ["/" nat]

#include <cctype>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace hesslab {

/// An explicitly declared variable order together with the form it carries.
struct ParsedInput {
    std::vector<std::string> variables;
    Form form;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

    Poly parse() {
        Poly p = poly();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::optional<std::string> digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly poly() {
        Poly p = term();
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        bool negate = accept('-');
        Poly p = factor();
        while (accept('*')) p = p * factor();
        return negate ? -p : p;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            auto e = digits();
            if (!e) fail("expected a nonnegative integer exponent");
            if (e->size() > 4) fail("exponent too large");
            Poly r = Poly::constant(vars_.size(), Rational(1));
            for (int k = std::stoi(*e); k > 0; --k) r = r * b;
            return r;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Poly p = poly();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (auto num = digits()) {
            std::string lit = *num;
            if (accept('/')) {
                auto den = digits();
                if (!den) fail("expected a denominator");
                if (*den == std::string(den->size(), '0')) fail("zero denominator");
                lit += "/" + *den;
            }
            return Poly::constant(vars_.size(), Rational::parse(lit));
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return Poly::variable(vars_.size(), i);
            pos_ = start;
            fail("undeclared variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline void validate_variables(std::span<const std::string> vars) {
    require_input(!vars.empty(), "at least one variable must be declared");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
        for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        require_input(ok, "invalid variable name '" + v + "'");
        for (std::size_t j = 0; j < i; ++j) require_input(vars[j] != v, "variable '" + v + "' declared twice");
    }
}

/// Any polynomial in the declared variables (no homogeneity requirement).
inline Poly parse_polynomial(std::string_view text, std::span<const std::string> vars) {
    validate_variables(vars);
    return detail::PolyParser(text, vars).parse();
}

/// A nonzero homogeneous polynomial in the declared variables.
inline Form parse_poly(std::string_view text, std::span<const std::string> vars) {
    Poly p = parse_polynomial(text, vars);
    if (p.is_zero()) throw input_error("the polynomial is zero");
    if (!p.is_homogeneous()) {
        unsigned lo = p.total_degree(), hi = p.total_degree();
        for (const auto& [e, c] : p.terms()) lo = std::min(lo, e.degree());
        throw input_error("polynomial is not homogeneous (degrees " + std::to_string(lo) + " and " +
                          std::to_string(hi) + ")");
    }
    return Form(std::move(p));
}

/// Splits "x,y,z" into identifiers.
inline std::vector<std::string> parse_variable_list(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    validate_variables(out);
    return out;
}

inline std::vector<std::string> default_variable_names(std::size_t arity) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

/// Canonical text: grevlex-descending terms, explicit '*' and '^'. Parsing
/// the output with the same variables gives back the same polynomial.
inline std::string format_poly(const Poly& p, std::span<const std::string> vars) {
    if (vars.size() != p.arity()) throw input_error("variable list does not match arity");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.arity(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty() || !mag.is_one()) factors.insert(factors.begin(), mag.to_string());
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

inline std::string format_poly(const Poly& p) { return format_poly(p, default_variable_names(p.arity())); }

inline std::string format_point(std::span<const Rational> a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].to_string();
    return s;
}

/// "1,-2,1/3" into rationals.
inline std::vector<Rational> parse_point(std::string_view text) {
    std::vector<Rational> out;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        out.push_back(Rational::parse(t));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return out;
}

} // namespace hesslab
