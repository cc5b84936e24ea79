#pragma once

// The example forms: Fermat-type cubics/quartics, Stanley's non-unimodal
// quartic, and several forms with vanishing higher Hessians.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parser.hpp"
#include "poly.hpp"

namespace hesslab {

struct FamilySpec {
    std::string name;
    std::map<std::string, std::string> parameters;
};

namespace detail {

inline const std::string* find_param(const FamilySpec& s, const std::string& key) {
    auto it = s.parameters.find(key);
    return it == s.parameters.end() ? nullptr : &it->second;
}

inline long int_param(const FamilySpec& s, const std::string& key, std::optional<long> fallback = {}) {
    const std::string* v = find_param(s, key);
    if (!v) {
        if (fallback) return *fallback;
        throw input_error("family '" + s.name + "' requires parameter '" + key + "'");
    }
    Rational r = Rational::parse(*v);
    require_input(r.is_integer() && r.numerator().fits_slong_p(), "parameter '" + key + "' must be an integer");
    return r.numerator().get_si();
}

inline Rational rational_param(const FamilySpec& s, const std::string& key) {
    const std::string* v = find_param(s, key);
    if (!v) throw input_error("family '" + s.name + "' requires parameter '" + key + "'");
    return Rational::parse(*v);
}

inline void only_params(const FamilySpec& s, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : s.parameters) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
        require_input(ok, "family '" + s.name + "' has no parameter '" + k + "'");
    }
}

inline Poly monomial_in(std::size_t arity, std::initializer_list<std::pair<std::size_t, std::uint32_t>> powers,
                        const Rational& c = Rational(1)) {
    Exponent e(arity);
    for (auto [var, k] : powers) e[var] += k;
    return Poly::monomial(e, c);
}

} // namespace detail

/// sum x_i^n - n(n-1) s prod x_i, variables x,y,z,w for n <= 4, else x1..xn.
inline ParsedInput fermat(long n, const Rational& s) {
    require_input(n >= 2 && n <= 12, "fermat requires 2 <= n <= 12");
    const auto arity = static_cast<std::size_t>(n);
    std::vector<std::string> vars =
        n <= 4 ? std::vector<std::string>{"x", "y", "z", "w"} : default_variable_names(arity);
    vars.resize(arity);
    Poly f(arity);
    Exponent all(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        Exponent e(arity);
        e[i] = static_cast<std::uint32_t>(n);
        f.add_term(e, Rational(1));
        all[i] = 1;
    }
    f.add_term(all, -Rational(n * (n - 1)) * s);
    return {vars, Form(std::move(f))};
}

enum class CubicOrdering { grevlex, reversed };

/// sum_{i=1}^{10} x_i M_i(u,v,w), M_i the cubic monomials; variables u,v,w,x1..x10.
inline ParsedInput stanley(CubicOrdering ordering = CubicOrdering::grevlex) {
    std::vector<std::string> vars{"u", "v", "w"};
    for (int i = 1; i <= 10; ++i) vars.push_back("x" + std::to_string(i));
    auto cubics = monomials_of_degree(3, 3);
    if (ordering == CubicOrdering::reversed) std::reverse(cubics.begin(), cubics.end());
    Poly f(13);
    for (std::size_t i = 0; i < 10; ++i) {
        Exponent e(13);
        for (std::size_t k = 0; k < 3; ++k) e[k] = cubics[i][k];
        e[3 + i] = 1;
        f.add_term(e, Rational(1));
    }
    return {vars, Form(std::move(f))};
}

/// sum_{j=0}^n x_j^2 u^{n-j} v^j; variables u,v,x0..xn.
inline ParsedInput stacked_squares(long n) {
    require_input(n >= 1 && n <= 10, "stacked_squares requires 1 <= n <= 10");
    const auto arity = static_cast<std::size_t>(n + 3);
    std::vector<std::string> vars{"u", "v"};
    for (long j = 0; j <= n; ++j) vars.push_back("x" + std::to_string(j));
    Poly f(arity);
    for (long j = 0; j <= n; ++j)
        f += detail::monomial_in(arity, {{0, static_cast<std::uint32_t>(n - j)},
                                         {1, static_cast<std::uint32_t>(j)},
                                         {static_cast<std::size_t>(2 + j), 2u}});
    return {vars, Form(std::move(f))};
}

/// x^2u^3 + xyu^2v + y^2uv^2 + z^2v^3; variables u,v,x,y,z.
inline ParsedInput quintic5() {
    std::vector<std::string> vars{"u", "v", "x", "y", "z"};
    return {vars, parse_poly("x^2*u^3+x*y*u^2*v+y^2*u*v^2+z^2*v^3", vars)};
}

/// w^3xy + wx^3z + y^3z^2; variables x,y,z,w.
inline ParsedInput ikeda() {
    std::vector<std::string> vars{"x", "y", "z", "w"};
    return {vars, parse_poly("w^3*x*y+w*x^3*z+y^3*z^2", vars)};
}

/// (x-y)(x-z)(y-z); variables x,y,z.
inline ParsedInput s3_coinvariant() {
    std::vector<std::string> vars{"x", "y", "z"};
    return {vars, parse_poly("(x-y)*(x-z)*(y-z)", vars)};
}

/// x0u^2 + x1uv + x3v^2; variables x0,x1,x3,u,v.
inline ParsedInput wz_zero_hessian() {
    std::vector<std::string> vars{"x0", "x1", "x3", "u", "v"};
    return {vars, parse_poly("x0*u^2+x1*u*v+x3*v^2", vars)};
}

inline std::vector<std::string> family_names() {
    return {"fermat", "stanley", "stacked_squares", "quintic5", "ikeda", "s3_coinvariant", "wz_zero_hessian"};
}

inline ParsedInput build(const FamilySpec& spec) {
    const auto& name = spec.name;
    if (name == "fermat") {
        detail::only_params(spec, {"n", "s"});
        return fermat(detail::int_param(spec, "n"), detail::rational_param(spec, "s"));
    }
    if (name == "stanley") {
        detail::only_params(spec, {"ordering"});
        const std::string* o = detail::find_param(spec, "ordering");
        if (!o || *o == "grevlex") return stanley(CubicOrdering::grevlex);
        if (*o == "reversed") return stanley(CubicOrdering::reversed);
        throw input_error("stanley ordering must be 'grevlex' or 'reversed'");
    }
    if (name == "stacked_squares") {
        detail::only_params(spec, {"n"});
        return stacked_squares(detail::int_param(spec, "n"));
    }
    detail::only_params(spec, {});
    if (name == "quintic5") return quintic5();
    if (name == "ikeda") return ikeda();
    if (name == "s3_coinvariant") return s3_coinvariant();
    if (name == "wz_zero_hessian") return wz_zero_hessian();
    throw input_error("unknown family '" + name + "'");
}

} // namespace hesslab
