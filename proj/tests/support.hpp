#pragma once

// Test-only generators and independent oracles.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hesslab/hesslab.hpp"

namespace hesslab::testing {

/// Random nonzero homogeneous form with up to `max_terms` terms and integer
/// coefficients in [-coeff, coeff].
inline Form random_form(std::mt19937_64& rng, std::size_t arity, unsigned degree, std::size_t max_terms,
                        long coeff = 5) {
    auto monomials = monomials_of_degree(arity, degree);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    std::uniform_int_distribution<long> c(-coeff, coeff);
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
    for (;;) {
        Poly p(arity);
        const std::size_t n = count(rng);
        for (std::size_t t = 0; t < n; ++t) p.add_term(monomials[pick(rng)], Rational(c(rng)));
        if (!p.is_zero()) return Form(p);
    }
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t arity, unsigned max_degree, std::size_t terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<long> c(-5, 5);
    Poly p(arity);
    for (std::size_t t = 0; t < terms; ++t) {
        auto monomials = monomials_of_degree(arity, deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
        p.add_term(monomials[pick(rng)], Rational(c(rng)));
    }
    return p;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t arity, long bound = 3) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < arity; ++i) p.emplace_back(c(rng));
    return p;
}

/// X^alpha o p by literally differentiating alpha_i times in each variable.
inline Poly iterated_derivative(const DiffOp& op, const Poly& p) {
    Poly out(p.arity());
    for (const auto& [alpha, c] : op.poly.terms()) {
        Poly q = p;
        for (std::size_t i = 0; i < alpha.arity(); ++i)
            for (std::uint32_t k = 0; k < alpha[i]; ++k) q = q.derivative(i);
        out += q * c;
    }
    return out;
}

/// Determinant by the Leibniz permutation sum (small matrices only).
inline Poly leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det(m.arity());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Poly term = Poly::constant(m.arity(), Rational(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Determinant of a rational matrix by the Leibniz sum.
inline Rational leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// (sum a_i X_i)^d expanded as an operator.
inline DiffOp linear_power(std::span<const Rational> a, unsigned d) {
    Poly lin(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) lin.add_term(Exponent::unit(a.size(), i), a[i]);
    Poly r = Poly::constant(a.size(), Rational(1));
    for (unsigned k = 0; k < d; ++k) r = r * lin;
    return DiffOp(r);
}

/// Form with variables permuted: variable i becomes perm[i].
inline Form permute_variables(const Form& f, const std::vector<std::size_t>& perm) {
    Poly p(f.arity());
    for (const auto& [e, c] : f.poly().terms()) {
        Exponent g(f.arity());
        for (std::size_t i = 0; i < f.arity(); ++i) g[perm[i]] = e[i];
        p.add_term(g, c);
    }
    return Form(p);
}

inline Form parse(const std::string& text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

} // namespace hesslab::testing
