#pragma once

// Higher Hessians Hess^(d) F = det(alpha_i alpha_j o F) over a basis of A_d.

#include <optional>
#include <variant>
#include <vector>

#include "apolar.hpp"
#include "config.hpp"
#include "poly_matrix.hpp"

namespace hesslab {

struct HessianMatrix {
    unsigned d = 0;
    std::vector<DiffOp> basis;
    PolyMatrix entries;

    std::size_t size() const { return basis.size(); }
};

struct NonzeroWithWitness {
    std::vector<Rational> point;
    Rational value;
};

struct ZeroWithDependence {
    std::vector<Poly> coeffs;
    bool certified = false;
};

struct SymbolicDet {
    Poly det;
};

using HessianStatus = std::variant<NonzeroWithWitness, ZeroWithDependence, SymbolicDet>;

struct HessianReport {
    unsigned d = 0;
    HessianStatus status;
    GradedBasis basis_used;

    /// Hess^(d) F is identically zero.
    bool is_zero() const {
        if (std::holds_alternative<ZeroWithDependence>(status)) return true;
        if (auto* s = std::get_if<SymbolicDet>(&status)) return s->det.is_zero();
        return false;
    }
};

namespace detail {

inline void check_hessian_degree(const Form& f, unsigned d) {
    if (2 * d > f.degree())
        throw input_error("Hessian degree " + std::to_string(d) + " outside 0.." + std::to_string(f.degree() / 2));
}

inline void check_basis(const Form& f, unsigned d, const std::vector<DiffOp>& basis) {
    for (const auto& b : basis) {
        require_input(b.arity() == f.arity(), "basis element has wrong arity");
        require_input(!b.poly.is_zero() && b.poly.is_homogeneous() && b.poly.total_degree() == d,
                      "basis element is not homogeneous of degree " + std::to_string(d));
    }
    auto monomials = monomials_of_degree(f.arity(), f.degree() - d);
    auto idx = index_of(monomials);
    RowReducer red(monomials.size());
    for (const auto& b : basis) red.offer(coefficient_vector(apply_diff(b, f.poly()), monomials, idx));
    const std::size_t dim = rank(catalecticant(f, d).entries);
    require_input(red.rank() == basis.size() && basis.size() == dim,
                  "operators do not form a basis of A_" + std::to_string(d));
}

} // namespace detail

/// Entry (i, j) = alpha_i alpha_j o F. For d = 0 the basis is {1} and the
/// matrix is [F].
inline HessianMatrix hessian_matrix(const Form& f, unsigned d, const std::vector<DiffOp>& basis) {
    detail::check_hessian_degree(f, d);
    detail::check_basis(f, d, basis);
    HessianMatrix h;
    h.d = d;
    h.basis = basis;
    const std::size_t n = basis.size();
    h.entries = PolyMatrix(n, n, f.arity());
    for (std::size_t i = 0; i < n; ++i) {
        Poly partial = apply_diff(basis[i], f.poly());
        for (std::size_t j = i; j < n; ++j) {
            Poly e = apply_diff(basis[j], partial);
            h.entries(j, i) = e;
            h.entries(i, j) = std::move(e);
        }
    }
    return h;
}

inline HessianMatrix hessian_matrix(const Form& f, unsigned d, const GradedBasis& basis) {
    require_input(basis.d == d, "basis degree does not match Hessian degree");
    return hessian_matrix(f, d, basis.ops());
}

inline HessianMatrix hessian_matrix(const Form& f, unsigned d) {
    detail::check_hessian_degree(f, d);
    return hessian_matrix(f, d, quotient_basis(f, d));
}

/// Symbolic determinant of a Hessian matrix, subject to the size cap.
inline Poly hessian_det(const HessianMatrix& h, const Config& cfg = {}) {
    if (h.size() > cfg.max_symbolic_det_size)
        throw resource_error("Hessian of size " + std::to_string(h.size()) + " exceeds the symbolic cap of " +
                             std::to_string(cfg.max_symbolic_det_size));
    TermBudget budget(cfg.term_budget);
    return symbolic_determinant(h.entries, budget);
}

/// Hess^(d) F over the canonical pivot basis.
inline Poly hessian_det(const Form& f, unsigned d, const Config& cfg = {}) {
    return hessian_det(hessian_matrix(f, d), cfg);
}

/// Hess^(d) F at a point: entries are evaluated first, then a numeric determinant.
inline Rational hessian_eval(const HessianMatrix& h, std::span<const Rational> a) {
    if (a.size() != h.entries.arity()) throw input_error("evaluation point has wrong dimension");
    return determinant(h.entries.eval(a));
}

inline Rational hessian_eval(const Form& f, unsigned d, std::span<const Rational> a) {
    if (a.size() != f.arity()) throw input_error("evaluation point has wrong dimension");
    return hessian_eval(hessian_matrix(f, d), a);
}

/// Decides Hess^(d) F != 0 with a certificate: a witness point with a nonzero
/// value, an exactly replayed row relation, or (when `symbolic`) the full
/// determinant.
inline HessianReport hessian_report(const HessianMatrix& h, const GradedBasis& basis, const Config& cfg,
                                    bool symbolic = false) {
    HessianReport r;
    r.d = h.d;
    r.basis_used = basis;
    if (symbolic) {
        r.status = SymbolicDet{hessian_det(h, cfg)};
        return r;
    }
    auto cert = decide_determinant(h.entries, cfg.seed + h.d, cfg.witness_attempt_budget, cfg.term_budget);
    if (cert.witness) {
        require_invariant(!hessian_eval(h, *cert.witness).is_zero(), "witness does not replay");
        r.status = NonzeroWithWitness{std::move(*cert.witness), cert.value};
    } else {
        ZeroWithDependence z{std::move(cert.dependency->coeffs), false};
        z.certified = verify_row_dependency(h.entries, RowDependency{z.coeffs});
        require_invariant(z.certified, "row relation does not replay");
        r.status = std::move(z);
    }
    return r;
}

inline HessianReport hessian_report(const Form& f, unsigned d, const Config& cfg, bool symbolic = false) {
    detail::check_hessian_degree(f, d);
    auto basis = quotient_basis(f, d);
    return hessian_report(hessian_matrix(f, d, basis), basis, cfg, symbolic);
}

/// Convenience overload keyed by seed alone.
inline HessianReport hessian_report(const Form& f, unsigned d, std::uint64_t seed) {
    Config cfg;
    cfg.seed = seed;
    return hessian_report(f, d, cfg);
}

} // namespace hesslab
