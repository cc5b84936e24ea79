#pragma once

// Graded pieces of A = Q / Ann_Q(F) computed through catalecticant matrices.

#include <map>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace hesslab {

/// Matrix of Q_d x R_{D-d} -> k: entry (i, j) is the coefficient of
/// col_monomials[j] in row_monomials[i] o F.
struct CatalecticantMatrix {
    unsigned d = 0;
    std::vector<Exponent> row_monomials;
    std::vector<Exponent> col_monomials;
    Matrix entries;
};

/// Monomials of Q_d whose classes form a basis of A_d.
struct GradedBasis {
    unsigned d = 0;
    std::vector<Exponent> monomials;

    std::size_t size() const { return monomials.size(); }
    std::vector<DiffOp> ops() const {
        std::vector<DiffOp> out;
        for (const auto& e : monomials) out.push_back(DiffOp::monomial(e));
        return out;
    }
};

struct HilbertFunction {
    std::vector<std::size_t> dims;
    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

namespace detail {

inline void check_degree(const Form& f, unsigned d) {
    if (d > f.degree())
        throw input_error("degree " + std::to_string(d) + " outside 0.." + std::to_string(f.degree()));
}

/// Coefficient vector of a homogeneous polynomial over a monomial list.
inline std::vector<Rational> coefficient_vector(const Poly& p, const std::vector<Exponent>& monomials,
                                                const std::map<Exponent, std::size_t, GrevlexGreater>& index) {
    std::vector<Rational> v(monomials.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw invariant_error("term outside the expected graded piece");
        v[it->second] = c;
    }
    return v;
}

inline std::map<Exponent, std::size_t, GrevlexGreater> index_of(const std::vector<Exponent>& monomials) {
    std::map<Exponent, std::size_t, GrevlexGreater> idx;
    for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
    return idx;
}

} // namespace detail

inline CatalecticantMatrix catalecticant(const Form& f, unsigned d) {
    detail::check_degree(f, d);
    CatalecticantMatrix cat;
    cat.d = d;
    cat.row_monomials = monomials_of_degree(f.arity(), d);
    cat.col_monomials = monomials_of_degree(f.arity(), f.degree() - d);
    auto idx = detail::index_of(cat.col_monomials);
    cat.entries = Matrix(cat.row_monomials.size(), cat.col_monomials.size());
    for (std::size_t i = 0; i < cat.row_monomials.size(); ++i) {
        Poly image = apply_diff(DiffOp::monomial(cat.row_monomials[i]), f.poly());
        for (const auto& [e, c] : image.terms()) cat.entries(i, idx.at(e)) = c;
    }
    return cat;
}

/// Basis of (Ann_Q F)_d.
inline std::vector<DiffOp> ann_basis(const Form& f, unsigned d) {
    auto cat = catalecticant(f, d);
    std::vector<DiffOp> out;
    for (const auto& rel : left_kernel(cat.entries)) {
        Poly op(f.arity());
        for (std::size_t i = 0; i < rel.size(); ++i) op.add_term(cat.row_monomials[i], rel[i]);
        out.emplace_back(op.monic());
    }
    return out;
}

/// Greedy pivot rows of Cat_d in grevlex order.
inline GradedBasis quotient_basis(const Form& f, unsigned d) {
    auto cat = catalecticant(f, d);
    RowReducer red(cat.entries.cols());
    GradedBasis b;
    b.d = d;
    for (std::size_t i = 0; i < cat.entries.rows(); ++i)
        if (red.offer(cat.entries.row(i)).independent) b.monomials.push_back(cat.row_monomials[i]);
    return b;
}

inline HilbertFunction hilbert_function(const Form& f) {
    HilbertFunction h;
    for (unsigned d = 0; d <= f.degree(); ++d) h.dims.push_back(rank(catalecticant(f, d).entries));
    return h;
}

/// One graded piece A_d with a fixed monomial basis and a way to express any
/// element of Q_d in that basis.
class GradedPiece {
public:
    GradedPiece(const Form& f, unsigned d) : form_(&f), d_(d) {
        auto cat = catalecticant(f, d);
        cols_ = cat.col_monomials;
        col_index_ = detail::index_of(cols_);
        RowReducer red(cat.entries.cols());
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < cat.entries.rows(); ++i)
            if (red.offer(cat.entries.row(i)).independent) kept.push_back(i);
        basis_.d = d;
        for (auto i : kept) basis_.monomials.push_back(cat.row_monomials[i]);
        pivots_ = red.pivot_columns();
        const std::size_t r = kept.size();
        Matrix square(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) square(i, j) = cat.entries(kept[i], pivots_[j]);
        inverse_ = inverse(square);
    }

    unsigned degree() const { return d_; }
    const GradedBasis& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }

    /// Coordinates in the basis of the class of a homogeneous operator of degree d.
    std::vector<Rational> coordinates(const DiffOp& op) const {
        Poly image = apply_diff(op, form_->poly());
        std::vector<Rational> v = detail::coefficient_vector(image, cols_, col_index_);
        const std::size_t r = dimension();
        std::vector<Rational> c(r);
        for (std::size_t j = 0; j < r; ++j) {
            const Rational& x = v[pivots_[j]];
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < r; ++i)
                if (!inverse_(j, i).is_zero()) c[i] += x * inverse_(j, i);
        }
        return c;
    }

private:
    const Form* form_;
    unsigned d_;
    GradedBasis basis_;
    std::vector<Exponent> cols_;
    std::map<Exponent, std::size_t, GrevlexGreater> col_index_;
    std::vector<std::size_t> pivots_;
    Matrix inverse_;
};

/// A = Q / Ann_Q(F) with every graded piece materialized.
class ApolarAlgebra {
public:
    explicit ApolarAlgebra(Form f) : form_(std::make_unique<Form>(std::move(f))) {
        for (unsigned d = 0; d <= form_->degree(); ++d) pieces_.emplace_back(*form_, d);
    }

    const Form& form() const { return *form_; }
    unsigned socle_degree() const { return form_->degree(); }
    std::size_t arity() const { return form_->arity(); }
    const GradedPiece& piece(unsigned d) const {
        if (d >= pieces_.size()) throw input_error("degree outside the algebra");
        return pieces_[d];
    }

    HilbertFunction hilbert() const {
        HilbertFunction h;
        for (const auto& p : pieces_) h.dims.push_back(p.dimension());
        return h;
    }

private:
    std::unique_ptr<const Form> form_;
    std::vector<GradedPiece> pieces_;
};

/// Poincare-duality check of A: dim A_D = 1 and every pairing
/// A_d x A_{D-d} -> A_D is nondegenerate. Always true for A = Q/Ann_Q(F);
/// false signals an internal error.
inline bool gorenstein_selfcheck(const Form& f) {
    const unsigned D = f.degree();
    std::vector<GradedBasis> bases;
    for (unsigned d = 0; d <= D; ++d) bases.push_back(quotient_basis(f, d));
    if (bases[D].size() != 1) return false;
    for (unsigned d = 0; 2 * d <= D; ++d) {
        const auto& lo = bases[d];
        const auto& hi = bases[D - d];
        if (lo.size() != hi.size()) return false;
        Matrix pairing(lo.size(), hi.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            Poly partial = apply_diff(DiffOp::monomial(lo.monomials[i]), f.poly());
            for (std::size_t j = 0; j < hi.size(); ++j)
                pairing(i, j) = apply_diff(DiffOp::monomial(hi.monomials[j]), partial).constant_term();
        }
        if (determinant(pairing).is_zero()) return false;
    }
    return true;
}

} // namespace hesslab
