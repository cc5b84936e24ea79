#pragma once

// Matrices with polynomial entries: evaluation, symbolic determinants by
// memoized minor expansion, and certified generic-rank computations.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace hesslab {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
        : rows_(rows), cols_(cols), arity_(arity), data_(rows * cols, Poly(arity)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t arity() const { return arity_; }

    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix eval(std::span<const Rational> point) const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Poly& p = (*this)(i, j);
                if (!p.is_zero()) m(i, j) = p.eval(point);
            }
        return m;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(cols_, rows_, arity_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        PolyMatrix s(rows.size(), cols.size(), arity_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, arity_ = 0;
    std::vector<Poly> data_;
};

/// Tracks the number of polynomial terms materialized by a computation.
class TermBudget {
public:
    explicit TermBudget(std::size_t limit) : limit_(limit) {}
    void charge(std::size_t terms) {
        used_ += terms;
        if (used_ > limit_) throw resource_error("term budget of " + std::to_string(limit_) + " exceeded");
    }
    std::size_t used() const { return used_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

/// Determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns. Zero entries prune whole subtrees, which makes this
/// cheap on the block-structured Hessians seen in practice.
inline Poly symbolic_determinant(const PolyMatrix& m, TermBudget& budget) {
    if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.arity(), Rational(1));
    if (n > 63) throw resource_error("matrix too large for minor expansion");

    std::unordered_map<std::uint64_t, Poly> memo;
    auto minor = [&](auto&& self, std::uint64_t mask) -> Poly {
        const std::size_t r = n - static_cast<std::size_t>(std::popcount(mask));
        if (mask == 0) return Poly::constant(m.arity(), Rational(1));
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Poly acc(m.arity());
        int position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1u)) continue;
            const Poly& e = m(r, j);
            if (!e.is_zero()) {
                Poly sub = self(self, mask & ~(std::uint64_t{1} << j));
                if (!sub.is_zero()) {
                    Poly term = e * sub;
                    budget.charge(term.size());
                    if (position % 2) acc -= term;
                    else acc += term;
                }
            }
            ++position;
        }
        budget.charge(acc.size());
        memo.emplace(mask, acc);
        return acc;
    };
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return minor(minor, full);
}

/// Deterministic stream of small-integer points; coordinates lie in [-B, B]
/// with B = 2, 4, 8, ... growing every eight draws.
class PointSampler {
public:
    PointSampler(std::size_t arity, std::uint64_t seed) : arity_(arity), engine_(seed) {}

    std::vector<Rational> next() {
        const unsigned level = static_cast<unsigned>(std::min<std::size_t>(drawn_ / 8, 29));
        const std::uint64_t bound = std::uint64_t{2} << level;
        ++drawn_;
        std::vector<Rational> p(arity_);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& x : p) {
                const auto v = static_cast<long>(engine_() % (2 * bound + 1)) - static_cast<long>(bound);
                x = Rational(v);
                nonzero = nonzero || v != 0;
            }
            if (arity_ == 0) break;
        }
        return p;
    }

    std::size_t drawn() const { return drawn_; }

private:
    std::size_t arity_;
    std::mt19937_64 engine_;
    std::size_t drawn_ = 0;
};

/// sum_i coeffs[i] * row_i(M) = 0 identically, with coeffs not all zero.
struct RowDependency {
    std::vector<Poly> coeffs;
};

/// Exact replay: true iff the combination of rows is the zero vector and
/// at least one coefficient is nonzero.
inline bool verify_row_dependency(const PolyMatrix& m, const RowDependency& dep) {
    if (dep.coeffs.size() != m.rows()) return false;
    bool any = false;
    for (const auto& c : dep.coeffs) any = any || !c.is_zero();
    if (!any) return false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly acc(m.arity());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!dep.coeffs[i].is_zero() && !m(i, j).is_zero()) acc += dep.coeffs[i] * m(i, j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

namespace detail {

/// Numeric row structure of M at a point: greedy independent rows and, for
/// each dependent row, the support of its relation (a circuit).
struct NumericRowStructure {
    std::vector<std::size_t> independent;
    struct Circuit {
        std::size_t row;
        std::vector<std::size_t> support;  // includes `row`, ascending
    };
    std::vector<Circuit> circuits;
};

inline NumericRowStructure numeric_row_structure(const Matrix& n) {
    NumericRowStructure s;
    RowReducer red(n.cols(), true);
    for (std::size_t i = 0; i < n.rows(); ++i) {
        auto o = red.offer(n.row(i));
        if (o.independent) {
            s.independent.push_back(i);
        } else {
            NumericRowStructure::Circuit c{i, {}};
            for (std::size_t k = 0; k < o.relation.size(); ++k)
                if (!o.relation[k].is_zero()) c.support.push_back(k);
            s.circuits.push_back(std::move(c));
        }
    }
    return s;
}

inline double circuit_cost(const NumericRowStructure& s) {
    double cost = 0;
    for (const auto& c : s.circuits) cost += static_cast<double>(std::uint64_t{1} << std::min<std::size_t>(c.support.size(), 60));
    return cost;
}

/// Symbolic relation on a circuit: coefficients are signed maximal minors of
/// the circuit rows restricted to columns where they have full rank at the
/// sampled point. Returns nullopt when the exact replay fails.
inline std::optional<RowDependency> circuit_dependency(const PolyMatrix& m, const Matrix& at_point,
                                                       const std::vector<std::size_t>& support,
                                                       TermBudget& budget) {
    const std::size_t s = support.size() - 1;
    // Columns on which support minus its last row is independent at the point.
    Matrix sub(s, m.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) sub(i, j) = at_point(support[i], j);
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < s; ++i) red.offer(sub.row(i));
    if (red.rank() != s) return std::nullopt;
    std::vector<std::size_t> cols = red.pivot_columns();
    std::sort(cols.begin(), cols.end());

    RowDependency dep;
    dep.coeffs.assign(m.rows(), Poly(m.arity()));
    for (std::size_t k = 0; k <= s; ++k) {
        std::vector<std::size_t> rows;
        for (std::size_t t = 0; t <= s; ++t)
            if (t != k) rows.push_back(support[t]);
        Poly c = symbolic_determinant(m.submatrix(rows, cols), budget);
        dep.coeffs[support[k]] = (k % 2) ? -c : c;
    }
    if (!verify_row_dependency(m, dep)) return std::nullopt;
    return dep;
}

} // namespace detail

/// Result of a certified generic-rank computation over k(a_1..a_n).
struct GenericRank {
    std::size_t rank = 0;
    /// Point where the rows `minor_rows` / columns `minor_cols` give a
    /// nonzero minor of size `rank` (lower-bound certificate).
    std::vector<Rational> witness;
    std::vector<std::size_t> minor_rows, minor_cols;
    /// Independent polynomial relations bounding the rank from above; they
    /// are row relations of M, or of M^T when `on_columns` is set.
    bool on_columns = false;
    std::vector<RowDependency> dependencies;

    bool full(const PolyMatrix& m) const { return rank == std::min(m.rows(), m.cols()); }
};

namespace detail {

inline void record_minor(const Matrix& at_point, GenericRank& g) {
    RowReducer red(at_point.cols());
    g.minor_rows.clear();
    for (std::size_t i = 0; i < at_point.rows(); ++i)
        if (red.offer(at_point.row(i)).independent) g.minor_rows.push_back(i);
    g.minor_cols = red.pivot_columns();
    std::sort(g.minor_cols.begin(), g.minor_cols.end());
}

} // namespace detail

/// Certified generic rank of a polynomial matrix. The lower bound comes from
/// a nonzero numeric minor at a sampled point; the upper bound from exactly
/// replayed polynomial relations, one per missing rank. Sampled points only
/// affect running time, never the answer.
inline GenericRank generic_rank(const PolyMatrix& m, std::uint64_t seed, std::size_t attempts,
                                std::size_t term_budget) {
    TermBudget budget(term_budget);
    PointSampler sampler(m.arity(), seed);
    const std::size_t cap = std::min(m.rows(), m.cols());
    const PolyMatrix mt = m.transpose();
    std::size_t best = 0;
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        GenericRank g;
        g.witness = sampler.next();
        Matrix at = m.eval(g.witness);
        auto rows = detail::numeric_row_structure(at);
        g.rank = rows.independent.size();
        if (g.rank < best) continue;
        best = g.rank;
        detail::record_minor(at, g);
        if (g.rank == cap) return g;
        // A deficient rank seen at fewer than three points is more likely an
        // unlucky point than a generic deficiency; relations are costly.
        if (attempt < 2) continue;

        Matrix att = at.transpose();
        auto cols = detail::numeric_row_structure(att);
        g.on_columns = detail::circuit_cost(cols) < detail::circuit_cost(rows);
        const PolyMatrix& target = g.on_columns ? mt : m;
        const Matrix& target_at = g.on_columns ? att : at;
        const auto& structure = g.on_columns ? cols : rows;
        bool ok = true;
        for (const auto& c : structure.circuits) {
            auto dep = detail::circuit_dependency(target, target_at, c.support, budget);
            if (!dep) {
                ok = false;
                break;
            }
            g.dependencies.push_back(std::move(*dep));
        }
        if (ok) return g;
    }
    throw resource_error("generic rank not certified within " + std::to_string(attempts) + " sample points");
}

/// Either a point with nonzero determinant, or a certified row relation.
struct SingularityCertificate {
    std::optional<std::vector<Rational>> witness;
    Rational value;
    std::optional<RowDependency> dependency;
};

/// Decides det(M) != 0 for a square polynomial matrix with a certificate.
inline SingularityCertificate decide_determinant(const PolyMatrix& m, std::uint64_t seed, std::size_t attempts,
                                                 std::size_t term_budget) {
    if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
    TermBudget budget(term_budget);
    PointSampler sampler(m.arity(), seed);
    std::size_t best = 0;
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        auto p = sampler.next();
        Matrix at = m.eval(p);
        Rational det = determinant(at);
        if (!det.is_zero()) return {std::move(p), det, std::nullopt};
        auto rows = detail::numeric_row_structure(at);
        if (rows.independent.size() < best) continue;
        best = rows.independent.size();
        if (attempt < 2) continue;
        auto circuits = rows.circuits;
        std::sort(circuits.begin(), circuits.end(),
                  [](const auto& a, const auto& b) { return a.support.size() < b.support.size(); });
        for (const auto& c : circuits) {
            auto dep = detail::circuit_dependency(m, at, c.support, budget);
            if (dep) return {std::nullopt, Rational(0), std::move(dep)};
        }
    }
    throw resource_error("determinant status not certified within " + std::to_string(attempts) + " sample points");
}

} // namespace hesslab
