#pragma once

// Exact dense linear algebra over the rationals. Elimination works on
// integer-scaled rows (fraction-free) and strips row content after every step.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hesslab {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

inline mpz_class lcm_of_denominators(std::span<const Rational> v) {
    mpz_class l = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    return l;
}

inline std::vector<mpz_class> to_integer_row(std::span<const Rational> v, mpz_class& scale) {
    scale = lcm_of_denominators(v);
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[i] = v[i].value().get_num() * (scale / v[i].value().get_den());
    return out;
}

inline void strip_content(std::vector<mpz_class>& a, std::vector<mpz_class>& b) {
    mpz_class g = 0;
    for (const auto& x : a)
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : b)
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g <= 1) return;
    for (auto& x : a)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& x : b)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace detail

/// Incremental row echelon builder. Rows are offered one at a time; a row is
/// kept iff it is independent of the rows kept so far (greedy basis). When
/// combination tracking is on, each dependent row yields an explicit
/// relation among the offered rows.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols, bool track = false) : cols_(cols), track_(track) {}

    struct Outcome {
        bool independent = false;
        /// Coefficients over offered rows 0..k (k = this row); sum c_i * row_i = 0.
        std::vector<Rational> relation;
    };

    Outcome offer(std::span<const Rational> row) {
        if (row.size() != cols_) throw input_error("row length mismatch");
        const std::size_t index = offered_++;
        mpz_class scale;
        std::vector<mpz_class> r = detail::to_integer_row(row, scale);
        std::vector<mpz_class> comb;
        if (track_) {
            comb.assign(index + 1, 0);
            comb[index] = scale;
        }
        for (const auto& b : basis_) {
            const mpz_class& rp = r[b.pivot];
            if (rp == 0) continue;
            mpz_class bp = b.entries[b.pivot];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), bp.get_mpz_t(), rp.get_mpz_t());
            mpz_class fr = bp / g, fb = rp / g;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (r[j] != 0) r[j] *= fr;
                if (b.entries[j] != 0) r[j] -= fb * b.entries[j];
            }
            if (track_) {
                for (auto& c : comb)
                    if (c != 0) c *= fr;
                for (std::size_t k = 0; k < b.combination.size(); ++k)
                    if (b.combination[k] != 0) comb[k] -= fb * b.combination[k];
            }
            detail::strip_content(r, comb);
        }
        Outcome out;
        std::optional<std::size_t> pivot;
        std::size_t best_bits = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r[j] == 0) continue;
            std::size_t bits = mpz_sizeinbase(r[j].get_mpz_t(), 2);
            if (!pivot || bits < best_bits) {
                pivot = j;
                best_bits = bits;
            }
        }
        if (pivot) {
            out.independent = true;
            basis_.push_back({std::move(r), std::move(comb), *pivot});
            kept_.push_back(index);
        } else if (track_) {
            out.relation.reserve(comb.size());
            for (auto& c : comb) out.relation.emplace_back(c);
        }
        return out;
    }

    std::size_t rank() const { return basis_.size(); }
    /// Indices (in offer order) of the kept rows.
    const std::vector<std::size_t>& kept() const { return kept_; }
    /// Pivot column of each kept row, in kept order.
    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> p;
        for (const auto& b : basis_) p.push_back(b.pivot);
        return p;
    }

private:
    struct Row {
        std::vector<mpz_class> entries;
        std::vector<mpz_class> combination;
        std::size_t pivot;
    };

    std::size_t cols_;
    bool track_;
    std::size_t offered_ = 0;
    std::vector<Row> basis_;
    std::vector<std::size_t> kept_;
};

inline std::size_t rank(const Matrix& m) {
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) red.offer(m.row(i));
    return red.rank();
}

/// Basis of { c : c^T m = 0 }, one vector per row dependent on earlier rows.
inline std::vector<std::vector<Rational>> left_kernel(const Matrix& m) {
    RowReducer red(m.cols(), true);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto o = red.offer(m.row(i));
        if (!o.independent) {
            o.relation.resize(m.rows());
            out.push_back(std::move(o.relation));
        }
    }
    return out;
}

/// Exact determinant by Bareiss elimination on the integer-scaled matrix.
inline Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> a(n);
    mpz_class denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class s;
        a[i] = detail::to_integer_row(m.row(i), s);
        denom *= s;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::size_t> piv;
        std::size_t best = 0;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][k] == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[i][k].get_mpz_t(), 2);
            if (!piv || bits < best) {
                piv = i;
                best = bits;
            }
        }
        if (!piv) return Rational(0);
        if (*piv != k) {
            std::swap(a[*piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class num = a[n - 1][n - 1] * sign;
    return Rational(num, denom);
}

/// Inverse of a nonsingular square matrix (Gauss-Jordan over Q).
inline Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw input_error("inverse of a non-square matrix");
    Matrix a = m, inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = Rational(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) throw invariant_error("inverse of a singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        Rational p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace hesslab
