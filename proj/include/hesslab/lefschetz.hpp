#pragma once

// Strong and weak Lefschetz decisions for A = Q / Ann_Q(F).

#include <optional>
#include <vector>

#include "apolar.hpp"
#include "config.hpp"
#include "hessian.hpp"
#include "poly_matrix.hpp"

namespace hesslab {

/// Ranks of x L : A_i -> A_{i+1} and x L^{D-2i} : A_i -> A_{D-i}, together
/// with the rank each map needs to be of full rank.
struct RankProfile {
    std::vector<std::size_t> map_ranks, map_targets;
    std::vector<std::size_t> power_ranks, power_targets;

    bool maps_full() const { return map_ranks == map_targets; }
    bool powers_full() const { return power_ranks == power_targets; }
};

/// Coordinates of x X_k : A_i -> A_{i+1} for every variable k; x L is their
/// combination with the coefficients of L.
class MultiplicationMaps {
public:
    explicit MultiplicationMaps(const ApolarAlgebra& alg) : alg_(&alg) {
        const unsigned D = alg.socle_degree();
        const std::size_t n = alg.arity();
        by_degree_.resize(D);
        for (unsigned i = 0; i < D; ++i) {
            const auto& src = alg.piece(i);
            const auto& dst = alg.piece(i + 1);
            for (std::size_t k = 0; k < n; ++k) {
                Matrix m(dst.dimension(), src.dimension());
                for (std::size_t j = 0; j < src.dimension(); ++j) {
                    Exponent e = src.basis().monomials[j] + Exponent::unit(n, k);
                    auto c = dst.coordinates(DiffOp::monomial(e));
                    for (std::size_t r = 0; r < c.size(); ++r) m(r, j) = c[r];
                }
                by_degree_[i].push_back(std::move(m));
            }
        }
    }

    /// Matrix of x L on A_i for L = sum a_k X_k.
    Matrix numeric(unsigned i, std::span<const Rational> a) const {
        if (a.size() != alg_->arity()) throw input_error("point has wrong dimension");
        const auto& parts = by_degree_.at(i);
        Matrix m(parts[0].rows(), parts[0].cols());
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (a[k].is_zero()) continue;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (!parts[k](r, c).is_zero()) m(r, c) += a[k] * parts[k](r, c);
        }
        return m;
    }

    /// Matrix of x L on A_i with entries linear forms in indeterminates a_1..a_n.
    PolyMatrix symbolic(unsigned i) const {
        const auto& parts = by_degree_.at(i);
        const std::size_t n = alg_->arity();
        PolyMatrix m(parts[0].rows(), parts[0].cols(), n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (!parts[k](r, c).is_zero())
                        m(r, c).add_term(Exponent::unit(n, k), parts[k](r, c));
        return m;
    }

private:
    const ApolarAlgebra* alg_;
    std::vector<std::vector<Matrix>> by_degree_;
};

/// Hessian matrices Hess^(d) for d = 0..floor(D/2) over the algebra's bases.
inline std::vector<HessianMatrix> hessian_matrices(const ApolarAlgebra& alg) {
    std::vector<HessianMatrix> out;
    for (unsigned d = 0; 2 * d <= alg.socle_degree(); ++d)
        out.push_back(hessian_matrix(alg.form(), d, alg.piece(d).basis()));
    return out;
}

struct ElementCheck {
    Rational form_value;
    /// Hess^(d) F (a) for d = 1..floor(D/2); index 0 holds d = 1.
    std::vector<Rational> hessian_values;
    bool lefschetz = false;
};

inline ElementCheck check_element(const Form& f, const std::vector<HessianMatrix>& hessians,
                                  std::span<const Rational> a) {
    if (a.size() != f.arity()) throw input_error("point has wrong dimension");
    ElementCheck c;
    c.form_value = f.poly().eval(a);
    c.lefschetz = !c.form_value.is_zero();
    for (std::size_t d = 1; d < hessians.size(); ++d) {
        c.hessian_values.push_back(hessian_eval(hessians[d], a));
        c.lefschetz = c.lefschetz && !c.hessian_values.back().is_zero();
    }
    return c;
}

/// L = sum a_i X_i is a strong Lefschetz element iff F(a) != 0 and every
/// higher Hessian is nonzero at a.
inline bool is_lefschetz_element(const Form& f, std::span<const Rational> a) {
    ApolarAlgebra alg(f);
    return check_element(alg.form(), hessian_matrices(alg), a).lefschetz;
}

struct OracleResult {
    RankProfile profile;
    /// Every x L^{D-2i} : A_i -> A_{D-i} is bijective.
    bool slp = false;
    /// Every x L : A_i -> A_{i+1} has full rank.
    bool wlp = false;
};

/// Brute force: multiply out the maps x L^{D-2i} in basis coordinates and
/// take exact ranks. Independent of the Hessian route.
inline OracleResult rank_oracle(const ApolarAlgebra& alg, const MultiplicationMaps& maps,
                                std::span<const Rational> a) {
    if (a.size() != alg.arity()) throw input_error("point has wrong dimension");
    const unsigned D = alg.socle_degree();
    OracleResult out;
    std::vector<Matrix> step;
    for (unsigned i = 0; i < D; ++i) {
        step.push_back(maps.numeric(i, a));
        out.profile.map_ranks.push_back(rank(step.back()));
        out.profile.map_targets.push_back(std::min(alg.piece(i).dimension(), alg.piece(i + 1).dimension()));
    }
    for (unsigned i = 0; 2 * i <= D; ++i) {
        const std::size_t dim = alg.piece(i).dimension();
        Matrix power(dim, dim);
        for (std::size_t t = 0; t < dim; ++t) power(t, t) = Rational(1);
        for (unsigned k = i; k < D - i; ++k) power = step[k] * power;
        out.profile.power_ranks.push_back(rank(power));
        out.profile.power_targets.push_back(std::min(dim, alg.piece(D - i).dimension()));
    }
    out.slp = out.profile.powers_full();
    out.wlp = out.profile.maps_full();
    return out;
}

inline OracleResult rank_oracle(const Form& f, std::span<const Rational> a) {
    ApolarAlgebra alg(f);
    MultiplicationMaps maps(alg);
    return rank_oracle(alg, maps, a);
}

struct SlpResult {
    bool verdict = false;
    std::vector<HessianReport> reports;  // d = 0..floor(D/2)
    std::optional<std::vector<Rational>> witness;
    std::optional<unsigned> first_zero_degree;
};

inline std::vector<HessianReport> hessian_reports(const ApolarAlgebra& alg,
                                                  const std::vector<HessianMatrix>& hessians, const Config& cfg,
                                                  bool symbolic = false) {
    std::vector<HessianReport> out;
    for (unsigned d = 0; d < hessians.size(); ++d)
        out.push_back(hessian_report(hessians[d], alg.piece(d).basis(), cfg, symbolic && d > 0));
    return out;
}

inline std::vector<Rational> find_lefschetz_witness(const Form& f, const std::vector<HessianMatrix>& hessians,
                                                    const Config& cfg) {
    PointSampler sampler(f.arity(), cfg.seed ^ 0x5eed5eedULL);
    for (std::size_t attempt = 0; attempt < cfg.witness_attempt_budget; ++attempt) {
        auto p = sampler.next();
        if (check_element(f, hessians, p).lefschetz) return p;
    }
    throw resource_error("no strong Lefschetz witness within " + std::to_string(cfg.witness_attempt_budget) +
                         " sample points");
}

/// SLP holds iff every higher Hessian is a nonzero polynomial.
inline SlpResult has_slp(const ApolarAlgebra& alg, const std::vector<HessianMatrix>& hessians, const Config& cfg) {
    SlpResult r;
    r.reports = hessian_reports(alg, hessians, cfg);
    for (const auto& rep : r.reports)
        if (rep.is_zero() && !r.first_zero_degree) r.first_zero_degree = rep.d;
    r.verdict = !r.first_zero_degree;
    if (r.verdict) r.witness = find_lefschetz_witness(alg.form(), hessians, cfg);
    return r;
}

inline SlpResult has_slp(const Form& f, std::uint64_t seed) {
    ApolarAlgebra alg(f);
    Config cfg;
    cfg.seed = seed;
    return has_slp(alg, hessian_matrices(alg), cfg);
}

struct WlpResult {
    bool verdict = false;
    RankProfile generic;
    std::vector<GenericRank> map_certificates;    // x L : A_i -> A_{i+1}
    std::vector<GenericRank> power_certificates;  // via Hess^(i), same rank as x L^{D-2i}
};

/// Generic ranks over k(a_1..a_n) of every x L, certified in both directions.
/// The generic rank of x L^{D-2i} equals that of the Hessian matrix of degree
/// i, since the pairing A_{D-i} x A_i -> k is perfect.
inline WlpResult has_wlp(const ApolarAlgebra& alg, const MultiplicationMaps& maps,
                         const std::vector<HessianMatrix>& hessians, const Config& cfg) {
    WlpResult r;
    const unsigned D = alg.socle_degree();
    for (unsigned i = 0; i < D; ++i) {
        PolyMatrix m = maps.symbolic(i);
        auto g = generic_rank(m, cfg.seed + 101 * (i + 1), cfg.witness_attempt_budget, cfg.term_budget);
        r.generic.map_ranks.push_back(g.rank);
        r.generic.map_targets.push_back(std::min(m.rows(), m.cols()));
        r.map_certificates.push_back(std::move(g));
    }
    for (const auto& h : hessians) {
        auto g = generic_rank(h.entries, cfg.seed + 7 * (h.d + 1), cfg.witness_attempt_budget, cfg.term_budget);
        r.generic.power_ranks.push_back(g.rank);
        r.generic.power_targets.push_back(h.size());
        r.power_certificates.push_back(std::move(g));
    }
    r.verdict = r.generic.maps_full();
    return r;
}

inline WlpResult has_wlp(const Form& f, const Config& cfg = {}) {
    ApolarAlgebra alg(f);
    MultiplicationMaps maps(alg);
    return has_wlp(alg, maps, hessian_matrices(alg), cfg);
}

struct LocusEntry {
    unsigned d = 0;
    Poly poly;
};

struct Proportionality {
    unsigned first = 0, second = 0;  // degrees d
    Rational ratio;                  // poly(first) = ratio * poly(second)
};

/// Polynomials whose common non-vanishing set is the set of strong Lefschetz
/// elements: F and the nonconstant higher Hessians.
struct Locus {
    std::vector<LocusEntry> entries;
    std::vector<unsigned> zero_degrees;      // Hess^(d) == 0: no Lefschetz element at all
    std::vector<unsigned> constant_degrees;  // nonzero constant: no condition
    std::vector<Proportionality> proportional;
};

inline Locus lefschetz_locus(const Form& f, const std::vector<HessianMatrix>& hessians, const Config& cfg) {
    Locus locus;
    locus.entries.push_back({0, f.poly()});
    for (std::size_t d = 1; d < hessians.size(); ++d) {
        Poly h = hessian_det(hessians[d], cfg);
        if (h.is_zero()) locus.zero_degrees.push_back(static_cast<unsigned>(d));
        else if (h.is_constant()) locus.constant_degrees.push_back(static_cast<unsigned>(d));
        else locus.entries.push_back({static_cast<unsigned>(d), std::move(h)});
    }
    for (std::size_t i = 0; i < locus.entries.size(); ++i)
        for (std::size_t j = i + 1; j < locus.entries.size(); ++j) {
            Rational ratio;
            if (proportional(locus.entries[j].poly, locus.entries[i].poly, &ratio))
                locus.proportional.push_back({locus.entries[j].d, locus.entries[i].d, ratio});
        }
    return locus;
}

inline Locus lefschetz_locus(const Form& f, const Config& cfg = {}) {
    ApolarAlgebra alg(f);
    return lefschetz_locus(alg.form(), hessian_matrices(alg), cfg);
}

struct LefschetzReport {
    HilbertFunction hilbert;
    unsigned socle_degree = 0;
    bool slp = false;
    bool wlp = false;
    std::vector<HessianReport> hessian_reports;
    std::optional<std::vector<Rational>> witness;
    std::optional<unsigned> first_zero_degree;
    std::optional<WlpResult> wlp_detail;
    std::optional<Locus> locus;
};

/// Full analysis. WLP is implied when SLP holds; otherwise it is decided by
/// generic ranks. The locus is attached when requested and every Hessian
/// fits the symbolic cap.
inline LefschetzReport analyze(const ApolarAlgebra& alg, const Config& cfg, bool want_locus) {
    LefschetzReport rep;
    rep.hilbert = alg.hilbert();
    rep.socle_degree = alg.socle_degree();
    auto hessians = hessian_matrices(alg);
    auto slp = has_slp(alg, hessians, cfg);
    rep.slp = slp.verdict;
    rep.hessian_reports = std::move(slp.reports);
    rep.witness = std::move(slp.witness);
    rep.first_zero_degree = slp.first_zero_degree;
    if (rep.slp) {
        rep.wlp = true;
        require_invariant(check_element(alg.form(), hessians, *rep.witness).lefschetz, "SLP witness does not replay");
    } else {
        MultiplicationMaps maps(alg);
        rep.wlp_detail = has_wlp(alg, maps, hessians, cfg);
        rep.wlp = rep.wlp_detail->verdict;
    }
    if (want_locus) {
        bool fits = true;
        for (const auto& h : hessians) fits = fits && h.size() <= cfg.max_symbolic_det_size;
        if (fits) rep.locus = lefschetz_locus(alg.form(), hessians, cfg);
    }
    return rep;
}

} // namespace hesslab
