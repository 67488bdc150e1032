#ifndef ROTLAT_METRICS_HPP
#define ROTLAT_METRICS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rotlat/embedding.hpp"

namespace rotlat {

using Rational = mpq_class;

/// Default enumeration box: 3 for n <= 16, 2 above.
int default_coeff_bound(int n);

struct AlgebraicNormMinimum {
    Integer value;           // min |N(y)| seen
    IntVector coefficients;  // witness y in module-basis coordinates
    FieldElement witness;
    bool certified = false;  // |N| = 1 found, or the whole box was searched
    std::size_t evaluated = 0;
};

/// Minimum of |N(y)| over nonzero y = Σ a_i w_i with |a_i| <= coeff_bound.
/// Candidates are visited by increasing support size and the search stops at
/// the first unit, which is a global certificate.
AlgebraicNormMinimum min_algebraic_norm(const ZSubmodule& module, int coeff_bound,
                                        std::size_t max_candidates = 100000);

struct ShortVectorScan {
    Integer min_norm_sq;
    Integer radius;  // every box vector with vᵀGv <= radius is listed
    std::vector<std::vector<long>> vectors;
    std::size_t nodes = 0;
};

/// Box-constrained Fincke-Pohst enumeration of the nonzero coefficient
/// vectors with |v_i| <= coeff_bound and vᵀGv <= min_i G_ii, one per ±v pair.
/// Norms are confirmed in exact arithmetic; floating point only prunes.
ShortVectorScan scan_short_vectors(const IntMatrix& gram, int coeff_bound);

Integer min_norm_sq(const RotatedLattice& lattice, int coeff_bound);

struct DiversityCertificate {
    bool ok = false;
    double min_abs_coordinate = 0.0;
    std::size_t vectors_checked = 0;
};

inline constexpr double kDiversityThreshold = 1e-9;

/// Every enumerated vector must have all |x_i| > kDiversityThreshold.
DiversityCertificate check_diversity(const RotatedLattice& lattice, const ShortVectorScan& scan);

/// min |x_i| over every nonzero x = a·M with a in [-bound, bound]^n, by
/// meet-in-the-middle per coordinate. Cost ~ (2·bound+1)^{n/2}.
double min_abs_coordinate_in_box(const RealMatrix& generator, int bound);

/// value = 2^{two_exp} · base^{base_exp}; `exact` is false when other prime
/// factors remain.
struct PowerForm {
    Rational two_exp;
    long base = 2;
    Rational base_exp;
    bool exact = false;

    double log2() const;
    /// "2^(e)" or "2^(e) * p^(f)"; empty when not exact.
    std::string to_string() const;
};

/// Decomposes √q for a positive rational q.
PowerForm sqrt_power_form(const Rational& q, long base);

struct ProductDistance {
    Rational squared;  // d², exact
    Integer min_algebraic_norm;
    double value = 0.0;
    double log2_value = 0.0;
    bool principal = false;
};

/// d_{p,min} of (1/√c)σ_α(I): d² = N(α)·min|N(y)|² / cⁿ.
ProductDistance min_product_distance(const RotatedLattice& lattice, int coeff_bound);

/// d² = det(G)/|d_K|, valid when I is a principal ideal.
Rational principal_product_distance_sq(const RotatedLattice& lattice);

/// d_{p,rel}² = d_{p,min}² / (min norm²)ⁿ.
Rational rel_min_product_distance_sq(const ProductDistance& d, const Integer& min_norm_sq, int n);

/// δ = (min norm / 2)ⁿ / √det, evaluated in log space.
double center_density(const Integer& det, const Integer& min_norm_sq, int n);

/// Closed-form d_{p,rel}² for a D family: 2^{3-rn} or 2^{(1-p)/2}·p^{(3-p)/2}.
Rational closed_form_rel_distance_sq(Family family, int param);

struct MetricsReport {
    Family family = Family::Custom;
    int param = 0;
    int n = 0;
    int coeff_bound = 0;
    Integer det;
    Integer min_norm_sq;
    Integer alpha_norm;
    Integer min_algebraic_norm;
    Rational d_p_min_sq;
    Rational d_p_rel_sq;
    PowerForm d_p_rel_exact;
    double d_p_min = 0.0;
    double d_p_rel = 0.0;
    double d_p_rel_log2 = 0.0;
    double d_p_rel_nth_root = 0.0;
    double center_density = 0.0;
    bool diversity_ok = false;
    double diversity_min_coordinate = 0.0;
};

MetricsReport compute_metrics(const RotatedLattice& lattice, int coeff_bound);

struct RatioRow {
    int param = 0;
    int n = 0;
    double d_p_ratio = 0.0;    // nth-root d_rel(Zⁿ) / nth-root d_rel(D_n)
    double delta_ratio = 0.0;  // δ(Zⁿ) / δ(D_n)
};

/// One row per (Z, D) pair of reports.
std::vector<RatioRow> asymptotic_ratio_table(std::span<const MetricsReport> z_reports,
                                             std::span<const MetricsReport> d_reports);

}  // namespace rotlat

#endif
