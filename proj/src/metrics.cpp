#include "rotlat/metrics.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "rotlat/constructions.hpp"
#include "rotlat/error.hpp"

namespace rotlat {

namespace {

double log2_of(const Integer& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::abs(mant)) + static_cast<double>(exp);
}

double log2_of(const Rational& q) { return log2_of(q.get_num()) - log2_of(q.get_den()); }

Integer ipow(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

// base^e for a possibly negative integer exponent
Rational rpow(long base, long e) {
    if (e >= 0) return Rational(ipow(base, static_cast<unsigned long>(e)));
    return Rational(Integer(1), ipow(base, static_cast<unsigned long>(-e)));
}

long strip(Integer& v, long base) {
    long count = 0;
    const Integer b = base;
    while (v != 0 && mpz_divisible_p(v.get_mpz_t(), b.get_mpz_t())) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
        ++count;
    }
    return count;
}

// Advances a fixed-support assignment with entries in ±{1..bound}; the first
// entry stays positive so y and -y are not both visited.
bool next_values(std::vector<long>& vals, int bound) {
    for (std::size_t i = vals.size(); i-- > 0;) {
        long& v = vals[i];
        if (v == bound) {
            v = (i == 0) ? 1 : -bound;
            continue;
        }
        v = (v == -1) ? 1 : v + 1;
        return true;
    }
    return false;
}

bool next_support(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

int default_coeff_bound(int n) { return n <= 16 ? 3 : 2; }

AlgebraicNormMinimum min_algebraic_norm(const ZSubmodule& module, int coeff_bound,
                                        std::size_t max_candidates) {
    if (coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be >= 1");
    const int n = module.rank();
    const IntMatrix& basis = module.basis();
    AlgebraicNormMinimum best;
    bool have = false;
    bool exhausted = true;

    for (int support = 1; support <= n && exhausted; ++support) {
        std::vector<int> idx(static_cast<std::size_t>(support));
        for (int i = 0; i < support; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<long> vals(static_cast<std::size_t>(support), -coeff_bound);
            vals[0] = 1;
            do {
                if (best.evaluated >= max_candidates) {
                    exhausted = false;
                    break;
                }
                IntVector coeffs(static_cast<std::size_t>(n));
                for (int s = 0; s < support; ++s)
                    coeffs[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])] =
                        vals[static_cast<std::size_t>(s)];
                FieldElement y(module.params(), row_times(coeffs, basis));
                ++best.evaluated;
                const Integer value = abs(norm(y));
                if (!have || value < best.value) {
                    have = true;
                    best.value = value;
                    best.coefficients = std::move(coeffs);
                    best.witness = std::move(y);
                    if (best.value == 1) {
                        best.certified = true;
                        return best;
                    }
                }
            } while (next_values(vals, coeff_bound));
            if (!exhausted) break;
        } while (next_support(idx, n));
    }
    best.certified = exhausted;
    return best;
}

ShortVectorScan scan_short_vectors(const IntMatrix& gram, int coeff_bound) {
    if (!gram.square() || gram.rows() == 0) {
        throw Error(ErrorCode::InvalidArgument, "gram must be a non-empty square matrix");
    }
    if (coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be >= 1");
    const std::size_t n = gram.rows();

    std::vector<long> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!gram(i, j).fits_slong_p()) {
                throw Error(ErrorCode::InvalidArgument, "gram entries too large for enumeration");
            }
            g[i * n + j] = gram(i, j).get_si();
        }

    // G = L·D·Lᵀ with unit lower-triangular L
    std::vector<double> mu(n * n, 0.0);
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = static_cast<double>(g[i * n + j]);
            for (std::size_t k = 0; k < j; ++k) s -= mu[i * n + k] * mu[j * n + k] * d[k];
            mu[i * n + j] = s / d[j];
        }
        double s = static_cast<double>(g[i * n + i]);
        for (std::size_t k = 0; k < i; ++k) s -= mu[i * n + k] * mu[i * n + k] * d[k];
        if (!(s > 0.0)) throw Error(ErrorCode::InvalidArgument, "gram is not positive definite");
        d[i] = s;
    }

    ShortVectorScan out;
    long radius = LONG_MAX;
    for (std::size_t i = 0; i < n; ++i) radius = std::min(radius, g[i * n + i]);
    out.radius = radius;
    const double bound_f = static_cast<double>(radius) * (1.0 + 1e-9) + 1e-9;

    std::vector<long> x(n, 0);
    std::vector<double> partial(n + 1, 0.0);  // partial[i] = Σ_{k>=i} D_k(x_k - c_k)²
    long best = LONG_MAX;

    auto exact_norm = [&]() {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            long row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0) row += g[i * n + j] * x[j];
            s += x[i] * row;
        }
        return s;
    };

    // depth-first over coordinates n-1 .. 0
    auto recurse = [&](auto&& self, std::size_t level, bool higher_zero) -> void {
        ++out.nodes;
        double center = 0.0;
        for (std::size_t j = level + 1; j < n; ++j)
            if (x[j] != 0) center -= mu[j * n + level] * static_cast<double>(x[j]);
        const double rem = bound_f - partial[level + 1];
        if (rem < 0.0) return;
        const double half = std::sqrt(rem / d[level]);
        long lo = static_cast<long>(std::ceil(center - half - 1e-9));
        long hi = static_cast<long>(std::floor(center + half + 1e-9));
        lo = std::max<long>(lo, higher_zero ? 0 : -coeff_bound);
        hi = std::min<long>(hi, coeff_bound);
        for (long v = lo; v <= hi; ++v) {
            const double diff = static_cast<double>(v) - center;
            const double here = partial[level + 1] + d[level] * diff * diff;
            if (here > bound_f) continue;
            x[level] = v;
            partial[level] = here;
            if (level == 0) {
                if (!(higher_zero && v == 0)) {
                    const long exact = exact_norm();
                    if (exact <= radius) {
                        best = std::min(best, exact);
                        out.vectors.push_back(x);
                    }
                }
            } else {
                self(self, level - 1, higher_zero && v == 0);
            }
        }
        x[level] = 0;
    };
    recurse(recurse, n - 1, true);

    out.min_norm_sq = best;
    return out;
}

Integer min_norm_sq(const RotatedLattice& lattice, int coeff_bound) {
    return scan_short_vectors(lattice.gram(), coeff_bound).min_norm_sq;
}

DiversityCertificate check_diversity(const RotatedLattice& lattice, const ShortVectorScan& scan) {
    const RealMatrix& m = lattice.generator();
    DiversityCertificate cert;
    cert.min_abs_coordinate = INFINITY;
    std::vector<double> coord(m.cols);
    for (const auto& v : scan.vectors) {
        std::fill(coord.begin(), coord.end(), 0.0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (v[i] == 0) continue;
            const double c = static_cast<double>(v[i]);
            for (std::size_t k = 0; k < m.cols; ++k) coord[k] += c * m(i, k);
        }
        for (double c : coord) cert.min_abs_coordinate = std::min(cert.min_abs_coordinate, std::abs(c));
        ++cert.vectors_checked;
    }
    cert.ok = cert.vectors_checked > 0 && cert.min_abs_coordinate > kDiversityThreshold;
    return cert;
}

double min_abs_coordinate_in_box(const RealMatrix& generator, int bound) {
    const std::size_t n = generator.rows;
    const std::size_t half = n / 2;
    const long width = 2L * bound + 1;

    auto sums = [&](std::size_t from, std::size_t to, std::size_t col) {
        std::vector<double> s{0.0};
        for (std::size_t i = from; i < to; ++i) {
            std::vector<double> next;
            next.reserve(s.size() * static_cast<std::size_t>(width));
            for (double base : s)
                for (long a = -bound; a <= bound; ++a)
                    next.push_back(base + static_cast<double>(a) * generator(i, col));
            s.swap(next);
        }
        return s;
    };

    // index size/2 of each list is the all-zero half assignment
    double best = INFINITY;
    for (std::size_t col = 0; col < generator.cols; ++col) {
        const std::vector<double> left = sums(0, half, col);
        const std::vector<double> right = sums(half, n, col);
        const std::size_t left_zero = left.size() / 2;
        const std::size_t right_zero = right.size() / 2;
        for (std::size_t j = 0; j < right.size(); ++j)
            if (j != right_zero) best = std::min(best, std::abs(right[j]));
        std::vector<double> sorted = right;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t li = 0; li < left.size(); ++li) {
            if (li == left_zero) continue;
            auto it = std::lower_bound(sorted.begin(), sorted.end(), -left[li]);
            if (it != sorted.end()) best = std::min(best, std::abs(left[li] + *it));
            if (it != sorted.begin()) best = std::min(best, std::abs(left[li] + *std::prev(it)));
        }
    }
    return best;
}

double PowerForm::log2() const {
    return two_exp.get_d() + base_exp.get_d() * std::log2(static_cast<double>(base));
}

std::string PowerForm::to_string() const {
    if (!exact) return "";
    std::string out = "2^(" + two_exp.get_str() + ")";
    if (base != 2 && base_exp != 0) out += " * " + std::to_string(base) + "^(" + base_exp.get_str() + ")";
    return out;
}

PowerForm sqrt_power_form(const Rational& q, long base) {
    if (q <= 0) throw Error(ErrorCode::InvalidArgument, "power form needs a positive value");
    PowerForm pf;
    pf.base = base;
    Integer num = q.get_num();
    Integer den = q.get_den();
    const long two = strip(num, 2) - strip(den, 2);
    long other = 0;
    if (base != 2) other = strip(num, base) - strip(den, base);
    pf.two_exp = Rational(two, 2);
    pf.base_exp = Rational(other, 2);
    pf.two_exp.canonicalize();
    pf.base_exp.canonicalize();
    pf.exact = (num == 1 && den == 1);
    return pf;
}

Rational principal_product_distance_sq(const RotatedLattice& lattice) {
    Rational q(determinant(lattice.gram()), discriminant(lattice.params()));
    q.canonicalize();
    return q;
}

ProductDistance min_product_distance(const RotatedLattice& lattice, int coeff_bound) {
    const ZSubmodule& module = lattice.module();
    const Integer index = index_in_ring(module);
    Integer min_norm;
    bool principal = false;

    if (index == 1) {
        // I = O_K = 1·O_K
        min_norm = 1;
        principal = true;
    } else if (is_ideal(module)) {
        // g ∈ I with |N(g)| = N(I) forces I = g·O_K
        for (int i = 0; i < module.rank() && !principal; ++i) {
            if (abs(norm(module.generator(i))) == index) {
                min_norm = index;
                principal = true;
            }
        }
    }
    if (!principal) {
        const auto found = min_algebraic_norm(module, std::max(1, coeff_bound));
        if (!found.certified) {
            throw Error(ErrorCode::UncertifiedMinimum,
                        "no unit witness within the coefficient box and the module is not principal");
        }
        min_norm = found.value;
    }

    const Integer alpha_norm = norm(lattice.form().alpha());
    Rational c_pow(ipow(lattice.form().scale(), static_cast<unsigned long>(lattice.dim())));
    ProductDistance out;
    out.squared = Rational(alpha_norm * min_norm * min_norm) / c_pow;
    out.squared.canonicalize();
    out.min_algebraic_norm = min_norm;
    out.principal = principal;
    if (principal && out.squared != principal_product_distance_sq(lattice)) {
        throw Error(ErrorCode::InvariantViolation,
                    "principal-ideal product distance disagrees with det(G)/|d_K|");
    }
    out.log2_value = 0.5 * log2_of(out.squared);
    out.value = std::exp2(out.log2_value);
    return out;
}

Rational rel_min_product_distance_sq(const ProductDistance& d, const Integer& min_norm_sq, int n) {
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), min_norm_sq.get_mpz_t(), static_cast<unsigned long>(n));
    Rational q = d.squared / Rational(denom);
    q.canonicalize();
    return q;
}

double center_density(const Integer& det, const Integer& min_norm_sq, int n) {
    const double log2_delta =
        static_cast<double>(n) * (0.5 * log2_of(min_norm_sq) - 1.0) - 0.5 * log2_of(det);
    return std::exp2(log2_delta);
}

Rational closed_form_rel_distance_sq(Family family, int param) {
    check_family_param(family, param);
    if (family == Family::DTwoPowerA || family == Family::DTwoPowerB) {
        const long n = 1L << (param - 2);
        return rpow(2, 3 - static_cast<long>(param) * n);
    }
    if (family == Family::DPrime) {
        Rational q = rpow(2, (1 - param) / 2) * rpow(param, (3 - param) / 2);
        q.canonicalize();
        return q;
    }
    throw Error(ErrorCode::InvalidArgument, "closed form is defined for the D_n families");
}

MetricsReport compute_metrics(const RotatedLattice& lattice, int coeff_bound) {
    MetricsReport r;
    r.family = lattice.family();
    r.param = lattice.param();
    r.n = lattice.dim();
    r.coeff_bound = coeff_bound;
    r.det = determinant(lattice.gram());
    const ShortVectorScan scan = scan_short_vectors(lattice.gram(), coeff_bound);
    r.min_norm_sq = scan.min_norm_sq;
    r.alpha_norm = norm(lattice.form().alpha());

    const ProductDistance pd = min_product_distance(lattice, coeff_bound);
    r.d_p_min_sq = pd.squared;
    r.d_p_min = pd.value;
    r.min_algebraic_norm = pd.min_algebraic_norm;
    r.d_p_rel_sq = rel_min_product_distance_sq(pd, r.min_norm_sq, r.n);
    const long base = lattice.params().kind == FieldKind::Prime ? lattice.params().m : 2;
    r.d_p_rel_exact = sqrt_power_form(r.d_p_rel_sq, base);
    r.d_p_rel_log2 = 0.5 * log2_of(r.d_p_rel_sq);
    r.d_p_rel = std::exp2(r.d_p_rel_log2);
    r.d_p_rel_nth_root = std::exp2(r.d_p_rel_log2 / r.n);
    r.center_density = center_density(r.det, r.min_norm_sq, r.n);

    const DiversityCertificate div = check_diversity(lattice, scan);
    r.diversity_ok = div.ok;
    r.diversity_min_coordinate = div.min_abs_coordinate;
    return r;
}

std::vector<RatioRow> asymptotic_ratio_table(std::span<const MetricsReport> z_reports,
                                             std::span<const MetricsReport> d_reports) {
    if (z_reports.size() != d_reports.size()) {
        throw Error(ErrorCode::InvalidArgument, "ratio table needs paired reports");
    }
    std::vector<RatioRow> rows;
    rows.reserve(z_reports.size());
    for (std::size_t i = 0; i < z_reports.size(); ++i) {
        const auto& z = z_reports[i];
        const auto& d = d_reports[i];
        if (z.n != d.n) throw Error(ErrorCode::InvalidArgument, "paired reports differ in dimension");
        RatioRow row;
        row.param = z.param;
        row.n = z.n;
        row.d_p_ratio = std::exp2((z.d_p_rel_log2 - d.d_p_rel_log2) / z.n);
        row.delta_ratio = z.center_density / d.center_density;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rotlat
