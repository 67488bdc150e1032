#include "rotlat/field.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rotlat/error.hpp"

namespace rotlat {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnsupportedConductor: return "UnsupportedConductor";
        case ErrorCode::BadParam: return "BadParam";
        case ErrorCode::ParamsMismatch: return "ParamsMismatch";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::SingularBasis: return "SingularBasis";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::NotTotallyPositive: return "NotTotallyPositive";
        case ErrorCode::NonIntegralGram: return "NonIntegralGram";
        case ErrorCode::UncertifiedMinimum: return "UncertifiedMinimum";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

CycloParams make_params(int m) {
    CycloParams p;
    p.m = m;
    if (m >= 16 && (m & (m - 1)) == 0) {
        p.kind = FieldKind::TwoPower;
        p.r = std::countr_zero(static_cast<unsigned>(m));
        p.n = m / 4;
        return p;
    }
    if (m >= 7 && is_prime(m)) {
        p.kind = FieldKind::Prime;
        p.n = (m - 1) / 2;
        return p;
    }
    throw Error(ErrorCode::UnsupportedConductor,
                "unsupported conductor " + std::to_string(m) +
                    " (need 2^r with r >= 4 or a prime >= 7)");
}

namespace {

void require_same(const CycloParams& a, const CycloParams& b) {
    if (!(a == b)) throw Error(ErrorCode::ParamsMismatch, "elements belong to different fields");
}

}  // namespace

FieldElement::FieldElement(const CycloParams& params)
    : params_(params), coeffs_(static_cast<std::size_t>(params.n)) {}

FieldElement::FieldElement(const CycloParams& params, IntVector coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(params.n)) {
        throw Error(ErrorCode::InvalidArgument, "coefficient vector length must equal the degree");
    }
}

FieldElement::FieldElement(const CycloParams& params, std::initializer_list<long> coeffs)
    : FieldElement(params) {
    if (coeffs.size() > coeffs_.size()) {
        throw Error(ErrorCode::InvalidArgument, "too many coefficients");
    }
    std::size_t i = 0;
    for (long c : coeffs) coeffs_[i++] = c;
}

FieldElement FieldElement::one(const CycloParams& params) { return integer(params, 1); }

FieldElement FieldElement::integer(const CycloParams& params, long value) {
    FieldElement x(params);
    if (params.kind == FieldKind::TwoPower) {
        x.coeffs_[0] = value;
    } else {
        // 1 = -(e_1 + ... + e_n)
        for (auto& c : x.coeffs_) c = -value;
    }
    return x;
}

FieldElement FieldElement::basis(const CycloParams& params, int slot) {
    if (slot < 0 || slot >= params.n) throw Error(ErrorCode::InvalidArgument, "basis slot out of range");
    FieldElement x(params);
    x.coeffs_[static_cast<std::size_t>(slot)] = 1;
    return x;
}

FieldElement FieldElement::e(const CycloParams& params, int j) {
    if (params.kind == FieldKind::TwoPower) {
        if (j == 0) return one(params);
        if (j < 0 || j >= params.n) throw Error(ErrorCode::InvalidArgument, "e-index out of range");
        return basis(params, j);
    }
    if (j < 1 || j > params.n) throw Error(ErrorCode::InvalidArgument, "e-index out of range");
    return basis(params, j - 1);
}

FieldElement FieldElement::cyclic(const CycloParams& params, long k) {
    FieldElement x(params);
    accumulate_cyclic(params, k, Integer(1), x.coeffs_);
    return x;
}

bool FieldElement::is_zero() const { return rotlat::is_zero(coeffs_); }

FieldElement& FieldElement::operator+=(const FieldElement& other) {
    require_same(params_, other.params_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
    require_same(params_, other.params_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const Integer& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < params_.n; ++t) {
        const Integer& c = coeffs_[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        const int idx = slot_to_index(params_, t);
        const bool constant = params_.kind == FieldKind::TwoPower && idx == 0;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (constant) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << "e_" << idx;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int slot_to_index(const CycloParams& params, int slot) {
    return params.kind == FieldKind::TwoPower ? slot : slot + 1;
}

void accumulate_cyclic(const CycloParams& params, long k, const Integer& scale,
                       std::span<Integer> acc) {
    const long m = params.m;
    k %= m;
    if (k < 0) k += m;
    const long half = m / 2;
    if (k > half) k = m - k;  // e_{m-k} = e_k

    if (params.kind == FieldKind::TwoPower) {
        const long quarter = params.n;  // 2^{r-2}
        if (k == 0) {
            acc[0] += 2 * scale;
        } else if (k == quarter) {
            // ζ^{m/4} + ζ^{-m/4} = i - i = 0
        } else if (k == half) {
            acc[0] -= 2 * scale;
        } else if (k > quarter) {
            acc[static_cast<std::size_t>(half - k)] -= scale;  // e_k = -e_{2^{r-1}-k}
        } else {
            acc[static_cast<std::size_t>(k)] += scale;
        }
        return;
    }

    if (k == 0) {
        // 2 = -2(e_1 + ... + e_n)
        for (auto& c : acc) c -= 2 * scale;
    } else {
        acc[static_cast<std::size_t>(k - 1)] += scale;
    }
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same(a.params(), b.params());
    const CycloParams& p = a.params();
    std::vector<int> nz_a;
    std::vector<int> nz_b;
    for (int t = 0; t < p.n; ++t) {
        if (a.coeffs()[static_cast<std::size_t>(t)] != 0) nz_a.push_back(t);
        if (b.coeffs()[static_cast<std::size_t>(t)] != 0) nz_b.push_back(t);
    }
    IntVector acc(static_cast<std::size_t>(p.n));
    Integer c;
    for (int i : nz_a) {
        const Integer& ai = a.coeffs()[static_cast<std::size_t>(i)];
        const long ii = slot_to_index(p, i);
        for (int j : nz_b) {
            c = ai * b.coeffs()[static_cast<std::size_t>(j)];
            const long jj = slot_to_index(p, j);
            if (p.kind == FieldKind::TwoPower && ii == 0) {
                acc[static_cast<std::size_t>(j)] += c;
            } else if (p.kind == FieldKind::TwoPower && jj == 0) {
                acc[static_cast<std::size_t>(i)] += c;
            } else {
                // e_i e_j = e_{i+j} + e_{|i-j|}
                accumulate_cyclic(p, ii + jj, c, acc);
                accumulate_cyclic(p, std::labs(ii - jj), c, acc);
            }
        }
    }
    return FieldElement(p, std::move(acc));
}

Integer trace_of_cyclic(const CycloParams& params, long k) {
    const long m = params.m;
    long km = k % m;
    if (km < 0) km += m;
    if (params.kind == FieldKind::TwoPower) {
        const long g = std::gcd(km, m);  // gcd(0, m) = m
        const long half = m / 2;
        if (g < half) return 0;
        if (g == half) return -half;
        return half;
    }
    // Tr_{L|Q}(ζ^k) = -1 for p ∤ k, so Tr_{K|Q}(ζ^k + ζ^-k) = -1; f_0 = 2 has trace 2n.
    if (km == 0) return 2 * params.n;
    return -1;
}

IntVector basis_traces(const CycloParams& params) {
    IntVector t(static_cast<std::size_t>(params.n));
    for (int s = 0; s < params.n; ++s) {
        const int idx = slot_to_index(params, s);
        if (params.kind == FieldKind::TwoPower && idx == 0) {
            t[0] = trace_of_cyclic(params, 0) / 2;  // Tr(1) = n
        } else {
            t[static_cast<std::size_t>(s)] = trace_of_cyclic(params, idx);
        }
    }
    return t;
}

Integer trace(const FieldElement& x) {
    const IntVector t = basis_traces(x.params());
    Integer sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) sum += x.coeffs()[i] * t[i];
    return sum;
}

IntMatrix multiplication_matrix(const FieldElement& x) {
    const CycloParams& p = x.params();
    IntMatrix m(static_cast<std::size_t>(p.n), static_cast<std::size_t>(p.n));
    for (int t = 0; t < p.n; ++t) {
        const FieldElement prod = mul(x, FieldElement::basis(p, t));
        for (int j = 0; j < p.n; ++j)
            m(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) =
                prod.coeffs()[static_cast<std::size_t>(j)];
    }
    return m;
}

Integer norm(const FieldElement& x) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "norm of the zero element");
    return determinant(multiplication_matrix(x));
}

Integer discriminant(const CycloParams& params) {
    Integer d;
    if (params.kind == FieldKind::TwoPower) {
        const unsigned long e = static_cast<unsigned long>((params.r - 1) * params.n - 1);
        mpz_ui_pow_ui(d.get_mpz_t(), 2, e);
    } else {
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(params.m),
                      static_cast<unsigned long>((params.m - 3) / 2));
    }
    return d;
}

std::vector<int> conjugate_indices(const CycloParams& params) {
    std::vector<int> ks;
    ks.reserve(static_cast<std::size_t>(params.n));
    if (params.kind == FieldKind::TwoPower) {
        for (int k = 1; k < params.m / 2; k += 2) ks.push_back(k);
    } else {
        for (int k = 1; k <= params.n; ++k) ks.push_back(k);
    }
    return ks;
}

std::vector<std::vector<double>> basis_conjugates(const CycloParams& params) {
    const auto ks = conjugate_indices(params);
    const auto n = static_cast<std::size_t>(params.n);
    std::vector<std::vector<double>> table(n, std::vector<double>(n));
    for (std::size_t t = 0; t < n; ++t) {
        const long idx = slot_to_index(params, static_cast<int>(t));
        for (std::size_t i = 0; i < n; ++i) {
            if (params.kind == FieldKind::TwoPower && idx == 0) {
                table[t][i] = 1.0;
                continue;
            }
            // reduce k·idx mod m before scaling so the cosine argument stays small
            const long phase = (static_cast<long>(ks[i]) * idx) % params.m;
            table[t][i] = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) /
                                         static_cast<double>(params.m));
        }
    }
    return table;
}

std::vector<double> conjugates(const FieldElement& x) {
    const auto table = basis_conjugates(x.params());
    const auto n = static_cast<std::size_t>(x.params().n);
    std::vector<double> out(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        const double c = x.coeffs()[t].get_d();
        if (c == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) out[i] += c * table[t][i];
    }
    return out;
}

}  // namespace rotlat
