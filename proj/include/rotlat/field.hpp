#ifndef ROTLAT_FIELD_HPP
#define ROTLAT_FIELD_HPP

// Exact arithmetic in the maximal real subfield K = Q(ζ_m + ζ_m^-1) for
// m = 2^r (r >= 4) or m = p prime (p >= 7).
//
// Elements of O_K = Z[ζ + ζ^-1] are stored as integer coordinates over the
// ring basis built from f_k = ζ^k + ζ^-k:
//   m = 2^r : {e_0 = 1, e_1, ..., e_{n-1}},   n = 2^{r-2}
//   m = p   : {e_1, ..., e_n},                n = (p-1)/2
// Coordinate slot t holds e_t for m = 2^r and e_{t+1} for m = p.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rotlat/intmat.hpp"

namespace rotlat {

enum class FieldKind { TwoPower, Prime };

struct CycloParams {
    FieldKind kind = FieldKind::TwoPower;
    int m = 0;  // conductor
    int n = 0;  // [K:Q] = φ(m)/2
    int r = 0;  // log2(m) for TwoPower, 0 otherwise

    friend bool operator==(const CycloParams&, const CycloParams&) = default;
};

CycloParams make_params(int m);
bool is_prime(long v);

class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(const CycloParams& params);
    FieldElement(const CycloParams& params, IntVector coeffs);
    FieldElement(const CycloParams& params, std::initializer_list<long> coeffs);

    static FieldElement one(const CycloParams& params);
    static FieldElement integer(const CycloParams& params, long value);
    /// Ring basis element in coordinate slot t.
    static FieldElement basis(const CycloParams& params, int slot);
    /// e_j = ζ^j + ζ^-j by its index; j = 0 means 1 for m = 2^r and is invalid for m = p.
    static FieldElement e(const CycloParams& params, int j);
    /// ζ^k + ζ^-k for any integer k, folded onto the ring basis (k = 0 gives 2).
    static FieldElement cyclic(const CycloParams& params, long k);

    const CycloParams& params() const noexcept { return params_; }
    const IntVector& coeffs() const noexcept { return coeffs_; }
    std::span<const Integer> span() const noexcept { return coeffs_; }
    bool is_zero() const;

    FieldElement& operator+=(const FieldElement& other);
    FieldElement& operator-=(const FieldElement& other);
    FieldElement& operator*=(const Integer& scalar);
    FieldElement operator-() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const Integer& s) { return a *= s; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form such as "4 + e_1 - 2e_2 - e_3".
    std::string to_string() const;

  private:
    CycloParams params_;
    IntVector coeffs_;
};

/// Index of slot t as an e-index (t for 2^r, t+1 for p).
int slot_to_index(const CycloParams& params, int slot);

/// Adds scale·(ζ^k + ζ^-k) into coefficient vector `acc`, applying the folding rules.
void accumulate_cyclic(const CycloParams& params, long k, const Integer& scale,
                       std::span<Integer> acc);

FieldElement mul(const FieldElement& a, const FieldElement& b);

/// Closed-form Tr(ζ^k + ζ^-k).
Integer trace_of_cyclic(const CycloParams& params, long k);
Integer trace(const FieldElement& x);
/// Traces of the ring basis, slot by slot.
IntVector basis_traces(const CycloParams& params);

/// Matrix of multiplication by x on the ring basis (row t = x·b_t).
IntMatrix multiplication_matrix(const FieldElement& x);
Integer norm(const FieldElement& x);

Integer discriminant(const CycloParams& params);

/// Conjugate indices k_1 < k_2 < ... < k_n: odd k < 2^{r-1}, or k = 1..n.
std::vector<int> conjugate_indices(const CycloParams& params);

/// Table of σ_i(b_t): entry [t][i].
std::vector<std::vector<double>> basis_conjugates(const CycloParams& params);

std::vector<double> conjugates(const FieldElement& x);

}  // namespace rotlat

#endif
