#ifndef ROTLAT_CONSTRUCTIONS_HPP
#define ROTLAT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "rotlat/embedding.hpp"

namespace rotlat {

// Five families, keyed by the integer parameter r (m = 2^r) or p (m = p):
//   DTwoPowerA  α = 4 + e_1 - 2e_2 - e_3, I = O_K,            c = 2^{r-1}
//   DTwoPowerB  α = 2 + e_1, I = <-e_1, e_2, ..., ±e_{n-1}, -2 + 2e_1 - ... + e_{n-1}>, c = 2^{r-1}
//   DPrime      α = 2 - e_1, I = <e_1, ..., e_{n-1}, -e_1 - 2e_2 - ... - 2e_n>,          c = p
//   ZTwoPower   α = 2 + e_1, I = O_K (orthonormal basis),      c = 2^{r-1}
//   ZPrime      α = 2 - e_1, I = O_K (orthonormal basis),      c = p

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
bool is_dn_family(Family family);
bool is_two_power_family(Family family);

/// Supported parameter range: r in [4, 9], p prime in [7, 31].
void check_family_param(Family family, int param);

/// α = 4 + e_1 - 2e_2 - e_3 in Q(ζ_{2^r} + ζ_{2^r}^-1).
FieldElement first_construction_alpha(const CycloParams& params);
FieldElement family_alpha(Family family, const CycloParams& params);
ZSubmodule family_module(Family family, const CycloParams& params);
long family_scale(Family family, const CycloParams& params);

RotatedLattice construct(Family family, int param);

/// Standard D_n basis β = {(-1,-1,0,...), (1,-1,0,...), (0,1,-1,...), ..., (0,...,1,-1)}.
struct DnReference {
    int n = 0;
    IntMatrix basis;
    IntMatrix gram;
};

DnReference dn_reference(int n);

/// The explicit integer transform used by each family's proof:
///  - DTwoPowerA: T with T·(B·Bᵀ)·Tᵀ = G.
///  - DTwoPowerB, DPrime: T orthonormalising the matching Z lattice, so that
///    the rows of B·T span the module (composes_with_dn_basis = true).
///  - ZTwoPower, ZPrime: T orthonormalising O_K, i.e. T·G_e·Tᵀ = I.
struct ProofTransform {
    IntMatrix t;
    bool composes_with_dn_basis = false;
};

ProofTransform proof_transform(Family family, int param);

/// Integer W with W·(B·Bᵀ)·Wᵀ = gram, for the D families.
IntMatrix congruence_witness(const RotatedLattice& lattice);

}  // namespace rotlat

#endif
