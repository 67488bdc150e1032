#include "rotlat/constructions.hpp"

#include "rotlat/error.hpp"

namespace rotlat {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::DTwoPowerA, "d-pow2-a"}, {Family::DTwoPowerB, "d-pow2-b"},
    {Family::DPrime, "d-prime"},      {Family::ZTwoPower, "z-pow2"},
    {Family::ZPrime, "z-prime"},
};

CycloParams family_params(Family family, int param) {
    check_family_param(family, param);
    return make_params(is_two_power_family(family) ? (1 << param) : param);
}

// 2-power baseline T: row i (0-based) = (1, -1, 1, -1, ...) truncated to n - i entries.
IntMatrix alternating_transform(int n) {
    IntMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - i; ++j)
            t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (j % 2 == 0) ? 1 : -1;
    return t;
}

IntMatrix upper_ones_transform(int n) {
    IntMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
    return t;
}

// T with T·(B·Bᵀ)·Tᵀ equal to the Gram matrix of the first construction.
// Rows (1-based k): k=1: -1 at column n; k=2: +1 at column n-1;
// 3 <= k <= n-1: s·(-1 at column n+1-k, +1 at column n+3-k), s = +1 for odd k, -1 for even k;
// k=n: (1, -1, -1, 0, ..., 0).
IntMatrix first_construction_transform(int n) {
    IntMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    auto at = [&](int row, int col) -> Integer& {
        return t(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
    };
    at(1, n) = -1;
    at(2, n - 1) = 1;
    for (int k = 3; k <= n - 1; ++k) {
        const int s = (k % 2 == 1) ? 1 : -1;
        at(k, n + 1 - k) = -s;
        at(k, n + 3 - k) = s;
    }
    at(n, 1) = 1;
    at(n, 2) = -1;
    at(n, 3) = -1;
    return t;
}

}  // namespace

std::string_view family_name(Family family) {
    for (const auto& f : kFamilies)
        if (f.family == family) return f.name;
    return "custom";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& f : kFamilies)
        if (f.name == name) return f.family;
    return std::nullopt;
}

bool is_dn_family(Family family) {
    return family == Family::DTwoPowerA || family == Family::DTwoPowerB || family == Family::DPrime;
}

bool is_two_power_family(Family family) {
    return family == Family::DTwoPowerA || family == Family::DTwoPowerB ||
           family == Family::ZTwoPower;
}

void check_family_param(Family family, int param) {
    if (family == Family::Custom) throw Error(ErrorCode::BadParam, "no construction for custom family");
    if (is_two_power_family(family)) {
        if (param < 4 || param > 9) {
            throw Error(ErrorCode::BadParam,
                        "r = " + std::to_string(param) + " outside supported range 4..9");
        }
        return;
    }
    if (param < 7 || param > 31 || !is_prime(param)) {
        throw Error(ErrorCode::BadParam,
                    "p = " + std::to_string(param) + " is not a prime in 7..31");
    }
}

FieldElement first_construction_alpha(const CycloParams& params) {
    if (params.kind != FieldKind::TwoPower) {
        throw Error(ErrorCode::InvalidArgument, "first construction needs m = 2^r");
    }
    return FieldElement(params, {4, 1, -2, -1});
}

FieldElement family_alpha(Family family, const CycloParams& params) {
    switch (family) {
        case Family::DTwoPowerA:
            return first_construction_alpha(params);
        case Family::DTwoPowerB:
        case Family::ZTwoPower:
            return FieldElement::integer(params, 2) + FieldElement::e(params, 1);
        case Family::DPrime:
        case Family::ZPrime:
            return FieldElement::integer(params, 2) - FieldElement::e(params, 1);
        case Family::Custom:
            break;
    }
    throw Error(ErrorCode::BadParam, "no construction for custom family");
}

long family_scale(Family family, const CycloParams& params) {
    if (is_two_power_family(family)) return params.m / 2;
    return params.m;
}

ZSubmodule family_module(Family family, const CycloParams& params) {
    const int n = params.n;
    const auto un = static_cast<std::size_t>(n);
    switch (family) {
        case Family::DTwoPowerA:
            return ZSubmodule::ring(params);
        case Family::DTwoPowerB: {
            // {-e_1, e_2, -e_3, ..., ±e_{n-1}, -2e_0 + 2e_1 - 2e_2 + ... - 2e_{n-2} + e_{n-1}}
            IntMatrix rows(un, un);
            for (int i = 1; i < n; ++i) rows(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = (i % 2 == 1) ? -1 : 1;
            for (int j = 0; j < n - 1; ++j) rows(un - 1, static_cast<std::size_t>(j)) = (j % 2 == 0) ? -2 : 2;
            rows(un - 1, un - 1) = 1;
            return ZSubmodule(params, rows);
        }
        case Family::DPrime: {
            // {e_1, ..., e_{n-1}, -e_1 - 2e_2 - ... - 2e_n}
            IntMatrix rows(un, un);
            for (std::size_t i = 0; i + 1 < un; ++i) rows(i, i) = 1;
            rows(un - 1, 0) = -1;
            for (std::size_t j = 1; j < un; ++j) rows(un - 1, j) = -2;
            return ZSubmodule(params, rows);
        }
        case Family::ZTwoPower:
            return ZSubmodule(params, alternating_transform(n));
        case Family::ZPrime:
            return ZSubmodule(params, upper_ones_transform(n));
        case Family::Custom:
            break;
    }
    throw Error(ErrorCode::BadParam, "no construction for custom family");
}

RotatedLattice construct(Family family, int param) {
    const CycloParams params = family_params(family, param);
    return RotatedLattice(family_module(family, params),
                          TwistedForm(family_alpha(family, params), family_scale(family, params)),
                          family, param);
}

DnReference dn_reference(int n) {
    if (n < 2) throw Error(ErrorCode::BadParam, "D_n needs n >= 2");
    const auto un = static_cast<std::size_t>(n);
    DnReference ref;
    ref.n = n;
    ref.basis = IntMatrix(un, un);
    ref.basis(0, 0) = -1;
    ref.basis(0, 1) = -1;
    for (std::size_t k = 1; k < un; ++k) {
        ref.basis(k, k - 1) = 1;
        ref.basis(k, k) = -1;
    }
    ref.gram = ref.basis * ref.basis.transpose();
    return ref;
}

ProofTransform proof_transform(Family family, int param) {
    const CycloParams params = family_params(family, param);
    switch (family) {
        case Family::DTwoPowerA:
            return {first_construction_transform(params.n), false};
        case Family::DTwoPowerB:
            return {alternating_transform(params.n), true};
        case Family::DPrime:
            return {upper_ones_transform(params.n), true};
        case Family::ZTwoPower:
            return {alternating_transform(params.n), false};
        case Family::ZPrime:
            return {upper_ones_transform(params.n), false};
        case Family::Custom:
            break;
    }
    throw Error(ErrorCode::BadParam, "no construction for custom family");
}

IntMatrix congruence_witness(const RotatedLattice& lattice) {
    if (!is_dn_family(lattice.family())) {
        throw Error(ErrorCode::InvalidArgument, "congruence witness is defined for the D_n families");
    }
    const ProofTransform pt = proof_transform(lattice.family(), lattice.param());
    if (!pt.composes_with_dn_basis) return pt.t;

    // The rows of B·T span the module; W holds the stated basis in those coordinates.
    const DnReference ref = dn_reference(lattice.dim());
    const ZSubmodule spanned(lattice.params(), ref.basis * pt.t);
    const auto n = static_cast<std::size_t>(lattice.dim());
    IntMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto coords = spanned.coordinates(lattice.module().generator(static_cast<int>(i)));
        if (!coords) {
            throw Error(ErrorCode::InvariantViolation,
                        "module generator " + std::to_string(i) + " is not in the span of B*T");
        }
        for (std::size_t j = 0; j < n; ++j) w(i, j) = (*coords)[j];
    }
    return w;
}

}  // namespace rotlat
