#include "rotlat/submodule.hpp"

#include "rotlat/error.hpp"

namespace rotlat {

namespace {

IntMatrix checked_basis(const CycloParams& params, IntMatrix basis) {
    const auto n = static_cast<std::size_t>(params.n);
    if (basis.rows() != n || basis.cols() != n) {
        throw Error(ErrorCode::InvalidArgument, "module basis must be n x n with n = [K:Q]");
    }
    return basis;
}

}  // namespace

ZSubmodule::ZSubmodule(const CycloParams& params, IntMatrix basis)
    : params_(params), basis_(checked_basis(params, std::move(basis))),
      hnf_(hermite_normal_form(basis_)) {}

ZSubmodule ZSubmodule::ring(const CycloParams& params) {
    return ZSubmodule(params, IntMatrix::identity(static_cast<std::size_t>(params.n)));
}

ZSubmodule ZSubmodule::from_elements(const std::vector<FieldElement>& generators) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
    const CycloParams& p = generators.front().params();
    std::vector<IntVector> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (!(g.params() == p)) throw Error(ErrorCode::ParamsMismatch, "generators from different fields");
        rows.push_back(g.coeffs());
    }
    return ZSubmodule(p, IntMatrix::from_rows(rows));
}

ZSubmodule ZSubmodule::principal(const FieldElement& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroGenerator, "principal module of the zero element");
    return ZSubmodule(g.params(), multiplication_matrix(g));
}

FieldElement ZSubmodule::generator(int i) const {
    return FieldElement(params_, basis_.row_vector(static_cast<std::size_t>(i)));
}

std::optional<IntVector> ZSubmodule::coordinates(const FieldElement& x) const {
    if (!(x.params() == params_)) throw Error(ErrorCode::ParamsMismatch, "element from a different field");
    auto q = solve_triangular_row(hnf_.h, x.span());
    if (!q) return std::nullopt;
    return row_times(*q, hnf_.transform);
}

ZSubmodule module_from_rows(const CycloParams& params, const IntMatrix& rows) {
    return ZSubmodule(params, rows);
}

bool contains(const ZSubmodule& module, const FieldElement& x) {
    if (!(x.params() == module.params())) {
        throw Error(ErrorCode::ParamsMismatch, "element from a different field");
    }
    return solve_triangular_row(module.hermite_form(), x.span()).has_value();
}

Integer index_in_ring(const ZSubmodule& module) { return abs(determinant(module.basis())); }

bool is_ideal(const ZSubmodule& module) {
    const CycloParams& p = module.params();
    for (int t = 0; t < p.n; ++t) {
        const FieldElement b = FieldElement::basis(p, t);
        for (int i = 0; i < module.rank(); ++i) {
            if (!contains(module, mul(b, module.generator(i)))) return false;
        }
    }
    return true;
}

bool equals(const ZSubmodule& a, const ZSubmodule& b) {
    return a.params() == b.params() && a.hermite_form() == b.hermite_form();
}

bool equals_principal(const ZSubmodule& module, const FieldElement& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroGenerator, "principal module of the zero element");
    if (!(g.params() == module.params())) throw Error(ErrorCode::ParamsMismatch, "generator from a different field");
    return equals(module, ZSubmodule::principal(g));
}

}  // namespace rotlat
