#ifndef ROTLAT_SUBMODULE_HPP
#define ROTLAT_SUBMODULE_HPP

#include <optional>
#include <vector>

#include "rotlat/field.hpp"
#include "rotlat/intmat.hpp"

namespace rotlat {

/// Full-rank Z-submodule of O_K. Row i of the basis holds the ring-basis
/// coordinates of the i-th generator; the basis is kept exactly as given.
class ZSubmodule {
  public:
    ZSubmodule(const CycloParams& params, IntMatrix basis);

    static ZSubmodule ring(const CycloParams& params);
    static ZSubmodule from_elements(const std::vector<FieldElement>& generators);
    /// g·O_K, with basis {g·b_t}.
    static ZSubmodule principal(const FieldElement& g);

    const CycloParams& params() const noexcept { return params_; }
    int rank() const noexcept { return params_.n; }
    const IntMatrix& basis() const noexcept { return basis_; }
    FieldElement generator(int i) const;
    /// Canonical reduced basis; two modules are equal iff their forms agree.
    const IntMatrix& hermite_form() const noexcept { return hnf_.h; }

    /// Coordinates of x in this module's basis, if x is a member.
    std::optional<IntVector> coordinates(const FieldElement& x) const;

  private:
    CycloParams params_;
    IntMatrix basis_;
    HermiteForm hnf_;
};

ZSubmodule module_from_rows(const CycloParams& params, const IntMatrix& rows);

bool contains(const ZSubmodule& module, const FieldElement& x);

/// |O_K / M| = |det(basis)|.
Integer index_in_ring(const ZSubmodule& module);

/// Closure under multiplication by every ring basis element.
bool is_ideal(const ZSubmodule& module);

bool equals(const ZSubmodule& a, const ZSubmodule& b);
bool equals_principal(const ZSubmodule& module, const FieldElement& g);

}  // namespace rotlat

#endif
