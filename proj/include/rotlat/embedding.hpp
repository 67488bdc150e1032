#ifndef ROTLAT_EMBEDDING_HPP
#define ROTLAT_EMBEDDING_HPP

#include <cstddef>
#include <vector>

#include "rotlat/field.hpp"
#include "rotlat/submodule.hpp"

namespace rotlat {

struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Twisting element α (totally positive) and scale denominator c: the
/// realised lattice is (1/√c)·σ_α(I).
class TwistedForm {
  public:
    TwistedForm(FieldElement alpha, long scale);

    const FieldElement& alpha() const noexcept { return alpha_; }
    long scale() const noexcept { return scale_; }

  private:
    FieldElement alpha_;
    long scale_;
};

bool check_totally_positive(const FieldElement& alpha);

/// Row i = (1/√c)(√σ_1(α)σ_1(w_i), ..., √σ_n(α)σ_n(w_i)).
RealMatrix generator_matrix(const ZSubmodule& module, const TwistedForm& form);

/// G_ij = Tr(α w_i w_j) / c, exactly.
IntMatrix exact_gram(const ZSubmodule& module, const TwistedForm& form);

/// Integer matrix of the trace form Tr(b_s b_t) on the ring basis.
IntMatrix trace_form(const CycloParams& params);

enum class Family { Custom, DTwoPowerA, DTwoPowerB, DPrime, ZTwoPower, ZPrime };

class RotatedLattice {
  public:
    /// Realises the lattice and checks gram ≈ generator·generatorᵀ.
    RotatedLattice(ZSubmodule module, TwistedForm form, Family family = Family::Custom,
                   int param = 0);

    const CycloParams& params() const noexcept { return module_.params(); }
    int dim() const noexcept { return module_.rank(); }
    const ZSubmodule& module() const noexcept { return module_; }
    const TwistedForm& form() const noexcept { return form_; }
    const RealMatrix& generator() const noexcept { return generator_; }
    const IntMatrix& gram() const noexcept { return gram_; }
    Family family() const noexcept { return family_; }
    int param() const noexcept { return param_; }

  private:
    ZSubmodule module_;
    TwistedForm form_;
    RealMatrix generator_;
    IntMatrix gram_;
    Family family_;
    int param_;
};

/// Largest |gram_ij - (M·Mᵀ)_ij|.
double gram_deviation(const RealMatrix& generator, const IntMatrix& gram);

inline constexpr double kGramTolerance = 1e-8;
inline constexpr double kPositivityMargin = 1e-9;

}  // namespace rotlat

#endif
