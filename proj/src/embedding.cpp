#include "rotlat/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "rotlat/error.hpp"

namespace rotlat {

TwistedForm::TwistedForm(FieldElement alpha, long scale) : alpha_(std::move(alpha)), scale_(scale) {
    if (scale_ <= 0) throw Error(ErrorCode::InvalidArgument, "scale denominator must be positive");
    if (alpha_.is_zero()) throw Error(ErrorCode::ZeroElement, "twisting element is zero");
    if (!check_totally_positive(alpha_)) {
        throw Error(ErrorCode::NotTotallyPositive,
                    "twisting element " + alpha_.to_string() + " is not totally positive");
    }
}

bool check_totally_positive(const FieldElement& alpha) {
    const auto sig = conjugates(alpha);
    return std::all_of(sig.begin(), sig.end(), [](double v) { return v > kPositivityMargin; });
}

RealMatrix generator_matrix(const ZSubmodule& module, const TwistedForm& form) {
    if (!(module.params() == form.alpha().params())) {
        throw Error(ErrorCode::ParamsMismatch, "module and twisting element from different fields");
    }
    const auto n = static_cast<std::size_t>(module.rank());
    const auto table = basis_conjugates(module.params());
    const auto alpha_sig = conjugates(form.alpha());
    std::vector<double> weight(n);
    const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(form.scale()));
    for (std::size_t k = 0; k < n; ++k) {
        if (!(alpha_sig[k] > kPositivityMargin)) {
            throw Error(ErrorCode::NotTotallyPositive, "twisting element is not totally positive");
        }
        weight[k] = std::sqrt(alpha_sig[k]) * inv_sqrt_c;
    }

    RealMatrix m(n, n);
    const IntMatrix& basis = module.basis();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            const double c = basis(i, t).get_d();
            if (c == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) m(i, k) += c * table[t][k];
        }
        for (std::size_t k = 0; k < n; ++k) m(i, k) *= weight[k];
    }
    return m;
}

IntMatrix trace_form(const CycloParams& params) {
    const auto n = static_cast<std::size_t>(params.n);
    const IntVector traces = basis_traces(params);
    IntMatrix q(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        const FieldElement bs = FieldElement::basis(params, static_cast<int>(s));
        for (std::size_t t = s; t < n; ++t) {
            const FieldElement prod = mul(bs, FieldElement::basis(params, static_cast<int>(t)));
            Integer tr = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (prod.coeffs()[j] != 0) tr += prod.coeffs()[j] * traces[j];
            }
            q(s, t) = tr;
            q(t, s) = tr;
        }
    }
    return q;
}

IntMatrix exact_gram(const ZSubmodule& module, const TwistedForm& form) {
    const CycloParams& p = module.params();
    if (!(p == form.alpha().params())) {
        throw Error(ErrorCode::ParamsMismatch, "module and twisting element from different fields");
    }
    const auto n = static_cast<std::size_t>(p.n);
    std::vector<IntVector> twisted;
    twisted.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        twisted.push_back(mul(form.alpha(), module.generator(static_cast<int>(i))).coeffs());
    }
    // Tr(α w_i w_j) = (α w_i)ᵀ Q w_j
    IntMatrix g = IntMatrix::from_rows(twisted) * trace_form(p) * module.basis().transpose();
    const Integer c = form.scale();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!mpz_divisible_p(g(i, j).get_mpz_t(), c.get_mpz_t())) {
                throw Error(ErrorCode::NonIntegralGram,
                            "Tr(alpha w_" + std::to_string(i) + " w_" + std::to_string(j) +
                                ") = " + g(i, j).get_str() + " is not divisible by " + c.get_str());
            }
            mpz_divexact(g(i, j).get_mpz_t(), g(i, j).get_mpz_t(), c.get_mpz_t());
        }
    }
    return g;
}

double gram_deviation(const RealMatrix& generator, const IntMatrix& gram) {
    double worst = 0.0;
    for (std::size_t i = 0; i < generator.rows; ++i) {
        for (std::size_t j = 0; j < generator.rows; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < generator.cols; ++k) dot += generator(i, k) * generator(j, k);
            worst = std::max(worst, std::abs(dot - gram(i, j).get_d()));
        }
    }
    return worst;
}

RotatedLattice::RotatedLattice(ZSubmodule module, TwistedForm form, Family family, int param)
    : module_(std::move(module)), form_(std::move(form)), family_(family), param_(param) {
    generator_ = generator_matrix(module_, form_);
    gram_ = exact_gram(module_, form_);
    const double dev = gram_deviation(generator_, gram_);
    if (!(dev <= kGramTolerance)) {
        throw Error(ErrorCode::InvariantViolation,
                    "gram = generator*generator^T violated (max deviation " + std::to_string(dev) + ")");
    }
}

}  // namespace rotlat
