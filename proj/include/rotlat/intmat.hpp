#ifndef ROTLAT_INTMAT_HPP
#define ROTLAT_INTMAT_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rotlat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    IntVector row_vector(std::size_t i) const;

    IntMatrix transpose() const;
    bool operator==(const IntMatrix& other) const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Upper-triangular row Hermite normal form H = U·A of a nonsingular square
/// matrix: positive pivots, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix transform;  // unimodular U with H = U·A
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Coefficients q with q·H = x for an upper-triangular H, or nullopt when x is
/// not in the row lattice of H.
std::optional<IntVector> solve_triangular_row(const IntMatrix& h, std::span<const Integer> x);

/// x·A for a row vector x.
IntVector row_times(std::span<const Integer> x, const IntMatrix& a);

bool is_zero(std::span<const Integer> v);

}  // namespace rotlat

#endif
