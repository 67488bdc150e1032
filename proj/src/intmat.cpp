#include "rotlat/intmat.hpp"

#include <sstream>
#include <utility>

#include "rotlat/error.hpp"

namespace rotlat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        }
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(ErrorCode::InvalidArgument, "ragged row list");
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
    auto r = row(i);
    return IntVector(r.begin(), r.end());
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).get_str();
        }
        os << (i + 1 == rows_ ? "]]" : "]\n");
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Integer determinant(const IntMatrix& m) {
    if (!m.square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

namespace {

// rows (i, j) <- (s·ri + t·rj, u·ri + v·rj) over columns [from, cols)
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v, std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c) {
        Integer a = m(i, c);
        Integer b = m(j, c);
        if (a == 0 && b == 0) continue;
        m(i, c) = s * a + t * b;
        m(j, c) = u * a + v * b;
    }
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void submul_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q,
                std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c) {
        if (m(source, c) != 0) m(target, c) -= q * m(source, c);
    }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::InvalidArgument, "hermite form of non-square matrix");
    const std::size_t n = a.rows();
    HermiteForm out{a, IntMatrix::identity(n)};
    IntMatrix& h = out.h;
    IntMatrix& u = out.transform;

    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = col + 1; i < n; ++i) {
            if (h(i, col) == 0) continue;
            if (h(col, col) == 0) {
                swap_rows(h, col, i);
                swap_rows(u, col, i);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(col, col).get_mpz_t(),
                       h(i, col).get_mpz_t());
            Integer x = h(col, col) / g;
            Integer y = h(i, col) / g;
            Integer neg_y = -y;
            combine_rows(h, col, i, s, t, neg_y, x, col);
            combine_rows(u, col, i, s, t, neg_y, x, 0);
        }
        if (h(col, col) == 0) {
            throw Error(ErrorCode::SingularBasis, "basis matrix is singular");
        }
        if (h(col, col) < 0) {
            for (std::size_t c = col; c < n; ++c) h(col, c) = -h(col, c);
            for (std::size_t c = 0; c < n; ++c) u(col, c) = -u(col, c);
        }
        for (std::size_t i = 0; i < col; ++i) {
            if (h(i, col) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(col, col).get_mpz_t());
            if (q == 0) continue;
            submul_row(h, i, col, q, col);
            submul_row(u, i, col, q, 0);
        }
    }
    return out;
}

std::optional<IntVector> solve_triangular_row(const IntMatrix& h, std::span<const Integer> x) {
    const std::size_t n = h.rows();
    if (x.size() != h.cols()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    IntVector rest(x.begin(), x.end());
    IntVector q(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (rest[j] == 0) continue;
        if (!mpz_divisible_p(rest[j].get_mpz_t(), h(j, j).get_mpz_t())) return std::nullopt;
        mpz_divexact(q[j].get_mpz_t(), rest[j].get_mpz_t(), h(j, j).get_mpz_t());
        for (std::size_t c = j; c < h.cols(); ++c) {
            if (h(j, c) != 0) rest[c] -= q[j] * h(j, c);
        }
    }
    return q;
}

IntVector row_times(std::span<const Integer> x, const IntMatrix& a) {
    if (x.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    IntVector out(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(k, j) != 0) out[j] += x[k] * a(k, j);
        }
    }
    return out;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace rotlat
