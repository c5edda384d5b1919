#ifndef CURVECERT_MATRIX_HPP
#define CURVECERT_MATRIX_HPP

#include <vector>

#include "curvecert/poly.hpp"

namespace curvecert {

template <class R>
class Matrix {
public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    R& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const R& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<R> a_;
};

// Fraction-free (Bareiss) determinant over an integral domain. Divisions
// are exact by the Bareiss identity. Row swaps handle zero pivots; an
// all-zero pivot column short-circuits to zero.
template <class R>
R bareiss_determinant(Matrix<R> m) {
    if (m.rows() != m.cols()) throw Error("bareiss_determinant: matrix not square");
    size_t n = m.rows();
    if (n == 0) return RingTraits<R>::from_long(1);
    R prev = RingTraits<R>::from_long(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m.at(k, k))) {
            size_t p = k + 1;
            while (p < n && ring_is_zero(m.at(p, k))) ++p;
            if (p == n) return R();
            for (size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = ring_exact_div(num, prev);
            }
            m.at(i, k) = R();
        }
        prev = m.at(k, k);
    }
    R det = m.at(n - 1, n - 1);
    return negate ? ring_neg(det) : det;
}

// Exact Gaussian kernel basis over the rationals: returns a basis of
// { x : A x = 0 } for a rows x cols matrix.
std::vector<std::vector<Rational>> rational_kernel_basis(const Matrix<Rational>& a);

// Rank over the rationals.
size_t rational_rank(Matrix<Rational> a);

} // namespace curvecert

#endif
