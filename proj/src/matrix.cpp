#include "curvecert/matrix.hpp"

namespace curvecert {

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<size_t> rref(Matrix<Rational>& a) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && sign(a.at(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Rational inv = Rational(1) / a.at(r, c);
        for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sign(a.at(i, c)) == 0) continue;
            Rational f = a.at(i, c);
            for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> rational_kernel_basis(const Matrix<Rational>& a) {
    Matrix<Rational> m = a;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rational_rank(Matrix<Rational> a) {
    return rref(a).size();
}

} // namespace curvecert
