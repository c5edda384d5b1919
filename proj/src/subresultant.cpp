#include "curvecert/subresultant.hpp"

namespace curvecert {

std::vector<Rational> principal_subresultants(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() < g.degree()) throw DegreeOrderError();
    if (f.is_zero() || g.is_zero()) throw ZeroFormError("principal_subresultants: zero input");
    return formal_principal_subresultants(f.coeffs(), f.degree(), g.coeffs(), g.degree());
}

BinaryForm wronskian(const std::vector<BinaryForm>& forms) {
    size_t n = forms.size();
    if (n == 0) throw Error("wronskian: empty input");
    int m = forms[0].degree();
    for (const auto& f : forms)
        if (f.degree() != m) throw DegreeMismatchError("wronskian: degrees differ");
    if (m < (int)n - 1) throw DegreeMismatchError("wronskian: degree below n-1");

    // row i, column j: d^(n-1) f_i / d s0^(n-1-j) d s1^j
    Matrix<BinaryForm> w(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            BinaryForm g = forms[i];
            for (size_t a = 0; a < n - 1 - j; ++a) g = g.derivative_s0();
            for (size_t b = 0; b < j; ++b) g = g.derivative_s1();
            w.at(i, j) = g;
        }
    }
    BinaryForm det = bareiss_determinant(std::move(w));
    if (det.is_zero()) return BinaryForm();
    int target = (int)n * (m - (int)n + 1);
    if (det.degree() != target)
        throw Error("wronskian: internal degree bookkeeping failure");
    return det;
}

} // namespace curvecert
