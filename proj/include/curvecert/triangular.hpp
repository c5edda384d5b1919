#ifndef CURVECERT_TRIANGULAR_HPP
#define CURVECERT_TRIANGULAR_HPP

#include <vector>

#include "curvecert/poly.hpp"

namespace curvecert {

// Bivariate polynomial as a polynomial in t with coefficients in Q[s].
using BiPoly = Poly<QPoly>;

// extended gcd over Q[s]: g = u a + v b with g monic (or zero)
struct ExtGcd {
    QPoly g, u, v;
};
ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b);

// One branch of a triangular gcd computation: on the locus gamma(s) = 0
// the reduced system has the stated monic gcd in t.
struct TriangularBranch {
    QPoly gamma;  // squarefree, nonconstant factor of the input modulus
    BiPoly gcd;   // monic gcd in t of the system mod gamma; zero iff the
                  // whole system vanishes on the branch
};

// Gcd of a system of bivariate polynomials over Q[s]/(gamma) with gamma
// squarefree, splitting the modulus whenever a leading coefficient is a
// zero divisor (D5 style). The returned branch moduli are coprime and
// multiply to gamma.
std::vector<TriangularBranch> triangular_system_gcd(const std::vector<BiPoly>& system,
                                                    const QPoly& gamma);

// reduce each t-coefficient mod gamma
BiPoly reduce_mod(const BiPoly& p, const QPoly& gamma);

} // namespace curvecert

#endif
