#ifndef CURVECERT_HYPERPLANE_HPP
#define CURVECERT_HYPERPLANE_HPP

#include <vector>

#include "curvecert/biform.hpp"
#include "curvecert/rational.hpp"

namespace curvecert {

// Real hyperplane in P^n given by n+1 coefficients up to scale. The
// canonical form has coprime integer entries with positive first nonzero
// entry. n = 3 throughout the certification pipeline; the constructor
// accepts any dimension so rational normal curves in larger spaces can be
// sectioned as well.
class Hyperplane {
public:
    explicit Hyperplane(std::vector<Rational> coeffs);

    size_t dim() const { return coeffs_.size() - 1; } // ambient projective dimension
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](size_t i) const { return coeffs_[i]; }

    // canonical representative (coprime integers, positive first nonzero)
    Hyperplane canonical() const;

    // lambda0*lambda3 - lambda1*lambda2; zero iff the restriction to the
    // Segre quadric splits into a vertical and a horizontal line (P3 only)
    Rational segre_determinant() const;

    // pullback along the Segre embedding: the (1,1) form
    // l0 s0 t0 + l1 s0 t1 + l2 s1 t0 + l3 s1 t1 (P3 only)
    BiForm segre_pullback() const;

    bool operator==(const Hyperplane& o) const;

private:
    std::vector<Rational> coeffs_;
};

} // namespace curvecert

#endif
