#ifndef CURVECERT_DIVISOR_HPP
#define CURVECERT_DIVISOR_HPP

#include "curvecert/biform.hpp"
#include "curvecert/construct.hpp"
#include "curvecert/hyperplane.hpp"

namespace curvecert {

// Multiplicity profile of a hyperplane section divisor.
struct ProfileEntry {
    bool complex_pair = false; // real point vs complex-conjugate pair
    int multiplicity = 1;
    int count = 1;
};

struct DivisorProfile {
    std::vector<ProfileEntry> entries;
    int total_degree = 0;

    int weight() const;
    int distinct_real_points() const;
    int distinct_points() const; // complex points counted individually
    // factors of a given multiplicity and kind, for fixture checks
    int count_of(bool complex_pair, int multiplicity) const;
};

// profile of a binary form: squarefree structure + real/complex split per
// factor (the root at infinity is real and enters like any other root)
DivisorProfile divisor_profile(const BinaryForm& f);

// section polynomial sum(lambda_i * component_i); DegenerateHyperplane if
// it vanishes identically (the curve lies in H)
BinaryForm parametric_section(const CurveParam& param, const Hyperplane& h);

// t-resultant of (pullback of H, F): a binary form in s of degree a+b.
// CommonComponent if the pullback divides F.
BinaryForm resultant_section(const BiForm& f, const Hyperplane& h);

struct WeightResult {
    int weight = 0;
    bool exact = false;
};

// exact weight of H . curve for a parameterized curve
WeightResult hyperplane_weight_param(const CurveParam& param, const Hyperplane& h);

// Weight of H . Z for an implicit curve on the Segre quadric. Exact in
// both regimes: for det != 0 the hyperplane meets every vertical fiber
// once, so resultant multiplicities are point multiplicities; for det = 0
// the pullback splits as L(s) M(t) and the two line sections are profiled
// directly and merged.
WeightResult hyperplane_weight_biform(const BiForm& f, const Hyperplane& h);

// number of distinct REAL intersection points of H with the curve
int real_intersection_count_biform(const BiForm& f, const Hyperplane& h);

} // namespace curvecert

#endif
