#ifndef CURVECERT_CONSTRUCT_HPP
#define CURVECERT_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "curvecert/biform.hpp"
#include "curvecert/binary_form.hpp"
#include "curvecert/p3form.hpp"

namespace curvecert {

// Parameterized rational curve into P^n: n+1 binary forms of a common
// degree, no common factor, linearly independent components.
using CurveParam = std::vector<BinaryForm>;

// throws DegenerateInput unless components share degree, are coprime as a
// family and linearly independent
void validate_curve_param(const CurveParam& param);

// F_X = t0 P - t1 Q: the closure of the graph t = P/Q on P1 x P1,
// bidegree (d, 1). Requires the pair strictly interlacing and coprime.
BiForm graph_closure(const BinaryForm& p, const BinaryForm& q);

// F_G = prod_j (t1^2 + t_j t0^2), bidegree (0, 2e); empty list gives the
// constant 1. The real zero set is empty since every t_j > 0.
BiForm line_pair_form(const std::vector<Rational>& t_list);

// product F_X * F_G of bidegrees (d, 1) and (0, 2e)
BiForm assemble_union(const BiForm& fx, const BiForm& fg);

// F + eps * P
BiForm perturb(const BiForm& f, const BiForm& pert, const Rational& eps);

// deterministic small-integer form of the given bidegree
BiForm random_perturbation(int deg_s, int deg_t, uint64_t seed);

// [a:b] -> [C(n,0) a^n : C(n,1) a^(n-1) b : ... : C(n,n) b^n]
CurveParam rnc_binomial(int n);

// the explicit degree-4 curve in P3:
// [x:y] -> [x^4+2x^3y : x^4-2x^2y^2 : x^4+2xy^3 : -x^4+y^4]
CurveParam psi_quartic();

// the ramified control fixture (s0^4, s0^3 s1, s0^2 s1^2, s1^4)
CurveParam ramified_quartic();

// quadrics in P3 vanishing on the image of a nondegenerate parameterized
// curve, as a basis of the solution space with rank and real signature
struct QuadricThrough {
    P3Form form;
    std::vector<Rational> upper; // 10 coefficients, x_i x_j for i <= j
    int rank = 0;
    int positives = 0;
    int negatives = 0;
};
std::vector<QuadricThrough> quadrics_through(const CurveParam& param);

// paper fixtures for the explicit degree-six example
BinaryForm fig1_p(); // (t^2 - 1)(t - 3)
BinaryForm fig1_q(); // (t^2 - 4) t
P3Form ex25_h();
P3Form ex25_deformation_cubic(); // x0^3 + x1^3 + x2^3 - x3^3
P3Form segre_quadric();          // x0 x3 - x1 x2

// Full curve specification as read from a spec file.
struct CurveSpec {
    BinaryForm p, q;
    int e = 0;
    std::vector<Rational> t_list;
    std::optional<uint64_t> perturbation_seed;
    std::optional<BiForm> perturbation_matrix;
    std::optional<Rational> epsilon; // nullopt = auto
};

// F_X * F_G for the spec (validates interlacing, positivity, distinctness)
BiForm build_base_curve(const CurveSpec& spec);
// the perturbation of matching bidegree (d, 2e+1): explicit matrix, or the
// seeded random form, or zero when e == 0 and no perturbation was given
BiForm spec_perturbation(const CurveSpec& spec);

struct EpsilonSearch {
    Rational epsilon;
    int attempts = 0;
    std::vector<Rational> tried;
};

// First epsilon in the schedule 1, 1/base, 1/base^2, ... accepted by the
// certifier callback. Throws ExhaustedSchedule after max_attempts.
EpsilonSearch auto_epsilon(const BiForm& base, const BiForm& pert,
                           const std::function<bool(const BiForm&)>& accept,
                           int max_attempts = 12, unsigned base_denominator = 10);

} // namespace curvecert

#endif
