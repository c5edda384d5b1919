#ifndef CURVECERT_STURM_HPP
#define CURVECERT_STURM_HPP

#include <optional>
#include <vector>

#include "curvecert/binary_form.hpp"
#include "curvecert/poly.hpp"

namespace curvecert {

// Classic signed-remainder Sturm chain. Built on the squarefree part, so
// the variation difference counts distinct roots.
class SturmChain {
public:
    explicit SturmChain(const QPoly& p);

    // distinct real roots in the half-open interval (a, b]
    int count_half_open(const Rational& a, const Rational& b) const;
    // distinct real roots in (a, +inf)
    int count_above(const Rational& a) const;
    // distinct real roots in (-inf, b]
    int count_upto(const Rational& b) const;
    // all distinct real roots
    int count_all() const;

    const QPoly& squarefree() const { return sf_; }

private:
    int variations_at(const Rational& x) const;
    int variations_pos_inf() const;
    int variations_neg_inf() const;

    QPoly sf_;
    std::vector<QPoly> seq_;
};

// Open-interval isolating interval for one distinct real root; endpoints
// are never roots.
struct RootInterval {
    Rational lo, hi;
};

// Distinct real roots of p, each isolated in an open interval with
// non-root rational endpoints, sorted increasingly.
std::vector<RootInterval> isolate_real_roots_affine(const QPoly& p);

// Bisect until hi - lo <= width (keeps endpoints non-root).
RootInterval refine_root_interval(const SturmChain& chain, RootInterval iv, const Rational& width);

// A rational point in (a, b) where p does not vanish.
Rational nonroot_point_between(const QPoly& p, const Rational& a, const Rational& b);

// One distinct real projective root of a binary form: either an affine
// isolating interval or exactly the point at infinity [0:1].
struct ProjRoot {
    bool at_infinity = false;
    Rational lo, hi; // meaningful iff !at_infinity
};

// Number of distinct real projective roots of f; restricted to the affine
// interval (lo, hi) when a range is given (the range never includes the
// point at infinity).
int count_real_projective_roots(const BinaryForm& f,
                                std::optional<std::pair<Rational, Rational>> range = std::nullopt);

// Isolating intervals for all distinct real projective roots, affine ones
// sorted increasingly, the infinity root (if any) last.
std::vector<ProjRoot> isolate_real_projective_roots(const BinaryForm& f);

// Cauchy root bound: every affine root lies in (-B, B).
Rational cauchy_root_bound(const QPoly& p);

} // namespace curvecert

#endif
