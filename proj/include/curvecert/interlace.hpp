#ifndef CURVECERT_INTERLACE_HPP
#define CURVECERT_INTERLACE_HPP

#include <cstdint>
#include <optional>

#include "curvecert/binary_form.hpp"
#include "curvecert/sturm.hpp"

namespace curvecert {

// Strict interlacing on the projective circle: both forms have maximal
// count of distinct real projective roots and the roots alternate on
// P1(R), infinity included. This makes the test symmetric in p, q and
// invariant under Mobius reparameterization; the affine picture is the
// chart s0 = 1.
bool is_strictly_interlacing(const BinaryForm& p, const BinaryForm& q);

struct PencilReport {
    bool pass = false;
    unsigned trials = 0;
    uint64_t seed = 0;
    int expected_roots = 0;
    // first (lambda, mu) whose combination missed the count, if any
    std::optional<std::pair<Rational, Rational>> counterexample;
};

// Checks that seeded random pencil members lambda*p + mu*q all have
// exactly d distinct real projective roots (the Hermite-Kakeya property).
PencilReport pencil_real_rooted_check(const BinaryForm& p, const BinaryForm& q,
                                      unsigned trials, uint64_t seed);

} // namespace curvecert

#endif
