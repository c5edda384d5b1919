#ifndef CURVECERT_CERTIFY_HPP
#define CURVECERT_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "curvecert/divisor.hpp"
#include "curvecert/qinterval.hpp"

namespace curvecert {

enum class Verdict { Certified, Falsified, Inconclusive };

std::string verdict_name(Verdict v);

// Machine-checkable verdict with enough data to replay the run.
struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::string method;
    // witness entries as key/value strings (hyperplane, point, parameter
    // interval or triangular data); empty unless falsified
    std::vector<std::pair<std::string, std::string>> witness;
    uint64_t boxes_processed = 0;
    int max_depth_reached = 0;
    uint64_t seed = 0;
    std::string input_hash;
    std::vector<std::string> notes;
};

// 64-bit FNV-1a over a canonical rendering; stable across runs
std::string fnv1a_hex(const std::string& payload);

// Unramifiedness of a degree-4 rational curve in P3 via the Wronskian:
// certified iff the Wronskian covariant of the components has no real
// projective root (then no real hyperplane meets the curve with a single
// 4-fold contact point, the only weight-3 pattern a real quartic admits).
Certificate certify_wronskian_quartic(const CurveParam& param);

// Either input shape for the subdivision certifier.
using CurveInput = std::variant<CurveParam, BiForm>;

struct SubdivisionBox {
    int facet_var = 0;  // which lambda is pinned
    int facet_sign = 1; // to +1 or -1
    std::array<QInterval, 4> box;
    int certified_by = -1; // subresultant index that excluded zero
};

struct SubdivisionOptions {
    int max_depth = 12;
    uint64_t seed = 20240901;
    int workers = 1;
};

struct SubdivisionOutcome {
    Certificate cert;
    std::vector<SubdivisionBox> certified_boxes;
    std::vector<SubdivisionBox> unresolved_boxes;
};

// Branch-and-bound certification that every real hyperplane section has
// weight at most 2. Hyperplane space is the boundary of the cube
// [-1,1]^4 (8 facets); a box is certified when one of the parametric
// principal subresultants sres_0, sres_1, sres_2 of the section's two
// s-partials has no zero on it under interval evaluation.
SubdivisionOutcome certify_unramified_subdivision(const CurveInput& curve,
                                                  const SubdivisionOptions& opts = {});

// Exact weight oracle dispatching on the curve shape.
WeightResult hyperplane_weight_oracle(const CurveInput& curve, const Hyperplane& h);

// Smoothness of the zero set of F on P1 x P1 over the complex numbers,
// by resultant elimination in all four charts with exact confirmation of
// singular candidates over their algebraic loci.
Certificate certify_smooth(const BiForm& f);

// Total reality of the projection to the t-line: every real horizontal
// fiber has only real points. Certified via the fiber discriminant and
// one exact fiber count per discriminant-free segment of the t-circle.
Certificate total_reality_check(const BiForm& f);

// canonical input hashes used by the certifiers (exposed for tests)
std::string curve_input_hash(const CurveInput& curve);

} // namespace curvecert

#endif
