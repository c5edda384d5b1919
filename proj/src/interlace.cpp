#include "curvecert/interlace.hpp"

#include <algorithm>
#include <random>

namespace curvecert {

namespace {

struct TaggedRoot {
    bool at_infinity;
    Rational lo, hi;
    int owner; // 0 = p, 1 = q
};

} // namespace

bool is_strictly_interlacing(const BinaryForm& p, const BinaryForm& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroFormError("is_strictly_interlacing: zero form");
    int d = p.degree();
    if (q.degree() != d) throw DegreeMismatchError("is_strictly_interlacing: degrees differ");
    if (d < 1) return false;
    if (form_gcd_degree(p, q) > 0) return false; // shared root: not strict
    if (count_real_projective_roots(p) != d) return false;
    if (count_real_projective_roots(q) != d) return false;

    std::vector<TaggedRoot> roots;
    for (const auto& r : isolate_real_projective_roots(p)) roots.push_back({r.at_infinity, r.lo, r.hi, 0});
    for (const auto& r : isolate_real_projective_roots(q)) roots.push_back({r.at_infinity, r.lo, r.hi, 1});

    // refine affine intervals until pairwise disjoint across the two forms
    SturmChain cp(p.affine()), cq(q.affine());
    for (int pass = 0; pass < 128; ++pass) {
        std::sort(roots.begin(), roots.end(), [](const TaggedRoot& x, const TaggedRoot& y) {
            if (x.at_infinity != y.at_infinity) return !x.at_infinity;
            return x.lo < y.lo;
        });
        bool overlap = false;
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].at_infinity || roots[i + 1].at_infinity) continue;
            if (roots[i + 1].lo < roots[i].hi) { overlap = true; break; }
        }
        if (!overlap) break;
        for (auto& r : roots) {
            if (r.at_infinity) continue;
            const SturmChain& c = r.owner == 0 ? cp : cq;
            RootInterval iv = refine_root_interval(c, {r.lo, r.hi}, (r.hi - r.lo) / 4);
            r.lo = iv.lo;
            r.hi = iv.hi;
        }
    }
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        if (!roots[i].at_infinity && !roots[i + 1].at_infinity && roots[i + 1].lo < roots[i].hi)
            throw Error("is_strictly_interlacing: could not separate roots");
    // alternation around the circle; the infinity root (at most one, since
    // the forms are coprime) sits between the largest and smallest root
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].owner == roots[(i + 1) % roots.size()].owner) return false;
    return true;
}

PencilReport pencil_real_rooted_check(const BinaryForm& p, const BinaryForm& q,
                                      unsigned trials, uint64_t seed) {
    if (!is_strictly_interlacing(p, q)) throw NotInterlacingError();
    PencilReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.expected_roots = p.degree();
    rep.pass = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (unsigned i = 0; i < trials; ++i) {
        long l = 0, m = 0;
        while (l == 0 && m == 0) { l = dist(rng); m = dist(rng); }
        BinaryForm member = p.scaled(Rational(l)) + q.scaled(Rational(m));
        int n = member.is_zero() ? 0 : count_real_projective_roots(member);
        if (n != rep.expected_roots) {
            rep.pass = false;
            rep.counterexample = std::make_pair(Rational(l), Rational(m));
            return rep;
        }
    }
    return rep;
}

} // namespace curvecert
