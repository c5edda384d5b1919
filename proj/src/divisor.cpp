#include "curvecert/divisor.hpp"

#include <map>

#include "curvecert/sturm.hpp"

namespace curvecert {

int DivisorProfile::weight() const {
    int w = 0;
    for (const auto& e : entries) w += e.count * (e.multiplicity - 1) * (e.complex_pair ? 2 : 1);
    return w;
}

int DivisorProfile::distinct_real_points() const {
    int n = 0;
    for (const auto& e : entries)
        if (!e.complex_pair) n += e.count;
    return n;
}

int DivisorProfile::distinct_points() const {
    int n = 0;
    for (const auto& e : entries) n += e.count * (e.complex_pair ? 2 : 1);
    return n;
}

int DivisorProfile::count_of(bool complex_pair, int multiplicity) const {
    for (const auto& e : entries)
        if (e.complex_pair == complex_pair && e.multiplicity == multiplicity) return e.count;
    return 0;
}

DivisorProfile divisor_profile(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("divisor_profile of zero form");
    DivisorProfile prof;
    prof.total_degree = f.degree();
    std::map<std::pair<bool, int>, int> acc; // (pair?, multiplicity) -> count
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        int real = count_real_projective_roots(factor);
        int pairs = (factor.degree() - real) / 2;
        if (real > 0) acc[{false, mult}] += real;
        if (pairs > 0) acc[{true, mult}] += pairs;
    }
    int check = 0;
    for (const auto& [key, count] : acc) {
        prof.entries.push_back({key.first, key.second, count});
        check += count * key.second * (key.first ? 2 : 1);
    }
    if (check != prof.total_degree)
        throw Error("divisor_profile: degree bookkeeping violated");
    return prof;
}

BinaryForm parametric_section(const CurveParam& param, const Hyperplane& h) {
    if (param.size() != h.coeffs().size())
        throw DegreeMismatchError("parametric_section: hyperplane dimension mismatch");
    BinaryForm acc;
    for (size_t i = 0; i < param.size(); ++i) acc = acc + param[i].scaled(h[i]);
    if (acc.is_zero()) throw DegenerateHyperplaneError();
    return acc;
}

BinaryForm resultant_section(const BiForm& f, const Hyperplane& h) {
    BinaryForm r = resultant_t(h.segre_pullback(), f);
    if (r.is_zero()) throw CommonComponentError("resultant_section");
    return r;
}

WeightResult hyperplane_weight_param(const CurveParam& param, const Hyperplane& h) {
    BinaryForm sec = parametric_section(param, h);
    return {weight_of_form(sec), true};
}

namespace {

struct DegenerateSplit {
    Rational s0, s1; // vertical line at [s0 : s1]
    Rational t0, t1; // horizontal line at [t0 : t1]
};

// factorization of the pullback (1,1) form when its determinant vanishes:
// B = (l0 s0 + l2 s1)(t0 ...) in suitable coordinates
DegenerateSplit split_degenerate(const Hyperplane& h) {
    const auto& l = h.coeffs();
    DegenerateSplit out;
    if (sign(l[0]) != 0 || sign(l[1]) != 0) {
        // B = (s0 + c s1)(l0 t0 + l1 t1), c = l2/l0 = l3/l1
        Rational c = sign(l[0]) != 0 ? l[2] / l[0] : l[3] / l[1];
        out.s0 = -c;
        out.s1 = 1;
        out.t0 = l[1];
        out.t1 = -l[0];
    } else {
        // B = s1 (l2 t0 + l3 t1)
        out.s0 = 1;
        out.s1 = 0;
        out.t0 = l[3];
        out.t1 = -l[2];
    }
    return out;
}

} // namespace

WeightResult hyperplane_weight_biform(const BiForm& f, const Hyperplane& h) {
    if (sign(h.segre_determinant()) != 0) {
        BinaryForm sec = resultant_section(f, h);
        return {weight_of_form(sec), true};
    }
    DegenerateSplit sp = split_degenerate(h);
    BinaryForm fv = f.fiber_at_s(sp.s0, sp.s1); // section of the vertical line
    BinaryForm fh = f.fiber_at_t(sp.t0, sp.t1); // section of the horizontal line
    if (fv.is_zero() || fh.is_zero()) throw CommonComponentError("degenerate hyperplane contains a component");
    int total = f.deg_s() + f.deg_t();
    int overlap = sign(f.eval(sp.s0, sp.s1, sp.t0, sp.t1)) == 0 ? 1 : 0;
    int distinct = distinct_complex_roots(fv) + distinct_complex_roots(fh) - overlap;
    return {total - distinct, true};
}

int real_intersection_count_biform(const BiForm& f, const Hyperplane& h) {
    if (sign(h.segre_determinant()) != 0) {
        BinaryForm sec = resultant_section(f, h);
        return divisor_profile(sec).distinct_real_points();
    }
    DegenerateSplit sp = split_degenerate(h);
    BinaryForm fv = f.fiber_at_s(sp.s0, sp.s1);
    BinaryForm fh = f.fiber_at_t(sp.t0, sp.t1);
    if (fv.is_zero() || fh.is_zero()) throw CommonComponentError("degenerate hyperplane contains a component");
    int overlap = sign(f.eval(sp.s0, sp.s1, sp.t0, sp.t1)) == 0 ? 1 : 0;
    return count_real_projective_roots(fv) + count_real_projective_roots(fh) - overlap;
}

} // namespace curvecert
