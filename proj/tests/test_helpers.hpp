#ifndef CURVECERT_TEST_HELPERS_HPP
#define CURVECERT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "curvecert/binary_form.hpp"
#include "curvecert/poly.hpp"

namespace cctest {

using curvecert::BinaryForm;
using curvecert::QPoly;
using curvecert::Rational;

inline QPoly qpoly(std::vector<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

// binary form from ascending affine coefficients, formal degree = len-1
inline BinaryForm bform(std::vector<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    int d = (int)v.size() - 1;
    return BinaryForm(d, std::move(v));
}

inline BinaryForm bform_deg(int degree, std::vector<long> affine) {
    return BinaryForm::from_affine(qpoly(std::move(affine)), degree);
}

// random integer polynomial of exact degree d with coefficients in [-bound, bound]
inline QPoly random_qpoly(std::mt19937_64& rng, int d, long bound = 9) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Rational> v((size_t)d + 1);
    for (int i = 0; i <= d; ++i) v[(size_t)i] = Rational(dist(rng));
    while (curvecert::sign(v[(size_t)d]) == 0) v[(size_t)d] = Rational(dist(rng));
    return QPoly(std::move(v));
}

inline BinaryForm random_bform(std::mt19937_64& rng, int d, long bound = 9) {
    return BinaryForm::from_affine(random_qpoly(rng, d, bound), d);
}

// product of d random linear factors with distinct small rational roots:
// guaranteed real-rooted with simple roots
inline BinaryForm random_real_rooted(std::mt19937_64& rng, int d, long spread = 30) {
    std::uniform_int_distribution<long> num(-spread, spread);
    std::vector<long> used;
    BinaryForm f = BinaryForm::constant(Rational(1));
    while ((int)used.size() < d) {
        long r = num(rng);
        bool dup = false;
        for (long u : used) dup |= (u == r);
        if (dup) continue;
        used.push_back(r);
        f = f * BinaryForm::linear_root(Rational(r, 2));
    }
    return f;
}

} // namespace cctest

#endif
