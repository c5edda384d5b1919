#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvecert/param_poly.hpp"
#include "curvecert/sturm.hpp"
#include "curvecert/subresultant.hpp"
#include "test_helpers.hpp"

using namespace curvecert;
using cctest::bform;
using cctest::bform_deg;
using cctest::qpoly;

namespace {

// reference: full principal subresultant vector by minors
std::vector<Rational> psc_by_minors(const std::vector<Rational>& a, int p,
                                    const std::vector<Rational>& b, int q) {
    std::vector<Rational> out((size_t)q + 1);
    for (int k = 0; k <= q; ++k) out[(size_t)k] = detail::psc_minor(a, p, b, q, k);
    return out;
}

// both vectors must agree up to one nonzero rational scalar per index
void check_match_up_to_scalar(const std::vector<Rational>& got, const std::vector<Rational>& ref) {
    REQUIRE(got.size() == ref.size());
    for (size_t k = 0; k < got.size(); ++k) {
        bool gz = sign(got[k]) == 0, rz = sign(ref[k]) == 0;
        INFO("index ", k);
        CHECK(gz == rz);
    }
}

std::vector<Rational> coeffs_of(const BinaryForm& f) { return f.coeffs(); }

} // namespace

TEST_CASE("principal subresultants: gcd degree on reference cases") {
    // f = (t-1)^2 (t-2), g = f'
    BinaryForm f = bform({-1, 1}).pow(2) * bform({-2, 1});
    BinaryForm fp = BinaryForm::from_affine(f.affine().derivative(), 2);
    auto s = principal_subresultants(f, fp);
    REQUIRE(s.size() == 3);
    CHECK(sign(s[0]) == 0);
    CHECK(sign(s[1]) != 0);

    // coprime pair
    BinaryForm a = bform({-1, 0, 1}), b = bform({1, 1, 1});
    auto s2 = principal_subresultants(a, b);
    CHECK(sign(s2[0]) != 0);
}

TEST_CASE("principal subresultants: the doubled complex pair has gcd degree 2") {
    BinaryForm f = bform({-2, 4, -6, 4, -2}); // -2 (a^2-ab+b^2)^2
    BinaryForm fp = BinaryForm::from_affine(f.affine().derivative(), 3);
    auto s = principal_subresultants(f, fp);
    REQUIRE(s.size() == 4);
    CHECK(sign(s[0]) == 0);
    CHECK(sign(s[1]) == 0);
    CHECK(sign(s[2]) != 0);
    // independent check via explicit gcd
    CHECK(form_gcd_degree(f, fp) == 2);
}

TEST_CASE("PRS subresultants match the determinantal definition on random pairs") {
    std::mt19937_64 rng(314159);
    int tested = 0;
    for (int iter = 0; iter < 400; ++iter) {
        int p = 2 + (int)(rng() % 5);
        int q = 1 + (int)(rng() % p);
        if (q > p) continue;
        QPoly a = cctest::random_qpoly(rng, p), b = cctest::random_qpoly(rng, q);
        // plant a common factor half the time to exercise vanishing tails
        if (iter % 2 == 0) {
            QPoly c = cctest::random_qpoly(rng, 1 + (int)(rng() % 2));
            a = a * c;
            b = b * c;
            p = a.degree();
            q = b.degree();
        }
        if (p < q) { std::swap(a, b); std::swap(p, q); }
        auto got = formal_principal_subresultants(a.coeffs(), p, b.coeffs(), q);
        auto ref = psc_by_minors(a.coeffs(), p, b.coeffs(), q);
        check_match_up_to_scalar(got, ref);
        ++tested;
    }
    CHECK(tested > 300);
}

TEST_CASE("formal-degree subresultants with zero tops (roots at infinity)") {
    std::mt19937_64 rng(2718);
    for (int iter = 0; iter < 300; ++iter) {
        int p = 2 + (int)(rng() % 4);
        int q = 1 + (int)(rng() % p);
        if (q > p) continue;
        int pad_a = (int)(rng() % 2), pad_b = (int)(rng() % 3);
        QPoly a = cctest::random_qpoly(rng, p - std::min(p - 1, pad_a));
        QPoly b = cctest::random_qpoly(rng, std::max(0, q - pad_b));
        BinaryForm fa = BinaryForm::from_affine(a, p), fb = BinaryForm::from_affine(b, q);
        auto got = formal_principal_subresultants(fa.coeffs(), p, fb.coeffs(), q);
        bool both_inf = fa.vanishes_at_infinity() && fb.vanishes_at_infinity();
        if (!both_inf) {
            auto ref = psc_by_minors(fa.coeffs(), p, fb.coeffs(), q);
            check_match_up_to_scalar(got, ref);
        }
        // soundness in every case: a nonzero coefficient bounds the gcd degree
        int g = form_gcd_degree(fa, fb);
        int limit = p == q ? q - 1 : q;
        for (int k = 0; k <= limit; ++k)
            if (sign(got[(size_t)k]) != 0) {
                INFO("k=", k, " a=", fa.to_string(), " b=", fb.to_string());
                CHECK(g <= k);
            }
        // exactness: the first nonzero index is the gcd degree
        int mink = -1;
        for (int k = 0; k <= limit; ++k)
            if (sign(got[(size_t)k]) != 0) { mink = k; break; }
        if (g <= limit) CHECK(mink == g);
    }
}

TEST_CASE("equal formal degrees: head reduction agrees with minors") {
    std::mt19937_64 rng(5551);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + (int)(rng() % 4);
        QPoly a = cctest::random_qpoly(rng, n), b = cctest::random_qpoly(rng, n);
        if (iter % 3 == 0) { // plant a common factor
            QPoly c = cctest::random_qpoly(rng, 1);
            a = a * c;
            b = b * c;
            n = a.degree();
        }
        if (iter % 5 == 0) b = cctest::random_qpoly(rng, n - 1); // padded top
        BinaryForm fa = BinaryForm::from_affine(a, n), fb = BinaryForm::from_affine(b, n);
        auto got = formal_principal_subresultants(fa.coeffs(), n, fb.coeffs(), n);
        if (!(fa.vanishes_at_infinity() && fb.vanishes_at_infinity())) {
            auto ref = psc_by_minors(fa.coeffs(), n, fb.coeffs(), n);
            REQUIRE(got.size() == ref.size());
            for (size_t k = 0; k + 1 < got.size(); ++k) {
                INFO("index ", k);
                CHECK((sign(got[k]) == 0) == (sign(ref[k]) == 0));
            }
        }
        int g = form_gcd_degree(fa, fb);
        int mink = -1;
        for (int k = 0; k <= n - 1; ++k)
            if (sign(got[(size_t)k]) != 0) { mink = k; break; }
        if (g <= n - 1) {
            INFO("a=", fa.to_string(), " b=", fb.to_string());
            CHECK(mink == g);
        }
    }
}

TEST_CASE("min nonzero subresultant index equals form gcd degree") {
    std::mt19937_64 rng(10007);
    for (int iter = 0; iter < 300; ++iter) {
        int da = 1 + (int)(rng() % 3), db = 1 + (int)(rng() % 3);
        int common = (int)(rng() % 3);
        BinaryForm a = cctest::random_bform(rng, da);
        BinaryForm b = cctest::random_bform(rng, db);
        BinaryForm c = common > 0 ? cctest::random_real_rooted(rng, common) : BinaryForm::constant(Rational(1));
        a = a * c;
        b = b * c;
        if (a.is_zero() || b.is_zero()) continue;
        if (a.degree() < b.degree()) std::swap(a, b);
        int g = form_gcd_degree(a, b);
        auto s = principal_subresultants(a, b);
        int mink = -1;
        int limit = a.degree() == b.degree() ? (int)s.size() - 2 : (int)s.size() - 1;
        for (int k = 0; k <= limit; ++k)
            if (sign(s[(size_t)k]) != 0) { mink = k; break; }
        if (mink >= 0) {
            INFO("a = ", a.to_string(), " b = ", b.to_string());
            CHECK(mink == g);
        } else {
            CHECK(g > limit);
        }
    }
}

TEST_CASE("subresultants over the parameter ring specialize correctly") {
    // a(x) = x^3 + l0 x + l1, b = da/dx; sres_k specialization at random
    // rational lambda must match the scalar computation.
    ParamPoly l0 = ParamPoly::variable(0), l1 = ParamPoly::variable(1);
    std::vector<ParamPoly> av = {l1, l0, ParamPoly(0), ParamPoly(1)};
    std::vector<ParamPoly> bv = {l0, ParamPoly(0), ParamPoly(3)};
    auto sres = formal_principal_subresultants(av, 3, bv, 2);
    REQUIRE(sres.size() == 3);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> dist(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        std::array<Rational, 4> pt{Rational(dist(rng)), Rational(dist(rng)), Rational(0), Rational(0)};
        std::vector<Rational> a{pt[1], pt[0], Rational(0), Rational(1)};
        std::vector<Rational> b{pt[0], Rational(0), Rational(3)};
        auto scalar = psc_by_minors(a, 3, b, 2);
        for (size_t k = 0; k < 3; ++k) {
            Rational lhs = sres[k].eval(pt);
            INFO("k = ", k);
            CHECK((sign(lhs) == 0) == (sign(scalar[k]) == 0));
        }
    }
}

TEST_CASE("wronskian reference cases") {
    // basis 1, t, t^2, t^3 as degree-3 forms: nonzero constant
    std::vector<BinaryForm> basis;
    for (int k = 0; k <= 3; ++k) basis.push_back(BinaryForm::monomial(3, k));
    BinaryForm w = wronskian(basis);
    CHECK(w.degree() == 0);
    CHECK(sign(w.coeff(0)) != 0);

    // linearly dependent forms
    std::vector<BinaryForm> dep = {bform({1, 1, 0}), bform({2, 2, 0}), bform({0, 0, 1})};
    CHECK(wronskian(dep).is_zero());

    // 1, t, t^2, t^4 as degree-4 forms: affine part constant * t; the
    // projective Wronskian also vanishes at infinity, where the section
    // s0^4 has its fourfold root.
    std::vector<BinaryForm> gap = {BinaryForm::monomial(4, 0), BinaryForm::monomial(4, 1),
                                   BinaryForm::monomial(4, 2), BinaryForm::monomial(4, 4)};
    BinaryForm wg = wronskian(gap);
    CHECK(wg.degree() == 4);
    CHECK(wg.affine().degree() == 1);
    CHECK(sign(wg.affine().coeff(0)) == 0); // affine part = c*t
    CHECK(count_real_projective_roots(wg) == 2);
    auto iso = isolate_real_projective_roots(wg);
    REQUIRE(iso.size() == 2);
    CHECK(!iso[0].at_infinity);
    CHECK(iso[0].lo < 0);
    CHECK(0 < iso[0].hi);
    CHECK(iso[1].at_infinity);

    // mismatched degrees
    std::vector<BinaryForm> bad = {bform({1, 1}), bform({1, 0, 1})};
    CHECK_THROWS_AS(wronskian(bad), DegreeMismatchError);
}

TEST_CASE("resultant multiplicativity and symmetry via minors") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 60; ++iter) {
        QPoly f = cctest::random_qpoly(rng, 2), g = cctest::random_qpoly(rng, 2), h = cctest::random_qpoly(rng, 2);
        QPoly fg = f * g;
        auto res = [&](const QPoly& x, const QPoly& y) {
            return detail::psc_minor(x.coeffs(), x.degree(), y.coeffs(), y.degree(), 0);
        };
        CHECK(res(fg, h) == res(f, h) * res(g, h));
        Rational r1 = res(f, g), r2 = res(g, f);
        CHECK((r1 == r2 || r1 == -r2));
    }
}
