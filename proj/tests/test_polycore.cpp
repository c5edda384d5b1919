#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvecert/binary_form.hpp"
#include "curvecert/matrix.hpp"
#include "curvecert/qinterval.hpp"
#include "curvecert/sturm.hpp"
#include "test_helpers.hpp"

#ifdef CURVECERT_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

using namespace curvecert;
using cctest::bform;
using cctest::bform_deg;
using cctest::qpoly;

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_from_string("-7/21") == Rational(-1, 3));
    CHECK(rational_from_string("5") == Rational(5));
    CHECK(rational_to_string(Rational(-1, 3)) == "-1/3");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK(rational_to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(rational_to_decimal(Rational(-5, 2), 2) == "-2.50");
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}

TEST_CASE("interval arithmetic is conservative at random rational points") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int iter = 0; iter < 100; ++iter) {
        Rational a(dist(rng), 7), b(dist(rng), 5);
        QInterval ia(a - Rational(1, 3), a + Rational(1, 2));
        QInterval ib(b - Rational(1, 4), b + Rational(1, 5));
        QInterval sum = ia + ib, prod = ia * ib, diff = ia - ib;
        CHECK(sum.contains(a + b));
        CHECK(prod.contains(a * b));
        CHECK(diff.contains(a - b));
        CHECK(ipow(ia, 3).contains(a * a * a));
        CHECK(ipow(ia, 4).contains(a * a * a * a));
    }
}

TEST_CASE("poly divmod and gcd") {
    QPoly f = qpoly({-2, 5, -4, 1}); // (t-1)^2 (t-2)
    QPoly g = qpoly({-1, 1});        // t - 1
    auto [q, r] = poly_divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == qpoly({2, -3, 1}));
    CHECK(poly_gcd(f, f.derivative()) == poly_monic(qpoly({-1, 1})));
}

TEST_CASE("squarefree decomposition reference cases") {
    // (s1-s0)^2 (s1^2+s0^2): affine (t-1)^2 (t^2+1)
    BinaryForm f = bform({-1, 1}).pow(2) * bform({1, 0, 1});
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    bool saw1 = false, saw2 = false;
    for (const auto& [fac, mult] : dec) {
        if (mult == 2) {
            CHECK(fac.proportional_to(bform({-1, 1})));
            saw2 = true;
        }
        if (mult == 1) {
            CHECK(fac.proportional_to(bform({1, 0, 1})));
            saw1 = true;
        }
    }
    CHECK(saw1);
    CHECK(saw2);
}

TEST_CASE("squarefree decomposition of the paper quartic section") {
    // -2a^4 + 4a^3 b - 6a^2 b^2 + 4 a b^3 - 2 b^4 = -2 (a^2 - a b + b^2)^2.
    // Affine chart a = 1 means coefficients ascend in b.
    BinaryForm f = bform({-2, 4, -6, 4, -2});
    BinaryForm sq = bform({1, -1, 1}); // a^2 - ab + b^2 with coefficients ascending in b
    CHECK((sq * sq).scaled(Rational(-2)) == f);
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].second == 2);
    CHECK(dec[0].first.proportional_to(sq));
    CHECK(weight_of_form(f) == 2);
}

TEST_CASE("squarefree decomposition: squarefree input and reconstruction property") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        int d = 1 + (int)(rng() % 6);
        BinaryForm f = cctest::random_bform(rng, d);
        if (f.is_zero()) continue;
        auto dec = squarefree_decomposition(f);
        BinaryForm prod = BinaryForm::constant(Rational(1));
        for (const auto& [fac, mult] : dec) prod = prod * fac.pow((unsigned)mult);
        // pad to the formal degree of f (scalar factors never matter)
        BinaryForm padded = BinaryForm::from_affine(prod.affine(), f.degree());
        CHECK(padded.proportional_to(f));
        // radical degree bookkeeping: deg f - deg(radical) = sum (mult-1) deg(factor)
        int rad = 0, defect = 0;
        for (const auto& [fac, mult] : dec) {
            rad += fac.degree();
            defect += (mult - 1) * fac.degree();
        }
        CHECK(f.degree() == rad + defect);
        // independent radical: f / gcd(f, f') in the form sense
        BinaryForm g0 = f.derivative_s0(), g1 = f.derivative_s1();
        if (!g0.is_zero() || !g1.is_zero()) {
            BinaryForm tangency = form_gcd(g0, g1);
            CHECK(tangency.degree() == defect);
        }
    }
}

TEST_CASE("projective root counting reference cases") {
    CHECK(count_real_projective_roots(bform({1, 0, 1})) == 0);     // 1 + t^2
    CHECK(count_real_projective_roots(bform({0, -4, 0, 1})) == 3); // (t^2-4)t
    // (t^2-1)(t-3)
    BinaryForm p = bform({-1, 0, 1}) * bform({-3, 1});
    CHECK(count_real_projective_roots(p) == 3);
    // root at infinity: formal degree 2 homogenization of 2t = 2 s0 s1
    CHECK(count_real_projective_roots(bform_deg(2, {0, 2})) == 2);
    // s0 s1 (s1 - s0)
    BinaryForm f = bform_deg(3, {0, 1, -1});
    CHECK(f.infinity_multiplicity() == 1);
    CHECK(count_real_projective_roots(f) == 3);
}

TEST_CASE("root isolation isolates and counts") {
    BinaryForm f = bform({0, -4, 0, 1}); // roots -2, 0, 2
    auto roots = isolate_real_projective_roots(f);
    REQUIRE(roots.size() == 3);
    Rational want[3] = {Rational(-2), Rational(0), Rational(2)};
    for (int i = 0; i < 3; ++i) {
        CHECK(!roots[(size_t)i].at_infinity);
        CHECK(roots[(size_t)i].lo < want[i]);
        CHECK(want[i] < roots[(size_t)i].hi);
    }
    auto roots2 = isolate_real_projective_roots(bform_deg(3, {0, 1, -1}));
    REQUIRE(roots2.size() == 3);
    CHECK(roots2.back().at_infinity);
}

#ifdef CURVECERT_HAVE_EIGEN
namespace {
// Floating-point root count via companion-matrix eigenvalues. Returns -1
// when the numerics are too ambiguous to act as an oracle (close roots or
// near-real complex pairs).
int float_distinct_real_roots(const QPoly& p) {
    QPoly sf = p;
    {
        QPoly g = poly_gcd(p, p.derivative());
        if (g.degree() > 0) sf = poly_divmod(p, g).first;
    }
    int n = sf.degree();
    if (n <= 0) return 0;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    double lead = sf.lc().get_d();
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -sf[(size_t)i].get_d() / lead;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    std::vector<double> reals;
    double imag_tol = 1e-7, sep_tol = 1e-6;
    for (int i = 0; i < n; ++i) {
        double re = es.eigenvalues()[i].real(), im = es.eigenvalues()[i].imag();
        if (std::abs(im) < imag_tol) reals.push_back(re);
        else if (std::abs(im) < 1e-3) return -1; // ambiguous
    }
    std::sort(reals.begin(), reals.end());
    for (size_t i = 1; i < reals.size(); ++i)
        if (reals[i] - reals[i - 1] < sep_tol) return -1; // not well separated
    return (int)reals.size();
}
} // namespace

TEST_CASE("Sturm count agrees with a floating-point oracle on random forms") {
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int d = 1 + (int)(rng() % 8);
        QPoly p = cctest::random_qpoly(rng, d);
        int oracle = float_distinct_real_roots(p);
        if (oracle < 0) continue; // oracle abstains on ill-separated roots
        ++checked;
        CHECK(SturmChain(p).count_all() == oracle);
    }
    CHECK(checked > 700); // the oracle must participate in most cases
}
#endif

TEST_CASE("rational kernel and rank") {
    Matrix<Rational> m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    CHECK(rational_rank(m) == 1);
    auto basis = rational_kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis)
        CHECK(sign(v[0] * 1 + v[1] * 2 + v[2] * 3) == 0);
}

TEST_CASE("bareiss determinant matches cofactor expansion on small random matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int iter = 0; iter < 50; ++iter) {
        size_t n = 3;
        Matrix<Rational> m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = Rational(dist(rng));
        Rational det =
            m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
            m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
            m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        CHECK(bareiss_determinant(m) == det);
    }
}

TEST_CASE("mobius substitution preserves root structure") {
    BinaryForm f = bform({-2, 1}) * bform({3, 1}) * bform({0, 1});
    BinaryForm g = f.mobius(Rational(2), Rational(1), Rational(1), Rational(1));
    CHECK(g.degree() == f.degree());
    CHECK(count_real_projective_roots(g) == 3);
    CHECK(weight_of_form(g) == 0);
}
