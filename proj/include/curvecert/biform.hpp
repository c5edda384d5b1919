#ifndef CURVECERT_BIFORM_HPP
#define CURVECERT_BIFORM_HPP

#include <string>
#include <vector>

#include "curvecert/binary_form.hpp"
#include "curvecert/qinterval.hpp"

namespace curvecert {

// Bihomogeneous polynomial on P1 x P1 of bidegree (a, b): degree a in
// (s0, s1) and b in (t0, t1). Coefficient (i, j) multiplies
// s0^(a-i) s1^i t0^(b-j) t1^j.
//
// Convention fixed once: the paper's homology/Picard class (m, n) of a
// curve of bidegree (a, b) is (m, n) = (b, a) -- vertical-line count
// first, horizontal-line count second. Reports use the paper ordering.
class BiForm {
public:
    BiForm() : a_(0), b_(0), c_(1, Rational(0)) {}
    BiForm(int a, int b) : a_(a), b_(b), c_((size_t)(a + 1) * (size_t)(b + 1), Rational(0)) {}
    BiForm(int a, int b, std::vector<Rational> coeffs);

    int deg_s() const { return a_; }
    int deg_t() const { return b_; }
    std::pair<int, int> bidegree() const { return {a_, b_}; }

    const Rational& at(int i, int j) const { return c_[(size_t)i * (size_t)(b_ + 1) + (size_t)j]; }
    Rational& at(int i, int j) { return c_[(size_t)i * (size_t)(b_ + 1) + (size_t)j]; }
    const std::vector<Rational>& raw() const { return c_; }

    bool is_zero() const;

    BiForm operator+(const BiForm& o) const;
    BiForm operator-(const BiForm& o) const;
    BiForm operator-() const;
    BiForm operator*(const BiForm& o) const;
    BiForm scaled(const Rational& k) const;

    BiForm derivative_s0() const;
    BiForm derivative_s1() const;
    BiForm derivative_t0() const;
    BiForm derivative_t1() const;

    // coefficient of t0^(b-j) t1^j as a degree-a form in s
    BinaryForm t_coefficient(int j) const;
    // coefficient of s0^(a-i) s1^i as a degree-b form in t
    BinaryForm s_coefficient(int i) const;

    // restriction to a fiber: fixed s gives a form in t, and vice versa
    BinaryForm fiber_at_s(const Rational& s0, const Rational& s1) const;
    BinaryForm fiber_at_t(const Rational& t0, const Rational& t1) const;

    Rational eval(const Rational& s0, const Rational& s1,
                  const Rational& t0, const Rational& t1) const;
    QInterval eval(const QInterval& s0, const QInterval& s1,
                   const QInterval& t0, const QInterval& t1) const;

    BiForm transposed() const;  // swap the two factors: bidegree (b, a)
    BiForm s_swapped() const;   // s0 <-> s1
    BiForm t_swapped() const;   // t0 <-> t1

    // substitute (t0, t1) -> (p t0 + q t1, r t0 + w t1)
    BiForm mobius_t(const Rational& p, const Rational& q,
                    const Rational& r, const Rational& w) const;
    BiForm mobius_s(const Rational& p, const Rational& q,
                    const Rational& r, const Rational& w) const;

    BiForm normalized() const;
    bool proportional_to(const BiForm& o) const;

    bool operator==(const BiForm& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

    std::string to_string() const;

private:
    int a_, b_;
    std::vector<Rational> c_;
};

// Homogeneous resultant eliminating the t factor: a binary form in s of
// degree af*bg + ag*bf. Identically zero iff f and g share a factor that
// involves t (callers raise CommonComponent). Formal t-degrees are used,
// so fibers at t-infinity are handled without chart flips.
BinaryForm resultant_t(const BiForm& f, const BiForm& g);
BinaryForm resultant_s(const BiForm& f, const BiForm& g);

enum class Axis { S, T };

// spec-facing wrapper: eliminate the named axis
BinaryForm binary_resultant(const BiForm& f, const BiForm& g, Axis eliminate);

} // namespace curvecert

#endif
