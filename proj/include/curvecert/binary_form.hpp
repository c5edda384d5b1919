#ifndef CURVECERT_BINARY_FORM_HPP
#define CURVECERT_BINARY_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvecert/poly.hpp"
#include "curvecert/qinterval.hpp"

namespace curvecert {

// Homogeneous polynomial in two variables (s0, s1) over the rationals.
// Coefficient k multiplies s0^(d-k) s1^k, so the dehomogenization at
// s0 = 1 reads the coefficients ascending in t = s1/s0.
//
// The degree is formal: leading or trailing coefficients may vanish.
// A vanishing top coefficient block means the form is divisible by s0,
// i.e. it has a root at infinity [0:1]. The canonical zero form has
// degree 0; is_zero() is degree-blind and zero absorbs arithmetic.
class BinaryForm {
public:
    BinaryForm() : d_(0), c_(1, Rational(0)) {}
    BinaryForm(int degree, std::vector<Rational> coeffs);

    // form of formal degree `degree` whose dehomogenization at s0=1 is `affine`
    static BinaryForm from_affine(const QPoly& affine, int degree);
    static BinaryForm constant(const Rational& v) { return BinaryForm(0, {v}); }
    // the linear form s1 - r*s0 (vanishing at the affine point r)
    static BinaryForm linear_root(const Rational& r);
    static BinaryForm monomial(int degree, int k, const Rational& coeff = Rational(1));

    int degree() const { return d_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int k) const { return c_[(size_t)k]; }
    bool is_zero() const;

    QPoly affine() const;        // f(1, t), coefficients ascending in t
    QPoly affine_flipped() const; // f(u, 1), coefficients ascending in u

    // multiplicity of the root at infinity [0:1]; 0 if f(0,1) != 0. Throws on zero form.
    int infinity_multiplicity() const;
    bool vanishes_at_infinity() const { return sign(c_.back()) == 0; }

    Rational eval(const Rational& s0, const Rational& s1) const;
    QInterval eval(const QInterval& s0, const QInterval& s1) const;

    BinaryForm derivative_s0() const;
    BinaryForm derivative_s1() const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scaled(const Rational& k) const;
    BinaryForm pow(unsigned e) const;

    // swap s0 <-> s1 (reverses the coefficient vector)
    BinaryForm swapped() const;

    // substitute (s0, s1) -> (a*s0 + b*s1, c*s0 + d*s1)
    BinaryForm mobius(const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d) const;

    // integer-primitive scalar normalization with positive highest nonzero
    // coefficient; canonical representative of the ray {c f : c != 0}
    BinaryForm normalized() const;
    bool proportional_to(const BinaryForm& o) const;

    bool operator==(const BinaryForm& o) const { return d_ == o.d_ && c_ == o.c_; }

    std::string to_string(const std::string& v0 = "s0", const std::string& v1 = "s1") const;

private:
    int d_;
    std::vector<Rational> c_;
};

// exact division of forms; throws unless g | f
BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& g);

// gcd as binary forms: accounts for common roots at infinity via the
// explicit s0-power bookkeeping. Result normalized. gcd(0,0) throws.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

// degree of gcd as forms (total tangency order shared by f and g)
int form_gcd_degree(const BinaryForm& f, const BinaryForm& g);

// Yun squarefree decomposition lifted to forms: returns pairwise coprime
// squarefree factors with multiplicities whose product reconstructs f up
// to a nonzero rational scalar. A root at infinity appears as the factor
// s0 with its multiplicity.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

// deg f - (number of distinct complex projective roots)
int weight_of_form(const BinaryForm& f);

// number of distinct complex projective roots = deg of the radical
int distinct_complex_roots(const BinaryForm& f);

inline bool ring_is_zero(const BinaryForm& f) { return f.is_zero(); }
inline BinaryForm ring_neg(const BinaryForm& f) { return -f; }
inline BinaryForm ring_exact_div(const BinaryForm& a, const BinaryForm& b) { return form_exact_div(a, b); }

template <>
struct RingTraits<BinaryForm> {
    static BinaryForm from_long(long v) { return BinaryForm::constant(Rational(v)); }
};

} // namespace curvecert

#endif
