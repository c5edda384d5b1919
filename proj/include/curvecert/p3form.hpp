#ifndef CURVECERT_P3FORM_HPP
#define CURVECERT_P3FORM_HPP

#include <array>
#include <map>
#include <string>

#include "curvecert/biform.hpp"
#include "curvecert/rational.hpp"

namespace curvecert {

// Homogeneous polynomial in the P3 coordinates x0..x3, sparse.
class P3Form {
public:
    using Expo = std::array<int, 4>;

    P3Form() = default;

    static P3Form monomial(const Expo& e, const Rational& c);
    static P3Form variable(int i) {
        Expo e{0, 0, 0, 0};
        e[(size_t)i] = 1;
        return monomial(e, Rational(1));
    }

    bool is_zero() const { return terms_.empty(); }
    // common total degree; throws NotHomogeneous if terms disagree
    int degree() const;

    P3Form operator+(const P3Form& o) const;
    P3Form operator-(const P3Form& o) const;
    P3Form operator*(const P3Form& o) const;
    P3Form scaled(const Rational& k) const;

    const std::map<Expo, Rational>& terms() const { return terms_; }

    std::string to_string() const;

private:
    std::map<Expo, Rational> terms_;
};

// Substitute the Segre coordinates x = (s0 t0, s0 t1, s1 t0, s1 t1).
// A degree-k form pulls back to bidegree (k, k); the map is a ring
// homomorphism and kills exactly the ideal of the quadric x0 x3 - x1 x2.
BiForm segre_pullback(const P3Form& f);

} // namespace curvecert

#endif
