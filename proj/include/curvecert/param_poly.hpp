#ifndef CURVECERT_PARAM_POLY_HPP
#define CURVECERT_PARAM_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "curvecert/poly.hpp"
#include "curvecert/qinterval.hpp"

namespace curvecert {

// Sparse polynomial in the hyperplane parameters l0..l3 with rational
// coefficients. Exponents are packed 8 bits per variable (ample: the
// certification chains stay well below degree 255 per variable).
//
// Interval evaluation over a box is conservative: the true range over the
// box is contained in the returned interval. With rational endpoints the
// per-term arithmetic itself is exact.
class ParamPoly {
public:
    static constexpr int kVars = 4;
    using Expo = std::array<uint8_t, kVars>;

    ParamPoly() = default;
    ParamPoly(long v) { // NOLINT: implicit by design, mirrors scalar ring use
        if (v != 0) terms_[0] = Rational(v);
    }
    explicit ParamPoly(const Rational& v) {
        if (sign(v) != 0) terms_[0] = v;
    }
    static ParamPoly variable(int i);
    static ParamPoly monomial(const Expo& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly scaled(const Rational& k) const;

    // exact division; throws unless o divides *this
    ParamPoly exact_div(const ParamPoly& o) const;

    Rational eval(const std::array<Rational, kVars>& x) const;
    QInterval eval_box(const std::array<QInterval, kVars>& box) const;

    // substitute variable i := value (removes the variable)
    ParamPoly substitute(int var, const Rational& value) const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

    const std::map<uint32_t, Rational>& terms() const { return terms_; }

private:
    static uint32_t pack(const Expo& e);
    static Expo unpack(uint32_t k);
    void prune();

    std::map<uint32_t, Rational> terms_;
};

inline bool ring_is_zero(const ParamPoly& p) { return p.is_zero(); }
inline ParamPoly ring_neg(const ParamPoly& p) { return -p; }
inline ParamPoly ring_exact_div(const ParamPoly& a, const ParamPoly& b) { return a.exact_div(b); }

template <>
struct RingTraits<ParamPoly> {
    static ParamPoly from_long(long v) { return ParamPoly(v); }
};

using ParamSection = Poly<ParamPoly>; // form in s with lambda-polynomial coefficients

} // namespace curvecert

#endif
