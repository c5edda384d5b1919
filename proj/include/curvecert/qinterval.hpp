#ifndef CURVECERT_QINTERVAL_HPP
#define CURVECERT_QINTERVAL_HPP

#include "curvecert/rational.hpp"

namespace curvecert {

// Closed interval with exact rational endpoints. Since the endpoints are
// exact, arithmetic here is conservative without any rounding control:
// the returned interval contains the true range of every operation.
struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    explicit QInterval(const Rational& v) : lo(v), hi(v) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) std::swap(lo, hi);
    }

    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    // 0 if the interval straddles zero, else the common sign.
    int definite_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}

inline QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
}

inline QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return QInterval(rational_min(rational_min(p1, p2), rational_min(p3, p4)),
                     rational_max(rational_max(p1, p2), rational_max(p3, p4)));
}

inline QInterval operator*(const Rational& c, const QInterval& a) {
    return QInterval(c * a.lo, c * a.hi);
}

inline QInterval ipow(const QInterval& a, unsigned e) {
    if (e == 0) return QInterval(Rational(1));
    if (e % 2 == 1 || !a.contains_zero()) {
        Rational l = rational_pow(a.lo, e), h = rational_pow(a.hi, e);
        return QInterval(rational_min(l, h), rational_max(l, h));
    }
    // even power over an interval straddling zero
    Rational m = rational_max(rational_pow(a.lo, e), rational_pow(a.hi, e));
    return QInterval(Rational(0), m);
}

} // namespace curvecert

#endif
