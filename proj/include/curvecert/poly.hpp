#ifndef CURVECERT_POLY_HPP
#define CURVECERT_POLY_HPP

#include <vector>
#include <utility>

#include "curvecert/rational.hpp"

namespace curvecert {

// Ring hooks. Overload these for coefficient types that are not plain
// rationals (ParamPoly, nested Poly, ...). Division must be exact where
// the algorithms guarantee divisibility (Bareiss, subresultant PRS).
inline bool ring_is_zero(const Rational& x) { return sign(x) == 0; }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational ring_neg(const Rational& a) { return -a; }

template <class R>
struct RingTraits {
    static R from_long(long v) { return R(v); }
};

// Dense univariate polynomial over an exact ring R, coefficients ascending.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](size_t k) const { return c_[k]; }
    R coeff(size_t k) const { return k < c_.size() ? c_[k] : R(); }
    const R& lc() const { return c_.back(); }

    void normalize() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = ring_neg(x);
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<R> v(std::max(c_.size(), o.c_.size()), R());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<R> v(c_.size() + o.c_.size() - 1, R());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (ring_is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }

    Poly scaled(const R& k) const {
        Poly r = *this;
        for (auto& x : r.c_) x = x * k;
        r.normalize();
        return r;
    }

    // multiply by x^n
    Poly shifted(size_t n) const {
        if (is_zero()) return Poly();
        std::vector<R> v(n, R());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v(c_.size() - 1, R());
        for (size_t i = 1; i < c_.size(); ++i)
            v[i - 1] = c_[i] * RingTraits<R>::from_long((long)i);
        return Poly(std::move(v));
    }

    template <class V>
    V eval(const V& x) const {
        if (is_zero()) return V();
        V acc = V(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    std::vector<R> c_;
};

template <class R>
struct RingTraits<Poly<R>> {
    static Poly<R> from_long(long v) {
        return Poly<R>::constant(RingTraits<R>::from_long(v));
    }
};

// Nested-poly ring hooks: Poly<R> is itself a ring.
template <class R> bool ring_is_zero(const Poly<R>& p) { return p.is_zero(); }
template <class R> Poly<R> ring_neg(const Poly<R>& a) { return -a; }

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f  mod  g; requires deg f >= deg g.
template <class R>
Poly<R> prem(const Poly<R>& f, const Poly<R>& g) {
    int df = f.degree(), dg = g.degree();
    if (g.is_zero()) throw Error("prem: zero divisor");
    if (df < dg) return f;
    Poly<R> r = f;
    int steps = df - dg + 1;
    const R& glc = g.lc();
    while (!r.is_zero() && r.degree() >= dg) {
        Poly<R> sub = g.shifted((size_t)(r.degree() - dg)).scaled(r.lc());
        r = r.scaled(glc) - sub;
        --steps;
    }
    for (; steps > 0; --steps) r = r.scaled(glc);
    return r;
}

// Exact quotient f / g; throws if g does not divide f.
template <class R>
Poly<R> poly_exact_div(const Poly<R>& f, const Poly<R>& g) {
    if (g.is_zero()) throw Error("poly_exact_div: division by zero polynomial");
    if (f.is_zero()) return Poly<R>();
    int df = f.degree(), dg = g.degree();
    if (df < dg) throw Error("poly_exact_div: not divisible (degree)");
    std::vector<R> q((size_t)(df - dg + 1), R());
    Poly<R> r = f;
    while (!r.is_zero() && r.degree() >= dg) {
        R t = ring_exact_div(r.lc(), g.lc());
        size_t sh = (size_t)(r.degree() - dg);
        q[sh] = t;
        r = r - g.shifted(sh).scaled(t);
    }
    if (!r.is_zero()) throw Error("poly_exact_div: not divisible (remainder)");
    return Poly<R>(std::move(q));
}

template <class R> Poly<R> ring_exact_div(const Poly<R>& a, const Poly<R>& b) {
    return poly_exact_div(a, b);
}

// Field-coefficient division with remainder (R must be a field, e.g. Rational).
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const Poly<R>& f, const Poly<R>& g) {
    if (g.is_zero()) throw Error("poly_divmod: division by zero polynomial");
    Poly<R> r = f;
    int dg = g.degree();
    if (f.degree() < dg) return {Poly<R>(), f};
    std::vector<R> q((size_t)(f.degree() - dg + 1), R());
    while (!r.is_zero() && r.degree() >= dg) {
        R t = ring_exact_div(r.lc(), g.lc());
        size_t sh = (size_t)(r.degree() - dg);
        q[sh] = t;
        r = r - g.shifted(sh).scaled(t);
    }
    return {Poly<R>(std::move(q)), r};
}

using QPoly = Poly<Rational>;

inline QPoly poly_monic(const QPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.lc());
}

// Monic gcd over the rationals (Euclid). gcd(0,0) = 0.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

} // namespace curvecert

#endif
