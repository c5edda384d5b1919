#include "curvecert/biform.hpp"

#include <sstream>

#include "curvecert/matrix.hpp"

namespace curvecert {

BiForm::BiForm(int a, int b, std::vector<Rational> coeffs) : a_(a), b_(b), c_(std::move(coeffs)) {
    if (a_ < 0 || b_ < 0 || c_.size() != (size_t)(a_ + 1) * (size_t)(b_ + 1))
        throw Error("BiForm: coefficient count must be (a+1)(b+1)");
}

bool BiForm::is_zero() const {
    for (const auto& q : c_)
        if (sign(q) != 0) return false;
    return true;
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (a_ != o.a_ || b_ != o.b_) throw BidegreeMismatchError("BiForm::operator+");
    BiForm r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

BiForm BiForm::operator-(const BiForm& o) const { return *this + (-o); }

BiForm BiForm::operator-() const {
    BiForm r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

BiForm BiForm::operator*(const BiForm& o) const {
    BiForm r(a_ + o.a_, b_ + o.b_);
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) {
            if (sign(at(i, j)) == 0) continue;
            for (int k = 0; k <= o.a_; ++k)
                for (int l = 0; l <= o.b_; ++l)
                    r.at(i + k, j + l) += at(i, j) * o.at(k, l);
        }
    return r;
}

BiForm BiForm::scaled(const Rational& k) const {
    BiForm r = *this;
    for (auto& q : r.c_) q *= k;
    return r;
}

BiForm BiForm::derivative_s0() const {
    if (a_ == 0) return BiForm(0, b_);
    BiForm r(a_ - 1, b_);
    for (int i = 0; i <= a_ - 1; ++i)
        for (int j = 0; j <= b_; ++j) r.at(i, j) = Rational(a_ - i) * at(i, j);
    return r;
}

BiForm BiForm::derivative_s1() const {
    if (a_ == 0) return BiForm(0, b_);
    BiForm r(a_ - 1, b_);
    for (int i = 1; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) r.at(i - 1, j) = Rational(i) * at(i, j);
    return r;
}

BiForm BiForm::derivative_t0() const { return transposed().derivative_s0().transposed(); }
BiForm BiForm::derivative_t1() const { return transposed().derivative_s1().transposed(); }

BinaryForm BiForm::t_coefficient(int j) const {
    std::vector<Rational> v((size_t)a_ + 1);
    for (int i = 0; i <= a_; ++i) v[(size_t)i] = at(i, j);
    return BinaryForm(a_, std::move(v));
}

BinaryForm BiForm::s_coefficient(int i) const {
    std::vector<Rational> v((size_t)b_ + 1);
    for (int j = 0; j <= b_; ++j) v[(size_t)j] = at(i, j);
    return BinaryForm(b_, std::move(v));
}

BinaryForm BiForm::fiber_at_s(const Rational& s0, const Rational& s1) const {
    std::vector<Rational> v((size_t)b_ + 1, Rational(0));
    for (int j = 0; j <= b_; ++j) v[(size_t)j] = t_coefficient(j).eval(s0, s1);
    return BinaryForm(b_, std::move(v));
}

BinaryForm BiForm::fiber_at_t(const Rational& t0, const Rational& t1) const {
    std::vector<Rational> v((size_t)a_ + 1, Rational(0));
    for (int i = 0; i <= a_; ++i) v[(size_t)i] = s_coefficient(i).eval(t0, t1);
    return BinaryForm(a_, std::move(v));
}

Rational BiForm::eval(const Rational& s0, const Rational& s1,
                      const Rational& t0, const Rational& t1) const {
    return fiber_at_s(s0, s1).eval(t0, t1);
}

QInterval BiForm::eval(const QInterval& s0, const QInterval& s1,
                       const QInterval& t0, const QInterval& t1) const {
    std::vector<QInterval> p0((size_t)a_ + 1), p1((size_t)a_ + 1), q0((size_t)b_ + 1), q1((size_t)b_ + 1);
    p0[0] = p1[0] = q0[0] = q1[0] = QInterval(Rational(1));
    for (int i = 1; i <= a_; ++i) {
        p0[(size_t)i] = p0[(size_t)i - 1] * s0;
        p1[(size_t)i] = p1[(size_t)i - 1] * s1;
    }
    for (int j = 1; j <= b_; ++j) {
        q0[(size_t)j] = q0[(size_t)j - 1] * t0;
        q1[(size_t)j] = q1[(size_t)j - 1] * t1;
    }
    QInterval acc;
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) {
            if (sign(at(i, j)) == 0) continue;
            acc = acc + QInterval(at(i, j)) * p0[(size_t)(a_ - i)] * p1[(size_t)i] * q0[(size_t)(b_ - j)] * q1[(size_t)j];
        }
    return acc;
}

BiForm BiForm::transposed() const {
    BiForm r(b_, a_);
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) r.at(j, i) = at(i, j);
    return r;
}

BiForm BiForm::s_swapped() const {
    BiForm r(a_, b_);
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) r.at(a_ - i, j) = at(i, j);
    return r;
}

BiForm BiForm::t_swapped() const {
    BiForm r(a_, b_);
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) r.at(i, b_ - j) = at(i, j);
    return r;
}

BiForm BiForm::mobius_t(const Rational& p, const Rational& q,
                        const Rational& r, const Rational& w) const {
    // power tables of the two t-linear images as binary forms in t
    std::vector<BinaryForm> pa{BinaryForm::constant(Rational(1))};
    std::vector<BinaryForm> pc{BinaryForm::constant(Rational(1))};
    BinaryForm la(1, {p, q}), lc(1, {r, w});
    for (int j = 1; j <= b_; ++j) {
        pa.push_back(pa.back() * la);
        pc.push_back(pc.back() * lc);
    }
    BiForm out(a_, b_);
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) {
            if (sign(at(i, j)) == 0) continue;
            BinaryForm tf = (pa[(size_t)(b_ - j)] * pc[(size_t)j]).scaled(at(i, j));
            if (tf.is_zero()) continue;
            for (int l = 0; l <= b_; ++l) out.at(i, l) += tf.coeff(l);
        }
    return out;
}

BiForm BiForm::mobius_s(const Rational& p, const Rational& q,
                        const Rational& r, const Rational& w) const {
    return transposed().mobius_t(p, q, r, w).transposed();
}

BiForm BiForm::normalized() const {
    if (is_zero()) return BiForm(a_, b_);
    Integer den = common_denominator(c_);
    std::vector<Rational> c = c_;
    for (auto& q : c) q *= den;
    Integer g = integer_content(c);
    size_t top = c.size();
    while (top > 0 && sign(c[top - 1]) == 0) --top;
    Rational scale = Rational(1) / Rational(g);
    if (sign(c[top - 1]) < 0) scale = -scale;
    for (auto& q : c) { q *= scale; q.canonicalize(); }
    return BiForm(a_, b_, std::move(c));
}

bool BiForm::proportional_to(const BiForm& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return normalized() == o.normalized();
}

std::string BiForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= a_; ++i)
        for (int j = 0; j <= b_; ++j) {
            const Rational& q = at(i, j);
            if (sign(q) == 0) continue;
            if (!first) os << (sign(q) > 0 ? " + " : " - ");
            else if (sign(q) < 0) os << "-";
            os << rational_to_string(rational_abs(q));
            if (a_ - i > 0) os << "*s0^" << (a_ - i);
            if (i > 0) os << "*s1^" << i;
            if (b_ - j > 0) os << "*t0^" << (b_ - j);
            if (j > 0) os << "*t1^" << j;
            first = false;
        }
    return os.str();
}

BinaryForm resultant_t(const BiForm& f, const BiForm& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroFormError("resultant_t: zero input");
    int bf = f.deg_t(), bg = g.deg_t();
    if (bf == 0 && bg == 0) throw Error("resultant_t: both inputs t-free");
    if (bf == 0) return f.t_coefficient(0).pow((unsigned)bg);
    if (bg == 0) return g.t_coefficient(0).pow((unsigned)bf);
    size_t n = (size_t)(bf + bg);
    // Bareiss over the dehomogenized (s0 = 1) entries; the homogeneous
    // resultant is recovered by formal-degree rehomogenization. A degree
    // drop in the determinant is a root of the resultant at s = infinity.
    Matrix<QPoly> m(n, n);
    for (int r = 0; r < bg; ++r)
        for (int j = 0; j <= bf; ++j) m.at((size_t)r, (size_t)(r + j)) = f.t_coefficient(j).affine();
    for (int r = 0; r < bf; ++r)
        for (int j = 0; j <= bg; ++j) m.at((size_t)(bg + r), (size_t)(r + j)) = g.t_coefficient(j).affine();
    QPoly det = bareiss_determinant(std::move(m));
    int target = f.deg_s() * bg + g.deg_s() * bf;
    if (det.is_zero()) return BinaryForm();
    return BinaryForm::from_affine(det, target);
}

BinaryForm resultant_s(const BiForm& f, const BiForm& g) {
    return resultant_t(f.transposed(), g.transposed());
}

BinaryForm binary_resultant(const BiForm& f, const BiForm& g, Axis eliminate) {
    BinaryForm r = eliminate == Axis::T ? resultant_t(f, g) : resultant_s(f, g);
    if (r.is_zero()) throw CommonComponentError("binary_resultant: inputs share a component");
    return r;
}

} // namespace curvecert
