#include "curvecert/binary_form.hpp"

#include <sstream>

namespace curvecert {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : d_(degree), c_(std::move(coeffs)) {
    if (d_ < 0 || c_.size() != (size_t)d_ + 1)
        throw Error("BinaryForm: coefficient count must be degree + 1");
}

BinaryForm BinaryForm::from_affine(const QPoly& affine, int degree) {
    if (affine.degree() > degree)
        throw DegreeMismatchError("from_affine: affine degree exceeds formal degree");
    std::vector<Rational> c((size_t)degree + 1, Rational(0));
    for (int k = 0; k <= affine.degree(); ++k) c[(size_t)k] = affine[(size_t)k];
    return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::linear_root(const Rational& r) {
    return BinaryForm(1, {-r, Rational(1)});
}

BinaryForm BinaryForm::monomial(int degree, int k, const Rational& coeff) {
    std::vector<Rational> c((size_t)degree + 1, Rational(0));
    c[(size_t)k] = coeff;
    return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
    for (const auto& q : c_)
        if (sign(q) != 0) return false;
    return true;
}

QPoly BinaryForm::affine() const { return QPoly(c_); }

QPoly BinaryForm::affine_flipped() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return QPoly(std::move(r));
}

int BinaryForm::infinity_multiplicity() const {
    if (is_zero()) throw ZeroFormError();
    return d_ - affine().degree();
}

Rational BinaryForm::eval(const Rational& s0, const Rational& s1) const {
    // Horner in s1/s0 would divide; expand the two power ladders instead.
    Rational acc(0), p1(1);
    std::vector<Rational> pow0((size_t)d_ + 1);
    pow0[0] = 1;
    for (int i = 1; i <= d_; ++i) pow0[(size_t)i] = pow0[(size_t)i - 1] * s0;
    for (int k = 0; k <= d_; ++k) {
        if (sign(c_[(size_t)k]) != 0) acc += c_[(size_t)k] * pow0[(size_t)(d_ - k)] * p1;
        p1 *= s1;
    }
    return acc;
}

QInterval BinaryForm::eval(const QInterval& s0, const QInterval& s1) const {
    QInterval acc;
    std::vector<QInterval> pow0((size_t)d_ + 1);
    pow0[0] = QInterval(Rational(1));
    for (int i = 1; i <= d_; ++i) pow0[(size_t)i] = pow0[(size_t)i - 1] * s0;
    QInterval p1(Rational(1));
    for (int k = 0; k <= d_; ++k) {
        acc = acc + QInterval(c_[(size_t)k]) * pow0[(size_t)(d_ - k)] * p1;
        p1 = p1 * s1;
    }
    return acc;
}

BinaryForm BinaryForm::derivative_s0() const {
    if (d_ == 0) return BinaryForm();
    std::vector<Rational> c((size_t)d_, Rational(0));
    for (int k = 0; k <= d_ - 1; ++k) c[(size_t)k] = Rational(d_ - k) * c_[(size_t)k];
    return BinaryForm(d_ - 1, std::move(c));
}

BinaryForm BinaryForm::derivative_s1() const {
    if (d_ == 0) return BinaryForm();
    std::vector<Rational> c((size_t)d_, Rational(0));
    for (int k = 1; k <= d_; ++k) c[(size_t)k - 1] = Rational(k) * c_[(size_t)k];
    return BinaryForm(d_ - 1, std::move(c));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (d_ != o.d_) throw DegreeMismatchError("BinaryForm::operator+: degrees differ");
    std::vector<Rational> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return BinaryForm(d_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& q : c) q = -q;
    return BinaryForm(d_, std::move(c));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (is_zero() || o.is_zero()) return BinaryForm();
    std::vector<Rational> c((size_t)(d_ + o.d_) + 1, Rational(0));
    for (int i = 0; i <= d_; ++i) {
        if (sign(c_[(size_t)i]) == 0) continue;
        for (int j = 0; j <= o.d_; ++j) c[(size_t)(i + j)] += c_[(size_t)i] * o.c_[(size_t)j];
    }
    return BinaryForm(d_ + o.d_, std::move(c));
}

BinaryForm BinaryForm::scaled(const Rational& k) const {
    if (sign(k) == 0) return BinaryForm();
    std::vector<Rational> c = c_;
    for (auto& q : c) q *= k;
    return BinaryForm(d_, std::move(c));
}

BinaryForm BinaryForm::pow(unsigned e) const {
    BinaryForm r = BinaryForm::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

BinaryForm BinaryForm::swapped() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return BinaryForm(d_, std::move(c));
}

BinaryForm BinaryForm::mobius(const Rational& a, const Rational& b,
                              const Rational& c, const Rational& d) const {
    // power tables for (a s0 + b s1)^i and (c s0 + d s1)^i as degree-i forms
    std::vector<BinaryForm> pa, pc;
    pa.push_back(BinaryForm::constant(Rational(1)));
    pc.push_back(BinaryForm::constant(Rational(1)));
    BinaryForm la(1, {a, b}), lc(1, {c, d});
    for (int i = 1; i <= d_; ++i) {
        pa.push_back(pa.back() * la);
        pc.push_back(pc.back() * lc);
    }
    BinaryForm acc;
    for (int k = 0; k <= d_; ++k) {
        if (sign(c_[(size_t)k]) == 0) continue;
        BinaryForm term = (pa[(size_t)(d_ - k)] * pc[(size_t)k]).scaled(c_[(size_t)k]);
        acc = acc + term;
    }
    if (acc.is_zero()) return BinaryForm();
    return acc;
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return BinaryForm();
    Integer den = common_denominator(c_);
    std::vector<Rational> c = c_;
    for (auto& q : c) q *= den;
    std::vector<Rational> tmp(c.begin(), c.end());
    Integer g = integer_content(tmp);
    int top = d_;
    while (sign(c[(size_t)top]) == 0) --top;
    Rational scale = Rational(1) / Rational(g);
    if (sign(c[(size_t)top]) < 0) scale = -scale;
    for (auto& q : c) { q *= scale; q.canonicalize(); }
    return BinaryForm(d_, std::move(c));
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (d_ != o.d_) return false;
    return normalized() == o.normalized();
}

std::string BinaryForm::to_string(const std::string& v0, const std::string& v1) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= d_; ++k) {
        const Rational& q = c_[(size_t)k];
        if (sign(q) == 0) continue;
        if (!first) os << (sign(q) > 0 ? " + " : " - ");
        else if (sign(q) < 0) os << "-";
        Rational aq = rational_abs(q);
        bool has_var = k < d_ || k > 0;
        if (aq != 1 || !has_var) os << rational_to_string(aq);
        if (aq != 1 && has_var) os << "*";
        if (d_ - k > 0) { os << v0; if (d_ - k > 1) os << "^" << (d_ - k); }
        if (k > 0 && d_ - k > 0) os << "*";
        if (k > 0) { os << v1; if (k > 1) os << "^" << k; }
        first = false;
    }
    return os.str();
}

BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw Error("form_exact_div: zero divisor");
    if (f.is_zero()) return BinaryForm();
    int mu_f = f.infinity_multiplicity();
    int mu_g = g.infinity_multiplicity();
    if (mu_f < mu_g) throw Error("form_exact_div: not divisible (infinity)");
    QPoly q = poly_exact_div(f.affine(), g.affine());
    int dq = f.degree() - g.degree();
    return BinaryForm::from_affine(q, dq);
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw ZeroFormError("form_gcd(0,0)");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    QPoly ga = poly_gcd(f.affine(), g.affine());
    int mu = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
    // multiply by s0^mu: formal degree grows, affine part unchanged
    return BinaryForm::from_affine(ga, ga.degree() + mu).normalized();
}

int form_gcd_degree(const BinaryForm& f, const BinaryForm& g) {
    return form_gcd(f, g).degree();
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("squarefree_decomposition of zero form");
    std::vector<std::pair<BinaryForm, int>> out;
    int mu = f.infinity_multiplicity();
    if (mu > 0) out.emplace_back(BinaryForm(1, {Rational(1), Rational(0)}), mu); // the factor s0
    QPoly a = f.affine();
    if (a.degree() == 0) return out;

    // Yun's algorithm on the affine part
    QPoly ap = a.derivative();
    QPoly g = poly_gcd(a, ap);
    QPoly w = poly_divmod(a, g).first;      // product of distinct factors
    QPoly y = poly_divmod(ap, g).first;
    QPoly z = y - w.derivative();
    int i = 1;
    while (!(w.degree() == 0)) {
        QPoly p = poly_gcd(w, z);
        if (p.degree() > 0) out.emplace_back(BinaryForm::from_affine(p, p.degree()).normalized(), i);
        w = poly_divmod(w, p).first;
        y = poly_divmod(z, p).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

int distinct_complex_roots(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError();
    int n = 0;
    for (const auto& [fac, mult] : squarefree_decomposition(f)) {
        (void)mult;
        n += fac.degree();
    }
    return n;
}

int weight_of_form(const BinaryForm& f) {
    return f.degree() - distinct_complex_roots(f);
}

} // namespace curvecert
