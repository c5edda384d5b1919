#include "curvecert/hyperplane.hpp"

namespace curvecert {

Hyperplane::Hyperplane(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw Error("Hyperplane: needs at least 2 coefficients");
    bool nonzero = false;
    for (const auto& q : coeffs_)
        if (sign(q) != 0) nonzero = true;
    if (!nonzero) throw Error("Hyperplane: all coefficients zero");
}

Hyperplane Hyperplane::canonical() const {
    std::vector<Rational> c = coeffs_;
    Integer den = common_denominator(c);
    for (auto& q : c) q *= den;
    Integer g = integer_content(c);
    size_t first = 0;
    while (sign(c[first]) == 0) ++first;
    Rational scale = Rational(1) / Rational(g);
    if (sign(c[first]) < 0) scale = -scale;
    for (auto& q : c) { q *= scale; q.canonicalize(); }
    return Hyperplane(std::move(c));
}

Rational Hyperplane::segre_determinant() const {
    if (coeffs_.size() != 4) throw Error("segre_determinant: hyperplane is not in P3");
    return coeffs_[0] * coeffs_[3] - coeffs_[1] * coeffs_[2];
}

BiForm Hyperplane::segre_pullback() const {
    if (coeffs_.size() != 4) throw Error("segre_pullback: hyperplane is not in P3");
    BiForm b(1, 1);
    b.at(0, 0) = coeffs_[0];
    b.at(0, 1) = coeffs_[1];
    b.at(1, 0) = coeffs_[2];
    b.at(1, 1) = coeffs_[3];
    return b;
}

bool Hyperplane::operator==(const Hyperplane& o) const {
    return canonical().coeffs() == o.canonical().coeffs();
}

} // namespace curvecert
