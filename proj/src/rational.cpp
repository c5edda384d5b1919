#include "curvecert/rational.hpp"

#include <sstream>

namespace curvecert {

Rational rational_from_string(const std::string& s) {
    std::string t = s;
    // allow a leading '+'
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    try {
        Rational q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("cannot parse rational: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_decimal(const Rational& q, int digits) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    bool neg = sgn(num) < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Integer scaled = (num * scale * 2 + den) / (den * 2);
    Integer ip = scaled / scale;
    Integer fp = scaled % scale;
    std::ostringstream os;
    if (neg && (ip != 0 || fp != 0)) os << '-';
    os << ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        os << '.' << std::string(digits - (int)f.size(), '0') << f;
    }
    return os.str();
}

Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

Rational pow10_neg(unsigned k) {
    Integer den = 1;
    for (unsigned i = 0; i < k; ++i) den *= 10;
    return Rational(Integer(1), den);
}

Integer integer_content(const std::vector<Rational>& v) {
    Integer den = common_denominator(v);
    Integer g = 0;
    for (const auto& q : v) {
        Integer scaled = q.get_num() * (den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Integer common_denominator(const std::vector<Rational>& v) {
    Integer den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    return den;
}

} // namespace curvecert
