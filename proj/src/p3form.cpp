#include "curvecert/p3form.hpp"

#include <sstream>

namespace curvecert {

P3Form P3Form::monomial(const Expo& e, const Rational& c) {
    P3Form f;
    for (int x : e)
        if (x < 0) throw Error("P3Form: negative exponent");
    if (sign(c) != 0) f.terms_[e] = c;
    return f;
}

int P3Form::degree() const {
    if (terms_.empty()) throw ZeroFormError("P3Form::degree of zero form");
    int d = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        int t = e[0] + e[1] + e[2] + e[3];
        if (d < 0) d = t;
        else if (d != t) throw NotHomogeneousError();
    }
    return d;
}

P3Form P3Form::operator+(const P3Form& o) const {
    P3Form r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sign(it->second) == 0) r.terms_.erase(it);
        }
    }
    return r;
}

P3Form P3Form::operator-(const P3Form& o) const { return *this + o.scaled(Rational(-1)); }

P3Form P3Form::operator*(const P3Form& o) const {
    P3Form r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (sign(it->second) == 0) r.terms_.erase(it);
            }
        }
    return r;
}

P3Form P3Form::scaled(const Rational& k) const {
    P3Form r;
    if (sign(k) == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
}

std::string P3Form::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        os << rational_to_string(rational_abs(c));
        for (int i = 0; i < 4; ++i) {
            if (e[(size_t)i] == 0) continue;
            os << "*x" << i;
            if (e[(size_t)i] > 1) os << "^" << e[(size_t)i];
        }
        first = false;
    }
    return os.str();
}

BiForm segre_pullback(const P3Form& f) {
    int k = f.degree(); // throws NotHomogeneous / ZeroForm as appropriate
    BiForm out(k, k);
    for (const auto& [e, c] : f.terms()) {
        // x0^e0 x1^e1 x2^e2 x3^e3 -> s0^(e0+e1) s1^(e2+e3) t0^(e0+e2) t1^(e1+e3)
        int i = e[2] + e[3]; // s1-exponent
        int j = e[1] + e[3]; // t1-exponent
        out.at(i, j) += c;
    }
    return out;
}

} // namespace curvecert
