#include "curvecert/param_poly.hpp"

#include <sstream>

namespace curvecert {

uint32_t ParamPoly::pack(const Expo& e) {
    return ((uint32_t)e[0] << 24) | ((uint32_t)e[1] << 16) | ((uint32_t)e[2] << 8) | (uint32_t)e[3];
}

ParamPoly::Expo ParamPoly::unpack(uint32_t k) {
    return {(uint8_t)(k >> 24), (uint8_t)(k >> 16), (uint8_t)(k >> 8), (uint8_t)k};
}

ParamPoly ParamPoly::variable(int i) {
    Expo e{0, 0, 0, 0};
    e[(size_t)i] = 1;
    return monomial(e, Rational(1));
}

ParamPoly ParamPoly::monomial(const Expo& e, const Rational& c) {
    ParamPoly p;
    if (sign(c) != 0) p.terms_[pack(e)] = c;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int ParamPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        (void)c;
        Expo e = unpack(k);
        d = std::max(d, (int)e[0] + e[1] + e[2] + e[3]);
    }
    return d;
}

void ParamPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sign(it->second) == 0) it = terms_.erase(it);
        else ++it;
    }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(k, c);
        if (!inserted) it->second += c;
    }
    r.prune();
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [k, c] : r.terms_) {
        (void)k;
        c = -c;
    }
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            uint32_t k = ka + kb; // packed exponent addition (no per-var overflow by invariant)
            auto [it, inserted] = r.terms_.emplace(k, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& k) const {
    if (sign(k) == 0) return ParamPoly();
    ParamPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        (void)e;
        c *= k;
    }
    return r;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& o) const {
    if (o.is_zero()) throw Error("ParamPoly::exact_div: division by zero");
    ParamPoly r = *this, q;
    uint32_t kg = o.terms_.rbegin()->first;
    Expo eg = unpack(kg);
    const Rational& cg = o.terms_.rbegin()->second;
    while (!r.is_zero()) {
        uint32_t kr = r.terms_.rbegin()->first;
        Expo er = unpack(kr);
        Expo et;
        for (int i = 0; i < kVars; ++i) {
            if (er[(size_t)i] < eg[(size_t)i]) throw Error("ParamPoly::exact_div: not divisible");
            et[(size_t)i] = (uint8_t)(er[(size_t)i] - eg[(size_t)i]);
        }
        ParamPoly t = monomial(et, r.terms_.rbegin()->second / cg);
        q = q + t;
        r = r - t * o;
    }
    return q;
}

Rational ParamPoly::eval(const std::array<Rational, kVars>& x) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Expo e = unpack(k);
        Rational t = c;
        for (int i = 0; i < kVars; ++i)
            if (e[(size_t)i] > 0) t *= rational_pow(x[(size_t)i], e[(size_t)i]);
        acc += t;
    }
    return acc;
}

QInterval ParamPoly::eval_box(const std::array<QInterval, kVars>& box) const {
    // power tables per variable
    std::array<int, kVars> maxe{0, 0, 0, 0};
    for (const auto& [k, c] : terms_) {
        (void)c;
        Expo e = unpack(k);
        for (int i = 0; i < kVars; ++i) maxe[(size_t)i] = std::max(maxe[(size_t)i], (int)e[(size_t)i]);
    }
    std::array<std::vector<QInterval>, kVars> pows;
    for (int i = 0; i < kVars; ++i) {
        pows[(size_t)i].resize((size_t)maxe[(size_t)i] + 1);
        pows[(size_t)i][0] = QInterval(Rational(1));
        for (int e = 1; e <= maxe[(size_t)i]; ++e)
            pows[(size_t)i][(size_t)e] = ipow(box[(size_t)i], (unsigned)e);
    }
    QInterval acc;
    for (const auto& [k, c] : terms_) {
        Expo e = unpack(k);
        QInterval t(c);
        for (int i = 0; i < kVars; ++i)
            if (e[(size_t)i] > 0) t = t * pows[(size_t)i][(size_t)e[(size_t)i]];
        acc = acc + t;
    }
    return acc;
}

ParamPoly ParamPoly::substitute(int var, const Rational& value) const {
    ParamPoly r;
    for (const auto& [k, c] : terms_) {
        Expo e = unpack(k);
        Rational nc = c;
        if (e[(size_t)var] > 0) {
            nc *= rational_pow(value, e[(size_t)var]);
            e[(size_t)var] = 0;
        }
        ParamPoly t = monomial(e, nc);
        r = r + t;
    }
    return r;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Expo e = unpack(it->first);
        const Rational& c = it->second;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        os << rational_to_string(rational_abs(c));
        for (int i = 0; i < kVars; ++i) {
            if (e[(size_t)i] == 0) continue;
            os << "*l" << i;
            if (e[(size_t)i] > 1) os << "^" << (int)e[(size_t)i];
        }
        first = false;
    }
    return os.str();
}

} // namespace curvecert
