#include "curvecert/sturm.hpp"

#include <deque>

namespace curvecert {

namespace {

int sign_at(const QPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    return sign(p.eval(x));
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

SturmChain::SturmChain(const QPoly& p) {
    if (p.is_zero()) throw ZeroFormError("SturmChain of zero polynomial");
    QPoly g = poly_gcd(p, p.derivative());
    sf_ = g.degree() > 0 ? poly_divmod(p, g).first : p;
    seq_.push_back(sf_);
    if (sf_.degree() >= 1) {
        seq_.push_back(sf_.derivative());
        while (seq_.back().degree() >= 1) {
            QPoly r = poly_divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break;
            seq_.push_back(-r);
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(sign_at(p, x));
    return count_variations(s);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(p.is_zero() ? 0 : sign(p.lc()));
    return count_variations(s);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) {
        if (p.is_zero()) { s.push_back(0); continue; }
        int v = sign(p.lc());
        if (p.degree() % 2 == 1) v = -v;
        s.push_back(v);
    }
    return count_variations(s);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_above(const Rational& a) const {
    return variations_at(a) - variations_pos_inf();
}

int SturmChain::count_upto(const Rational& b) const {
    return variations_neg_inf() - variations_at(b);
}

int SturmChain::count_all() const {
    return variations_neg_inf() - variations_pos_inf();
}

Rational cauchy_root_bound(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    Rational lead = rational_abs(p.lc());
    for (int i = 0; i < p.degree(); ++i)
        m = rational_max(m, rational_abs(p[(size_t)i]));
    return Rational(1) + m / lead;
}

Rational nonroot_point_between(const QPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw Error("nonroot_point_between: empty interval");
    // p has finitely many roots; walk a sequence of distinct interior points
    Rational num(1), den(2);
    for (int k = 0; k < 64; ++k) {
        Rational x = a + (b - a) * num / den;
        if (sign_at(p, x) != 0) return x;
        num = num * 2 + 1;
        den = den * 2; // 1/2, 3/4, 7/8, ... all distinct
    }
    throw Error("nonroot_point_between: could not find non-root point");
}

std::vector<RootInterval> isolate_real_roots_affine(const QPoly& p) {
    if (p.is_zero()) throw ZeroFormError("isolate_real_roots_affine of zero polynomial");
    SturmChain chain(p);
    const QPoly& f = chain.squarefree();
    std::vector<RootInterval> out;
    if (f.degree() == 0) return out;
    Rational bound = cauchy_root_bound(f);
    Rational lo = -bound, hi = bound;
    if (sign_at(f, lo) == 0) lo -= 1;
    if (sign_at(f, hi) == 0) hi += 1;
    struct Seg { Rational a, b; int n; };
    std::deque<Seg> work;
    int total = chain.count_half_open(lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rational mid = nonroot_point_between(f, s.a, s.b);
        int nl = chain.count_half_open(s.a, mid);
        if (nl > 0) work.push_back({s.a, mid, nl});
        if (s.n - nl > 0) work.push_back({mid, s.b, s.n - nl});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root_interval(const SturmChain& chain, RootInterval iv, const Rational& width) {
    const QPoly& f = chain.squarefree();
    while (iv.hi - iv.lo > width) {
        Rational mid = nonroot_point_between(f, iv.lo, iv.hi);
        if (chain.count_half_open(iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
    }
    return iv;
}

int count_real_projective_roots(const BinaryForm& f,
                                std::optional<std::pair<Rational, Rational>> range) {
    if (f.is_zero()) throw ZeroFormError("count_real_projective_roots of zero form");
    QPoly a = f.affine();
    if (range) {
        if (a.degree() <= 0) return 0;
        SturmChain chain(a);
        // endpoints may be roots; count the open interval, then add endpoints? No:
        // callers guarantee non-root endpoints; assert that.
        if (sign(a.eval(range->first)) == 0 || sign(a.eval(range->second)) == 0)
            throw Error("count_real_projective_roots: range endpoint is a root");
        return chain.count_half_open(range->first, range->second);
    }
    int n = f.infinity_multiplicity() > 0 ? 1 : 0;
    if (a.degree() >= 1) n += SturmChain(a).count_all();
    return n;
}

std::vector<ProjRoot> isolate_real_projective_roots(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("isolate_real_projective_roots of zero form");
    std::vector<ProjRoot> out;
    QPoly a = f.affine();
    if (a.degree() >= 1) {
        for (const auto& iv : isolate_real_roots_affine(a))
            out.push_back({false, iv.lo, iv.hi});
    }
    if (f.infinity_multiplicity() > 0) out.push_back({true, Rational(0), Rational(0)});
    return out;
}

} // namespace curvecert
