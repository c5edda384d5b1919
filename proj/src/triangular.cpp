#include "curvecert/triangular.hpp"

#include <deque>

namespace curvecert {

ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = QPoly::constant(Rational(1)), u1;
    QPoly v0, v1 = QPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        QPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rational inv = Rational(1) / r0.lc();
    return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

BiPoly reduce_mod(const BiPoly& p, const QPoly& gamma) {
    std::vector<QPoly> c = p.coeffs();
    for (auto& x : c) x = poly_divmod(x, gamma).second;
    return BiPoly(std::move(c));
}

namespace {

struct Task {
    QPoly gamma;
    std::vector<BiPoly> polys; // reduced mod gamma
};

} // namespace

std::vector<TriangularBranch> triangular_system_gcd(const std::vector<BiPoly>& system,
                                                    const QPoly& gamma) {
    if (gamma.degree() < 1) throw Error("triangular_system_gcd: modulus must be nonconstant");
    std::vector<TriangularBranch> out;
    std::deque<Task> work;
    {
        Task t;
        t.gamma = poly_monic(gamma);
        for (const auto& p : system) t.polys.push_back(reduce_mod(p, t.gamma));
        work.push_back(std::move(t));
    }
    while (!work.empty()) {
        Task task = std::move(work.front());
        work.pop_front();
        const QPoly& g = task.gamma;

        // running gcd of the system elements mod g; split on zero divisors
        BiPoly acc;       // current gcd candidate
        bool split = false;
        size_t idx = 0;
        for (; idx < task.polys.size() && !split; ++idx) {
            BiPoly b = task.polys[idx];
            // Euclid: acc = gcd(acc, b) in (Q[s]/g)[t]
            BiPoly r0 = acc, r1 = b;
            for (;;) {
                // normalize r1's leading coefficient: drop true zeros,
                // invert units, split on zero divisors
                while (!r1.is_zero()) {
                    QPoly lc = r1.lc();
                    if (lc.is_zero()) { // structurally absent
                        std::vector<QPoly> c = r1.coeffs();
                        c.pop_back();
                        r1 = BiPoly(std::move(c));
                        continue;
                    }
                    ExtGcd e = poly_ext_gcd(lc, g);
                    if (e.g.degree() == 0) break; // invertible leading coefficient
                    if (e.g.degree() == g.degree()) {
                        // lc is 0 mod g: drop the leading term
                        std::vector<QPoly> c = r1.coeffs();
                        c.pop_back();
                        for (auto& x : c) x = poly_divmod(x, g).second;
                        r1 = BiPoly(std::move(c));
                        continue;
                    }
                    // proper zero divisor: split the modulus
                    QPoly g1 = e.g;
                    QPoly g2 = poly_divmod(g, e.g).first;
                    for (const QPoly& part : {g1, g2}) {
                        Task sub;
                        sub.gamma = poly_monic(part);
                        for (const auto& p : task.polys) sub.polys.push_back(reduce_mod(p, sub.gamma));
                        work.push_back(std::move(sub));
                    }
                    split = true;
                    break;
                }
                if (split) break;
                if (r1.is_zero()) { std::swap(r0, r1); break; } // gcd is r0... handled below
                if (r0.is_zero()) break;                        // gcd is r1
                if (r0.degree() < r1.degree()) std::swap(r0, r1);
                // r0 mod r1 with invertible lc(r1): monicize r1 then long-divide
                ExtGcd e = poly_ext_gcd(r1.lc(), g);
                QPoly inv = poly_divmod(e.u, g).second;
                BiPoly r1m = reduce_mod(r1.scaled(inv), g);
                BiPoly rem = r0;
                while (!rem.is_zero() && rem.degree() >= r1m.degree()) {
                    QPoly t = rem.lc();
                    size_t sh = (size_t)(rem.degree() - r1m.degree());
                    rem = rem - r1m.shifted(sh).scaled(t);
                    rem = reduce_mod(rem, g);
                }
                r0 = std::move(r1m);
                r1 = std::move(rem);
            }
            if (split) break;
            acc = r0.is_zero() ? r1 : r0;
            if (!acc.is_zero() && acc.degree() == 0) break; // unit gcd: system coprime here
        }
        if (split) continue;
        // monicize the branch gcd for a canonical certificate
        if (!acc.is_zero()) {
            ExtGcd e = poly_ext_gcd(acc.lc(), g);
            if (e.g.degree() == 0) {
                QPoly inv = poly_divmod(e.u, g).second;
                acc = reduce_mod(acc.scaled(inv), g);
            }
        }
        out.push_back({g, acc});
    }
    return out;
}

} // namespace curvecert
