#ifndef CURVECERT_SUBRESULTANT_HPP
#define CURVECERT_SUBRESULTANT_HPP

#include <vector>

#include "curvecert/binary_form.hpp"
#include "curvecert/matrix.hpp"
#include "curvecert/poly.hpp"

namespace curvecert {

namespace detail {

template <class R>
R ring_pow(const R& x, int e) {
    R r = RingTraits<R>::from_long(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

// Principal subresultant coefficient via its determinantal definition,
// with formal degrees p, q (coefficient vectors may have zero tops).
// Reference implementation; the PRS path below is the fast one.
template <class R>
R psc_minor(const std::vector<R>& a, int p, const std::vector<R>& b, int q, int k) {
    int n = p + q - 2 * k;
    if (n <= 0) return RingTraits<R>::from_long(1);
    auto entry = [](const std::vector<R>& c, int deg_wanted, int shift) -> R {
        int idx = deg_wanted - shift;
        if (idx < 0 || idx >= (int)c.size()) return R();
        return c[(size_t)idx];
    };
    // columns: degrees p+q-k-1 .. k+1, then degree k
    std::vector<int> cols;
    for (int d = p + q - k - 1; d >= k + 1; --d) cols.push_back(d);
    cols.push_back(k);
    Matrix<R> m((size_t)n, (size_t)n);
    int row = 0;
    for (int i = q - k - 1; i >= 0; --i, ++row)
        for (int j = 0; j < n; ++j) m.at((size_t)row, (size_t)j) = entry(a, cols[(size_t)j], i);
    for (int i = p - k - 1; i >= 0; --i, ++row)
        for (int j = 0; j < n; ++j) m.at((size_t)row, (size_t)j) = entry(b, cols[(size_t)j], i);
    return bareiss_determinant(std::move(m));
}

// Subresultant PRS with the classic beta/psi bookkeeping plus the
// structure-theorem extraction of principal coefficients. Requires true
// degrees: deg A = p > deg B = q >= 0, lc's nonzero. Output values agree
// with the determinantal definition up to sign, index by index.
template <class R>
std::vector<R> psc_prs(const Poly<R>& A, const Poly<R>& B) {
    int p = A.degree(), q = B.degree();
    if (!(p > q && q >= 0)) throw DegreeOrderError("psc_prs: needs deg A > deg B >= 0");
    std::vector<R> out((size_t)q + 1, R());
    if (q == 0) {
        out[0] = ring_pow(B.lc(), p);
        return out;
    }
    Poly<R> r_prev = A, r_cur = B;
    R s_reg = RingTraits<R>::from_long(1); // principal coeff of the regular subresultant above
    int j = p;                             // current element is S_{j-1}
    int delta_prev = 0;
    R psi = RingTraits<R>::from_long(-1);
    R gamma_prev;                          // lc of the previous chain element
    bool first = true;
    while (true) {
        int k = r_cur.degree();
        if (k == j - 1) {
            if (k <= q) out[(size_t)k] = r_cur.lc();
            s_reg = r_cur.lc();
        } else {
            // S_l = 0 for k < l < j-1 (defaults); S_k similar to the element
            if (k <= q) {
                R num = ring_pow(r_cur.lc(), j - k);
                R den = ring_pow(s_reg, j - 1 - k);
                out[(size_t)k] = ring_exact_div(num, den);
            }
            s_reg = out[(size_t)k];
        }
        if (k == 0) break;
        int delta = r_prev.degree() - k;
        R beta;
        if (first) {
            beta = RingTraits<R>::from_long(delta % 2 == 0 ? -1 : 1); // (-1)^(delta+1)
            first = false;
        } else {
            // psi update: psi' = (-gamma_prev)^delta_prev / psi^(delta_prev - 1)
            R num = ring_pow(ring_neg(gamma_prev), delta_prev);
            psi = delta_prev >= 1 ? ring_exact_div(num, ring_pow(psi, delta_prev - 1))
                                  : num * psi; // delta_prev = 0 cannot occur past the head
            beta = ring_neg(gamma_prev) * ring_pow(psi, delta);
        }
        Poly<R> rem = prem(r_prev, r_cur);
        if (rem.is_zero()) break;
        Poly<R> next = rem;
        {
            // divide by beta, exactly
            std::vector<R> c = next.coeffs();
            for (auto& x : c) x = ring_exact_div(x, beta);
            next = Poly<R>(std::move(c));
        }
        gamma_prev = r_cur.lc();
        delta_prev = delta;
        r_prev = std::move(r_cur);
        r_cur = std::move(next);
        j = k;
    }
    return out;
}

} // namespace detail

// Principal subresultant coefficients sres_0..sres_q of two polynomials
// given by coefficient vectors with FORMAL degrees p >= q (top entries may
// be zero). This is the binary-form semantics: a zero top coefficient is a
// root at infinity, and the coefficients returned respect it. Each output
// equals the determinantal subresultant coefficient up to sign.
//
// For equal formal degrees the head is reduced by the row operation
// Rt = lc(b) a - lc(a) b, and the induced lc power is divided back out;
// sres_p is not defined for p == q and that slot is returned as zero.
template <class R>
std::vector<R> formal_principal_subresultants(std::vector<R> a, int p, std::vector<R> b, int q) {
    if ((int)a.size() != p + 1 || (int)b.size() != q + 1)
        throw Error("formal_principal_subresultants: coefficient count mismatch");
    if (p < q) throw DegreeOrderError("formal_principal_subresultants: p < q");
    auto all_zero = [](const std::vector<R>& v) {
        for (const auto& x : v)
            if (!ring_is_zero(x)) return false;
        return true;
    };
    std::vector<R> out((size_t)q + 1, R());
    if (all_zero(b) || all_zero(a)) return out; // gcd is unconstrained; nothing certifiable
    if (p == q) {
        if (ring_is_zero(a.back()) && ring_is_zero(b.back())) {
            // both divisible by the infinity factor: gcd gains one; recurse on
            // the stripped pair and shift. Slot 0 stays zero (gcd >= 1).
            std::vector<R> a2(a.begin(), a.end() - 1), b2(b.begin(), b.end() - 1);
            std::vector<R> sub = formal_principal_subresultants(std::move(a2), p - 1, std::move(b2), q - 1);
            for (int k = q - 1; k >= 1; --k) out[(size_t)k] = k - 1 < (int)sub.size() ? sub[(size_t)(k - 1)] : R();
            out[(size_t)q] = RingTraits<R>::from_long(1); // empty-minor convention
            return out;
        }
        if (ring_is_zero(b.back())) std::swap(a, b); // sign-irrelevant symmetry
        // Rt = lc(b) a - lc(a) b; its top coefficient cancels structurally
        R la = a.back(), lb = b.back();
        std::vector<R> rt((size_t)p, R());
        for (int i = 0; i < p; ++i) rt[(size_t)i] = lb * a[(size_t)i] - la * b[(size_t)i];
        std::vector<R> sub = formal_principal_subresultants(b, p, std::move(rt), p - 1);
        for (int k = 0; k <= p - 1; ++k) {
            if (ring_is_zero(sub[(size_t)k])) continue;
            out[(size_t)k] = ring_exact_div(sub[(size_t)k], detail::ring_pow(lb, p - 1 - k));
        }
        out[(size_t)q] = RingTraits<R>::from_long(1); // empty-minor convention
        return out;
    }
    // p > q. Peel zero tops of a (needs lc(b) != 0 afterwards, so peel b first).
    int qe = q;
    while (qe >= 0 && ring_is_zero(b[(size_t)qe])) --qe;
    if (qe < q) {
        // sres_k^{(p,q)} = lc(a)^{q-qe} sres_k^{(p,qe)} for k <= qe; zero above.
        if (ring_is_zero(a.back())) {
            // both tops vanish: the forms share the infinity factor. Strip it
            // from both sides and shift, exactly as in the equal-degree case.
            std::vector<R> a2(a.begin(), a.end() - 1), b2(b.begin(), b.end() - 1);
            std::vector<R> sub = formal_principal_subresultants(std::move(a2), p - 1, std::move(b2), q - 1);
            for (int k = q; k >= 1; --k) out[(size_t)k] = k - 1 < (int)sub.size() ? sub[(size_t)(k - 1)] : R();
            return out;
        }
        std::vector<R> b2(b.begin(), b.begin() + qe + 1);
        std::vector<R> sub = qe >= 0 ? formal_principal_subresultants(a, p, std::move(b2), qe)
                                     : std::vector<R>();
        R f = detail::ring_pow(a.back(), q - qe);
        for (int k = 0; k <= qe; ++k) out[(size_t)k] = f * sub[(size_t)k];
        return out;
    }
    int pe = p;
    while (pe >= 0 && ring_is_zero(a[(size_t)pe])) --pe;
    if (pe < p) {
        // symmetric peel: sres_k^{(p,q)}(a,b) = lc(b)^{p-pe} sres_k^{(pe,q)}(a,b), k <= min(pe,q)
        std::vector<R> a2(a.begin(), a.begin() + pe + 1);
        R f = detail::ring_pow(b.back(), p - pe);
        std::vector<R> sub;
        if (pe > q) sub = formal_principal_subresultants(std::move(a2), pe, b, q);
        else if (pe < q || pe == q) sub = formal_principal_subresultants(b, q, std::move(a2), pe);
        int lim = std::min(pe, q);
        for (int k = 0; k <= lim && k < (int)sub.size(); ++k) out[(size_t)k] = f * sub[(size_t)k];
        return out;
    }
    return detail::psc_prs(Poly<R>(std::move(a)), Poly<R>(std::move(b)));
}

// Spec-facing wrapper on binary forms (formal homogeneous semantics):
// smallest k with sres_k != 0 equals deg gcd of the forms.
std::vector<Rational> principal_subresultants(const BinaryForm& f, const BinaryForm& g);

// Projective Wronskian of n binary forms of common degree m >= n-1:
// determinant of the order-(n-1) mixed partial matrix; a form of degree
// n(m-n+1). Vanishes identically iff the forms are linearly dependent.
BinaryForm wronskian(const std::vector<BinaryForm>& forms);

} // namespace curvecert

#endif
