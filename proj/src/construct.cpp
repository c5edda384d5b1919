#include "curvecert/construct.hpp"

#include <random>

#include "curvecert/interlace.hpp"
#include "curvecert/matrix.hpp"

namespace curvecert {

void validate_curve_param(const CurveParam& param) {
    if (param.size() < 2) throw DegenerateInputError("curve parameterization needs >= 2 components");
    int m = param[0].degree();
    for (const auto& g : param) {
        if (g.is_zero()) throw DegenerateInputError("zero component");
        if (g.degree() != m) throw DegreeMismatchError("components of unequal degree");
    }
    BinaryForm g = param[0];
    for (size_t i = 1; i < param.size() && g.degree() > 0; ++i) g = form_gcd(g, param[i]);
    if (g.degree() > 0) throw DegenerateInputError("components share a factor");
    Matrix<Rational> coeffs(param.size(), (size_t)m + 1);
    for (size_t i = 0; i < param.size(); ++i)
        for (int k = 0; k <= m; ++k) coeffs.at(i, (size_t)k) = param[i].coeff(k);
    if (rational_rank(coeffs) != param.size())
        throw DegenerateInputError("components are linearly dependent");
}

BiForm graph_closure(const BinaryForm& p, const BinaryForm& q) {
    if (form_gcd_degree(p, q) > 0) throw NotCoprimeError("graph_closure: p, q share a root");
    if (!is_strictly_interlacing(p, q)) throw NotInterlacingError("graph_closure: pair not strictly interlacing");
    int d = p.degree();
    BiForm f(d, 1);
    for (int i = 0; i <= d; ++i) {
        f.at(i, 0) = p.coeff(i);  // t0 * P
        f.at(i, 1) = -q.coeff(i); // - t1 * Q
    }
    return f;
}

BiForm line_pair_form(const std::vector<Rational>& t_list) {
    for (size_t i = 0; i < t_list.size(); ++i) {
        if (sign(t_list[i]) <= 0) throw NonPositiveParameterError();
        for (size_t j = i + 1; j < t_list.size(); ++j)
            if (t_list[i] == t_list[j]) throw DuplicateParameterError();
    }
    BiForm f(0, 0);
    f.at(0, 0) = 1;
    for (const auto& tj : t_list) {
        BiForm factor(0, 2);
        factor.at(0, 0) = tj; // t_j t0^2
        factor.at(0, 2) = 1;  // t1^2
        f = f * factor;
    }
    return f;
}

BiForm assemble_union(const BiForm& fx, const BiForm& fg) {
    if (fx.deg_t() != 1 || fg.deg_s() != 0 || fg.deg_t() % 2 != 0)
        throw BidegreeMismatchError("assemble_union: expected bidegrees (d,1) and (0,2e)");
    return fx * fg;
}

BiForm perturb(const BiForm& f, const BiForm& pert, const Rational& eps) {
    if (f.bidegree() != pert.bidegree()) throw BidegreeMismatchError("perturb");
    return f + pert.scaled(eps);
}

BiForm random_perturbation(int deg_s, int deg_t, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (;;) {
        BiForm f(deg_s, deg_t);
        for (int i = 0; i <= deg_s; ++i)
            for (int j = 0; j <= deg_t; ++j) f.at(i, j) = Rational(dist(rng));
        if (!f.is_zero()) return f;
    }
}

CurveParam rnc_binomial(int n) {
    if (n < 1) throw DegenerateInputError("rnc_binomial: n >= 1");
    CurveParam out;
    Integer binom = 1;
    for (int k = 0; k <= n; ++k) {
        out.push_back(BinaryForm::monomial(n, k, Rational(binom)));
        binom = binom * (n - k) / (k + 1);
    }
    return out;
}

CurveParam psi_quartic() {
    return {
        BinaryForm(4, {Rational(1), Rational(2), Rational(0), Rational(0), Rational(0)}),
        BinaryForm(4, {Rational(1), Rational(0), Rational(-2), Rational(0), Rational(0)}),
        BinaryForm(4, {Rational(1), Rational(0), Rational(0), Rational(2), Rational(0)}),
        BinaryForm(4, {Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)}),
    };
}

CurveParam ramified_quartic() {
    return {BinaryForm::monomial(4, 0), BinaryForm::monomial(4, 1),
            BinaryForm::monomial(4, 2), BinaryForm::monomial(4, 4)};
}

namespace {

// congruence diagonalization of a symmetric rational matrix; returns the
// inertia (positives, negatives, rank)
struct Inertia {
    int pos = 0, neg = 0, rank = 0;
};

Inertia symmetric_inertia(Matrix<Rational> m) {
    size_t n = m.rows();
    Inertia out;
    std::vector<bool> done(n, false);
    for (;;) {
        // find a nonzero diagonal entry among the remaining rows
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && sign(m.at(i, i)) != 0) { piv = i; break; }
        if (piv == n) {
            // no diagonal pivot: look for an off-diagonal entry and symmetrize
            size_t bi = n, bj = n;
            for (size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && sign(m.at(i, j)) != 0) { bi = i; bj = j; break; }
            }
            if (bi == n) break; // remaining block is zero
            for (size_t k = 0; k < n; ++k) m.at(bi, k) += m.at(bj, k);
            for (size_t k = 0; k < n; ++k) m.at(k, bi) += m.at(k, bj);
            continue; // now m(bi,bi) = 2 m(bi,bj) != 0
        }
        done[piv] = true;
        Rational d = m.at(piv, piv);
        if (sign(d) > 0) ++out.pos;
        else ++out.neg;
        ++out.rank;
        for (size_t i = 0; i < n; ++i) {
            if (done[i] || sign(m.at(i, piv)) == 0) continue;
            Rational f = m.at(i, piv) / d;
            for (size_t k = 0; k < n; ++k) m.at(i, k) -= f * m.at(piv, k);
            for (size_t k = 0; k < n; ++k) m.at(k, i) -= f * m.at(k, piv);
        }
    }
    return out;
}

} // namespace

std::vector<QuadricThrough> quadrics_through(const CurveParam& param) {
    validate_curve_param(param);
    if (param.size() != 4) throw DegenerateInputError("quadrics_through: curve must live in P3");
    int m = param[0].degree();
    // unknowns: coefficients of x_i x_j, i <= j, in the fixed order below
    std::vector<std::pair<int, int>> mono;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) mono.emplace_back(i, j);
    Matrix<Rational> sys((size_t)(2 * m + 1), mono.size());
    for (size_t c = 0; c < mono.size(); ++c) {
        BinaryForm prod = param[(size_t)mono[c].first] * param[(size_t)mono[c].second];
        for (int k = 0; k <= 2 * m; ++k) sys.at((size_t)k, c) = prod.coeff(k);
    }
    std::vector<QuadricThrough> out;
    for (const auto& v : rational_kernel_basis(sys)) {
        QuadricThrough q;
        q.upper = v;
        Matrix<Rational> sym(4, 4);
        for (size_t c = 0; c < mono.size(); ++c) {
            auto [i, j] = mono[c];
            P3Form::Expo e{0, 0, 0, 0};
            ++e[(size_t)i];
            ++e[(size_t)j];
            q.form = q.form + P3Form::monomial(e, v[c]);
            if (i == j) sym.at((size_t)i, (size_t)j) = v[c];
            else {
                sym.at((size_t)i, (size_t)j) = v[c] / 2;
                sym.at((size_t)j, (size_t)i) = v[c] / 2;
            }
        }
        Inertia in = symmetric_inertia(std::move(sym));
        q.rank = in.rank;
        q.positives = in.pos;
        q.negatives = in.neg;
        out.push_back(std::move(q));
    }
    return out;
}

BinaryForm fig1_p() {
    // (t^2 - 1)(t - 3) = t^3 - 3t^2 - t + 3
    return BinaryForm(3, {Rational(3), Rational(-1), Rational(-3), Rational(1)});
}

BinaryForm fig1_q() {
    // (t^2 - 4) t = t^3 - 4t
    return BinaryForm(3, {Rational(0), Rational(-4), Rational(0), Rational(1)});
}

P3Form ex25_h() {
    using E = P3Form::Expo;
    P3Form h;
    auto add = [&](E e, long c) { h = h + P3Form::monomial(e, Rational(c)); };
    add({3, 0, 0, 0}, 3);  // 3 x0^3
    add({1, 2, 0, 0}, 3);  // 3 x0 x1^2
    add({2, 0, 1, 0}, -1); // -x0^2 x2
    add({1, 0, 2, 0}, -3); // -3 x0 x2^2
    add({0, 0, 3, 0}, 1);  // x2^3
    add({2, 0, 0, 1}, 4);  // 4 x0^2 x3
    add({1, 1, 0, 1}, -1); // -x0 x1 x3
    add({0, 2, 0, 1}, 4);  // 4 x1^2 x3
    add({0, 0, 2, 1}, -1); // -x2^2 x3
    add({1, 0, 0, 2}, -3); // -3 x0 x3^2
    add({0, 0, 1, 2}, 1);  // x2 x3^2
    add({0, 0, 0, 3}, -1); // -x3^3
    return h;
}

P3Form ex25_deformation_cubic() {
    using E = P3Form::Expo;
    return P3Form::monomial(E{3, 0, 0, 0}, Rational(1)) +
           P3Form::monomial(E{0, 3, 0, 0}, Rational(1)) +
           P3Form::monomial(E{0, 0, 3, 0}, Rational(1)) +
           P3Form::monomial(E{0, 0, 0, 3}, Rational(-1));
}

P3Form segre_quadric() {
    using E = P3Form::Expo;
    return P3Form::monomial(E{1, 0, 0, 1}, Rational(1)) +
           P3Form::monomial(E{0, 1, 1, 0}, Rational(-1));
}

BiForm build_base_curve(const CurveSpec& spec) {
    BiForm fx = graph_closure(spec.p, spec.q);
    BiForm fg = line_pair_form(spec.t_list);
    if ((int)spec.t_list.size() != spec.e) throw DegenerateInputError("spec: e != #t_list");
    return assemble_union(fx, fg);
}

BiForm spec_perturbation(const CurveSpec& spec) {
    int d = spec.p.degree();
    int bt = 2 * spec.e + 1;
    if (spec.perturbation_matrix) {
        if (spec.perturbation_matrix->bidegree() != std::make_pair(d, bt))
            throw BidegreeMismatchError("spec perturbation bidegree");
        return *spec.perturbation_matrix;
    }
    if (spec.perturbation_seed) return random_perturbation(d, bt, *spec.perturbation_seed);
    return BiForm(d, bt); // zero form: no perturbation requested
}

EpsilonSearch auto_epsilon(const BiForm& base, const BiForm& pert,
                           const std::function<bool(const BiForm&)>& accept,
                           int max_attempts, unsigned base_denominator) {
    EpsilonSearch search;
    Rational eps(1);
    for (int i = 0; i < max_attempts; ++i) {
        search.tried.push_back(eps);
        ++search.attempts;
        if (accept(perturb(base, pert, eps))) {
            search.epsilon = eps;
            return search;
        }
        eps /= Rational((long)base_denominator);
    }
    throw ExhaustedScheduleError();
}

} // namespace curvecert
