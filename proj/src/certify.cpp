#include "curvecert/certify.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>

#include "curvecert/param_poly.hpp"
#include "curvecert/subresultant.hpp"
#include "curvecert/sturm.hpp"

namespace curvecert {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Falsified: return "falsified";
        default: return "inconclusive";
    }
}

std::string fnv1a_hex(const std::string& payload) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string curve_input_hash(const CurveInput& curve) {
    std::ostringstream os;
    if (std::holds_alternative<CurveParam>(curve)) {
        os << "param:";
        for (const auto& g : std::get<CurveParam>(curve)) os << g.to_string() << ";";
    } else {
        const BiForm& f = std::get<BiForm>(curve);
        os << "biform:" << f.deg_s() << "," << f.deg_t() << ":";
        for (const auto& q : f.raw()) os << rational_to_string(q) << ",";
    }
    return fnv1a_hex(os.str());
}

// ---------------------------------------------------------------------------
// Wronskian route for rational quartics

namespace {

// osculating hyperplane whose section is proportional to ell^4 for an
// exact parameter point (rational tau, or infinity)
std::optional<Hyperplane> osculating_hyperplane(const CurveParam& param, bool at_infinity,
                                                const Rational& tau) {
    BinaryForm ell = at_infinity ? BinaryForm(1, {Rational(1), Rational(0)})
                                 : BinaryForm::linear_root(tau);
    BinaryForm l4 = ell.pow(4);
    // solve sum lambda_i g_i = c * ell^4
    Matrix<Rational> m(5, 5);
    for (size_t i = 0; i < 4; ++i)
        for (int k = 0; k <= 4; ++k) m.at((size_t)k, i) = param[i].coeff(k);
    for (int k = 0; k <= 4; ++k) m.at((size_t)k, 4) = -l4.coeff(k);
    for (const auto& v : rational_kernel_basis(m)) {
        if (sign(v[4]) == 0) continue; // degenerate combination
        return Hyperplane({v[0], v[1], v[2], v[3]});
    }
    return std::nullopt;
}

// rational roots of a rational-coefficient polynomial (rational root theorem)
std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> out;
    if (p.degree() < 1) return out;
    // strip t = 0 root
    QPoly q = p;
    size_t shift = 0;
    while (shift < q.coeffs().size() && sign(q.coeffs()[shift]) == 0) ++shift;
    if (shift > 0) {
        out.emplace_back(0);
        std::vector<Rational> c(q.coeffs().begin() + (long)shift, q.coeffs().end());
        q = QPoly(std::move(c));
    }
    if (q.degree() < 1) return out;
    // integerize
    std::vector<Rational> c = q.coeffs();
    Integer den = common_denominator(c);
    for (auto& x : c) x *= den;
    Integer a0 = c.front().get_num(), an = c.back().get_num();
    auto divisors = [](Integer n) {
        std::vector<Integer> ds;
        n = abs(n);
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) { ds.push_back(d); ds.push_back(n / d); }
        return ds;
    };
    for (const Integer& r : divisors(a0))
        for (const Integer& s : divisors(an))
            for (int sg : {1, -1}) {
                Rational cand(r * sg, s);
                cand.canonicalize();
                if (sign(q.eval(cand)) == 0) {
                    bool dup = false;
                    for (const auto& x : out) dup |= (x == cand);
                    if (!dup) out.push_back(cand);
                }
            }
    return out;
}

} // namespace

Certificate certify_wronskian_quartic(const CurveParam& param) {
    Certificate cert;
    cert.method = "wronskian";
    cert.input_hash = curve_input_hash(param);
    if (param.size() != 4) throw DegreeMismatchError("certify_wronskian_quartic: curve must live in P3");
    for (const auto& g : param)
        if (g.degree() != 4) throw DegreeMismatchError("certify_wronskian_quartic: components must be quartic");
    BinaryForm w = wronskian(param);
    if (w.is_zero()) throw NondegeneracyFailureError();
    {
        BinaryForm g = param[0];
        for (size_t i = 1; i < param.size() && g.degree() > 0; ++i) g = form_gcd(g, param[i]);
        if (g.degree() > 0) throw DegenerateInputError("components share a factor");
    }
    auto roots = isolate_real_projective_roots(w);
    if (roots.empty()) {
        cert.verdict = Verdict::Certified;
        return cert;
    }
    cert.verdict = Verdict::Falsified;
    // prefer an exact osculation parameter: infinity or a rational root
    std::vector<Rational> rr = rational_roots(w.affine());
    std::optional<Hyperplane> h;
    if (!roots.empty() && roots.back().at_infinity) {
        h = osculating_hyperplane(param, true, Rational(0));
        cert.witness.emplace_back("osculation_parameter", "infinity");
    }
    if (!h && !rr.empty()) {
        h = osculating_hyperplane(param, false, rr.front());
        cert.witness.emplace_back("osculation_parameter", rational_to_string(rr.front()));
    }
    if (h) {
        Hyperplane hc = h->canonical();
        std::ostringstream os;
        for (size_t i = 0; i < 4; ++i) os << (i ? "," : "") << rational_to_string(hc[i]);
        cert.witness.emplace_back("hyperplane", os.str());
        WeightResult wr = hyperplane_weight_param(param, hc);
        cert.witness.emplace_back("weight", std::to_string(wr.weight));
        if (wr.weight < 3)
            throw Error("certify_wronskian_quartic: witness failed exact recheck");
    } else {
        // no exact parameter available: report the isolating interval; the
        // recheck is the Sturm count of the Wronskian on it
        const auto& r = roots.front();
        cert.witness.emplace_back("osculation_interval",
                                  rational_to_string(r.lo) + ".." + rational_to_string(r.hi));
        cert.notes.push_back("osculation parameter is irrational; witness is its isolating interval");
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Subdivision certifier

namespace {

// section coefficients c_k(lambda), k = 0..m, of the hyperplane section
// pencil: linear for parameterized curves, the t-resultant for biforms
std::vector<ParamPoly> parametric_section_coeffs(const CurveInput& curve, int& m_out) {
    if (std::holds_alternative<CurveParam>(curve)) {
        const CurveParam& p = std::get<CurveParam>(curve);
        validate_curve_param(p);
        if (p.size() != 4) throw DegenerateInputError("subdivision certifier: curve must live in P3");
        int m = p[0].degree();
        m_out = m;
        std::vector<ParamPoly> c((size_t)m + 1);
        for (int k = 0; k <= m; ++k) {
            ParamPoly acc;
            for (int i = 0; i < 4; ++i)
                acc = acc + ParamPoly::variable(i).scaled(p[(size_t)i].coeff(k));
            c[(size_t)k] = acc;
        }
        return c;
    }
    const BiForm& f = std::get<BiForm>(curve);
    int a = f.deg_s(), b = f.deg_t();
    if (a < 1 || b < 1) throw DegenerateInputError("subdivision certifier: bidegree must be >= (1,1)");
    m_out = a + b;
    // Sylvester determinant in t of (B_lambda, F) over Q[lambda][s]
    using PP = Poly<ParamPoly>;
    auto lift = [](const QPoly& q) {
        std::vector<ParamPoly> c;
        for (const auto& x : q.coeffs()) c.emplace_back(x);
        return PP(std::move(c));
    };
    // B row: t0-coefficient l0 + l2 s, t1-coefficient l1 + l3 s (affine s)
    PP b0(std::vector<ParamPoly>{ParamPoly::variable(0), ParamPoly::variable(2)});
    PP b1(std::vector<ParamPoly>{ParamPoly::variable(1), ParamPoly::variable(3)});
    size_t n = (size_t)(b + 1);
    Matrix<PP> syl(n, n);
    for (int r = 0; r < b; ++r) {
        syl.at((size_t)r, (size_t)r) = b0;
        syl.at((size_t)r, (size_t)r + 1) = b1;
    }
    for (int j = 0; j <= b; ++j) syl.at((size_t)b, (size_t)j) = lift(f.t_coefficient(j).affine());
    PP det = bareiss_determinant(std::move(syl));
    std::vector<ParamPoly> c((size_t)(a + b) + 1);
    for (int k = 0; k <= a + b; ++k) c[(size_t)k] = det.coeff((size_t)k);
    return c;
}

struct FacetData {
    int var;
    int sgn;
    std::vector<ParamPoly> sres; // the three tests, substituted to the facet
};

struct WorkBox {
    std::array<QInterval, 4> box;
    int depth;
};

std::string box_to_string(const SubdivisionBox& b) {
    std::ostringstream os;
    os << "facet l" << b.facet_var << "=" << (b.facet_sign > 0 ? "+1" : "-1");
    for (int i = 0; i < 4; ++i) {
        if (i == b.facet_var) continue;
        os << " [" << rational_to_string(b.box[(size_t)i].lo) << ","
           << rational_to_string(b.box[(size_t)i].hi) << "]";
    }
    if (b.certified_by >= 0) os << " by sres_" << b.certified_by;
    return os.str();
}

} // namespace

SubdivisionOutcome certify_unramified_subdivision(const CurveInput& curve,
                                                  const SubdivisionOptions& opts) {
    SubdivisionOutcome out;
    Certificate& cert = out.cert;
    cert.method = "subdivision";
    cert.seed = opts.seed;
    cert.input_hash = curve_input_hash(curve);

    int m = 0;
    std::vector<ParamPoly> coeffs = parametric_section_coeffs(curve, m);
    // the two s-partials of the section: their form gcd degree equals the
    // section weight, so sres_k nonvanishing certifies weight <= k
    std::vector<ParamPoly> u((size_t)m), v((size_t)m);
    for (int k = 0; k <= m - 1; ++k) {
        u[(size_t)k] = coeffs[(size_t)k].scaled(Rational(m - k));
        v[(size_t)k] = coeffs[(size_t)k + 1].scaled(Rational(k + 1));
    }
    std::vector<ParamPoly> sres_full = formal_principal_subresultants(u, m - 1, v, m - 1);
    std::vector<ParamPoly> tests;
    for (int k = 0; k <= 2 && k < (int)sres_full.size(); ++k) tests.push_back(sres_full[(size_t)k]);

    std::vector<FacetData> facets;
    for (int var = 0; var < 4; ++var)
        for (int sgn : {1, -1}) {
            FacetData fd;
            fd.var = var;
            fd.sgn = sgn;
            for (const auto& t : tests) fd.sres.push_back(t.substitute(var, Rational(sgn)));
            // cheapest test first: fewer terms evaluate faster
            std::sort(fd.sres.begin(), fd.sres.end(), [&](const ParamPoly& x, const ParamPoly& y) {
                return x.term_count() < y.term_count();
            });
            facets.push_back(std::move(fd));
        }
    // keep the original index association for reporting: re-derive on hit
    // (sorting above loses indices; recompute unsorted for reporting)
    for (auto& fd : facets) {
        fd.sres.clear();
        for (const auto& t : tests) fd.sres.push_back(t.substitute(fd.var, Rational(fd.sgn)));
    }

    std::mutex mu;
    std::atomic<bool> falsified{false};
    std::atomic<uint64_t> processed{0};
    int max_depth_seen = 0;

    auto eval_order = [&](const FacetData& fd) {
        std::vector<size_t> order(fd.sres.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            return fd.sres[x].term_count() < fd.sres[y].term_count();
        });
        return order;
    };

    for (const FacetData& fd : facets) {
        if (falsified) break;
        std::vector<size_t> order = eval_order(fd);
        std::deque<WorkBox> queue;
        {
            WorkBox root;
            for (int i = 0; i < 4; ++i) root.box[(size_t)i] = QInterval(Rational(-1), Rational(1));
            root.box[(size_t)fd.var] = QInterval(Rational(fd.sgn));
            root.depth = 0;
            queue.push_back(root);
        }
        auto process_one = [&](const WorkBox& wb, std::vector<WorkBox>& spawn) {
            ++processed;
            for (size_t k : order) {
                QInterval range = fd.sres[k].eval_box(wb.box);
                if (range.definite_sign() != 0) {
                    std::lock_guard<std::mutex> lk(mu);
                    out.certified_boxes.push_back({fd.var, fd.sgn, wb.box, (int)k});
                    return;
                }
            }
            if (wb.depth >= opts.max_depth) {
                // leftover: exact oracle at the center decides falsified vs unresolved
                std::array<Rational, 4> center;
                for (int i = 0; i < 4; ++i) center[(size_t)i] = wb.box[(size_t)i].mid();
                Hyperplane h({center[0], center[1], center[2], center[3]});
                WeightResult wr = hyperplane_weight_oracle(curve, h);
                std::lock_guard<std::mutex> lk(mu);
                if (wr.weight >= 3 && wr.exact) {
                    falsified = true;
                    Hyperplane hc = h.canonical();
                    std::ostringstream os;
                    for (size_t i = 0; i < 4; ++i) os << (i ? "," : "") << rational_to_string(hc[i]);
                    cert.witness.emplace_back("hyperplane", os.str());
                    cert.witness.emplace_back("weight", std::to_string(wr.weight));
                } else {
                    out.unresolved_boxes.push_back({fd.var, fd.sgn, wb.box, -1});
                }
                return;
            }
            // octree split on the three free coordinates
            std::array<int, 3> free_idx{};
            int nf = 0;
            for (int i = 0; i < 4; ++i)
                if (i != fd.var) free_idx[(size_t)nf++] = i;
            for (int mask = 0; mask < 8; ++mask) {
                WorkBox child = wb;
                child.depth = wb.depth + 1;
                for (int bit = 0; bit < 3; ++bit) {
                    int i = free_idx[(size_t)bit];
                    const QInterval& iv = wb.box[(size_t)i];
                    Rational mid = iv.mid();
                    child.box[(size_t)i] = (mask >> bit) & 1 ? QInterval(mid, iv.hi)
                                                             : QInterval(iv.lo, mid);
                }
                spawn.push_back(child);
            }
        };
        while (!queue.empty() && !falsified) {
            // process the current wave, possibly in parallel
            std::vector<WorkBox> wave(queue.begin(), queue.end());
            queue.clear();
            for (const auto& wb : wave) max_depth_seen = std::max(max_depth_seen, wb.depth);
            if (opts.workers <= 1 || wave.size() < 16) {
                std::vector<WorkBox> spawn;
                for (const auto& wb : wave) {
                    if (falsified) break;
                    process_one(wb, spawn);
                }
                for (auto& s : spawn) queue.push_back(s);
            } else {
                size_t nw = (size_t)opts.workers;
                std::vector<std::vector<WorkBox>> spawns(nw);
                std::vector<std::thread> threads;
                std::atomic<size_t> next{0};
                for (size_t w = 0; w < nw; ++w)
                    threads.emplace_back([&, w] {
                        for (;;) {
                            size_t i = next.fetch_add(1);
                            if (i >= wave.size() || falsified) return;
                            process_one(wave[i], spawns[w]);
                        }
                    });
                for (auto& t : threads) t.join();
                for (const auto& sp : spawns)
                    for (const auto& s : sp) queue.push_back(s);
            }
        }
        if (falsified) break;
    }

    cert.boxes_processed = processed.load();
    cert.max_depth_reached = max_depth_seen;
    auto box_key = [](const SubdivisionBox& b) {
        std::ostringstream os;
        os << box_to_string(b);
        return os.str();
    };
    std::sort(out.certified_boxes.begin(), out.certified_boxes.end(),
              [&](const SubdivisionBox& x, const SubdivisionBox& y) { return box_key(x) < box_key(y); });
    std::sort(out.unresolved_boxes.begin(), out.unresolved_boxes.end(),
              [&](const SubdivisionBox& x, const SubdivisionBox& y) { return box_key(x) < box_key(y); });
    {
        std::ostringstream os;
        for (const auto& b : out.certified_boxes) os << box_to_string(b) << "\n";
        cert.notes.push_back("box_list_hash=" + fnv1a_hex(os.str()));
    }
    if (falsified) cert.verdict = Verdict::Falsified;
    else if (out.unresolved_boxes.empty()) cert.verdict = Verdict::Certified;
    else {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("unresolved_boxes=" + std::to_string(out.unresolved_boxes.size()));
        for (size_t i = 0; i < out.unresolved_boxes.size() && i < 4; ++i)
            cert.notes.push_back("unresolved " + box_to_string(out.unresolved_boxes[i]));
    }
    return out;
}

WeightResult hyperplane_weight_oracle(const CurveInput& curve, const Hyperplane& h) {
    if (std::holds_alternative<CurveParam>(curve))
        return hyperplane_weight_param(std::get<CurveParam>(curve), h);
    return hyperplane_weight_biform(std::get<BiForm>(curve), h);
}

} // namespace curvecert
