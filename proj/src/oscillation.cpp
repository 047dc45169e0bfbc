#include "holo/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

bool all_hold(const std::vector<ConditionStatus>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const ConditionStatus& c) { return c.holds; });
}

namespace {

std::string str(const Rational& q) { return q.get_str(); }
std::string str(const Integer& z) { return z.get_str(); }

Rational rat(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

RationalInterval scale(const RationalInterval& iv, const Rational& k) {
    // k >= 0
    return {iv.lo * k, iv.hi * k};
}

int max_degree(const std::vector<UniPoly>& qs) {
    int d = 0;
    for (const auto& q : qs) d = std::max(d, q.degree());
    return d;
}

// ceil of a quantity known through enclosures at increasing precision.
Integer certified_ceil(const std::function<RationalInterval(unsigned)>& enclose) {
    for (unsigned bits = 96; bits <= 3072; bits *= 2) {
        auto iv = enclose(bits);
        Integer lo = ceil_of(iv.lo), hi = ceil_of(iv.hi);
        if (lo == hi) return lo;
    }
    throw certification_error("could not decide a ceiling from its enclosure");
}

Integer nearest_in_range(const Rational& x, const Integer& a, const Integer& b) {
    Integer j = floor_of(x + Rational(1, 2));
    if (j < a) return a;
    if (j > b) return b;
    return j;
}

// Every integer j in [a, b] keeps distance >= thr from every point of every disc.
ConditionStatus root_distance_status(const std::vector<RootEnclosure>& roots, const Integer& a, const Integer& b,
                                     const Rational& thr, const std::string& name) {
    for (const auto& e : roots) {
        const Rational& cr = e.center_exact.re();
        const Rational& ci = e.center_exact.im();
        Integer j = nearest_in_range(cr, a, b);
        Rational dx = Rational(j) - cr;
        Rational need = thr + e.radius_bound;
        if (dx * dx + ci * ci < need * need) {
            std::ostringstream os;
            os << "root near " << to_double(cr) << (sgn(ci) < 0 ? "" : "+") << to_double(ci)
               << "i is within " << to_double(thr) << " (plus enclosure radius) of j = " << j;
            return {name, false, os.str()};
        }
    }
    return {name, true, "all " + std::to_string(roots.size()) + " root enclosures clear a/(LD) = " + str(thr)};
}

ConditionStatus critical_status(const std::vector<RootEnclosure>& crit, const Integer& a, const Integer& b,
                                const std::string& name) {
    for (const auto& e : crit) {
        if (e.real_hi() < a || e.real_lo() > b) continue;
        std::ostringstream os;
        os << "critical point enclosure [" << to_double(e.real_lo()) << ", " << to_double(e.real_hi())
           << "] meets [a, b]";
        return {name, false, os.str()};
    }
    return {name, true, std::to_string(crit.size()) + " real critical candidates avoid [a, b]"};
}

std::vector<RootEnclosure> roots_of_nonzero(const std::vector<UniPoly>& qs, double tol) {
    std::vector<RootEnclosure> out;
    for (const auto& q : qs)
        if (q.degree() >= 1) {
            auto r = root_enclosures(q, tol);
            out.insert(out.end(), r.begin(), r.end());
        }
    return out;
}

std::vector<RootEnclosure> pair_critical_points(const std::vector<UniPoly>& qs, double tol) {
    std::vector<RootEnclosure> out;
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            auto cs = critical_set(qs[i] * qs[j], tol);
            out.insert(out.end(), cs.real_candidates.begin(), cs.real_candidates.end());
        }
    return out;
}

std::int64_t sum_squares(const IntSequence& f, std::int64_t from, std::int64_t to) {
    std::int64_t s = 0;
    for (std::int64_t n = from; n <= to; ++n) {
        std::int64_t v = f(n);
        s += v * v;
    }
    return s;
}

Scalar delta_at(const std::vector<UniPoly>& qs, const IntSequence& f, std::int64_t n) {
    Scalar acc;
    const Scalar x(n);
    for (std::size_t j = 0; j < qs.size(); ++j) {
        std::int64_t fv = f(n + static_cast<std::int64_t>(j) + 1);
        if (fv != 0 && !qs[j].is_zero()) acc += qs[j](x) * Scalar(fv);
    }
    return acc;
}

std::string verdict_of(bool hyp, bool concl) {
    if (!hyp) return "hypothesis_failure";
    return concl ? "holds" : "conclusion_failure";
}

}  // namespace

CriticalSet critical_set(const UniPoly& q, double tolerance) {
    CriticalSet cs;
    cs.source = q;
    auto [re, im] = real_imag_split(q);
    const bool a_var = re.degree() >= 1, b_var = im.degree() >= 1;
    if (a_var) cs.generators.push_back(re.derivative());
    if (b_var) cs.generators.push_back(im.derivative());
    for (const auto& g : cs.generators) {
        if (g.degree() < 1) continue;
        auto r = root_enclosures(g, tolerance);
        cs.members.insert(cs.members.end(), r.begin(), r.end());
    }
    for (const auto& e : cs.members)
        if (e.meets_real_axis()) cs.real_candidates.push_back(e);
    return cs;
}

IntervalPlan interval_plan(const std::vector<UniPoly>& qs, const Rational& A, int D, int m) {
    if (m < 1 || D < 1) throw precondition_error("interval_plan needs m >= 1 and D >= 1");
    if (qs.size() != static_cast<std::size_t>(m)) throw precondition_error("interval_plan needs exactly m polynomials");
    if (max_degree(qs) > D) throw precondition_error("a polynomial exceeds degree D");
    if (A < 1) throw precondition_error("interval_plan needs A >= 1");

    IntervalPlan plan;
    plan.A = A;
    plan.D = D;
    plan.m = m;
    plan.L = 9 * static_cast<std::int64_t>(m) * m;
    const Integer d2l = Integer(D) * D * plan.L;
    const Rational am1 = A * (m - 1);

    Integer r1 = sgn(am1) == 0 ? Integer(1) : certified_ceil([&](unsigned bits) {
        auto e2 = exp_enclosure(2, bits);
        return RationalInterval{am1 * e2.lo + 1, am1 * e2.hi + 1};
    });
    const std::int64_t t = static_cast<std::int64_t>(D) * m + 2 * static_cast<std::int64_t>(D) * m * m;
    plan.r_sequence.push_back(r1);
    const Rational growth = make_rational(d2l + D + 1, d2l - D);
    while (static_cast<std::int64_t>(plan.r_sequence.size()) < t)
        plan.r_sequence.push_back(ceil_of(Rational(plan.r_sequence.back()) * growth));

    plan.padded_disjoint = true;
    for (std::size_t i = 0; i + 1 < plan.r_sequence.size(); ++i) {
        const Integer& r = plan.r_sequence[i];
        const Integer& rn = plan.r_sequence[i + 1];
        Integer gap = (d2l * rn - D * rn) - (d2l * r + D * r + r);
        if (i == 0 || gap < plan.padded_min_gap) plan.padded_min_gap = gap;
        if (gap <= 0) plan.padded_disjoint = false;
    }

    const auto e2 = exp_enclosure(2);
    std::string last_failure = "no index examined";
    for (double tol = 1e-9; tol >= 1e-21; tol *= 1e-4) {
        const auto roots = roots_of_nonzero(qs, tol);
        const auto crit = pair_critical_points(qs, tol);
        for (std::size_t idx = 0; idx < plan.r_sequence.size(); ++idx) {
            const Integer& R = plan.r_sequence[idx];
            const Integer a = d2l * R, b = a + R;
            const Rational thr = make_rational(a, Integer(plan.L) * D);
            std::vector<ConditionStatus> cs;
            cs.push_back({"(i) b - a > A(m-1)e^2", Rational(R) > am1 * e2.hi,
                          "b - a = " + str(R) + ", A(m-1)e^2 < " + std::to_string(to_double(am1 * e2.hi))});
            cs.push_back(root_distance_status(roots, a, b, thr, "(ii) |j - lambda| >= a/(LD)"));
            cs.push_back({"(iii) (b - a)/a <= 1/(D^2 L)", Rational(b - a) * d2l <= Rational(a),
                          "(b - a)/a = 1/" + str(d2l)});
            cs.push_back(critical_status(crit, a, b, "(iv) C(Q_i Q_j) avoids [a, b]"));
            if (all_hold(cs)) {
                plan.a = a;
                plan.b = b;
                plan.chosen_index = idx + 1;
                plan.certification = std::move(cs);
                plan.alternative_a = 2 * Integer(D) * D * m * R;
                const auto e3 = exp_enclosure(3);
                const Rational k = 20 * A * D * D * Rational(m * m * m) * (A + D * m);
                plan.b_cap = scale(e3, k);
                plan.below_cap = Rational(b) < plan.b_cap.lo;
                return plan;
            }
            for (const auto& c : cs)
                if (!c.holds) last_failure = "index " + std::to_string(idx + 1) + ": " + c.name + ": " + c.detail;
        }
    }
    throw certification_error("interval_plan found no certified index; last failure at " + last_failure);
}

namespace {

// Independent recertification helpers.

const Rational& e_upper() {
    static const Rational e(Integer(2718281829), Integer(1000000000));
    return e;
}

struct Box {
    Rational x0, x1, y0, y1;
    int depth;
};

Rational box_integer_distance2(const Box& bx, const Integer& a, const Integer& b) {
    Rational dx;
    if (bx.x1 < a) {
        dx = Rational(a) - bx.x1;
    } else if (bx.x0 > b) {
        dx = bx.x0 - Rational(b);
    } else {
        Rational lo = std::max(bx.x0, Rational(a)), hi = std::min(bx.x1, Rational(b));
        Integer jl = ceil_of(lo), jh = floor_of(hi);
        if (jl <= jh) {
            dx = 0;
        } else {
            dx = std::min(lo - Rational(jh), Rational(jl) - hi);
        }
    }
    Rational dy;
    if (bx.y0 > 0)
        dy = bx.y0;
    else if (bx.y1 < 0)
        dy = -bx.y1;
    return dx * dx + dy * dy;
}

// No root of q within distance < thr of any integer in [a, b].
bool region_root_free(const UniPoly& q, const Integer& a, const Integer& b, const Rational& thr, std::string& why) {
    std::vector<Box> stack;
    const Rational left = Rational(a) - thr, right = Rational(b) + thr;
    for (Rational x = left; x < right; x += thr) {
        Rational x1 = std::min(Rational(x + thr), right);
        stack.push_back({x, x1, -thr, Rational(0), 0});
        stack.push_back({x, x1, Rational(0), thr, 0});
    }
    const Rational thr2 = thr * thr;
    std::size_t tested = 0;
    while (!stack.empty()) {
        Box bx = stack.back();
        stack.pop_back();
        if (box_integer_distance2(bx, a, b) >= thr2) continue;
        const Rational hw = (bx.x1 - bx.x0) / 2, hh = (bx.y1 - bx.y0) / 2;
        const Scalar center(bx.x0 + hw, bx.y0 + hh);
        const Rational radius = sqrt_upper(hw * hw + hh * hh, 64);
        ++tested;
        if (disc_root_free(q, center, radius)) continue;
        if (bx.depth >= 60) {
            why = "exclusion inconclusive near " + std::to_string(to_double(center.re())) + "+" +
                  std::to_string(to_double(center.im())) + "i";
            return false;
        }
        const Rational xm = bx.x0 + hw, ym = bx.y0 + hh;
        stack.push_back({bx.x0, xm, bx.y0, ym, bx.depth + 1});
        stack.push_back({xm, bx.x1, bx.y0, ym, bx.depth + 1});
        stack.push_back({bx.x0, xm, ym, bx.y1, bx.depth + 1});
        stack.push_back({xm, bx.x1, ym, bx.y1, bx.depth + 1});
    }
    why = std::to_string(tested) + " exclusion discs";
    return true;
}

std::vector<UniPoly> critical_generators_sturm(const UniPoly& p) {
    std::vector<Scalar> re, im;
    for (const auto& c : p.coeffs()) {
        re.emplace_back(c.re());
        im.emplace_back(c.im());
    }
    UniPoly pa(re), pb(im);
    std::vector<UniPoly> gens;
    if (pa.degree() >= 1 && pb.degree() >= 1) {
        gens = {pa.derivative(), pb.derivative()};
    } else if (pa.degree() >= 1) {
        gens = {pa.derivative()};
    } else if (pb.degree() >= 1) {
        gens = {pb.derivative()};
    }
    return gens;
}

}  // namespace

std::vector<ConditionStatus> recertify_plan(const IntervalPlan& plan, const std::vector<UniPoly>& qs) {
    std::vector<ConditionStatus> out;
    const Integer& a = plan.a;
    const Integer& b = plan.b;
    const Rational e2 = e_upper() * e_upper();
    const Rational need = plan.A * (plan.m - 1) * e2;
    out.push_back({"(i) b - a > A(m-1)e^2", Rational(b - a) > need, "with e < 2.718281829"});

    const Rational thr = make_rational(a, Integer(plan.L) * plan.D);
    bool ok = true;
    std::string detail = "no nonconstant Q";
    for (const auto& q : qs) {
        if (q.degree() < 1) continue;
        if (!region_root_free(q, a, b, thr, detail)) {
            ok = false;
            break;
        }
    }
    out.push_back({"(ii) |j - lambda| >= a/(LD)", ok, detail});

    const Integer d2l = Integer(plan.D) * plan.D * plan.L;
    out.push_back({"(iii) (b - a)/a <= 1/(D^2 L)", (b - a) * d2l <= a, "exact"});

    ok = true;
    detail = "Sturm counts zero on [a, b]";
    for (std::size_t i = 0; i < qs.size() && ok; ++i)
        for (std::size_t j = i + 1; j < qs.size() && ok; ++j)
            for (const auto& g : critical_generators_sturm(qs[i] * qs[j])) {
                if (g.degree() < 1) continue;
                int c = real_root_count(g, Rational(a), Rational(b));
                if (c != 0) {
                    ok = false;
                    detail = std::to_string(c) + " critical point(s) of C(Q_" + std::to_string(i + 1) + " Q_" +
                             std::to_string(j + 1) + ") in [a, b]";
                    break;
                }
            }
    out.push_back({"(iv) C(Q_i Q_j) avoids [a, b]", ok, detail});
    return out;
}

DeltaSearchResult delta_search(const IntSequence& f, const std::vector<UniPoly>& qs, const Rational& kappa,
                               const Rational& tau) {
    if (qs.empty() || std::all_of(qs.begin(), qs.end(), [](const UniPoly& q) { return q.is_zero(); }))
        throw precondition_error("delta_search needs a nonzero Q_j");
    if (sgn(kappa) <= 0 || sgn(tau) <= 0) throw precondition_error("kappa and tau must be positive");
    if (4 * tau < kappa) throw precondition_error("delta_search needs 4 tau >= kappa");

    DeltaSearchResult res;
    res.m = static_cast<int>(qs.size());
    res.D = std::max(1, max_degree(qs));
    res.kappa = kappa;
    res.tau = tau;
    const Rational k = 168 * tau / kappa * Rational(res.D) * res.D * res.D * Rational(res.m) * res.m * res.m * res.m;
    res.bound = scale(exp_enclosure(3), k);

    const Integer limit_z = floor_of(res.bound.hi) + 1;
    if (!limit_z.fits_slong_p()) throw precondition_error("delta_search bound exceeds the scan range");
    const std::int64_t limit = limit_z.get_si();
    for (std::int64_t n = 0; n < limit; ++n) {
        Scalar d = delta_at(qs, f, n);
        if (d.is_zero()) continue;
        res.witness_found = true;
        res.n = n;
        res.delta = d;
        for (unsigned bits = 96; bits <= 1536; bits *= 2) {
            auto bd = scale(exp_enclosure(3, bits), k);
            if (rat(n) < bd.lo) {
                res.below_bound = true;
                break;
            }
            if (rat(n) >= bd.hi) break;
        }
        res.note = res.below_bound ? "witness below bound" : "bound violation: witness index is not below the cap";
        return res;
    }
    res.note = "counterexample: Delta(n) = 0 for every n below the cap; a hypothesis or the bound fails";
    return res;
}

LemmaReport lemma31_check(const UniPoly& q, const IntSequence& f, std::int64_t a, std::int64_t b, std::int64_t L,
                          const Rational& kappa, int D) {
    if (q.is_zero()) throw precondition_error("lemma31_check needs Q nonzero");
    if (!(0 < a && a < b) || L < 1) throw precondition_error("lemma31_check needs 0 < a < b and L >= 1");
    if (D <= 0) D = std::max(1, q.degree());
    LemmaReport rep;
    rep.lemma = "single_polynomial_energy";
    const Integer za(static_cast<long>(a)), zb(static_cast<long>(b));
    const Rational thr = make_rational(za, Integer(static_cast<long>(L)) * D);
    ConditionStatus dist{"(i) |j - lambda| >= a/(LD)", true, "Q constant"};
    if (q.degree() >= 1)
        for (double tol = 1e-9; tol >= 1e-21; tol *= 1e-4) {
            dist = root_distance_status(root_enclosures(q, tol), za, zb, thr, dist.name);
            if (dist.holds) break;
        }
    rep.hypotheses.push_back(dist);
    rep.hypotheses.push_back({"(ii) (b - a)/a <= 1/(L D^2)", Rational(b - a) * L * D * D <= Rational(za), "exact"});
    const std::int64_t sq = sum_squares(f, a, b);
    rep.hypotheses.push_back({"(iii) sum |f|^2 >= kappa (b - a)", rat(sq) >= kappa * (b - a),
                              "sum = " + std::to_string(sq) + ", kappa (b - a) = " + str(kappa * (b - a))});
    rep.hypotheses_hold = all_hold(rep.hypotheses);

    Rational lhs(0), mx(0);
    for (std::int64_t j = a; j <= b; ++j) {
        Rational n2 = q(Scalar(j)).norm();
        mx = std::max(mx, n2);
        std::int64_t fv = f(j);
        if (fv != 0) lhs += n2 * fv * fv;
    }
    rep.lhs = {lhs, lhs};
    const auto e2 = exp_enclosure(2);
    const Rational num = kappa * (b - a) * mx;
    rep.rhs = {num / e2.hi, num / e2.lo};
    rep.conclusion_holds = lhs >= rep.rhs.hi;
    rep.verdict = verdict_of(rep.hypotheses_hold, rep.conclusion_holds);
    return rep;
}

LemmaReport lemma32_check(const UniPoly& q, const IntSequence& f, std::int64_t n, std::int64_t a, std::int64_t b,
                          const Rational& tau) {
    if (!(0 <= a && a <= b)) throw precondition_error("lemma32_check needs 0 <= a <= b");
    if (sgn(tau) <= 0) throw precondition_error("tau must be positive");
    LemmaReport rep;
    rep.lemma = "single_polynomial_sum";
    const Integer za(static_cast<long>(a)), zb(static_cast<long>(b));
    ConditionStatus crit;
    for (double tol = 1e-9; tol >= 1e-21; tol *= 1e-4) {
        crit = critical_status(critical_set(q, tol).real_candidates, za, zb, "[a, b] avoids C(Q)");
        if (crit.holds) break;
    }
    rep.hypotheses.push_back(crit);
    std::int64_t partial = 0, worst = 0;
    for (std::int64_t r = a; r <= b; ++r) {
        partial += f(n + r);
        worst = std::max(worst, std::abs(partial));
    }
    rep.hypotheses.push_back({"|sum_{j=a}^r f(n+j)| <= tau", rat(worst) <= tau,
                              "max partial sum " + std::to_string(worst)});
    rep.hypotheses_hold = all_hold(rep.hypotheses);

    Scalar s;
    for (std::int64_t j = a; j <= b; ++j) {
        std::int64_t fv = f(n + j);
        if (fv != 0) s += q(Scalar(j)) * Scalar(fv);
    }
    const Rational s2 = s.norm();
    rep.lhs = sqrt_enclosure(s2, 128);
    const auto qa = sqrt_enclosure(q(Scalar(a)).norm(), 128);
    const auto qb = sqrt_enclosure(q(Scalar(b)).norm(), 128);
    rep.rhs = {4 * tau * (qa.lo + qb.lo), 4 * tau * (qa.hi + qb.hi)};
    rep.conclusion_holds = s2 <= rep.rhs.lo * rep.rhs.lo;
    rep.verdict = verdict_of(rep.hypotheses_hold, rep.conclusion_holds);
    return rep;
}

std::int64_t window_pair_max(const IntSequence& f, int m, std::int64_t a, std::int64_t b) {
    std::int64_t best = 0;
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
            std::int64_t p = 0, lo = 0, hi = 0;
            for (std::int64_t r = a; r <= b; ++r) {
                p += f(r + j) * f(r + k);
                best = std::max({best, std::abs(p - lo), std::abs(p - hi)});
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
        }
    return best;
}

LemmaReport lemma33_check(const std::vector<UniPoly>& qs, const IntSequence& f, std::int64_t a, std::int64_t b,
                          std::int64_t L, const Rational& kappa, const Rational& tau) {
    if (qs.empty()) throw precondition_error("lemma33_check needs m >= 1");
    if (!(0 < a && a < b) || L < 1) throw precondition_error("lemma33_check needs 0 < a < b and L >= 1");
    const int m = static_cast<int>(qs.size());
    const int D = std::max(1, max_degree(qs));
    LemmaReport rep;
    rep.lemma = "combined_window";
    const Integer za(static_cast<long>(a)), zb(static_cast<long>(b));
    const auto e2 = exp_enclosure(2);
    rep.hypotheses.push_back({"(i) b - a > 4 tau (m-1) e^2 / kappa", kappa * (b - a) > 4 * tau * (m - 1) * e2.hi,
                              "b - a = " + std::to_string(b - a)});
    const Rational thr = make_rational(za, Integer(static_cast<long>(L)) * D);
    ConditionStatus dist, crit;
    for (double tol = 1e-9; tol >= 1e-21; tol *= 1e-4) {
        dist = root_distance_status(roots_of_nonzero(qs, tol), za, zb, thr, "(ii) |j - lambda| >= a/(LD)");
        crit = critical_status(pair_critical_points(qs, tol), za, zb, "(iv) C(Q_i Q_j) avoids [a, b]");
        if (dist.holds && crit.holds) break;
    }
    rep.hypotheses.push_back(dist);
    rep.hypotheses.push_back(
        {"(iii) (b - a)/a <= 1/(D^2 L)", Rational(b - a) * D * D * L <= Rational(za), "exact"});
    rep.hypotheses.push_back(crit);
    bool energy = true;
    std::string energy_detail = "all shifts";
    for (int j = 1; j <= m && energy; ++j) {
        std::int64_t sq = sum_squares(f, a + j, b + j);
        if (rat(sq) < kappa * (b - a)) {
            energy = false;
            energy_detail = "shift " + std::to_string(j) + ": sum = " + std::to_string(sq);
        }
    }
    rep.hypotheses.push_back({"(I) sum_{n=a+j}^{b+j} |f(n)|^2 >= kappa (b - a)", energy, energy_detail});
    const std::int64_t w = window_pair_max(f, m, a, b);
    rep.hypotheses.push_back({"(II) window pair sums <= tau", rat(w) <= tau, "max = " + std::to_string(w)});
    rep.hypotheses_hold = all_hold(rep.hypotheses);

    Rational energy_sum(0);
    for (std::int64_t n = a; n <= b; ++n) {
        Scalar d = delta_at(qs, f, n);
        if (!d.is_zero() && !rep.witness) rep.witness = n;
        energy_sum += d.norm();
    }
    rep.lhs = {energy_sum, energy_sum};
    rep.rhs = {Rational(0), Rational(0)};
    rep.conclusion_holds = rep.witness.has_value();
    rep.verdict = verdict_of(rep.hypotheses_hold, rep.conclusion_holds);
    return rep;
}

double theorem_reference(std::int64_t p, std::size_t n) {
    if (n < 1) throw precondition_error("theorem_reference needs N >= 1");
    const double pd = static_cast<double>(p);
    return std::pow(static_cast<double>(n) / (std::sqrt(pd) * std::log(pd)), 0.1);
}

LegendreChainReport legendre_chain(const PrimeModulus& p, const std::vector<UniPoly>& qs, const Rational& tau_scan) {
    FeketeSeries fs(p);
    IntSequence f = [&fs](std::int64_t n) { return static_cast<std::int64_t>(fs(n)); };
    LegendreChainReport rep;
    rep.p = p.value();
    rep.kappa = make_rational(p.value() - 1, p.value());
    rep.tau_scan = tau_scan;
    const int m = static_cast<int>(qs.size());
    const int D = std::max(1, max_degree(qs));
    Rational tau = tau_scan;
    for (rep.iterations = 1; rep.iterations <= 50; ++rep.iterations) {
        rep.plan = interval_plan(qs, 4 * tau / rep.kappa, D, m);
        const std::int64_t w = window_pair_max(f, m, rep.plan.a.get_si(), rep.plan.b.get_si());
        if (rat(w) <= tau) break;
        tau = rat(w);
    }
    rep.tau_window = tau;
    rep.lemma33 = lemma33_check(qs, f, rep.plan.a.get_si(), rep.plan.b.get_si(), rep.plan.L, rep.kappa, tau);
    rep.search = delta_search(f, qs, rep.kappa, tau_scan);
    rep.witness_in_window = rep.search.witness_found && Integer(static_cast<long>(rep.search.n)) <= rep.plan.b;
    return rep;
}

}  // namespace holo
