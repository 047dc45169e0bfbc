#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holo/number_theory.hpp"
#include "holo/rational.hpp"
#include "holo/roots.hpp"
#include "holo/uni_poly.hpp"

namespace holo {

/// Integer-valued arithmetic function on Z.
using IntSequence = std::function<std::int64_t(std::int64_t)>;

struct ConditionStatus {
    std::string name;
    bool holds = false;
    std::string detail;
};

bool all_hold(const std::vector<ConditionStatus>& cs);

/// C(Q) for Q = A + iB: zeros of A'B' if both A and B are nonconstant, zeros
/// of the nonconstant one's derivative if exactly one is, empty otherwise.
struct CriticalSet {
    UniPoly source;
    std::vector<UniPoly> generators;             // real polynomials whose zeros form C(Q)
    std::vector<RootEnclosure> members;          // all of C(Q)
    std::vector<RootEnclosure> real_candidates;  // enclosures meeting the real axis
};

CriticalSet critical_set(const UniPoly& q, double tolerance = 1e-9);

struct IntervalPlan {
    Integer a, b;
    std::int64_t L = 0;
    Rational A;
    int D = 0;
    int m = 0;
    std::vector<Integer> r_sequence;  // R_1..R_t
    std::size_t chosen_index = 0;     // 1-based index into r_sequence
    std::vector<ConditionStatus> certification;
    Integer alternative_a;       // 2 D^2 m R_i
    bool padded_disjoint = false;  // [D^2LR_i - DR_i, D^2LR_i + DR_i + R_i] pairwise disjoint
    Integer padded_min_gap;        // min over i of left end of i+1 minus right end of i
    RationalInterval b_cap;      // 20 A e^3 D^2 m^3 (A + Dm)
    bool below_cap = false;      // b < b_cap, certified
};

/// Interval [a, b] = [D^2 L R_i, D^2 L R_i + R_i] with L = 9m^2 satisfying
/// (i) b - a > A(m-1)e^2, (ii) |j - lambda| >= a/(LD) for integers j in
/// [a, b] and every root of every nonzero Q_k, (iii) (b - a)/a <= 1/(D^2 L),
/// (iv) no point of C(Q_i Q_j), i < j, lies in [a, b]. The smallest passing
/// index is chosen. Throws certification_error when root enclosures stay
/// inconclusive after refinement.
IntervalPlan interval_plan(const std::vector<UniPoly>& qs, const Rational& A, int D, int m);

/// Checks (i)-(iv) of a plan again with separate machinery: a fixed
/// rational upper bound for e, Pellet exclusion tests on a box subdivision
/// for root distances and Sturm counts for the critical sets.
std::vector<ConditionStatus> recertify_plan(const IntervalPlan& plan, const std::vector<UniPoly>& qs);

struct DeltaSearchResult {
    bool witness_found = false;
    std::int64_t n = -1;
    Scalar delta;
    RationalInterval bound;  // 168 tau kappa^-1 e^3 D^3 m^4
    bool below_bound = false;
    int m = 0;
    int D = 0;
    Rational kappa, tau;
    std::string note;
};

/// First n >= 0 with Delta(n) = sum_{j=1}^m Q_j(n) f(n+j) != 0, scanned up to
/// the cap. A scan that reaches the cap returns witness_found = false with a
/// counterexample note. Throws precondition_error if all Q_j vanish, kappa
/// or tau is not positive, or 4 tau < kappa.
DeltaSearchResult delta_search(const IntSequence& f, const std::vector<UniPoly>& qs, const Rational& kappa,
                               const Rational& tau);

struct LemmaReport {
    std::string lemma;
    std::vector<ConditionStatus> hypotheses;
    bool hypotheses_hold = false;
    RationalInterval lhs;
    RationalInterval rhs;
    bool conclusion_holds = false;
    std::optional<std::int64_t> witness;
    std::string verdict;  // "holds", "hypothesis_failure" or "conclusion_failure"
};

/// sum_{j=a}^b |Q(j)|^2 f(j)^2 >= (b-a) kappa e^-2 max_{a<=j<=b} |Q(j)|^2,
/// given root distances >= a/(LD), (b-a)/a <= 1/(LD^2) and
/// sum_{j=a}^b f(j)^2 >= kappa (b-a). D defaults to max(1, deg Q).
LemmaReport lemma31_check(const UniPoly& q, const IntSequence& f, std::int64_t a, std::int64_t b,
                          std::int64_t L, const Rational& kappa, int D = 0);

/// |sum_{j=a}^b Q(j) f(n+j)| <= 4 tau (|Q(b)| + |Q(a)|), given [a, b]
/// disjoint from C(Q) and |sum_{j=a}^r f(n+j)| <= tau for r in [a, b].
LemmaReport lemma32_check(const UniPoly& q, const IntSequence& f, std::int64_t n, std::int64_t a,
                          std::int64_t b, const Rational& tau);

/// Delta(n) != 0 for some n in [a, b], after certifying (i)-(iv) and (I)-(II).
/// (II) is read as: for 1 <= j < k <= m, every s and r with a <= s <= r <= b,
/// |sum_{n=s}^r f(n+j) f(n+k)| <= tau.
LemmaReport lemma33_check(const std::vector<UniPoly>& qs, const IntSequence& f, std::int64_t a,
                          std::int64_t b, std::int64_t L, const Rational& kappa, const Rational& tau);

/// (N / (sqrt(p) ln p))^(1/10); reference shape only.
double theorem_reference(std::int64_t p, std::size_t n);

/// Largest |sum_{n=s}^r f(n+j) f(n+k)| over a <= s <= r <= b and
/// 1 <= j < k <= m.
std::int64_t window_pair_max(const IntSequence& f, int m, std::int64_t a, std::int64_t b);

struct LegendreChainReport {
    std::int64_t p = 0;
    Rational kappa;
    Rational tau_scan;    // from max_incomplete_sum
    Rational tau_window;  // fixed point used for the interval
    int iterations = 0;
    IntervalPlan plan;
    LemmaReport lemma33;
    DeltaSearchResult search;
    bool witness_in_window = false;  // search.n <= plan.b
};

/// Delta search for f = (.|p) chained with interval_plan (A = 4 tau/kappa)
/// and lemma33_check, where kappa = (p-1)/p and tau is raised until it also
/// bounds the window sums inside [a, b].
LegendreChainReport legendre_chain(const PrimeModulus& p, const std::vector<UniPoly>& qs,
                                   const Rational& tau_scan);

}  // namespace holo
