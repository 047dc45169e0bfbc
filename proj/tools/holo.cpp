// Command-line front end. Data goes to stdout (or --out), logs to stderr.
// Exit codes: 0 ok, 1 acceptance failure or internal error, 2 usage/parse
// error, 3 mathematical precondition violation, 4 bound violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "holo/acceptance.hpp"
#include "holo/errors.hpp"
#include "holo/suites.hpp"

namespace {

using holo::Json;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kPrecondition = 3, kBound = 4 };

struct Global {
    std::uint64_t seed = holo::kDefaultSeed;
    unsigned workers = holo::default_workers();
    std::string format = "json";
    std::string out;
    bool timings = false;
};

void log(const std::string& msg) { std::cerr << "holo: " << msg << "\n"; }

class Output {
public:
    explicit Output(const Global& g) : g_(g) {}
    bool csv() const { return g_.format == "csv"; }

    void json(const Json& j) { write(j.dump(2) + "\n"); }
    void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
        std::ostringstream os;
        auto line = [&os](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << quote(cells[i]);
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
        write(os.str());
    }

private:
    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    void write(const std::string& text) {
        if (g_.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(g_.out, std::ios::binary);
        if (!f) throw holo::parse_error("cannot open output file " + g_.out);
        f << text;
    }
    const Global& g_;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw holo::parse_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string rstr(const holo::Rational& q) { return q.get_str(); }
std::string sstr(const holo::Scalar& z) { return z.to_string(); }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& q : holo::parse_rational_list(text)) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw holo::parse_error("not a machine integer: " + q.get_str());
        out.push_back(q.get_num().get_si());
    }
    return out;
}

// ---- commands ---------------------------------------------------------------

int cmd_fekete(const Global& g, std::int64_t p, std::size_t count) {
    holo::PrimeModulus pm(p);
    auto c = holo::fekete_coefficients(pm, count);
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t n = 0; n < c.size(); ++n) rows.push_back({std::to_string(n), std::to_string(c[n])});
        out.table({"n", "value"}, rows);
    } else {
        out.json({{"p", p}, {"count", count}, {"coefficients", c}});
    }
    return kOk;
}

int cmd_charsum(const Global& g, std::int64_t p, std::int64_t max_length, const std::string& shift) {
    holo::PrimeModulus pm(p);
    std::optional<std::pair<std::int64_t, std::int64_t>> shifts;
    if (!shift.empty()) {
        auto v = parse_int_list(shift);
        if (v.size() != 2) throw holo::parse_error("--shift expects two integers j,h");
        shifts = std::make_pair(v[0], v[1]);
    }
    auto r = holo::max_incomplete_sum(pm, max_length, shifts, g.workers);
    Output out(g);
    Json j = holo::to_json(r);
    j["max_length"] = max_length;
    j["scale"] = holo::polya_vinogradov_scale(p);
    if (out.csv()) {
        out.table({"p", "shift_j", "shift_h", "max_length", "start", "length", "value", "normalized"},
                  {{std::to_string(p), shifts ? std::to_string(shifts->first) : "", shifts ? std::to_string(shifts->second) : "",
                    std::to_string(max_length), std::to_string(r.start), std::to_string(r.length), std::to_string(r.value),
                    j["normalized"].dump()}});
    } else {
        out.json(j);
    }
    return kOk;
}

struct Alg2Rec {
    holo::BiPoly h;
    holo::LinearODE ode;
    holo::PRecurrence rec;
};

Alg2Rec derive(const std::string& h_file) {
    Alg2Rec r;
    r.h = holo::parse_h_grid(read_file(h_file));
    log("h = " + r.h.to_string());
    r.ode = holo::algebraic_to_ode(r.h);
    r.rec = holo::ode_to_recurrence(r.ode);
    return r;
}

int cmd_alg2rec(const Global& g, const std::string& h_file) {
    auto r = derive(h_file);
    auto bounds = holo::check_bounds(r.h, r.ode, r.rec);
    auto audit = holo::recurrence_bound_audit(r.h, r.ode, r.rec);
    for (const auto& b : bounds)
        if (!b.satisfied) log("bound flagged: " + b.quantity + " " + std::to_string(b.measured) + " > " + std::to_string(b.bound));
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto* list : {&bounds, &audit})
            for (const auto& b : *list)
                rows.push_back({b.quantity, std::to_string(b.measured), std::to_string(b.bound), b.satisfied ? "true" : "false",
                                b.formula});
        out.table({"quantity", "measured", "bound", "satisfied", "formula"}, rows);
    } else {
        Json bj = Json::array(), aj = Json::array();
        for (const auto& b : bounds) bj.push_back(holo::to_json(b));
        for (const auto& b : audit) aj.push_back(holo::to_json(b));
        out.json({{"h", holo::to_json(r.h)},
                  {"ode", holo::to_json(r.ode)},
                  {"recurrence", holo::to_json(r.rec)},
                  {"bounds", bj},
                  {"audit", aj}});
    }
    // The ODE order/degree bounds are guarantees; a miss is a counterexample.
    return bounds[0].satisfied && bounds[1].satisfied ? kOk : kBound;
}

int cmd_extend(const Global& g, const std::string& h_file, const std::string& rec_file, const std::string& initial,
               std::size_t count) {
    holo::PRecurrence rec;
    if (!h_file.empty() == !rec_file.empty()) throw holo::parse_error("extend needs exactly one of --h or --rec");
    if (!h_file.empty()) {
        rec = derive(h_file).rec;
    } else {
        Json j;
        try {
            j = Json::parse(read_file(rec_file));
        } catch (const nlohmann::json::exception& e) {
            throw holo::parse_error(std::string("bad recurrence JSON: ") + e.what());
        }
        rec = holo::recurrence_from_json(j);
    }
    holo::Series init;
    for (const auto& q : holo::parse_rational_list(initial)) init.emplace_back(q);
    auto terms = holo::extend(rec, init, count);
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t n = 0; n < terms.size(); ++n) rows.push_back({std::to_string(n), sstr(terms[n])});
        out.table({"n", "value"}, rows);
    } else {
        Json t = Json::array();
        for (const auto& x : terms) t.push_back(holo::to_json(x));
        out.json({{"recurrence", holo::to_json(rec)}, {"count", count}, {"terms", t}});
    }
    return kOk;
}

int cmd_guess(const Global& g, const std::string& terms_text, int degree, int order, int coeff_degree) {
    auto terms = holo::parse_rational_list(terms_text);
    Output out(g);
    Json j{{"N", terms.size()}};
    std::vector<std::vector<std::string>> rows;
    if (order >= 0) {
        auto rec = holo::guess_recurrence(terms, order, std::max(coeff_degree, 0));
        j["mode"] = "recurrence";
        j["recurrence"] = rec ? holo::to_json(*rec) : Json(nullptr);
        if (rec)
            for (std::size_t k = 0; k < rec->coeffs.size(); ++k) rows.push_back({std::to_string(k), rec->coeffs[k].to_string()});
        if (out.csv()) return out.table({"j", "P_j"}, rows), kOk;
    } else {
        std::optional<holo::AlgebraicGuess> guess;
        int d = degree;
        if (degree > 0) {
            guess = holo::guess_algebraic(terms, degree);
        } else {
            auto r = holo::min_algebraic_degree(terms);
            d = r.d;
            guess = r.witness;
        }
        j["mode"] = "algebraic";
        j["d"] = d;
        j["guess"] = guess ? holo::to_json(*guess) : Json(nullptr);
        if (out.csv()) {
            if (guess)
                for (int b = 0; b <= guess->h.deg_y(); ++b)
                    for (int a = 0; a <= guess->h.deg_x(); ++a)
                        rows.push_back({std::to_string(a), std::to_string(b), rstr(guess->h.coeff(a, b).re())});
            return out.table({"x_degree", "y_degree", "coefficient"}, rows), kOk;
        }
    }
    out.json(j);
    return kOk;
}

int cmd_dpn(const Global& g, const std::string& primes_text, std::size_t n_min, std::size_t n_max) {
    if (n_min < 2 || n_max < n_min) throw holo::parse_error("need 2 <= --n-min <= --n-max");
    auto primes = parse_int_list(primes_text);
    std::vector<holo::PrimeModulus> pms;
    for (auto p : primes) pms.emplace_back(p);
    const std::size_t per = n_max - n_min + 1;
    std::vector<holo::DpnResult> res(pms.size() * per);
    holo::parallel_for(res.size(), g.workers, [&](std::size_t i) { res[i] = holo::compute_dpn(pms[i / per], n_min + i % per); });
    for (const auto& r : res)
        if (r.outside_regime) log("p=" + std::to_string(r.p) + " N=" + std::to_string(r.n) + ": N >= p, outside the N < p regime");
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : res) {
            std::ostringstream bv;
            bv.precision(17);
            bv << r.theorem_reference;
            rows.push_back({std::to_string(r.p), std::to_string(r.n), std::to_string(r.d), bv.str()});
        }
        out.table({"p", "N", "d_p(N)", "bound_value"}, rows);
    } else {
        Json arr = Json::array();
        for (const auto& r : res) arr.push_back(holo::to_json(r));
        out.json({{"rows", arr}});
    }
    return kOk;
}

int cmd_oscillation(const Global& g, const std::string& suite, std::size_t trials) {
    std::vector<holo::SuiteResult> results;
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
    if (want("constant")) results.push_back(holo::constant_delta_smoke());
    if (want("legendre")) results.push_back(holo::legendre_delta_suite(g.seed, g.workers, trials));
    if (want("grid")) results.push_back(holo::interval_grid_suite(g.seed, g.workers));
    if (want("lemma")) results.push_back(holo::lemma_suite(g.seed, g.workers, trials));
    if (want("chain")) results.push_back(holo::chain_suite(g.seed, g.workers, std::min<std::size_t>(trials, 20)));
    bool ok = true;
    for (const auto& r : results) {
        log(r.name + ": " + r.summary);
        ok = ok && r.ok;
    }
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) rows.push_back({r.name, r.ok ? "true" : "false", r.summary});
        out.table({"suite", "ok", "summary"}, rows);
    } else {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back({{"suite", r.name}, {"ok", r.ok}, {"summary", r.summary}, {"details", r.details}});
        out.json({{"seed", g.seed}, {"suites", arr}});
    }
    if (!ok) {
        for (const auto& r : results)
            if (!r.ok) std::cerr << r.details.dump(2) << "\n";
        return kBound;
    }
    return kOk;
}

int cmd_repro(const Global& g, const std::string& criteria) {
    holo::AcceptanceOptions opts;
    opts.seed = g.seed;
    opts.workers = g.workers;
    if (!criteria.empty())
        for (auto c : parse_int_list(criteria)) opts.criteria.push_back(static_cast<int>(c));
    auto results = holo::run_acceptance(opts);
    bool all = true;
    for (const auto& r : results) {
        std::cerr << holo::format_line(r) << "\n";
        all = all && r.passed;
    }
    Output out(g);
    if (out.csv()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            std::vector<std::string> row{std::to_string(r.id), r.title, r.correct ? "true" : "false", r.summary};
            if (g.timings) row.push_back(std::to_string(r.seconds));
            rows.push_back(row);
        }
        std::vector<std::string> header{"id", "title", "correct", "summary"};
        if (g.timings) header.push_back("seconds");
        out.table(header, rows);
    } else {
        Json arr = Json::array();
        for (const auto& r : results) {
            Json j{{"id", r.id}, {"title", r.title}, {"correct", r.correct}, {"target_seconds", r.target_seconds},
                   {"summary", r.summary}, {"details", r.details}};
            if (g.timings) {
                j["seconds"] = r.seconds;
                j["passed"] = r.passed;
            }
            arr.push_back(j);
        }
        out.json({{"seed", g.seed}, {"criteria", arr}});
    }
    return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebraic/holonomic series toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");

    std::int64_t p = 0, max_length = 0;
    std::size_t count = 0, n_min = 2, n_max = 30, trials = 100;
    std::string shift, h_file, rec_file, initial, terms, terms_file, primes, suite = "all", criteria;
    int degree = 0, order = -1, coeff_degree = 0;

    auto* fek = app.add_subcommand("fekete", "Legendre-symbol coefficients of F_p");
    fek->add_option("--p", p, "odd prime")->required();
    fek->add_option("--count", count, "number of coefficients")->required();

    auto* cs = app.add_subcommand("charsum", "maximal incomplete character sum");
    cs->add_option("--p", p, "odd prime")->required();
    cs->add_option("--max-length", max_length, "largest window length (<= p)")->required();
    cs->add_option("--shift", shift, "pair j,h for sums of f(n+j) f(n+h)");

    auto* a2r = app.add_subcommand("alg2rec", "annihilating polynomial -> ODE -> recurrence");
    a2r->add_option("h_file", h_file, "coefficient grid file")->required();

    auto* ext = app.add_subcommand("extend", "extend a sequence by its recurrence");
    ext->set_help_flag("--help", "Print this help message and exit");
    ext->add_option("--h", h_file, "derive the recurrence from this grid file");
    ext->add_option("--rec", rec_file, "recurrence JSON (alg2rec output or {\"coeffs\": ...})");
    ext->add_option("--initial", initial, "initial terms, comma separated")->required();
    ext->add_option("--count", count, "number of terms")->required();

    auto* gs = app.add_subcommand("guess", "algebraic or recurrence guess for a prefix");
    gs->add_option("--terms", terms, "terms, comma separated");
    gs->add_option("--terms-file", terms_file, "file with terms");
    gs->add_option("--degree", degree, "per-variable degree (default: minimal)");
    gs->add_option("--order", order, "guess a recurrence of this order instead");
    gs->add_option("--coeff-degree", coeff_degree, "recurrence coefficient degree");

    auto* dp = app.add_subcommand("dpn", "grid of d_p(N)");
    dp->add_option("--primes", primes, "comma separated primes")->required();
    dp->add_option("--n-min", n_min)->capture_default_str();
    dp->add_option("--n-max", n_max)->capture_default_str();

    auto* osc = app.add_subcommand("oscillation", "oscillation-bound suites");
    osc->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "constant", "legendre", "grid", "lemma", "chain"}))
        ->capture_default_str();
    osc->add_option("--trials", trials)->capture_default_str();

    auto* rep = app.add_subcommand("repro", "run the acceptance criteria");
    rep->add_option("--criteria", criteria, "comma separated ids (default: all)");
    rep->add_flag("--timings", g.timings, "include wall-clock times in the data output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*fek) return cmd_fekete(g, p, count);
        if (*cs) return cmd_charsum(g, p, max_length, shift);
        if (*a2r) return cmd_alg2rec(g, h_file);
        if (*ext) return cmd_extend(g, h_file, rec_file, initial, count);
        if (*gs) {
            if (terms.empty() == terms_file.empty()) throw holo::parse_error("guess needs exactly one of --terms or --terms-file");
            return cmd_guess(g, terms.empty() ? read_file(terms_file) : terms, degree, order, coeff_degree);
        }
        if (*dp) return cmd_dpn(g, primes, n_min, n_max);
        if (*osc) return cmd_oscillation(g, suite, trials);
        if (*rep) return cmd_repro(g, criteria);
    } catch (const holo::parse_error& e) {
        log(std::string("parse error: ") + e.what());
        return kUsage;
    } catch (const holo::singular_index_error& e) {
        log(std::string("singular index: ") + e.what());
        return kPrecondition;
    } catch (const holo::bound_violation& e) {
        log(std::string("bound violation: ") + e.what());
        return kBound;
    } catch (const holo::precondition_error& e) {
        log(std::string("precondition violated: ") + e.what());
        return kPrecondition;
    } catch (const std::exception& e) {
        log(std::string("error: ") + e.what());
        return kFailure;
    }
    return kUsage;
}
