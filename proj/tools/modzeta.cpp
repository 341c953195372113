// Command-line front end. Subcommands mirror the library modules; every output
// is plain CSV/JSON so runs are reproducible byte for byte given the same
// configuration (no timestamps in any artifact).

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modzeta/acceptance.hpp"
#include "modzeta/constructions.hpp"
#include "modzeta/errors.hpp"
#include "modzeta/frame.hpp"
#include "modzeta/frequency_set.hpp"
#include "modzeta/lp.hpp"
#include "modzeta/semigroup.hpp"
#include "modzeta/zeta.hpp"

using json = nlohmann::json;
using namespace modzeta;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Weight parse_weight(const std::string& w) {
    if (w == "loglog") return Weight::loglog();
    if (w == "omega") return Weight::omega();
    if (w.rfind("logpow:", 0) == 0) return Weight::logpow(std::stod(w.substr(7)));
    throw CLI::ValidationError("--weight", "expected loglog | logpow:E | omega");
}

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out;
    if (count <= 1) {
        out.push_back(a);
        return out;
    }
    for (int i = 0; i < count; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / (count - 1));
    return out;
}

// key=value lines become --key=value tokens inserted right after the
// subcommand, so explicit command-line values (parsed later) win
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    std::vector<std::string> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + line);
        out.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
    return out;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"modified zeta functions, prime semigroups and their frame operators"};
    app.name("modzeta");
    app.require_subcommand(1);
    bool emit_json = false, dump_config = false;
    app.add_flag("--json", emit_json, "print a JSON summary to stdout");
    app.add_flag("--dump-config", dump_config,
                 "print the effective key=value configuration and exit");
    std::string config_doc;
    app.add_option("--config", config_doc, "key=value configuration file");

    // shared options
    std::string primes_spec = "all";
    std::uint64_t X = 1'000'000;
    std::string out, out_prefix;

    auto* sg = app.add_subcommand("semigroup", "generate K and export its elements");
    sg->add_option("--primes", primes_spec, "prime selector");
    sg->add_option("--X", X, "generation bound");
    sg->add_option("--out", out, "CSV output path (column n)");

    auto* de = app.add_subcommand("density", "asymptotic density via the Euler product");
    double precision = 1e-9;
    std::uint64_t empirical_bound = 1'000'000;
    de->add_option("--primes", primes_spec, "prime selector");
    de->add_option("--precision", precision, "certified log-accuracy target");
    de->add_option("--empirical-bound", empirical_bound, "bound for pi_K(x)/x samples");
    de->add_option("--out", out, "JSON output path");

    auto* ze = app.add_subcommand("zeta", "evaluate zeta_K on sigma = 1 + delta");
    double delta = 1e-2, tmin = -5.0, tmax = 5.0, zeta_dev = -1.0;
    int tcount = 201;
    ze->add_option("--primes", primes_spec, "prime selector");
    ze->add_option("--X", X, "semigroup bound");
    ze->add_option("--delta", delta, "distance to the abscissa sigma = 1");
    ze->add_option("--tmin", tmin, "grid start");
    ze->add_option("--tmax", tmax, "grid end");
    ze->add_option("--tcount", tcount, "grid points");
    ze->add_option("--deviation", zeta_dev,
                   "rigorous bound on sup |pi_K(u) - A u| (enables certified tails)");
    ze->add_option("--out", out, "CSV output path (t, re, im, poisson_term, remainder, bound)");

    auto* pa = app.add_subcommand("panejah", "window measures and counting ratios of L");
    double pj_delta = 1.0, xi_from = 2.0, xi_to = 0.0;
    int xi_count = 25;
    pa->add_option("--primes", primes_spec, "prime selector");
    pa->add_option("--X", X, "semigroup bound");
    pa->add_option("--delta", pj_delta, "window width");
    pa->add_option("--xi-from", xi_from, "grid start");
    pa->add_option("--xi-to", xi_to, "grid end (default log X - delta/10)");
    pa->add_option("--xi-count", xi_count, "grid points");
    pa->add_option("--out", out, "CSV output path (xi, measure, ratio, deviation)");

    auto* sp = app.add_subcommand("spectrum", "assemble the frame matrix and decompose it");
    int M = 65;
    std::uint64_t N = 0;
    bool band_compare = false;
    double T = 1.0, A_override = -1.0;
    sp->add_option("--primes", primes_spec, "prime selector");
    sp->add_option("--T", T, "interval (-T, T)");
    sp->add_option("--M", M, "basis dimension (odd)");
    sp->add_option("--N", N, "Dirichlet cutoff (default: covering heuristic capped by X)");
    sp->add_option("--X", X, "semigroup bound");
    sp->add_option("--A", A_override, "reference density (default: from the Euler product)");
    sp->add_flag("--band-compare", band_compare,
                 "also report singular values of Z minus the band restriction");
    sp->add_option("--out-prefix", out_prefix, "writes PREFIX.json and PREFIX_eigenvalues.csv");

    auto* co = app.add_subcommand("construct", "prime sets separating density from the PNT");
    std::string which = "6a";
    double c_delta = 0.5;
    int k0 = 4, kmax = 19, c6a_kmin = 1, c6a_kmax = 3;
    double c6a_base = 10.0, c6a_ratio = 2.0;
    bool cap = false;
    co->add_option("--which", which, "6a or 6b")->check(CLI::IsMember({"6a", "6b"}));
    co->add_option("--X", X, "sieve bound");
    co->add_option("--delta", c_delta, "interval shape parameter");
    co->add_option("--k0", k0, "6b first dyadic interval");
    co->add_option("--kmax", kmax, "6b last dyadic interval");
    co->add_flag("--cap", cap, "6b: cap quotas at the available primes instead of failing");
    co->add_option("--base", c6a_base, "6a interval base");
    co->add_option("--ratio", c6a_ratio, "6a exponent ratio");
    co->add_option("--kmin6a", c6a_kmin, "6a first index");
    co->add_option("--kmax6a", c6a_kmax, "6a last index");
    co->add_option("--out-prefix", out_prefix,
                   "writes PREFIX_q.csv, PREFIX_removed.csv and PREFIX.json");

    auto* lp = app.add_subcommand("lpscan", "summability scans and L^q norm ladders");
    std::string weight_spec = "loglog";
    bool ladder_mode = false;
    double lq = 1.0, lT = 1.0, lp_dev = -1.0;
    lp->add_option("--primes", primes_spec, "prime selector");
    lp->add_option("--weight", weight_spec, "loglog | logpow:E | omega");
    lp->add_option("--X", X, "scan/semigroup bound");
    lp->add_flag("--ladder", ladder_mode, "compute the psi_K norm ladder instead of the scan");
    lp->add_option("--q", lq, "ladder exponent q >= 1");
    lp->add_option("--T", lT, "ladder interval (-T, T)");
    lp->add_option("--deviation", lp_dev, "rigorous counting deviation (as in zeta)");
    lp->add_option("--out", out, "CSV output path");

    auto* su = app.add_subcommand("suite", "run the acceptance battery");
    acceptance::Options aopt;
    su->add_flag("--quick", aopt.quick, "reduced sizes");
    su->add_option("--seed", aopt.seed, "seed for randomized spot checks");
    su->add_option("--out", aopt.out_dir, "directory for summary.json");

    // let --json appear after the subcommand name as well
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* o : sub->get_options([](CLI::Option*) { return true; }))
            o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config" && it + 1 != args.end()) {
            config_path = *(it + 1);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            config_path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (!config_path.empty()) {
        const auto extra = config_tokens(config_path);
        auto pos = std::find_if(args.begin(), args.end(), [](const std::string& a) {
            return a.rfind("--", 0) != 0;
        });
        if (pos != args.end()) ++pos;
        args.insert(pos, extra.begin(), extra.end());
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    if (dump_config) {
        // everything needed to reproduce this invocation, ready for --config
        for (const auto* sub : app.get_subcommands()) {
            for (const auto* o : sub->get_options()) {
                if (o->count() == 0 || o->get_lnames().empty()) continue;
                if (o->results().empty())
                    std::cout << o->get_lnames()[0] << "=true\n";
                else
                    std::cout << o->get_lnames()[0] << "=" << o->results()[0] << "\n";
            }
        }
        return 0;
    }

    json summary;

    if (sg->parsed()) {
        PrimeSieve sieve(X);
        const auto K = generate(PrimeSelector::parse(primes_spec), X, sieve);
        std::string csv = "n\n";
        for (auto n : K.elements) csv += std::to_string(n) + "\n";
        write_file(out, csv);
        summary = {{"selector", K.generator.spec_string()},
                   {"X", K.bound},
                   {"size", K.elements.size()},
                   {"method", K.method == Semigroup::Method::Sieve ? "sieve" : "heap"}};
        if (!emit_json)
            std::cout << "|K| = " << K.elements.size() << " (method: "
                      << summary["method"].get<std::string>() << ")\n";
    } else if (de->parsed()) {
        PrimeSieve sieve(std::max(empirical_bound, std::uint64_t{1000}));
        const auto rep = density(PrimeSelector::parse(primes_spec), sieve, precision,
                                 empirical_bound);
        json emp = json::array();
        for (const auto& [x, r] : rep.empirical) emp.push_back({{"x", x}, {"ratio", r}});
        summary = {{"A", rep.A},
                   {"euler_tail_bound", rep.euler_tail_bound},
                   {"certified", rep.certified},
                   {"divergent", rep.divergent},
                   {"complement_trend", to_string(rep.complement_trend)},
                   {"empirical", emp}};
        write_file(out, summary.dump(2) + "\n");
        if (!emit_json)
            std::cout << "A = " << fmt(rep.A) << (rep.divergent ? " (divergent complement)" : "")
                      << "\n";
    } else if (ze->parsed()) {
        PrimeSieve sieve(X);
        const auto sel = PrimeSelector::parse(primes_spec);
        const auto K = generate(sel, X, sieve);
        const double A = density(sel, sieve, 1e-9, std::min<std::uint64_t>(X, 100'000)).A;
        std::optional<double> dev;
        if (zeta_dev >= 0.0) dev = zeta_dev;
        const auto grid = linspace(tmin, tmax, tcount);
        const auto rows = re_zeta_line(K, A, delta, grid, dev);
        std::string csv = "t,re,im,poisson_term,remainder,bound\n";
        for (const auto& r : rows)
            csv += fmt(r.t) + "," + fmt(r.re) + "," + fmt(r.im) + "," + fmt(r.poisson) + "," +
                   fmt(r.remainder) + "," + fmt(r.bound) + "\n";
        write_file(out, csv);
        summary = {{"selector", sel.spec_string()}, {"A", A}, {"delta", delta},
                   {"rows", rows.size()}};
        if (!emit_json && !rows.empty())
            std::cout << "Re zeta_K(1+" << delta << ") at t=" << rows.front().t << ".."
                      << rows.back().t << ", A=" << fmt(A) << "\n";
    } else if (pa->parsed()) {
        PrimeSieve sieve(X);
        const auto sel = PrimeSelector::parse(primes_spec);
        const FrequencySet L(generate(sel, X, sieve));
        const double A = density(sel, sieve, 1e-9, std::min<std::uint64_t>(X, 100'000)).A;
        if (xi_to <= 0.0) xi_to = L.xi_max() - pj_delta / 10.0;
        const auto grid = linspace(std::max(xi_from, pj_delta), xi_to, xi_count);
        const auto pm = L.panejah_measure_inf(pj_delta, grid);
        std::string csv = "xi,measure,ratio,deviation\n";
        for (const auto& r : pm.rows)
            csv += fmt(r.xi) + "," + fmt(r.measure) + "," + fmt(r.count_ratio) + "," +
                   fmt(r.measure / pj_delta - A) + "\n";
        write_file(out, csv);
        summary = {{"selector", sel.spec_string()},
                   {"A", A},
                   {"delta", pj_delta},
                   {"inf_ratio", pm.inf_ratio}};
        if (!emit_json) std::cout << "inf measure/delta over the grid: " << fmt(pm.inf_ratio) << "\n";
    } else if (sp->parsed()) {
        PrimeSieve sieve(X);
        const auto sel = PrimeSelector::parse(primes_spec);
        const auto K = generate(sel, X, sieve);
        if (N == 0) N = default_cutoff(M, T, X);
        const double A = A_override >= 0.0
                             ? A_override
                             : density(sel, sieve, 1e-9, std::min<std::uint64_t>(X, 100'000)).A;
        const auto F = assemble(K, {T}, M, N);
        const auto rep = spectrum(F, A);
        json cf;
        for (const auto& [eps, frac] : rep.cluster_fraction) cf[fmt(eps)] = frac;
        summary = {{"selector", sel.spec_string()},
                   {"T", T},
                   {"M", M},
                   {"N", N},
                   {"A_ref", rep.A_ref},
                   {"eigenvalues", rep.eigenvalues},
                   {"cluster_fractions", cf},
                   {"lambda_min", rep.lambda_min},
                   {"lambda_max", rep.lambda_max},
                   {"lower_bound_estimate", rep.lower_bound_estimate},
                   {"tail_bound", rep.tail_bound},
                   {"histogram_mode", rep.histogram_mode()}};
        if (band_compare) {
            const auto band = band_restriction_matrix(K, {T}, M, N);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F.matrix() - band);
            std::vector<double> sv(svd.singularValues().data(),
                                   svd.singularValues().data() + svd.singularValues().size());
            summary["band_difference_singular_values"] = sv;
        }
        if (!out_prefix.empty()) {
            write_file(out_prefix + ".json", summary.dump(2) + "\n");
            std::string csv = "eigenvalue\n";
            for (double ev : rep.eigenvalues) csv += fmt(ev) + "\n";
            write_file(out_prefix + "_eigenvalues.csv", csv);
        }
        if (!emit_json)
            std::cout << "lambda in [" << fmt(rep.lambda_min) << ", " << fmt(rep.lambda_max)
                      << "], cluster(0.2)@" << fmt(A) << " = " << fmt(rep.cluster_fraction.at(0.2))
                      << ", tail bound " << fmt(rep.tail_bound) << "\n";
    } else if (co->parsed()) {
        PrimeSieve sieve(X);
        json rep_json;
        PrimeSelector sel;
        std::vector<std::uint64_t> removed;
        if (which == "6a") {
            Construction6aParams p;
            p.delta = c_delta;
            p.base = c6a_base;
            p.exponent_ratio = c6a_ratio;
            p.k_min = c6a_kmin;
            p.k_max = c6a_kmax;
            const auto rep = construct_6a(p, X, sieve);
            sel = rep.selector;
            removed = rep.removed;
            json intervals = json::array(), logp = json::array(), inv = json::array();
            for (const auto& [lo, hi] : rep.intervals) intervals.push_back({{"lo", lo}, {"hi", hi}});
            for (const auto& [x, s] : rep.interval_logp_sums)
                logp.push_back({{"x", x}, {"sum_logp_over_p", s}});
            for (const auto& [x, s] : rep.inv_partial_sums)
                inv.push_back({{"x", x}, {"sum_inv", s}});
            rep_json = {{"selector", sel.spec_string()},
                        {"intervals", intervals},
                        {"intervals_dropped", rep.intervals_dropped},
                        {"removed_count", removed.size()},
                        {"interval_logp_sums", logp},
                        {"inv_partial_sums", inv},
                        {"inv_trend", to_string(rep.inv_trend)}};
        } else {
            Construction6bParams p;
            p.k0 = k0;
            p.k_max = kmax;
            p.cap_small_quotas = cap;
            const auto rep = construct_6b(p, sieve, c_delta);
            sel = rep.selector;
            removed = rep.removed;
            json quotas = json::array(), inv = json::array(), wins = json::array();
            for (const auto& q : rep.quotas)
                quotas.push_back({{"k", q.k}, {"quota", q.quota}, {"available", q.available},
                                  {"taken", q.taken}});
            for (const auto& [x, s] : rep.inv_partial_sums)
                inv.push_back({{"x", x}, {"sum_inv", s}});
            for (const auto& w : rep.window_sums)
                wins.push_back({{"x", w.x}, {"sum", w.sum}, {"one_over_log_x", w.reference}});
            rep_json = {{"selector", sel.spec_string()},
                        {"quotas", quotas},
                        {"removed_count", removed.size()},
                        {"inv_partial_sums", inv},
                        {"inv_trend", to_string(rep.inv_trend)},
                        {"increment_ratio", rep.increment_ratio},
                        {"window_sums", wins}};
        }
        if (!out_prefix.empty()) {
            std::string qcsv = "p\n";
            for (auto p : sel.selected(sieve)) qcsv += std::to_string(p) + "\n";
            write_file(out_prefix + "_q.csv", qcsv);
            std::string rcsv = "p\n";
            for (auto p : removed) rcsv += std::to_string(p) + "\n";
            write_file(out_prefix + "_removed.csv", rcsv);
            write_file(out_prefix + ".json", rep_json.dump(2) + "\n");
        }
        summary = rep_json;
        if (!emit_json)
            std::cout << "removed " << removed.size() << " primes; report "
                      << (out_prefix.empty() ? "(not written)" : out_prefix + ".json") << "\n";
    } else if (lp->parsed()) {
        PrimeSieve sieve(X);
        const auto sel = PrimeSelector::parse(primes_spec);
        const auto w = parse_weight(weight_spec);
        if (ladder_mode) {
            const auto K = generate(sel, X, sieve);
            const double A = density(sel, sieve, 1e-9, std::min<std::uint64_t>(X, 100'000)).A;
            std::optional<double> dev;
            if (lp_dev >= 0.0) dev = lp_dev;
            const auto deltas = default_delta_ladder();
            const auto ladder = lq_norm_ladder(K, A, lq, lT, deltas, dev);
            std::string csv = "delta,q,norm,error_estimate\n";
            json rungs = json::array();
            for (const auto& r : ladder.rungs) {
                csv += fmt(r.delta) + "," + fmt(lq) + "," + fmt(r.norm) + "," +
                       fmt(r.quad_error) + "\n";
                rungs.push_back({{"delta", r.delta}, {"norm", r.norm},
                                 {"error", r.quad_error}});
            }
            write_file(out, csv);
            summary = {{"selector", sel.spec_string()}, {"q", lq}, {"T", lT},
                       {"stabilized", ladder.stabilized}, {"rungs", rungs}};
            if (!emit_json)
                std::cout << "ladder " << (ladder.stabilized ? "stabilizes" : "has not stabilized")
                          << "; last norm " << fmt(ladder.rungs.back().norm) << "\n";
        } else {
            std::vector<std::uint64_t> grid;
            for (std::uint64_t p0 = 1000; p0 <= X; p0 *= 10) grid.push_back(p0);
            const auto scan = summability_scan(sel, sieve, w, grid);
            std::string csv = "P0,partial_sum\n";
            json sums = json::array();
            for (const auto& [p0, s] : scan.partial_sums) {
                csv += fmt(p0) + "," + fmt(s) + "\n";
                sums.push_back({{"P0", p0}, {"sum", s}});
            }
            write_file(out, csv);
            summary = {{"selector", sel.spec_string()}, {"weight", w.name()},
                       {"verdict", to_string(scan.verdict)}, {"partial_sums", sums}};
            if (!emit_json)
                std::cout << "verdict: " << to_string(scan.verdict) << "\n";
        }
    } else if (su->parsed()) {
        const auto outcomes = acceptance::run(aopt);
        for (const auto& o : outcomes) {
            std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.id << ". " << o.title << " ("
                      << fmt(o.seconds).substr(0, 5) << "s)\n";
        }
        if (!aopt.out_dir.empty()) {
            std::filesystem::create_directories(aopt.out_dir);
            write_file(aopt.out_dir + "/summary.json",
                       acceptance::summary_json(outcomes, aopt));
        }
        if (emit_json) std::cout << acceptance::summary_json(outcomes, aopt);
        return acceptance::all_pass(outcomes) ? 0 : 1;
    }

    if (emit_json && !su->parsed()) std::cout << summary.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const insufficient_semigroup& e) {
        json diag{{"error", "insufficient_semigroup"}, {"message", e.what()},
                  {"required", e.required}, {"available", e.available}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    } catch (const construction_error& e) {
        json diag{{"error", "construction_error"}, {"message", e.what()}, {"k", e.k}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        json diag{{"error", "invalid_argument"}, {"message", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json diag{{"error", "runtime"}, {"message", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    }
}
