// Command-line front end: generate topologies, route, compute metrics,
// run the verification sweep, and print t-neighbour censuses.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 enumeration budget exceeded.

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rcr/report.hpp"
#include "rcr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

struct ParamArgs {
    int n = 0, d = 0, r = 0;
    std::string family;  // "", "ccc", "cor", "hypercube"
};

void add_param_options(CLI::App* cmd, ParamArgs& a, bool allow_family = true) {
    cmd->add_option("--n", a.n, "cube dimension n");
    cmd->add_option("--d", a.d, "cube degree d");
    cmd->add_option("--r", a.r, "ring length r");
    if (allow_family)
        cmd->add_option("--family", a.family, "named family: ccc (needs --n) or cor (needs --d --r)");
}

rcr::Params resolve_params(const ParamArgs& a) {
    if (a.family == "ccc") {
        if (a.n < 1) throw std::invalid_argument("--family ccc needs --n");
        return rcr::special(rcr::SpecialFamily::cube_connected_cycles, a.n);
    }
    if (a.family == "cor") {
        if (a.d < 1 || a.r < 1) throw std::invalid_argument("--family cor needs --d and --r");
        return rcr::special(rcr::SpecialFamily::cube_of_rings, a.d, a.r);
    }
    if (a.family == "hypercube")
        return rcr::special(rcr::SpecialFamily::hypercube, a.n);
    if (!a.family.empty())
        throw std::invalid_argument("unknown family '" + a.family + "' (expected ccc or cor)");
    return rcr::Params::create(a.n, a.d, a.r);
}

std::string default_format() { return isatty(fileno(stdout)) ? "text" : "json"; }

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(const ParamArgs& pa, bool general, const std::string& format,
            const std::string& out_path, std::int64_t budget) {
    rcr::Graph g = [&] {
        if (general) {
            if (!pa.family.empty())
                throw std::invalid_argument("--general cannot be combined with --family");
            return rcr::build_general(pa.n, pa.d, pa.r, budget);
        }
        try {
            return rcr::Graph::cayley(resolve_params(pa), budget);
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (what.find("divisible") != std::string::npos)
                throw std::invalid_argument(what + " (hint: pass --general to build Q_n^-(d,r))");
            throw;
        }
    }();
    if (general && !g.connected())
        std::cerr << "note: Q^-_" << g.n() << "(" << g.d() << "," << g.r()
                  << ") is disconnected (dr < n)\n";
    if (format == "edgelist")
        write_output(out_path, rcr::export_edgelist(g));
    else if (format == "dot")
        write_output(out_path, rcr::export_dot(g));
    else
        throw std::invalid_argument("gen --format must be edgelist or dot");
    return kExitOk;
}

// -------------------------------------------------------------- route ----

int cmd_route(const ParamArgs& pa, const std::string& src_text, const std::string& dst_text,
              bool check_against_oracle, std::int64_t budget) {
    rcr::Params p = resolve_params(pa);
    rcr::Vertex src = rcr::decode(src_text, p.n, p.r);
    rcr::Vertex dst = rcr::decode(dst_text, p.n, p.r);
    std::vector<rcr::Vertex> path = rcr::shortest_path(p, src, dst);
    for (const rcr::Vertex& v : path) std::cout << rcr::encode(v, p.n) << "\n";
    int len = static_cast<int>(path.size()) - 1;
    std::cout << "length " << len << "\n";
    if (check_against_oracle) {
        rcr::Graph g = rcr::Graph::cayley(p, budget);
        rcr::DistanceField f = rcr::bfs_distances(g, src);
        if (f.at(g, dst) != len || !rcr::valid_path(g, path)) {
            std::cerr << "verification failed: BFS distance " << f.at(g, dst) << ", path length "
                      << len << "\n";
            return kExitVerification;
        }
        std::cout << "verified against BFS\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- diam ----

int cmd_diam(const ParamArgs& pa, bool oracle, std::int64_t budget) {
    rcr::Params p = resolve_params(pa);
    int formula = rcr::diameter_formula(p);
    std::cout << "diameter " << formula << "\n";
    if (oracle) {
        int exact = rcr::bfs_diameter(rcr::Graph::cayley(p, budget));
        std::cout << "bfs " << exact << "\n";
        if (exact != formula) {
            std::cerr << "verification failed: formula " << formula << " vs BFS " << exact << "\n";
            return kExitVerification;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------ metrics ----

std::string render_metrics_text(const rcr::MetricsReport& rep) {
    std::ostringstream os;
    auto bounds = [](const rcr::ValueBounds& b) {
        std::ostringstream s;
        s << "[" << rcr::ceil_rat(b.lo) << ", " << rcr::floor_rat(b.hi) << "]  (" << b.branch << ")";
        return s.str();
    };
    os << rep.params.name() << "  regime " << rep.regime
       << (rep.n_mod_d_zero ? ", d divides n" : ", d does not divide n") << "\n";
    os << "  vertices        " << rep.vertices << "\n";
    os << "  edges           " << rep.edges << "\n";
    os << "  diameter        " << rep.diameter << "  (formula)";
    if (rep.diameter_oracle) os << "  oracle " << *rep.diameter_oracle;
    os << "\n";
    if (rep.td) os << "  total distance  " << *rep.td << "  (router-exact)\n";
    os << "  td bounds       " << bounds(rep.td_envelope) << "\n";
    if (rep.td_oracle) os << "  td oracle       " << *rep.td_oracle << "\n";
    if (rep.wiener_index) os << "  wiener          " << *rep.wiener_index << "\n";
    if (rep.xi) os << "  xi              " << *rep.xi << "\n";
    os << "  xi bounds       " << bounds(rep.xi_envelope) << "\n";
    if (rep.pi_exact) os << "  pi              " << *rep.pi_exact << "  (exact, d divides n)\n";
    os << "  pi bounds       " << bounds(rep.pi_envelope) << "\n";
    if (rep.pi_m_simulated) os << "  pi_m (sim)      " << *rep.pi_m_simulated << "\n";
    os << "  bw bounds       [" << rep.bw.lo << ", " << rep.bw.hi << "]  (" << rep.bw.lo_case << ")\n";
    for (const auto& c : rep.constructions) {
        os << "    " << c.name << " cut " << c.cut;
        if (c.counted) os << " (recounted " << *c.counted << ")";
        os << "\n";
    }
    if (rep.bw_oracle) os << "  bw oracle       " << *rep.bw_oracle << "\n";
    return os.str();
}

int cmd_metrics(const ParamArgs& pa, const std::string& oracle, const std::string& format,
                const std::string& out_path, std::int64_t budget, std::int64_t sim_budget) {
    rcr::Params p = resolve_params(pa);
    if (oracle != "none" && oracle != "full")
        throw std::invalid_argument("--oracle must be none or full");
    rcr::MetricsReport rep = rcr::compute_metrics(
        p, oracle == "full" ? rcr::OracleLevel::full : rcr::OracleLevel::none, budget, sim_budget);
    if (format == "json")
        write_output(out_path, rcr::report_to_json(rep).dump(2) + "\n");
    else
        write_output(out_path, render_metrics_text(rep));
    return kExitOk;
}

// ------------------------------------------------------------- bisect ----

int cmd_bisect(const ParamArgs& pa, bool oracle, std::int64_t budget) {
    rcr::Params p = resolve_params(pa);
    rcr::BwBounds bw = rcr::bw_bounds(p, budget);
    for (const auto& c : rcr::bisection_constructions(p, budget)) {
        std::cout << c.name << " cut " << c.cut;
        if (c.counted) std::cout << " (recounted " << *c.counted << ")";
        std::cout << "\n";
    }
    std::cout << "bw in [" << bw.lo << ", " << bw.hi << "]  (" << bw.lo_case << ")\n";
    if (oracle) {
        rcr::Graph g = rcr::Graph::cayley(p, budget);
        rcr::BisectionResult exact = rcr::brute_force_bisection(g);
        std::cout << "bw exact " << exact.cut << "\n";
        if (rcr::BigInt(exact.cut) < bw.lo || rcr::BigInt(exact.cut) > bw.hi) {
            std::cerr << "verification failed: exact bw " << exact.cut << " outside bounds\n";
            return kExitVerification;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

int cmd_verify(std::int64_t max_vertices, bool include_general, int jobs, std::uint64_t seed,
               std::int64_t sim_budget) {
    rcr::verify::Options opt;
    opt.seed = seed;
    opt.sim_budget = sim_budget;
    std::vector<rcr::Params> sweep = rcr::verify::default_sweep(max_vertices);
    std::vector<rcr::verify::InstanceReport> reports(sweep.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < sweep.size();)
            reports[i] = rcr::verify::check_instance(sweep[i], opt);
    };
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::int64_t checks = 0, failures = 0;
    for (const auto& rep : reports) {
        checks += static_cast<std::int64_t>(rep.checks.size());
        for (const auto& c : rep.checks)
            if (!c.pass) {
                ++failures;
                std::cout << "FAIL " << rep.p.name() << " :: " << c.name
                          << (c.detail.empty() ? "" : " :: " + c.detail) << "\n";
            }
    }
    std::cout << "swept " << sweep.size() << " instances, " << checks << " checks, " << failures
              << " failures\n";

    if (include_general) {
        std::int64_t gen_failures = 0;
        for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{
                 {3, 1, 4}, {3, 1, 5}, {4, 1, 5}, {4, 1, 6}, {5, 1, 6}, {5, 2, 4}, {3, 1, 3}, {4, 2, 4}}) {
            for (const auto& c : rcr::verify::check_general_triple(n, d, r))
                if (!c.pass) {
                    ++gen_failures;
                    std::cout << "FAIL general :: " << c.name << "\n";
                }
        }
        for (const auto& c : rcr::verify::check_enumerators())
            if (!c.pass) {
                ++gen_failures;
                std::cout << "FAIL enumerators :: " << c.name << "\n";
            }
        std::cout << "general-family and enumerator failures: " << gen_failures << "\n";
        failures += gen_failures;
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------- census ----

int cmd_census(const ParamArgs& pa, bool general, const std::string& format, std::int64_t budget) {
    rcr::Graph g = general ? rcr::build_general(pa.n, pa.d, pa.r, budget)
                           : rcr::Graph::cayley(resolve_params(pa), budget);
    if (!g.connected()) throw std::invalid_argument("census needs a connected graph (dr >= n)");
    int rp = (g.r() - 1) / 2;
    rcr::Census far = rcr::t_neighbour_census(g, rcr::Vertex{0, g.r() - 1});
    rcr::Census near = rcr::t_neighbour_census(g, rcr::Vertex{0, rp});
    std::size_t tmax = std::max(far.counts.size(), near.counts.size());
    auto count = [](const rcr::Census& c, std::size_t t) {
        return t < c.counts.size() ? c.counts[t] : 0;
    };
    int first_diff = -1;
    for (std::size_t t = 0; t < tmax && first_diff < 0; ++t)
        if (count(far, t) != count(near, t)) first_diff = static_cast<int>(t);

    if (format == "json") {
        rcr::Json j;
        j["n"] = g.n();
        j["d"] = g.d();
        j["r"] = g.r();
        j["general"] = g.is_general();
        j["bases"] = {rcr::encode(far.base, g.n()), rcr::encode(near.base, g.n())};
        j["counts"] = {far.counts, near.counts};
        j["first_differing_t"] = first_diff;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "t-neighbour census, bases " << rcr::encode(far.base, g.n()) << " and "
                  << rcr::encode(near.base, g.n()) << "\n";
        for (std::size_t t = 0; t < tmax; ++t) {
            std::cout << "  t=" << t << "  " << count(far, t) << "  " << count(near, t)
                      << (static_cast<int>(t) == first_diff ? "   <-- differ" : "") << "\n";
        }
        std::cout << (first_diff >= 0 ? "censuses differ: not vertex-transitive\n"
                                      : "censuses agree for all t\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive cubes of rings: topology generator, router and metrics"};
    app.require_subcommand(1);

    ParamArgs pa_gen, pa_route, pa_diam, pa_metrics, pa_bisect, pa_census;
    std::string format_gen = "edgelist", out_gen;
    std::string src, dst, oracle_metrics = "none";
    std::string format_metrics = default_format(), out_metrics;
    std::string format_census = default_format();
    bool general_gen = false, general_census = false;
    bool route_verify = false, diam_oracle = false, bisect_oracle = false, include_general = false;
    std::int64_t budget = rcr::kDefaultGraphBudget;
    std::int64_t sim_budget = rcr::kDefaultSimulationBudget;
    std::int64_t max_vertices = 4096;
    int jobs = 1;
    std::uint64_t seed = 1;

    auto* gen = app.add_subcommand("gen", "generate a topology and export it");
    add_param_options(gen, pa_gen);
    gen->add_flag("--general", general_gen, "build Q_n^-(d,r) (no divisibility requirement)");
    gen->add_option("--format", format_gen, "edgelist or dot")->capture_default_str();
    gen->add_option("--out", out_gen, "output file (default stdout)");

    auto* route = app.add_subcommand("route", "shortest path between two vertices");
    add_param_options(route, pa_route);
    route->add_option("--src", src, "source vertex, bits@x")->required();
    route->add_option("--dst", dst, "target vertex, bits@x")->required();
    route->add_flag("--verify", route_verify, "cross-check the path against BFS");

    auto* diam = app.add_subcommand("diam", "closed-form diameter");
    add_param_options(diam, pa_diam);
    diam->add_flag("--oracle", diam_oracle, "also run the BFS oracle");

    auto* metrics = app.add_subcommand("metrics", "full metrics report");
    add_param_options(metrics, pa_metrics);
    metrics->add_option("--oracle", oracle_metrics, "none or full")->capture_default_str();
    metrics->add_option("--format", format_metrics, "json or text");
    metrics->add_option("--out", out_metrics, "output file (default stdout)");
    metrics->add_option("--sim-budget", sim_budget, "vertex cap for the load simulation")
        ->capture_default_str();

    auto* bisect = app.add_subcommand("bisect", "bisection constructions and bounds");
    add_param_options(bisect, pa_bisect);
    bisect->add_flag("--oracle", bisect_oracle, "exhaustive minimum bisection (<= 28 vertices)");

    auto* verify = app.add_subcommand("verify", "run the property suite over a parameter sweep");
    verify->add_option("--max-vertices", max_vertices, "sweep bound on 2^n r")->capture_default_str();
    verify->add_flag("--include-general", include_general,
                     "also check Q_n^-(d,r) censuses and the counting oracles");
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->add_option("--seed", seed, "sampling order seed (results are seed-independent)")
        ->capture_default_str();

    auto* census = app.add_subcommand("census", "t-neighbour census at the two reference bases");
    add_param_options(census, pa_census, false);
    census->add_flag("--general", general_census, "use Q_n^-(d,r)");
    census->add_option("--format", format_census, "json or text");

    app.add_option("--budget", budget, "vertex budget for graph enumeration")->capture_default_str();
    for (auto* sub : {gen, route, diam, metrics, bisect, census})
        sub->add_option("--budget", budget, "vertex budget for graph enumeration");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(pa_gen, general_gen, format_gen, out_gen, budget);
        if (route->parsed()) return cmd_route(pa_route, src, dst, route_verify, budget);
        if (diam->parsed()) return cmd_diam(pa_diam, diam_oracle, budget);
        if (metrics->parsed())
            return cmd_metrics(pa_metrics, oracle_metrics, format_metrics, out_metrics, budget,
                               sim_budget);
        if (bisect->parsed()) return cmd_bisect(pa_bisect, bisect_oracle, budget);
        if (verify->parsed())
            return cmd_verify(max_vertices, include_general, jobs, seed, sim_budget);
        if (census->parsed()) return cmd_census(pa_census, general_census, format_census, budget);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const rcr::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}
