#include "hopset/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hopset/ackermann.hpp"
#include "hopset/generators.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/hopset.hpp"
#include "hopset/lp_model.hpp"
#include "hopset/lp_rounding.hpp"
#include "hopset/lp_solver.hpp"
#include "hopset/oracle.hpp"
#include "hopset/parallel.hpp"
#include "hopset/skeleton.hpp"
#include "hopset/tree_decomposition.hpp"
#include "hopset/tree_hopset.hpp"
#include "hopset/treewidth_hopset.hpp"
#include "hopset/usp.hpp"

namespace hopset {

namespace {

using Clock = std::chrono::steady_clock;
using Record = nlohmann::ordered_json;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

class ConfigError : public HopsetError {
public:
    using HopsetError::HopsetError;
};

Ratio parse_ratio(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            double v = std::stod(s);
            return Ratio(static_cast<std::int64_t>(std::llround(v * 1e6)), 1000000);
        }
        return Ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ConfigError("cannot parse ratio '" + s + "'");
    }
}

std::string render(const Record& r) {
    std::ostringstream s;
    bool first = true;
    for (const auto& [k, v] : r.items()) {
        if (!first) s << ' ';
        first = false;
        s << k << '=';
        if (v.is_string())
            s << v.get<std::string>();
        else if (v.is_object()) {
            bool f2 = true;
            for (const auto& [kk, vv] : v.items()) {
                s << (f2 ? "" : ",") << kk << ':' << vv.dump();
                f2 = false;
            }
        } else
            s << v.dump();
    }
    return s.str();
}

void emit(std::ostream& out, const Record& r, bool json) { out << (json ? r.dump() : render(r)) << '\n'; }

struct Built {
    WeightedGraph graph;  // the graph the artifacts refer to
    Hopset hopset;
    std::optional<ThreeHopOracle> oracle;
    int h = 0;
    Record info = Record::object();
    Record phases = Record::object();
    std::vector<std::string> warnings;
    bool subdivided = false;
};

std::vector<PairTag> tagged_pairs(const ThreeHopOracle& o) {
    std::vector<PairTag> pairs;
    for (const auto& a : o.arcs()) pairs.push_back({a.from, a.to, Part::FirstLast});
    for (const auto& [x, y] : o.h2_pairs()) pairs.push_back({x, y, Part::Middle});
    return pairs;
}

Built build_with(const WeightedGraph& g, const RunConfig& cfg) {
    Built b{g, {}, std::nullopt, cfg.h, Record::object(), Record::object(), {}, false};
    auto t = Clock::now();
    const auto& method = cfg.method;
    if (method == "tree") {
        if (!g.is_tree()) throw GraphError("method tree needs a tree as input");
        if (cfg.linear) {
            auto l = linear_tree_hopset(g);
            b.hopset = l.hopset;
            b.h = l.hopbound;
        } else {
            b.hopset = tree_hopset(g, cfg.h);
            if (cfg.h == 3) b.oracle = tree_three_hop_oracle(g);
        }
        b.info["lambda"] = cfg.linear ? inv_ackermann(g.num_nodes()) : lambda(static_cast<unsigned>(b.h), g.num_nodes());
    } else if (method == "treewidth") {
        TreeDecomposition td = cfg.td_path.empty() ? heuristic_td(g) : read_td(cfg.td_path);
        validate_td(g, td);
        td = normalize_td(g, td);
        b.phases["decomposition"] = since(t);
        t = Clock::now();
        TwHopset tw = cfg.linear ? tw_linear_hopset(g, td) : tw_hopset(g, td, cfg.h);
        b.hopset = tw.hopset;
        b.h = tw.hopset.hopbound();
        if (!cfg.linear && cfg.h == 3) b.oracle = tw_three_hop_oracle(g, td);
        b.info["width"] = td.width();
        b.info["tree_edges"] = tw.tree_edges;
        b.info["separator_edges"] = tw.separator_edges;
        b.info["bag_edges"] = tw.bag_edges;
    } else if (method == "skeleton") {
        WeightedGraph base = g;
        if (cfg.subdivide) {
            auto k0 = skeleton_dimension(make_usp(g, cfg.seed).graph).k;
            base = subdivide_long_edges(g, k0, average_edge_length(g));
            b.subdivided = base.num_nodes() != g.num_nodes();
            b.info["subdivided_nodes"] = base.num_nodes() - g.num_nodes();
        }
        auto usp = make_usp(base, cfg.seed);
        b.phases["usp"] = since(t);
        t = Clock::now();
        SkeletonOverrides ov{cfg.dprime, cfg.epsilon, cfg.max_levels};
        auto s = build_skeleton_oracle(usp.graph, cfg.seed, ov);
        b.graph = base;
        b.oracle = ThreeHopOracle::build(base, s.oracle.arcs(), s.oracle.h2_pairs());
        b.hopset = Hopset::from_pairs(base, tagged_pairs(*b.oracle), 3);
        b.h = 3;
        b.info["k"] = s.k;
        auto alpha = parse_ratio(cfg.alpha);
        if (!(alpha == Ratio(1, 2))) b.info["k_alpha"] = skeleton_dimension(usp.graph, alpha).k;
        b.info["epsilon"] = s.params.epsilon;
        b.info["dprime"] = s.params.dprime;
        b.info["levels"] = s.levels.size();
        b.info["hprime_arcs"] = s.h_prime.arcs.size();
        b.info["attempts"] = s.attempts;
        b.warnings = s.params.warnings;
    } else if (method == "lp" || method == "lp3") {
        auto usp = make_usp(g, cfg.seed);
        b.phases["usp"] = since(t);
        t = Clock::now();
        const bool trade = method == "lp3";
        LpModel m = trade ? build_lp_tradeoff(usp.graph, *cfg.size_bound) : build_lp(usp.graph, cfg.h);
        auto sol = solve_lp(m);
        auto chk = verify_solution(m, sol);
        if (!chk.ok) throw SolverFailure("LP solution fails re-verification: " + chk.worst);
        b.phases["lp"] = since(t);
        t = Clock::now();
        b.info["commodities"] = m.commodities.size();
        b.info["x_vars"] = m.pairs.size();
        b.info["flow_vars"] = m.num_flow_vars;
        b.info["rows"] = m.num_rows;
        b.info["lp_objective"] = sol.objective;
        b.info["cuts"] = sol.cuts;
        if (trade) {
            auto r = round_tradeoff(usp.graph, m, sol, cfg.seed);
            b.oracle = ThreeHopOracle::build(g, r.oracle.arcs(), r.oracle.h2_pairs());
            std::vector<PairTag> pairs;
            for (const auto& e : r.hopset.edges()) pairs.push_back({e.u, e.v, e.part});
            b.hopset = Hopset::from_pairs(g, std::move(pairs), 3);
            b.h = 3;
            b.info["size_bound"] = *cfg.size_bound;
            b.info["h_prime"] = r.h_prime_size;
            b.info["attempts"] = r.attempts;
        } else {
            auto r = round_solution(usp.graph, m, sol, cfg.seed);
            std::vector<PairTag> pairs;
            for (const auto& e : r.hopset.edges()) pairs.push_back({e.u, e.v, e.part});
            b.hopset = Hopset::from_pairs(g, std::move(pairs), cfg.h);
            b.info["h_prime"] = r.h_prime_size;
            b.info["attempts"] = r.attempts;
        }
    }
    b.phases["build"] = since(t);
    return b;
}

// Validation of a build; fills the record and returns the pass flag.
bool validate_built(const Built& b, Record& rec) {
    auto t = Clock::now();
    auto rep = validate_hopset(b.graph, b.hopset, b.h);
    bool pass = rep.pass;
    rec["violations"] = rep.violation_count;
    if (b.oracle) {
        auto orep = validate_oracle(b.graph, *b.oracle);
        rec["oracle_violations"] = orep.violation_count;
        pass = pass && orep.pass;
    }
    rec["validation"] = pass ? "PASS" : "FAIL";
    rec["time_validate"] = since(t);
    return pass;
}

Record degree_histogram(const Hopset& hs, std::size_t n) {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : hs.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::map<std::size_t, std::size_t> hist;
    for (auto d : deg) ++hist[d];
    Record r = Record::object();
    for (const auto& [d, c] : hist) r[std::to_string(d)] = c;
    return r;
}

void size_fields(const Built& b, Record& rec) {
    rec["size"] = b.hopset.size();
    if (b.oracle) {
        rec["h1"] = b.oracle->h1_size();
        rec["h2"] = b.oracle->h2_size();
        rec["max_n1"] = b.oracle->max_n1();
    } else {
        rec["h1"] = b.hopset.count(Part::FirstLast);
        rec["h2"] = b.hopset.count(Part::Middle);
    }
}

// Mean probe count: exhaustive for oracles below 300 nodes, sampled otherwise.
void probe_fields(const Built& b, const RunConfig& cfg, Record& rec) {
    const auto n = b.graph.num_nodes();
    if (b.oracle) {
        auto avg = average_query_cost(*b.oracle);
        rec["avg_query_cost"] = avg.value();
        rec["avg_query_cost_exact"] = std::to_string(avg.num) + "/" + std::to_string(avg.den);
    } else {
        rec["avg_query_cost"] = "na";
    }
    std::uint64_t total = 0, count = 0;
    if (b.oracle && n <= 300) {
        for (Node u = 0; u < n; ++u)
            for (Node v = 0; v < n; ++v) total += b.oracle->query(u, v).lookups;
        count = static_cast<std::uint64_t>(n) * n;
        Ratio mean(static_cast<std::int64_t>(total), static_cast<std::int64_t>(count));
        rec["probe_mean_matches"] = mean == average_query_cost(*b.oracle);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
        for (std::size_t i = 0; i < cfg.sample; ++i) {
            Node u = pick(rng), v = pick(rng);
            total += b.oracle ? b.oracle->query(u, v).lookups : generic_query_counted(b.graph, b.hopset, u, v).meets;
        }
        count = cfg.sample;
    }
    rec["probes_sampled"] = count;
    rec["probe_mean"] = count ? static_cast<double>(total) / static_cast<double>(count) : 0.0;
}

WeightedGraph generate_for(const RunConfig& cfg, std::size_t n) {
    GenParams p;
    auto kind = parse_graph_kind(cfg.kind);
    p.n = n;
    p.m = cfg.m ? cfg.m : 2 * n;
    p.branching = cfg.branching;
    p.legs = cfg.legs;
    p.max_weight = cfg.max_weight;
    if (kind == GraphKind::Grid) {
        p.rows = cfg.rows ? cfg.rows : (cfg.cols ? n / cfg.cols : 4);
        p.cols = cfg.cols ? cfg.cols : n / std::max<std::size_t>(p.rows, 1);
    }
    if (kind == GraphKind::Star) p.n = n;
    return generate(kind, p, cfg.seed);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    GenParams p{cfg.n, cfg.m, cfg.rows, cfg.cols, cfg.branching, cfg.legs, cfg.max_weight};
    auto g = generate(parse_graph_kind(cfg.kind), p, cfg.seed);
    if (cfg.out_path.empty())
        write_graph(out, g);
    else
        write_graph(cfg.out_path, g);
    return kExitOk;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto t = Clock::now();
    auto g = read_graph(cfg.graph_path);
    auto read_time = since(t);
    auto b = build_with(g, cfg);
    for (const auto& w : b.warnings) err << "warning: " << w << '\n';
    Record rec;
    rec["command"] = "build";
    rec["method"] = cfg.method;
    rec["n"] = b.graph.num_nodes();
    rec["m"] = b.graph.num_edges();
    rec["h"] = b.h;
    rec["seed"] = cfg.seed;
    size_fields(b, rec);
    rec.update(b.info);
    rec["time_read"] = read_time;
    for (const auto& [k, v] : b.phases.items()) rec["time_" + k] = v;
    bool pass = true;
    if (cfg.unsafe) {
        rec["validation"] = "SKIPPED";
    } else {
        pass = validate_built(b, rec);
    }
    emit(out, rec, cfg.json);
    if (!pass) {
        err << "error: validation failed; nothing written\n";
        return kExitValidation;
    }
    if (b.subdivided) write_graph(cfg.out_path + ".graph", b.graph);
    write_hopset(cfg.out_path, b.hopset, b.graph.num_nodes());
    if (b.oracle) write_oracle(cfg.oracle_path.empty() ? cfg.out_path + ".oracle" : cfg.oracle_path, *b.oracle);
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    auto g = read_graph(cfg.graph_path);
    auto hs = read_hopset(cfg.hopset_path, g);
    Built b{g, hs, std::nullopt, hs.hopbound(), Record::object(), Record::object(), {}, false};
    if (!cfg.oracle_path.empty()) b.oracle = read_oracle(cfg.oracle_path, g);
    Record rec;
    rec["command"] = "validate";
    rec["n"] = g.num_nodes();
    rec["h"] = b.h;
    size_fields(b, rec);
    bool pass = validate_built(b, rec);
    emit(out, rec, cfg.json);
    return pass ? kExitOk : kExitValidation;
}

int cmd_query(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    auto g = read_graph(cfg.graph_path);
    auto hs = read_hopset(cfg.hopset_path, g);
    std::optional<ThreeHopOracle> oracle;
    if (!cfg.oracle_path.empty()) oracle = read_oracle(cfg.oracle_path, g);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError("expected two node ids", lineno);
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g.num_nodes() || static_cast<std::size_t>(v) > g.num_nodes())
            throw ParseError("node id out of range", lineno);
        auto a = static_cast<Node>(u - 1), c = static_cast<Node>(v - 1);
        if (oracle) {
            auto r = oracle->query(a, c);
            out << r.distance << ' ' << r.lookups << '\n';
        } else {
            auto r = generic_query_counted(g, hs, a, c);
            out << r.distance << ' ' << r.meets << '\n';
        }
    }
    return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = kExitOk;
    for (auto n : cfg.sizes) {
        auto g = generate_for(cfg, n);
        auto t = Clock::now();
        auto b = build_with(g, cfg);
        auto total = since(t);
        for (const auto& w : b.warnings) err << "warning: " << w << '\n';
        Record rec;
        rec["command"] = "bench";
        rec["kind"] = cfg.kind;
        rec["method"] = cfg.method;
        rec["n"] = b.graph.num_nodes();
        rec["m"] = b.graph.num_edges();
        rec["h"] = b.h;
        rec["seed"] = cfg.seed;
        size_fields(b, rec);
        if (!cfg.linear && (cfg.method == "tree" || cfg.method == "treewidth")) {
            double norm = static_cast<double>(b.graph.num_nodes()) * static_cast<double>(lambda(static_cast<unsigned>(b.h), b.graph.num_nodes()));
            if (cfg.method == "treewidth") norm *= static_cast<double>(b.info["width"].get<std::size_t>());
            rec["size_ratio"] = static_cast<double>(b.hopset.size()) / norm;
        }
        rec.update(b.info);
        rec["degree_hist"] = degree_histogram(b.hopset, b.graph.num_nodes());
        probe_fields(b, cfg, rec);
        for (const auto& [k, v] : b.phases.items()) rec["time_" + k] = v;
        rec["time_total"] = total;
        bool pass = validate_built(b, rec);
        rec["publishable"] = pass;
        if (!pass) status = kExitValidation;
        emit(out, rec, cfg.json);
    }
    return status;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    for (int h : cfg.hs) {
        for (auto n : cfg.sizes) {
            RunConfig c = cfg;
            c.h = h;
            auto g = generate_for(c, n);
            auto b = build_with(g, c);
            const auto nn = b.graph.num_nodes();
            Record rec;
            rec["command"] = "stats";
            rec["method"] = cfg.method;
            rec["kind"] = cfg.kind;
            rec["n"] = nn;
            rec["h"] = b.h;
            rec["size"] = b.hopset.size();
            auto lam = lambda(static_cast<unsigned>(b.h), nn);
            rec["lambda"] = lam;
            double norm = static_cast<double>(nn) * static_cast<double>(lam);
            if (cfg.method == "treewidth") {
                rec["width"] = b.info["width"];
                norm *= static_cast<double>(b.info["width"].get<std::size_t>());
                rec["size_per_n_t_lambda"] = static_cast<double>(b.hopset.size()) / norm;
            } else {
                rec["size_per_n_lambda"] = static_cast<double>(b.hopset.size()) / norm;
            }
            emit(out, rec, cfg.json);
        }
    }
    return kExitOk;
}

int exit_for(const std::exception& e) {
    if (dynamic_cast<const Infeasible*>(&e) || dynamic_cast<const SolverFailure*>(&e) ||
        dynamic_cast<const RoundingFailed*>(&e) || dynamic_cast<const OracleBuildFailed*>(&e) ||
        dynamic_cast<const UspFailure*>(&e) || dynamic_cast<const BlowupExceeded*>(&e))
        return kExitSolver;
    if (dynamic_cast<const InvalidShortcut*>(&e) || dynamic_cast<const NoCover*>(&e)) return kExitValidation;
    return kExitConfig;
}

}  // namespace

std::string check_config(const RunConfig& cfg) {
    const auto& c = cfg.command;
    const auto& m = cfg.method;
    const bool builds = c == "build" || c == "bench" || c == "stats";
    if (builds) {
        static const std::vector<std::string> methods{"tree", "treewidth", "skeleton", "lp", "lp3"};
        if (std::find(methods.begin(), methods.end(), m) == methods.end())
            return "--method must be one of tree, treewidth, skeleton, lp, lp3";
        if (cfg.size_bound && m != "lp3") return "--size-bound only applies to --method lp3";
        if (m == "lp3" && !cfg.size_bound) return "--method lp3 needs --size-bound";
        if (cfg.size_bound && *cfg.size_bound < 0) return "--size-bound must be >= 0";
        if ((cfg.dprime || cfg.epsilon || cfg.max_levels || cfg.subdivide) && m != "skeleton")
            return "--dprime, --epsilon, --max-levels and --subdivide only apply to --method skeleton";
        if (cfg.dprime && *cfg.dprime <= 0) return "--dprime must be positive";
        if (cfg.epsilon && *cfg.epsilon <= 0) return "--epsilon must be positive";
        if (cfg.linear && m != "tree" && m != "treewidth") return "--linear only applies to tree and treewidth";
        if (!cfg.td_path.empty() && m != "treewidth") return "--td only applies to --method treewidth";
        if (m == "tree" && cfg.h < 1) return "--h must be >= 1";
        if ((m == "treewidth" || m == "lp") && cfg.h < 2) return "--h must be >= 2 for " + m;
        if (c == "stats" && m != "tree" && m != "treewidth") return "stats supports --method tree and treewidth";
        if ((c == "bench" || c == "stats") && cfg.sizes.empty()) return "--n needs at least one size";
        try {
            auto a = parse_ratio(cfg.alpha);
            if (a.num <= 0 || a.num >= a.den) return "--alpha must lie in (0,1)";
        } catch (const HopsetError& e) {
            return e.what();
        }
    }
    if (c == "build" && cfg.out_path.empty()) return "build needs --out";
    if ((c == "build" || c == "validate" || c == "query") && cfg.graph_path.empty()) return c + " needs --graph";
    if ((c == "validate" || c == "query") && cfg.hopset_path.empty()) return c + " needs --hopset";
    if (c == "gen" && cfg.n == 0 && cfg.rows == 0) return "gen needs --n (or --rows/--cols for grids)";
    return {};
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hopctl");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact hopsets and 3-hop distance oracles"};
    app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    app.require_subcommand(1);
    std::string sizes, hs_list;

    auto common = [&](CLI::App* s) {
        s->add_option("--seed", cfg.seed, "Random seed");
        s->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
        s->add_flag("--json", cfg.json, "Emit JSON records");
    };
    auto method_opts = [&](CLI::App* s) {
        s->add_option("--method", cfg.method, "tree | treewidth | skeleton | lp | lp3")->required();
        s->add_option("--h", cfg.h, "Hopbound")->each([&](const std::string&) { cfg.h_given = true; });
        s->add_flag("--linear", cfg.linear, "Linear-size variant (tree, treewidth)");
        s->add_option("--size-bound", cfg.size_bound, "Size bound S (lp3)");
        s->add_option("--dprime", cfg.dprime, "Override D' in graph weight units (skeleton)");
        s->add_option("--epsilon", cfg.epsilon, "Override epsilon (skeleton)");
        s->add_option("--max-levels", cfg.max_levels, "Cap on distance levels (skeleton)");
        s->add_option("--alpha", cfg.alpha, "Skeleton alpha to report, as a/b");
        s->add_flag("--subdivide", cfg.subdivide, "Subdivide long edges first (skeleton)");
        s->add_option("--td", cfg.td_path, "Tree decomposition in PACE format (treewidth)");
    };
    auto gen_opts = [&](CLI::App* s) {
        s->add_option("--kind", cfg.kind, "path | star | balanced-tree | grid | gnm | caterpillar");
        s->add_option("--m", cfg.m, "Edge count (gnm)");
        s->add_option("--rows", cfg.rows, "Grid rows");
        s->add_option("--cols", cfg.cols, "Grid columns");
        s->add_option("--branching", cfg.branching, "Balanced tree branching");
        s->add_option("--legs", cfg.legs, "Caterpillar legs per spine node");
        s->add_option("--max-weight", cfg.max_weight, "Weights uniform in [1, max]");
    };

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen_opts(gen);
    gen->add_option("--n", cfg.n, "Node count (spine length for caterpillars)");
    gen->add_option("--out", cfg.out_path, "Output file (default stdout)");
    common(gen);

    auto* build = app.add_subcommand("build", "Build and validate a hopset");
    build->add_option("--graph", cfg.graph_path, "Input graph")->required();
    build->add_option("--out", cfg.out_path, "Hopset output file")->required();
    build->add_option("--oracle", cfg.oracle_path, "Oracle sidecar output (default <out>.oracle)");
    build->add_flag("--unsafe", cfg.unsafe, "Write without validating");
    method_opts(build);
    common(build);

    auto* validate = app.add_subcommand("validate", "Re-verify a hopset (and oracle)");
    validate->add_option("--graph", cfg.graph_path, "Input graph")->required();
    validate->add_option("--hopset", cfg.hopset_path, "Hopset file")->required();
    validate->add_option("--oracle", cfg.oracle_path, "Oracle sidecar");
    common(validate);

    auto* query = app.add_subcommand("query", "Answer 'u v' lines from standard input");
    query->add_option("--graph", cfg.graph_path, "Input graph")->required();
    query->add_option("--hopset", cfg.hopset_path, "Hopset file")->required();
    query->add_option("--oracle", cfg.oracle_path, "Oracle sidecar");
    common(query);

    auto* bench = app.add_subcommand("bench", "Build, validate and measure over a size sweep");
    method_opts(bench);
    gen_opts(bench);
    bench->add_option("--n", sizes, "Comma-separated sizes")->required();
    bench->add_option("--sample", cfg.sample, "Sampled queries when not exhaustive");
    common(bench);

    auto* stats = app.add_subcommand("stats", "Size growth normalized by n·λ_h(n) (times t for treewidth)");
    method_opts(stats);
    gen_opts(stats);
    stats->add_option("--n", sizes, "Comma-separated sizes");
    stats->add_option("--hs", hs_list, "Comma-separated hopbounds (default 2,3,4)");
    common(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    auto kind_given = [&](CLI::App* s) { return s->count("--kind") > 0; };
    if (cfg.command == "bench" || cfg.command == "stats") {
        auto* s = cfg.command == "bench" ? bench : stats;
        if (!kind_given(s)) cfg.kind = cfg.method == "treewidth" || cfg.method == "skeleton" ? "grid" : "path";
    }

    try {
        auto split = [](const std::string& s, auto conv) {
            std::vector<decltype(conv(std::string{}))> v;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) v.push_back(conv(tok));
            return v;
        };
        cfg.sizes = split(sizes, [](const std::string& t) { return static_cast<std::size_t>(std::stoull(t)); });
        cfg.hs = split(hs_list, [](const std::string& t) { return std::stoi(t); });
    } catch (const std::logic_error&) {
        err << "error: --n and --hs take comma-separated integers\n";
        return kExitConfig;
    }
    if (cfg.command == "stats" && cfg.sizes.empty()) cfg.sizes = {256, 1024, 4096};
    if (cfg.hs.empty()) cfg.hs = {2, 3, 4};
    if ((cfg.method == "skeleton" || cfg.method == "lp3") && cfg.h_given && cfg.h != 3)
        err << "warning: --method " << cfg.method << " fixes h = 3; --h ignored\n";
    if (cfg.method == "skeleton" || cfg.method == "lp3") cfg.h = 3;
    if (auto problem = check_config(cfg); !problem.empty()) {
        err << "error: " << problem << '\n';
        return kExitConfig;
    }
    if (cfg.threads) set_thread_count(cfg.threads);

    try {
        if (cfg.command == "gen") return cmd_gen(cfg, out);
        if (cfg.command == "build") return cmd_build(cfg, out, err);
        if (cfg.command == "validate") return cmd_validate(cfg, out);
        if (cfg.command == "query") return cmd_query(cfg, in, out);
        if (cfg.command == "bench") return cmd_bench(cfg, out, err);
        if (cfg.command == "stats") return cmd_stats(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_for(e);
    }
    return kExitConfig;
}

}  // namespace hopset
