// rcc: sample random 2-dimensional cell complexes over spanning trees,
// estimate cycle counts, and analyze the resulting topology.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcc/census.hpp"
#include "rcc/complex.hpp"
#include "rcc/graph.hpp"
#include "rcc/lifting.hpp"
#include "rcc/occurrence.hpp"
#include "rcc/oracles.hpp"
#include "rcc/rng.hpp"
#include "rcc/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUndersampled = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Manifest written next to every file artifact: enough to re-run the
// command and get the same bytes (wall_ms excepted).
void write_manifest(const std::string& out_path, const std::string& subcommand,
                    const json& parameters, std::uint64_t seed, double wall_ms,
                    const std::vector<std::string>& outputs) {
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["seed"] = seed;
    m["version"] = rcc::kVersion;
    m["wall_ms"] = wall_ms;
    m["outputs"] = outputs;
    write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

std::vector<int> parse_int_list(const std::string& spec, const char* what) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

// "N,P" for a Bernoulli random graph.
std::pair<int, double> parse_er_spec(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--er expects N,P (e.g. 30,0.5)");
    try {
        return {std::stoi(spec.substr(0, comma)), std::stod(spec.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--er expects N,P (e.g. 30,0.5)");
    }
}

// "L:P,L:P,..."; unlisted lengths default to probability 0.
std::map<int, double> parse_length_probabilities(const std::string& spec) {
    std::map<int, double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--uniform-pl expects L:P pairs (e.g. 3:0.2,4:0.1)");
        try {
            out[std::stoi(item.substr(0, colon))] = std::stod(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--uniform-pl: bad pair '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--uniform-pl: empty spec");
    return out;
}

struct GraphInput {
    std::string graph_file;
    std::string er_spec;

    void add_flags(CLI::App* cmd) {
        auto* file = cmd->add_option("--graph", graph_file, "edge-list file");
        auto* er = cmd->add_option("--er", er_spec, "Bernoulli random graph spec N,P");
        file->excludes(er);
        er->excludes(file);
    }

    // The random graph, when asked for, is drawn on a seed derived from the
    // command's master seed so one --seed pins the whole pipeline.
    rcc::Graph resolve(std::uint64_t seed, std::optional<double>* q, json* params) const {
        if (!graph_file.empty()) {
            (*params)["graph"] = graph_file;
            *q = std::nullopt;  // maximum-likelihood downstream
            return rcc::load_edge_list_file(graph_file);
        }
        if (er_spec.empty()) throw CLI::ValidationError("need --graph or --er");
        const auto [n, p] = parse_er_spec(er_spec);
        (*params)["er"] = {{"n", n}, {"p", p}};
        *q = p;
        return rcc::generate({rcc::ErdosRenyi{n, p}, rcc::derive_seed(seed, 0)});
    }
};

rcc::Cycle parse_cycle_spec(const std::string& spec) {
    const auto ids = parse_int_list(spec, "--cycle");
    return rcc::Cycle::canonical(std::vector<int>(ids.begin(), ids.end()));
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------- gen-graph

int cmd_gen_graph(const std::string& model, int n, double p, int side_a, int side_b,
                  const std::string& blocks_spec, double p_in, double p_out,
                  std::uint64_t seed, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    json params = {{"model", model}};
    rcc::GraphModelSpec spec;
    spec.seed = seed;
    if (model == "er") {
        spec.model = rcc::ErdosRenyi{n, p};
        params["n"] = n;
        params["p"] = p;
    } else if (model == "complete") {
        spec.model = rcc::Complete{n};
        params["n"] = n;
    } else if (model == "bipartite") {
        spec.model = rcc::CompleteBipartite{side_a, side_b};
        params["a"] = side_a;
        params["b"] = side_b;
    } else if (model == "sbm") {
        const auto sizes = parse_int_list(blocks_spec, "--blocks");
        std::vector<std::vector<double>> prob(sizes.size(),
                                              std::vector<double>(sizes.size(), p_out));
        for (std::size_t i = 0; i < sizes.size(); ++i) prob[i][i] = p_in;
        spec.model = rcc::StochasticBlockModel{sizes, prob};
        params["blocks"] = sizes;
        params["p_in"] = p_in;
        params["p_out"] = p_out;
    } else {
        throw CLI::ValidationError("unknown model '" + model + "'");
    }

    const rcc::Graph g = rcc::generate(spec);
    const std::string edge_list = rcc::save_edge_list(g);
    if (!out_path.empty()) {
        write_file(out_path, edge_list);
        write_manifest(out_path, "gen-graph", params, seed, elapsed_ms(start), {out_path});
    } else {
        std::cout << edge_list;
    }
    std::cerr << "n=" << g.node_count() << " m=" << g.edge_count();
    if (g.node_count() >= 2) std::cerr << " p_mle=" << format_g17(rcc::mle_edge_probability(g));
    std::cerr << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- sample

int cmd_sample(const GraphInput& input, int trees, const std::string& uniform_pl, double cells,
               long long threshold, bool cells_given, const std::string& approx,
               std::uint64_t seed, int threads, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    json params = {{"trees", trees}, {"approx", approx}, {"threads", threads}};

    std::optional<double> q;
    const rcc::Graph g = input.resolve(seed, &q, &params);

    rcc::SamplingConfig cfg;
    cfg.trees = trees;
    cfg.seed = seed;
    cfg.q = q;
    cfg.approximation =
        approx == "estimated" ? rcc::RhoApproximation::Estimated : rcc::RhoApproximation::Fast;
    std::string mode_name;
    if (!uniform_pl.empty() && cells_given)
        throw CLI::ValidationError("--uniform-pl and --cells are mutually exclusive");
    if (!uniform_pl.empty()) {
        cfg.mode = rcc::UniformProbability{parse_length_probabilities(uniform_pl)};
        params["uniform_pl"] = uniform_pl;
        mode_name = "uniform-probability";
    } else if (cells_given) {
        cfg.mode = rcc::ExpectedCells{cells, threshold};
        params["cells"] = cells;
        params["threshold"] = threshold;
        mode_name = "expected-cells";
    } else {
        throw CLI::ValidationError("need --uniform-pl or --cells");
    }

    const auto [complex, report] = rcc::sample_lifting(g, cfg, threads);

    rcc::ComplexMeta meta;
    meta.seed = seed;
    meta.trees = trees;
    meta.mode = mode_name;
    meta.approximation = approx == "estimated" ? "estimated" : "fast";
    meta.undersampled_lengths = report.undersampled_lengths;
    const std::string complex_json = rcc::write_complex_json(complex, meta);
    if (!out_path.empty()) {
        write_file(out_path, complex_json);
        write_manifest(out_path, "sample", params, seed, elapsed_ms(start), {out_path});
    } else {
        std::cout << complex_json;
    }

    json rep;
    rep["cells_by_length"] = json::object();
    for (const auto& [l, count] : report.cells_by_length)
        rep["cells_by_length"][std::to_string(l)] = count;
    rep["undersampled_lengths"] = report.undersampled_lengths;
    rep["clamp_count"] = report.clamp_count;
    rep["duplicate_hits"] = report.duplicate_hits;
    rep["applied_probability"] = json::object();
    for (const auto& [l, prob] : report.applied_probability)
        rep["applied_probability"][std::to_string(l)] = prob;
    std::cerr << rep.dump() << "\n";

    return report.undersampled_lengths.empty() ? kExitOk : kExitUndersampled;
}

// -------------------------------------------------------------------- count

int cmd_count(const GraphInput& input, int trees, const std::string& approx, bool exact,
              long long budget, std::uint64_t seed, int threads, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    json params = {{"trees", trees}, {"approx", approx}, {"threads", threads}, {"exact", exact}};

    std::optional<double> q;
    const rcc::Graph g = input.resolve(seed, &q, &params);
    const auto approximation =
        approx == "estimated" ? rcc::RhoApproximation::Estimated : rcc::RhoApproximation::Fast;

    const rcc::CycleCensus census = rcc::estimate_counts(g, trees, approximation, seed, q, threads);

    std::map<int, long long> exact_reference;
    const std::map<int, long long>* exact_ptr = nullptr;
    if (exact) {
        exact_reference = rcc::exact_counts(g, budget);
        exact_ptr = &exact_reference;
    }
    const double qq = q ? *q : (g.node_count() >= 2 ? rcc::mle_edge_probability(g) : 0.0);
    const std::string csv = rcc::census_csv(census, qq, exact_ptr);

    if (!out_path.empty()) {
        write_file(out_path, csv);
        write_manifest(out_path, "count", params, seed, elapsed_ms(start), {out_path});
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

// ------------------------------------------------------------------ analyze

int cmd_analyze(const std::string& cc_path, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    const auto [complex, meta] = rcc::read_complex_json(read_file(cc_path));
    const rcc::CohomologyDims dims = rcc::cohomology_dims(complex);

    json out;
    out["n"] = complex.skeleton().node_count();
    out["m"] = complex.skeleton().edge_count();
    out["k"] = complex.cells().size();
    out["b0"] = dims.b0;
    out["b1"] = dims.b1;
    out["b2"] = dims.b2;
    out["orientable"] = rcc::is_orientable(complex);
    const std::string text = out.dump(2) + "\n";
    if (!out_path.empty()) {
        write_file(out_path, text);
        write_manifest(out_path, "analyze", {{"cc", cc_path}}, 0, elapsed_ms(start), {out_path});
    } else {
        std::cout << text;
    }
    return kExitOk;
}

// ------------------------------------------------------------------- oracle

int cmd_oracle_rho(const std::string& graph_file, const std::string& cycle_spec,
                   const std::string& method, long long trials, std::uint64_t seed, int threads) {
    const rcc::Graph g = rcc::load_edge_list_file(graph_file);
    const rcc::Cycle c = parse_cycle_spec(cycle_spec);

    json out = {{"method", method}, {"cycle", c.nodes}};
    if (method == "matrix-tree") {
        const mpq_class rho = rcc::rho_exact_matrix_tree(g, c);
        out["rho"] = rho.get_d();
        out["rho_rational"] = rho.get_str();
    } else if (method == "lrw") {
        out["rho"] = rcc::rho_exact_lrw(c, g);
    } else if (method == "monte-carlo") {
        const auto mc = rcc::rho_monte_carlo(g, c, trials, seed, threads);
        out["rho"] = mc.estimate;
        out["standard_error"] = mc.standard_error;
        out["trials"] = mc.trials;
    } else {
        throw CLI::ValidationError("unknown method '" + method + "'");
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle_trees(const std::string& graph_file, bool enumerate, long long budget) {
    const rcc::Graph g = rcc::load_edge_list_file(graph_file);
    json out;
    out["spanning_trees"] = rcc::spanning_tree_count(g).get_str();
    if (enumerate) {
        const auto trees = rcc::enumerate_spanning_trees(g, budget);
        out["enumerated"] = trees.size();
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle_reject(const std::string& graph_file, int length, int count, std::uint64_t seed,
                      long long max_attempts) {
    const rcc::Graph g = rcc::load_edge_list_file(graph_file);
    const auto sample = rcc::rejection_sample_cells(g, length, count, seed, max_attempts);
    json out;
    auto& cycles = out["cycles"] = json::array();
    for (const auto& c : sample.cycles) cycles.push_back(c.nodes);
    out["attempts"] = sample.attempts;
    out["shortfall"] = sample.shortfall;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// -------------------------------------------------------------------- bench

int cmd_bench(const std::string& sizes_spec, double p, int trees, double cells_per_node,
              long long threshold, std::uint64_t seed, int repeats, int threads,
              const std::string& out_path) {
    const auto sizes = parse_int_list(sizes_spec, "--sizes");
    json result;
    result["p"] = p;
    result["trees"] = trees;
    result["cells_per_node"] = cells_per_node;
    result["repeats"] = repeats;
    result["sizes"] = sizes;
    std::vector<double> ms_per_size;

    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        const rcc::Graph g =
            rcc::generate({rcc::ErdosRenyi{n, p}, rcc::derive_seed(seed, 100 + i)});
        rcc::SamplingConfig cfg;
        cfg.trees = trees;
        cfg.mode = rcc::ExpectedCells{cells_per_node * n, threshold};
        cfg.approximation = rcc::RhoApproximation::Fast;
        cfg.seed = rcc::derive_seed(seed, 200 + i);
        cfg.q = p;

        std::vector<double> reps;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            (void)rcc::sample_lifting(g, cfg, threads);
            reps.push_back(elapsed_ms(t0));
        }
        std::sort(reps.begin(), reps.end());
        ms_per_size.push_back(reps[reps.size() / 2]);  // median
        std::cerr << "n=" << n << " ms=" << format_g17(ms_per_size.back()) << "\n";
    }
    result["ms"] = ms_per_size;

    // Least-squares slope of log(time) against log(n).
    const int k = static_cast<int>(sizes.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < k; ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(ms_per_size[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    if (k >= 2) {
        const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        const double r_num = k * sxy - sx * sy;
        const double r_den = std::sqrt((k * sxx - sx * sx) * (k * syy - sy * sy));
        result["slope"] = slope;
        result["r2"] = r_den > 0 ? (r_num / r_den) * (r_num / r_den) : 0.0;
    }

    const std::string text = result.dump(2) + "\n";
    if (!out_path.empty())
        write_file(out_path, text);
    else
        std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random 2-dimensional cell complexes via spanning trees"};
    app.require_subcommand(1);

    // gen-graph
    auto* gen = app.add_subcommand("gen-graph", "generate a graph and write its edge list");
    std::string gen_model = "er", gen_blocks, gen_out;
    int gen_n = 0, gen_a = 0, gen_b = 0;
    double gen_p = 0.0, gen_p_in = 0.0, gen_p_out = 0.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--model", gen_model, "er | complete | bipartite | sbm")->required();
    gen->add_option("--n", gen_n, "node count (er, complete)");
    gen->add_option("--p", gen_p, "edge probability (er)");
    gen->add_option("--a", gen_a, "first part size (bipartite)");
    gen->add_option("--b", gen_b, "second part size (bipartite)");
    gen->add_option("--blocks", gen_blocks, "comma-separated block sizes (sbm)");
    gen->add_option("--p-in", gen_p_in, "within-block probability (sbm)");
    gen->add_option("--p-out", gen_p_out, "between-block probability (sbm)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output edge-list path (stdout when absent)");

    // sample
    auto* sample = app.add_subcommand("sample", "sample a random 2-complex over spanning trees");
    GraphInput sample_input;
    sample_input.add_flags(sample);
    int sample_trees = 1000, sample_threads = 1;
    std::string sample_pl, sample_approx = "fast", sample_out;
    double sample_cells = 0.0;
    long long sample_threshold = 4;
    std::uint64_t sample_seed = 0;
    sample->add_option("--trees", sample_trees, "spanning trees to draw");
    sample->add_option("--uniform-pl", sample_pl, "per-length inclusion probabilities L:P,L:P");
    auto* cells_opt = sample->add_option("--cells", sample_cells, "expected total cell count");
    sample->add_option("--threshold", sample_threshold,
                       "occurrence threshold for eligible lengths (with --cells)");
    sample->add_option("--approx", sample_approx, "fast | estimated")
        ->check(CLI::IsMember({"fast", "estimated"}));
    sample->add_option("--seed", sample_seed, "random seed");
    sample->add_option("--threads", sample_threads, "worker threads (wall time only)");
    sample->add_option("--out", sample_out, "output complex JSON path (stdout when absent)");

    // count
    auto* count = app.add_subcommand("count", "estimate per-length simple-cycle counts");
    GraphInput count_input;
    count_input.add_flags(count);
    int count_trees = 1000, count_threads = 1;
    std::string count_approx = "fast", count_out;
    bool count_exact = false;
    long long count_budget = 50'000'000;
    std::uint64_t count_seed = 0;
    count->add_option("--trees", count_trees, "spanning trees to draw");
    count->add_option("--approx", count_approx, "fast | estimated")
        ->check(CLI::IsMember({"fast", "estimated"}));
    count->add_flag("--exact", count_exact, "append exact counts from enumeration");
    count->add_option("--budget", count_budget, "enumeration work budget (with --exact)");
    count->add_option("--seed", count_seed, "random seed");
    count->add_option("--threads", count_threads, "worker threads (wall time only)");
    count->add_option("--out", count_out, "output CSV path (stdout when absent)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Betti numbers and orientability of a complex");
    std::string analyze_cc, analyze_out;
    analyze->add_option("--cc", analyze_cc, "complex JSON file")->required();
    analyze->add_option("--out", analyze_out, "output JSON path (stdout when absent)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact references for spot checks");
    oracle->require_subcommand(1);
    auto* oracle_rho = oracle->add_subcommand("rho", "occurrence probability of one cycle");
    std::string orho_graph, orho_cycle, orho_method = "matrix-tree";
    long long orho_trials = 100000;
    std::uint64_t orho_seed = 0;
    int orho_threads = 1;
    oracle_rho->add_option("--graph", orho_graph, "edge-list file")->required();
    oracle_rho->add_option("--cycle", orho_cycle, "cycle as node list, e.g. 0,1,2")->required();
    oracle_rho->add_option("--method", orho_method, "matrix-tree | lrw | monte-carlo")
        ->check(CLI::IsMember({"matrix-tree", "lrw", "monte-carlo"}));
    oracle_rho->add_option("--trials", orho_trials, "trials (monte-carlo)");
    oracle_rho->add_option("--seed", orho_seed, "random seed (monte-carlo)");
    oracle_rho->add_option("--threads", orho_threads, "worker threads (wall time only)");

    auto* oracle_trees = oracle->add_subcommand("trees", "spanning tree count");
    std::string otrees_graph;
    bool otrees_enum = false;
    long long otrees_budget = 1'000'000;
    oracle_trees->add_option("--graph", otrees_graph, "edge-list file")->required();
    oracle_trees->add_flag("--enumerate", otrees_enum, "also enumerate trees and report the count");
    oracle_trees->add_option("--budget", otrees_budget, "enumeration budget");

    auto* oracle_reject = oracle->add_subcommand("reject", "uniform cycles by rejection sampling");
    std::string orej_graph;
    int orej_length = 3, orej_count = 1;
    std::uint64_t orej_seed = 0;
    long long orej_attempts = 10'000'000;
    oracle_reject->add_option("--graph", orej_graph, "edge-list file")->required();
    oracle_reject->add_option("--length", orej_length, "cycle length")->required();
    oracle_reject->add_option("--count", orej_count, "accepted samples wanted")->required();
    oracle_reject->add_option("--seed", orej_seed, "random seed");
    oracle_reject->add_option("--max-attempts", orej_attempts, "attempt cap");

    // bench
    auto* bench = app.add_subcommand("bench", "runtime scaling of the sampling pipeline");
    std::string bench_sizes = "100,200,400,800", bench_out;
    double bench_p = 0.1, bench_cpn = 10.0;
    int bench_trees = 1000, bench_repeats = 3, bench_threads = 1;
    long long bench_threshold = 4;
    std::uint64_t bench_seed = 0;
    bench->add_option("--sizes", bench_sizes, "comma-separated node counts");
    bench->add_option("--p", bench_p, "edge probability (fixed across sizes)");
    bench->add_option("--trees", bench_trees, "spanning trees per run");
    bench->add_option("--cells-per-node", bench_cpn, "expected cells per node");
    bench->add_option("--threshold", bench_threshold, "occurrence threshold");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--repeats", bench_repeats, "repetitions per size (median taken)");
    bench->add_option("--threads", bench_threads, "worker threads (wall time only)");
    bench->add_option("--out", bench_out, "output JSON path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen_graph(gen_model, gen_n, gen_p, gen_a, gen_b, gen_blocks, gen_p_in,
                                 gen_p_out, gen_seed, gen_out);
        if (sample->parsed())
            return cmd_sample(sample_input, sample_trees, sample_pl, sample_cells,
                              sample_threshold, cells_opt->count() > 0, sample_approx,
                              sample_seed, sample_threads, sample_out);
        if (count->parsed())
            return cmd_count(count_input, count_trees, count_approx, count_exact, count_budget,
                             count_seed, count_threads, count_out);
        if (analyze->parsed()) return cmd_analyze(analyze_cc, analyze_out);
        if (oracle->parsed()) {
            if (oracle_rho->parsed())
                return cmd_oracle_rho(orho_graph, orho_cycle, orho_method, orho_trials, orho_seed,
                                      orho_threads);
            if (oracle_trees->parsed()) return cmd_oracle_trees(otrees_graph, otrees_enum, otrees_budget);
            if (oracle_reject->parsed())
                return cmd_oracle_reject(orej_graph, orej_length, orej_count, orej_seed,
                                         orej_attempts);
        }
        if (bench->parsed())
            return cmd_bench(bench_sizes, bench_p, bench_trees, bench_cpn, bench_threshold,
                             bench_seed, bench_repeats, bench_threads, bench_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
