#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <loopcut/bench.hpp>
#include <loopcut/dag.hpp>
#include <loopcut/generators.hpp>
#include <loopcut/io.hpp>
#include <loopcut/multigraph.hpp>
#include <loopcut/oracle.hpp>
#include <loopcut/random_fvs.hpp>
#include <loopcut/reductions.hpp>
#include <loopcut/rng.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace loopcut;

namespace {

// Rewraps parser errors so the message carries the offending file and line.
[[noreturn]] void rethrow_with_path(const std::string& path, const parse_error& e) {
    std::string msg = path;
    if (e.line() > 0) {
        msg += ":" + std::to_string(e.line());
    }
    msg += ": ";
    msg += e.what();
    throw parse_error(msg, e.line());
}

MultiGraph load_graph(const std::string& path) {
    try {
        return read_ugraph_file(path);
    } catch (const parse_error& e) {
        rethrow_with_path(path, e);
    }
}

Dag load_dag(const std::string& path) {
    try {
        return read_bndag_file(path);
    } catch (const parse_error& e) {
        rethrow_with_path(path, e);
    }
}

json weight_to_json(Weight w) {
    if (w.is_infinite()) {
        return json("inf");
    }
    return json(w.as_double());
}

void write_text_members(std::ostream& out, const char* label,
                        const std::vector<VertexId>& members) {
    out << label;
    for (VertexId v : members) {
        out << " " << v;
    }
    out << "\n";
}

struct FvsOptions {
    std::string input;
    std::string algo;
    std::uint32_t k = 0;
    bool k_set = false;
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::uint64_t seed = 0;
    std::size_t oracle_cap = 20;
    bool emit_json = false;
};

void run_fvs(const FvsOptions& opt) {
    const MultiGraph g = load_graph(opt.input);
    const std::uint32_t k =
        opt.k_set ? opt.k : static_cast<std::uint32_t>(std::max<std::size_t>(1, g.vertex_count()));
    RandomStream rng(opt.seed);
    std::optional<FvsResult> result;
    std::string verdict;
    if (opt.algo == "guess") {
        result = single_guess(g, k, rng);
        if (!result) {
            verdict = "no feedback vertex set of size <= " + std::to_string(k) +
                      " found in this trial";
        }
    } else if (opt.algo == "repeat") {
        result = repeated_guess(g, opt.c, rng);
    } else if (opt.algo == "wguess1") {
        result = single_wguess_i(g, k, rng);
        if (!result) {
            verdict = "no feedback vertex set of size <= " + std::to_string(k) +
                      " found in this trial";
        }
    } else if (opt.algo == "wguess2") {
        result = single_wguess_ii(g, rng);
    } else if (opt.algo == "rwguess1") {
        if (opt.k_set) {
            result = repeated_wguess_i(g, opt.c, k, rng);
            if (!result) {
                verdict = "minimum-weight feedback vertex set is larger than " +
                          std::to_string(k) + " with high probability";
            }
        } else {
            result = rwguess_sweep(g, opt.c, rng);
        }
    } else if (opt.algo == "wra") {
        result = wra(g, opt.c, opt.max_iters, rng);
    } else if (opt.algo == "ga") {
        result = greedy_ga(g);
    } else if (opt.algo == "oracle") {
        result = brute_force_min_wfvs(g, opt.oracle_cap);
    } else {
        throw CLI::ValidationError("--algo", "unknown algorithm: " + opt.algo);
    }

    if (opt.emit_json) {
        json out;
        out["algo"] = opt.algo;
        out["seed"] = opt.seed;
        out["status"] = result ? "ok" : "fail";
        if (result) {
            out["members"] = result->members;
            out["weight"] = weight_to_json(result->total_weight);
            out["size"] = result->members.size();
            out["iterations"] = result->trace.trials_run;
        } else {
            out["verdict"] = verdict;
        }
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "algo " << opt.algo << "\n";
    std::cout << "seed " << opt.seed << "\n";
    if (!result) {
        std::cout << "status fail\n";
        std::cout << "verdict " << verdict << "\n";
        return;
    }
    std::cout << "status ok\n";
    std::cout << "weight " << format_weight(result->total_weight) << "\n";
    std::cout << "size " << result->members.size() << "\n";
    write_text_members(std::cout, "members", result->members);
    std::cout << "iterations " << result->trace.trials_run << "\n";
}

struct CutsetOptions {
    std::string input;
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::uint64_t seed = 0;
    bool emit_json = false;
};

void run_cutset(const CutsetOptions& opt) {
    const Dag d = load_dag(opt.input);
    RandomStream rng(opt.seed);
    const LoopCutsetResult result = rlc(d, opt.c, opt.max_iters, rng);
    if (opt.emit_json) {
        json out;
        out["cutset"] = result.cutset;
        out["log2_weight"] = result.log2_weight;
        out["trials"] = result.trace.trials_run;
        out["seed"] = opt.seed;
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "seed " << opt.seed << "\n";
    write_text_members(std::cout, "cutset", result.cutset);
    std::cout << "log2_weight " << format_double(result.log2_weight) << "\n";
    std::cout << "trials " << result.trace.trials_run << "\n";
}

struct OracleOptions {
    std::string input;
    std::size_t cap = 0;  // 0 = per-type default (20 graphs, 12 dags)
    bool emit_json = false;
};

void run_oracle(const OracleOptions& opt) {
    const fs::path path(opt.input);
    const std::string ext = path.extension().string();
    if (ext == ".ugraph") {
        const MultiGraph g = load_graph(opt.input);
        const FvsResult result = brute_force_min_wfvs(g, opt.cap == 0 ? 20 : opt.cap);
        if (opt.emit_json) {
            json out;
            out["members"] = result.members;
            out["weight"] = weight_to_json(result.total_weight);
            out["size"] = result.members.size();
            std::cout << out.dump() << "\n";
            return;
        }
        std::cout << "weight " << format_weight(result.total_weight) << "\n";
        std::cout << "size " << result.members.size() << "\n";
        write_text_members(std::cout, "members", result.members);
        return;
    }
    if (ext == ".bndag") {
        const Dag d = load_dag(opt.input);
        const LoopCutsetOracle result = brute_force_min_loop_cutset(d, opt.cap == 0 ? 12 : opt.cap);
        if (opt.emit_json) {
            json out;
            out["cutset"] = result.cutset;
            out["log2_weight"] = result.log2_weight;
            out["size"] = result.cutset.size();
            std::cout << out.dump() << "\n";
            return;
        }
        std::cout << "log2_weight " << format_double(result.log2_weight) << "\n";
        std::cout << "size " << result.cutset.size() << "\n";
        write_text_members(std::cout, "cutset", result.cutset);
        return;
    }
    throw CLI::ValidationError("--input",
                               "cannot infer input type from extension (want .ugraph or .bndag)");
}

struct GenOptions {
    std::string type;
    std::size_t n = 0;
    std::size_t m = 0;
    int dlo = 2;
    int dhi = 2;
    bool domains_set = false;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::string out_dir;
};

void run_gen(const GenOptions& opt) {
    CorpusSpec spec;
    spec.n_vertices = opt.n;
    spec.n_edges = opt.m;
    spec.domain_lo = opt.dlo;
    spec.domain_hi = opt.dhi;
    spec.n_instances = opt.count;
    spec.seed = opt.seed;
    fs::create_directories(opt.out_dir);
    RandomStream root(opt.seed);
    char name[32];
    for (std::size_t i = 0; i < opt.count; ++i) {
        RandomStream rng = root.substream(i);
        fs::path file;
        std::ofstream out;
        if (opt.type == "dag") {
            std::snprintf(name, sizeof(name), "d%04zu.bndag", i);
            file = fs::path(opt.out_dir) / name;
            out.open(file);
            if (!out) {
                throw std::runtime_error("cannot write " + file.string());
            }
            write_bndag(out, gen_random_dag(spec, rng));
        } else {
            std::snprintf(name, sizeof(name), "g%04zu.ugraph", i);
            file = fs::path(opt.out_dir) / name;
            out.open(file);
            if (!out) {
                throw std::runtime_error("cannot write " + file.string());
            }
            write_ugraph(out, gen_random_graph(spec, rng, opt.domains_set));
        }
    }
    std::cout << "wrote " << opt.count << " " << opt.type << " instance"
              << (opt.count == 1 ? "" : "s") << " to " << opt.out_dir << "\n";
}

struct BenchOptions {
    std::string corpus;
    std::vector<std::string> algos;
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::uint64_t seed = 0;
    std::string csv_path;
    std::string summary_path;
    std::size_t oracle_cap = 20;
    bool timing = false;
};

void run_bench_cmd(const BenchOptions& opt) {
    std::vector<BenchAlgo> algos;
    for (const std::string& name : opt.algos) {
        algos.push_back(parse_bench_algo(name));
    }
    std::vector<std::string> graph_files;
    std::vector<std::string> dag_files;
    if (!fs::is_directory(opt.corpus)) {
        throw CLI::ValidationError("--corpus", "not a directory: " + opt.corpus);
    }
    for (const auto& entry : fs::directory_iterator(opt.corpus)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const std::string ext = entry.path().extension().string();
        if (ext == ".ugraph") {
            graph_files.push_back(entry.path().string());
        } else if (ext == ".bndag") {
            dag_files.push_back(entry.path().string());
        }
    }
    if (!graph_files.empty() && !dag_files.empty()) {
        throw CLI::ValidationError("--corpus", "mixed .ugraph and .bndag corpus");
    }
    if (graph_files.empty() && dag_files.empty()) {
        throw CLI::ValidationError("--corpus", "no .ugraph or .bndag files in " + opt.corpus);
    }
    BenchBudget budget;
    budget.c = opt.c;
    budget.max_iters = opt.max_iters;
    budget.oracle_cap = opt.oracle_cap;
    budget.timing = opt.timing;
    BenchResult result;
    if (!graph_files.empty()) {
        std::sort(graph_files.begin(), graph_files.end());
        std::vector<std::pair<std::string, MultiGraph>> instances;
        instances.reserve(graph_files.size());
        for (const std::string& file : graph_files) {
            instances.emplace_back(fs::path(file).stem().string(), load_graph(file));
        }
        result = run_bench_graphs(instances, algos, budget, opt.seed);
    } else {
        std::sort(dag_files.begin(), dag_files.end());
        std::vector<std::pair<std::string, Dag>> instances;
        instances.reserve(dag_files.size());
        for (const std::string& file : dag_files) {
            instances.emplace_back(fs::path(file).stem().string(), load_dag(file));
        }
        result = run_bench_dags(instances, algos, budget, opt.seed);
    }
    std::ofstream csv(opt.csv_path);
    if (!csv) {
        throw std::runtime_error("cannot write " + opt.csv_path);
    }
    write_bench_csv(csv, result.rows);
    if (opt.summary_path.empty()) {
        write_bench_summary(std::cout, result.summary);
    } else {
        std::ofstream summary(opt.summary_path);
        if (!summary) {
            throw std::runtime_error("cannot write " + opt.summary_path);
        }
        write_bench_summary(summary, result.summary);
    }
}

struct RateOptions {
    std::string input;
    std::string algo;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint32_t k = 1;
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::size_t oracle_cap = 20;
};

void run_rate(const RateOptions& opt) {
    RateParams params;
    if (opt.algo == "guess") {
        params.algo = RateAlgo::Guess;
    } else if (opt.algo == "wguess1") {
        params.algo = RateAlgo::WGuessI;
    } else if (opt.algo == "wguess2") {
        params.algo = RateAlgo::WGuessII;
    } else if (opt.algo == "repeat") {
        params.algo = RateAlgo::Repeat;
    } else if (opt.algo == "rwguess1") {
        params.algo = RateAlgo::RWGuessI;
    } else if (opt.algo == "wra") {
        params.algo = RateAlgo::Wra;
    } else {
        throw CLI::ValidationError("--algo", "unknown algorithm: " + opt.algo);
    }
    params.k = opt.k;
    params.c = opt.c;
    params.max_iters = opt.max_iters;
    params.oracle_cap = opt.oracle_cap;
    const MultiGraph g = load_graph(opt.input);
    const RateEstimate estimate = estimate_success_rate(g, params, opt.trials, RandomStream(opt.seed));
    json out;
    out["hit_rate"] = estimate.hit_rate;
    out["ci95"] = json::array({estimate.ci_lo, estimate.ci_hi});
    out["trials"] = estimate.trials;
    out["oracle_weight"] = estimate.oracle_weight;
    out["seed"] = opt.seed;
    std::cout << out.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-weight feedback vertex sets and Bayesian-network loop cutsets"};
    app.require_subcommand(1);

    FvsOptions fvs_opt;
    CLI::App* fvs_cmd = app.add_subcommand("fvs", "run an FVS algorithm on a .ugraph instance");
    fvs_cmd->add_option("--input", fvs_opt.input, "UGRAPH input file")->required();
    fvs_cmd->add_option("--algo", fvs_opt.algo, "guess|repeat|wguess1|wguess2|rwguess1|wra|ga|oracle")
        ->required();
    auto* fvs_k = fvs_cmd->add_option("--k", fvs_opt.k, "size bound (default: |V|)");
    fvs_cmd->add_option("--c", fvs_opt.c, "amplification constant (default 1)");
    fvs_cmd->add_option("--max", fvs_opt.max_iters, "iteration ceiling for wra (default 300)");
    fvs_cmd->add_option("--seed", fvs_opt.seed, "random seed")->required();
    fvs_cmd->add_option("--oracle-cap", fvs_opt.oracle_cap, "oracle vertex cap (default 20)");
    fvs_cmd->add_flag("--json", fvs_opt.emit_json, "emit JSON");
    fvs_cmd->callback([&] {
        fvs_opt.k_set = fvs_k->count() > 0;
        run_fvs(fvs_opt);
    });

    CutsetOptions cutset_opt;
    CLI::App* cutset_cmd =
        app.add_subcommand("cutset", "run the randomized loop-cutset solver on a .bndag instance");
    cutset_cmd->add_option("--input", cutset_opt.input, "BNDAG input file")->required();
    cutset_cmd->add_option("--c", cutset_opt.c, "amplification constant (default 1)");
    cutset_cmd->add_option("--max", cutset_opt.max_iters, "iteration ceiling (default 300)");
    cutset_cmd->add_option("--seed", cutset_opt.seed, "random seed")->required();
    cutset_cmd->add_flag("--json", cutset_opt.emit_json, "emit JSON");
    cutset_cmd->callback([&] { run_cutset(cutset_opt); });

    OracleOptions oracle_opt;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exact minimum by brute force (.ugraph or .bndag)");
    oracle_cmd->add_option("--input", oracle_opt.input, "input file")->required();
    oracle_cmd->add_option("--cap", oracle_opt.cap,
                           "vertex cap (default 20 for graphs, 12 for dags)");
    oracle_cmd->add_flag("--json", oracle_opt.emit_json, "emit JSON");
    oracle_cmd->callback([&] { run_oracle(oracle_opt); });

    GenOptions gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance corpus");
    gen_cmd->add_option("type", gen_opt.type, "graph|dag")
        ->required()
        ->check(CLI::IsMember({"graph", "dag"}));
    gen_cmd->add_option("--n", gen_opt.n, "vertices per instance")->required();
    gen_cmd->add_option("--m", gen_opt.m, "edges (graph) or arcs (dag) per instance")->required();
    auto* gen_dlo = gen_cmd->add_option("--dlo", gen_opt.dlo, "domain size lower bound (default 2)");
    auto* gen_dhi = gen_cmd->add_option("--dhi", gen_opt.dhi, "domain size upper bound (default 2)");
    gen_cmd->add_option("--count", gen_opt.count, "number of instances (default 1)");
    gen_cmd->add_option("--seed", gen_opt.seed, "random seed")->required();
    gen_cmd->add_option("--out", gen_opt.out_dir, "output directory")->required();
    gen_cmd->callback([&] {
        gen_opt.domains_set = gen_dlo->count() > 0 || gen_dhi->count() > 0;
        if (gen_dlo->count() > 0 && gen_dhi->count() == 0) {
            gen_opt.dhi = gen_opt.dlo;
        }
        run_gen(gen_opt);
    });

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run algorithms across a corpus directory");
    bench_cmd->add_option("--corpus", bench_opt.corpus, "directory of .ugraph or .bndag files")
        ->required();
    bench_cmd->add_option("--algos", bench_opt.algos, "comma-separated: wra,ga,oracle,repeat,rwguess1")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--c", bench_opt.c, "amplification constant (default 1)");
    bench_cmd->add_option("--max", bench_opt.max_iters, "iteration ceiling (default 300)");
    bench_cmd->add_option("--seed", bench_opt.seed, "random seed")->required();
    bench_cmd->add_option("--csv", bench_opt.csv_path, "output CSV path")->required();
    bench_cmd->add_option("--summary", bench_opt.summary_path,
                          "summary output path (default: stdout)");
    bench_cmd->add_option("--oracle-cap", bench_opt.oracle_cap, "oracle vertex cap (default 20)");
    bench_cmd->add_flag("--timing", bench_opt.timing,
                        "record wall-clock elapsed_ms (off by default so reruns are byte-identical)");
    bench_cmd->callback([&] { run_bench_cmd(bench_opt); });

    RateOptions rate_opt;
    CLI::App* rate_cmd =
        app.add_subcommand("rate", "estimate an algorithm's exact-minimum hit rate");
    rate_cmd->add_option("--input", rate_opt.input, "UGRAPH input file")->required();
    rate_cmd->add_option("--algo", rate_opt.algo, "guess|wguess1|wguess2|repeat|rwguess1|wra")
        ->required();
    rate_cmd->add_option("--trials", rate_opt.trials, "number of independent trials")->required();
    rate_cmd->add_option("--seed", rate_opt.seed, "random seed")->required();
    rate_cmd->add_option("--k", rate_opt.k, "size bound (default 1)");
    rate_cmd->add_option("--c", rate_opt.c, "amplification constant (default 1)");
    rate_cmd->add_option("--max", rate_opt.max_iters, "iteration ceiling for wra (default 300)");
    rate_cmd->add_option("--oracle-cap", rate_opt.oracle_cap, "oracle vertex cap (default 20)");
    rate_cmd->callback([&] { run_rate(rate_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const oracle_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
