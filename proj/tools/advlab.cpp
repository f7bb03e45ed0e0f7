#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "advlab/bp/oracle.hpp"
#include "advlab/core/errors.hpp"
#include "advlab/core/instance_io.hpp"
#include "advlab/harness/generator.hpp"
#include "advlab/harness/report.hpp"
#include "advlab/lb/adversary.hpp"
#include "advlab/sched/oracle.hpp"

using namespace advlab;
using nlohmann::json;

namespace {

struct Options {
    std::string epsilon = "1/4";
    std::string objective = "makespan";
    unsigned p = 0;
    std::size_t machines = 2;
    std::string model = "online";
    std::string input;
    std::string report;
    std::string csv;
    std::uint64_t seed = 0;
    std::uint64_t node_limit = 0;
    std::size_t n = 10;
    std::string kind = "bin";
    unsigned grid = 0;
    std::size_t count = 50;
    std::size_t jobs = 0;
    std::string algorithm = "greedy";
    std::string output;
};

std::string objective_name(const Options& o) {
    if (o.objective == "lp") {
        if (o.p == 0) throw InvalidInput("--objective lp needs --p");
        return "lp" + std::to_string(o.p);
    }
    return o.objective;
}

void emit(const json& doc, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << doc.dump(2) << '\n';
    else
        save_json(path, doc);
}

int finish(const std::vector<harness::RunReport>& reports, const Options& o, bool single) {
    if (single) {
        emit(harness::to_json(reports.front()), o.report);
    } else {
        emit(harness::suite_to_json(reports), o.report);
        for (const auto& [key, g] : harness::summarize(reports))
            std::cerr << key << ": " << g.passed << " passed, " << g.failed << " failed, " << g.skipped
                      << " skipped, " << g.errors << " errors, worst ratio " << g.worst_ratio << '\n';
    }
    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        harness::write_csv(out, reports);
    }
    for (const auto& r : reports)
        if (r.status == harness::RunStatus::error || r.status == harness::RunStatus::fail)
            std::cerr << (r.label.empty() ? r.digest : r.label) << ": " << to_string(r.status) << ' ' << r.message
                      << '\n';
    return harness::suite_passed(reports) ? 0 : 1;
}

Instance input_or_generated(const Options& o, RequestKind kind) {
    if (!o.input.empty()) return load_instance(o.input);
    Instance inst;
    if (kind == RequestKind::bin_items) {
        inst.requests = harness::generate_bin_instance(o.seed, o.n, o.grid ? o.grid : 64);
    } else {
        inst.requests = harness::generate_job_instance(o.seed, o.n, o.grid ? o.grid : 4);
        inst.machines = o.machines;
    }
    return inst;
}

int cmd_gen(const Options& o) {
    Instance inst;
    if (o.kind == "bin") {
        inst.requests = harness::generate_bin_instance(o.seed, o.n, o.grid ? o.grid : 64);
    } else if (o.kind == "sched") {
        inst.requests = harness::generate_job_instance(o.seed, o.n, o.grid ? o.grid : 4);
        inst.machines = o.machines;
    } else {
        throw InvalidInput("--kind must be bin or sched");
    }
    emit(to_json(inst), o.output.empty() ? o.report : o.output);
    return 0;
}

int cmd_bp_run(const Options& o) {
    const Instance inst = input_or_generated(o, RequestKind::bin_items);
    harness::ExperimentConfig config;
    config.label = o.input.empty() ? "seed-" + std::to_string(o.seed) : o.input;
    config.problem = "bin";
    config.eps = Epsilon::parse(o.epsilon);
    config.requests = inst.requests;
    config.model = harness::parse_model(o.model);
    config.node_limit = o.node_limit;
    return finish({harness::run_experiment(config)}, o, true);
}

int cmd_sched_run(const Options& o) {
    const Instance inst = input_or_generated(o, RequestKind::jobs);
    harness::ExperimentConfig config;
    config.label = o.input.empty() ? "seed-" + std::to_string(o.seed) : o.input;
    config.problem = objective_name(o);
    config.eps = Epsilon::parse(o.epsilon);
    config.machines = inst.machines.value_or(o.machines);
    config.requests = inst.requests;
    config.model = harness::parse_model(o.model);
    config.node_limit = o.node_limit;
    return finish({harness::run_experiment(config)}, o, true);
}

int cmd_lb_run(const Options& o) {
    std::unique_ptr<lb::AdviceAlgorithm> alg;
    const std::size_t m = o.machines;
    const std::size_t k = o.n > 2 * m ? o.n - 2 * m : 0;
    if (o.algorithm == "greedy")
        alg = lb::make_greedy();
    else if (o.algorithm == "splitter")
        alg = lb::make_one_bit_splitter();
    else if (o.algorithm == "table") {
        // floor(k log m) - 1 bits
        std::size_t bits = 0;
        BigInt space = 1;
        for (std::size_t i = 0; i < k; ++i) space *= m;
        while ((BigInt(1) << (bits + 1)) <= space) ++bits;
        alg = lb::make_table(bits == 0 ? 0 : bits - 1);
    } else if (o.algorithm == "index")
        alg = lb::make_index_advice(o.n, m);
    else if (o.algorithm == "all-on-one")
        alg = lb::make_all_on_one();
    else
        throw InvalidInput("unknown algorithm '" + o.algorithm + "'");
    const auto game = lb::play_game(*alg, o.n, m);
    emit(lb::to_json(game), o.report);
    std::cerr << game.algorithm << ": " << (game.budget_too_large ? "budget covers every schedule, " : "")
              << (game.lower_bound_holds() ? "every advice string ends unbalanced" : "a balanced run exists")
              << '\n';
    return 0;
}

int cmd_suite(const Options& o) {
    std::vector<harness::ExperimentConfig> configs;
    const auto model = harness::parse_model(o.model);
    const auto eps = Epsilon::parse(o.epsilon);
    for (std::size_t i = 0; i < o.count; ++i) {
        harness::ExperimentConfig c;
        const std::uint64_t seed = o.seed + i;
        c.label = o.kind + "-" + std::to_string(seed);
        c.eps = eps;
        c.model = model;
        c.node_limit = o.node_limit;
        if (o.kind == "bin") {
            c.problem = "bin";
            c.requests = harness::generate_bin_instance(seed, o.n, o.grid ? o.grid : 64);
        } else {
            c.problem = objective_name(o);
            c.machines = o.machines;
            c.requests = harness::generate_job_instance(seed, o.n, o.grid ? o.grid : 4);
        }
        configs.push_back(std::move(c));
    }
    const std::size_t workers = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    return finish(harness::run_suite(configs, workers), o, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online bin packing and scheduling with advice: oracles, encoders, online consumers, verifiers"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--epsilon", o.epsilon, "unit fraction 1/q")->capture_default_str();
        sub->add_option("--input", o.input, "instance JSON");
        sub->add_option("--report", o.report, "report JSON path (stdout if omitted)");
        sub->add_option("--seed", o.seed, "generator seed")->capture_default_str();
        sub->add_option("--n", o.n, "generated instance length")->capture_default_str();
        sub->add_option("--grid", o.grid, "generator size grid denominator");
        sub->add_option("--node-limit", o.node_limit, "exact oracle search budget");
        sub->add_option("--model", o.model, "online or semionline")->capture_default_str();
        sub->add_option("--csv", o.csv, "CSV export path");
    };
    auto sched_flags = [&](CLI::App* sub) {
        sub->add_option("--objective", o.objective, "makespan, cover or lp")->capture_default_str();
        sub->add_option("--p", o.p, "integer p >= 2 for lp");
        sub->add_option("--machines", o.machines, "machine count")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", o.kind, "bin or sched")->capture_default_str();
    gen->add_option("--n", o.n, "instance length")->capture_default_str();
    gen->add_option("--seed", o.seed, "generator seed")->capture_default_str();
    gen->add_option("--grid", o.grid, "size grid denominator");
    gen->add_option("--machines", o.machines, "machine count (sched)")->capture_default_str();
    gen->add_option("--output,--report", o.output, "output path (stdout if omitted)");

    auto* bp_run = app.add_subcommand("bp-run", "bin packing with advice on one instance");
    common(bp_run);
    auto* sched_run = app.add_subcommand("sched-run", "scheduling with advice on one instance");
    common(sched_run);
    sched_flags(sched_run);

    auto* lb_run = app.add_subcommand("lb-run", "play the lower-bound game against a reference algorithm");
    lb_run->add_option("--machines", o.machines, "machine count")->capture_default_str();
    lb_run->add_option("--n", o.n, "sequence length, n > 2m")->capture_default_str();
    lb_run->add_option("--algorithm", o.algorithm, "greedy, splitter, table, index or all-on-one")
        ->capture_default_str();
    lb_run->add_option("--report", o.report, "transcript JSON path (stdout if omitted)");

    auto* suite = app.add_subcommand("suite", "run generated instances and aggregate");
    common(suite);
    sched_flags(suite);
    suite->add_option("--kind", o.kind, "bin or sched")->capture_default_str();
    suite->add_option("--count", o.count, "number of instances")->capture_default_str();
    suite->add_option("--jobs", o.jobs, "parallel workers (default: hardware threads)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return cmd_gen(o);
        if (bp_run->parsed()) return cmd_bp_run(o);
        if (sched_run->parsed()) return cmd_sched_run(o);
        if (lb_run->parsed()) return cmd_lb_run(o);
        if (suite->parsed()) return cmd_suite(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
