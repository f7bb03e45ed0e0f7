#include "advlab/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>

#include "advlab/bp/online.hpp"
#include "advlab/core/errors.hpp"
#include "advlab/harness/bounds.hpp"
#include "advlab/sched/online.hpp"

namespace advlab::harness {

Model parse_model(const std::string& text) {
    if (text == "online") return Model::online;
    if (text == "semionline" || text == "semi-online") return Model::semionline;
    throw InvalidInput("unknown advice model '" + text + "'");
}

std::string to_string(Model model) {
    return model == Model::online ? "online" : "semionline";
}

std::string to_string(RunStatus status) {
    switch (status) {
    case RunStatus::pass: return "PASS";
    case RunStatus::fail: return "FAIL";
    case RunStatus::skipped: return "SKIPPED";
    case RunStatus::error: return "ERROR";
    }
    return "?";
}

bool RunReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* RunReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string instance_digest(const RequestSequence& requests, std::size_t machines) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    feed(std::string(to_string(requests.kind())));
    feed(std::to_string(machines));
    for (const auto& v : requests.entries()) feed(format_rational(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

void add(RunReport& report, std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
}

void run_bin(const ExperimentConfig& config, RunReport& report) {
    const auto& items = config.requests;
    const Epsilon eps = config.eps;
    const auto plan = bp::build_plan(items, eps, config.node_limit ? config.node_limit : bp::default_node_limit);
    const auto layout = bp::BpaAdviceLayout::for_epsilon(eps);
    Packing packing;
    if (config.model == Model::online) {
        const auto frames = bp::encode_stream(plan);
        packing = bp::run_online(items, frames, eps);
        const bool uniform = std::all_of(frames.begin(), frames.end(),
                                         [&](const BitString& f) { return f.width() == layout.total_width; });
        report.total_bits = layout.total_width * items.size();
        report.bits_per_request = std::to_string(layout.total_width);
        report.width_bound = bin_width_bound_value(eps);
        add(report, "width_bound", uniform && bin_width_within_bound(eps, layout.total_width),
            std::to_string(layout.total_width) + " bits per request");
    } else {
        const BitString tape = bp::encode_semionline_tape(plan, items, eps);
        packing = bp::run_semionline(items, tape, eps);
        report.total_bits = tape.width();
        report.bits_per_request =
            items.empty() ? "0" : format_rational(Rational(BigInt(tape.width()), BigInt(items.size())));
        bool within = bin_tape_within_bound(eps, plan.optimal_bins, items.size(), tape.width());
        if (plan.case2) within = within && tape.width() == 1 + items.size() * layout.case2_index_width;
        add(report, "tape_bound", within, std::to_string(tape.width()) + " tape bits");
    }
    const Rational N(BigInt(plan.optimal_bins));
    const Rational online(BigInt(packing.size()));
    report.oracle_value = format_rational(N);
    report.online_value = format_rational(online);
    report.ratio = plan.optimal_bins ? format_rational(online / N) : "1";
    add(report, "ratio", online <= (1 + 3 * eps.value()) * N,
        report.online_value + " bins against N = " + report.oracle_value);
    if (plan.case2)
        add(report, "reconstruction", packing.size() == plan.optimal_bins, "case 2: optimal bin count");
    else
        add(report, "reconstruction", same_partition(packing, plan.target), "case 1: partition equals S");
}

void run_sched(const ExperimentConfig& config, RunReport& report) {
    const auto objective = sched::Objective::parse(config.problem);
    const auto& jobs = config.requests;
    const Epsilon eps = config.eps;
    const std::size_t m = config.machines;
    const auto plan = sched::build_plan(jobs, m, eps, objective,
                                        config.node_limit ? config.node_limit : sched::default_node_limit);
    const auto layout = sched::SchedAdviceLayout::for_plan(eps, objective);
    Schedule online(m);
    if (config.model == Model::online) {
        const auto frames = sched::encode_stream(plan);
        online = sched::run_online(jobs, frames, eps, objective, m);
        const bool uniform = std::all_of(frames.begin(), frames.end(),
                                         [&](const BitString& f) { return f.width() == layout.total_width; });
        report.total_bits = layout.total_width * jobs.size();
        report.bits_per_request = std::to_string(layout.total_width);
        report.width_bound = sched_width_bound_value(eps, layout.z_width);
        add(report, "width_bound",
            uniform && sched_width_within_bound(eps, layout.total_width, layout.z_width) &&
                sched_type_width_within_bound(eps, layout.w_width) &&
                beta_within_bound(eps, plan.max_jobs, layout.z_width) &&
                objective_width_within_bound(eps, objective, layout.total_width),
            std::to_string(layout.total_width) + " bits per request, beta = " + std::to_string(layout.z_width));
    } else {
        const BitString tape = sched::encode_semionline_tape(plan);
        online = sched::run_semionline(jobs, tape, eps, objective, m);
        report.total_bits = tape.width();
        report.bits_per_request = format_rational(Rational(BigInt(tape.width()), BigInt(jobs.size())));
        add(report, "tape_bound", sched_tape_within_bound(eps, m, jobs.size(), layout.z_width, tape.width()),
            std::to_string(tape.width()) + " tape bits");
    }

    bool windows = true;
    bool quotas = true;
    const Rational slack = eps.value() * plan.U;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t machine = plan.permutation[k];
        windows = windows && sched::within_window(online.load(machine), plan.s_star.load(k), eps, plan.U);
        Rational small = 0;
        for (auto j : online.jobs_on(machine))
            if (plan.job_type[j] == sched::small_type) small += jobs[j];
        quotas = quotas && small >= plan.small_target[k] - slack && small <= plan.small_target[k] + slack;
    }
    add(report, "load_windows", windows);
    add(report, "small_quotas", quotas);

    const Rational value = objective.value(online);
    report.oracle_value = format_rational(plan.opt_value);
    report.online_value = format_rational(value);
    report.ratio = plan.opt_value == 0 ? "-" : format_rational(value / plan.opt_value);
    add(report, "objective_ratio", objective.meets_guarantee(value, plan.opt_value, eps),
        "bound " + format_rational(objective.guarantee(plan.opt_value, eps)));
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& config) {
    RunReport report;
    report.label = config.label;
    report.problem = config.problem;
    report.epsilon = config.eps.to_string();
    report.model = to_string(config.model);
    report.n = config.requests.size();
    report.machines = config.machines;
    report.digest = instance_digest(config.requests, config.machines);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (config.problem == "bin")
            run_bin(config, report);
        else
            run_sched(config, report);
        report.status = report.all_passed() ? RunStatus::pass : RunStatus::fail;
    } catch (const ResourceExceeded& e) {
        report.status = RunStatus::skipped;
        report.message = e.what();
        report.checks.clear();
    } catch (const DegenerateInstance& e) {
        report.status = RunStatus::skipped;
        report.message = e.what();
        report.checks.clear();
    } catch (const std::exception& e) {
        report.status = RunStatus::error;
        report.message = e.what();
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<RunReport> run_suite(const std::vector<ExperimentConfig>& configs, std::size_t parallelism) {
    std::vector<RunReport> reports(configs.size());
    parallelism = std::max<std::size_t>(1, parallelism);
    for (std::size_t begin = 0; begin < configs.size(); begin += parallelism) {
        const std::size_t end = std::min(configs.size(), begin + parallelism);
        if (parallelism == 1) {
            reports[begin] = run_experiment(configs[begin]);
            continue;
        }
        std::vector<std::future<RunReport>> batch;
        for (std::size_t i = begin; i < end; ++i)
            batch.push_back(std::async(std::launch::async, run_experiment, std::cref(configs[i])));
        for (std::size_t i = begin; i < end; ++i) reports[i] = batch[i - begin].get();
    }
    return reports;
}

}  // namespace advlab::harness
