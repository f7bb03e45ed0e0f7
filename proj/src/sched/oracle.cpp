#include "advlab/sched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "advlab/core/errors.hpp"
#include "advlab/core/quota.hpp"

namespace advlab::sched {

unsigned type_count(Epsilon eps) {
    // (1+1/q)^t >= q iff (q+1)^t >= q^(t+1); start from the float estimate.
    const unsigned q = eps.inverse();
    const auto reaches = [q](unsigned t) { return power(BigInt(q + 1), t) >= power(BigInt(q), t + 1); };
    auto t = static_cast<unsigned>(std::ceil(std::log(double(q)) / std::log1p(1.0 / q)));
    while (t > 0 && reaches(t - 1)) --t;
    while (!reaches(t)) ++t;
    return t;
}

JobClassifier::JobClassifier(Epsilon eps, Rational U) : eps_(eps), U_(std::move(U)), types_(type_count(eps)) {
    if (U_ <= 0) throw InvalidInput("the class threshold U must be positive");
    Rational bound = eps_.value() * U_;
    for (unsigned i = 0; i < types_; ++i) {
        bound *= 1 + eps_.value();
        upper_.push_back(bound);
    }
}

int JobClassifier::classify(const Rational& v) const {
    if (v <= 0) throw InvalidInput("processing times must be positive");
    if (v <= eps_.value() * U_) return small_type;
    if (v > U_) return huge_type();
    for (unsigned i = 0; i < types_; ++i)
        if (v <= upper_[i]) return static_cast<int>(i);
    return static_cast<int>(types_) - 1;  // unreachable: upper_[T-1] >= U
}

MachinePattern MachinePattern::of_jobs(std::vector<unsigned> types) {
    std::sort(types.begin(), types.end());
    return {Kind::jobs, std::move(types)};
}

std::size_t MachinePattern::slots(int type, int huge_type) const {
    if (type == huge_type) return kind == Kind::huge_only ? 1 : 0;
    if (kind != Kind::jobs || type < 0) return 0;
    return static_cast<std::size_t>(std::count(types.begin(), types.end(), static_cast<unsigned>(type)));
}

std::string MachinePattern::to_string() const {
    switch (kind) {
    case Kind::small_only: return "small";
    case Kind::huge_only: return "huge";
    case Kind::jobs: break;
    }
    std::string out = "[";
    for (std::size_t k = 0; k < types.size(); ++k) out += (k ? "," : "") + std::to_string(types[k]);
    return out + "]";
}

SmallQuotas small_quota_assignment(std::span<const Rational> small_sizes, std::span<const Rational> targets) {
    SmallQuotas out;
    Rational goal = 0;
    Rational volume = 0;
    std::size_t taken = 0;
    for (const auto& y : targets) {
        goal += y;
        while (volume < goal && taken < small_sizes.size()) volume += small_sizes[taken++];
        if (volume < goal) throw InvalidInput("small-job targets exceed the small volume");
        out.kappa.push_back(taken - (out.ends.empty() ? 0 : out.ends.back()));
        out.ends.push_back(taken);
    }
    return out;
}

Rational choose_U(const RequestSequence& jobs, std::size_t machines, Objective objective, const Rational& opt_value) {
    if (objective.kind == ObjectiveKind::lp) return jobs.total() / Rational(static_cast<long>(machines));
    return opt_value;
}

namespace {

std::vector<std::size_t> machine_map(const Schedule& s, std::size_t n) {
    std::vector<std::size_t> machine_of(n, SIZE_MAX);
    for (std::size_t i = 0; i < s.machine_count(); ++i)
        for (auto j : s.jobs_on(i)) machine_of.at(j) = i;
    for (auto i : machine_of)
        if (i == SIZE_MAX) throw InvalidInput("schedule does not cover every job");
    return machine_of;
}

std::size_t largest(std::span<const std::size_t> candidates, const RequestSequence& jobs) {
    std::size_t best = candidates.front();
    for (auto j : candidates)
        if (jobs[j] > jobs[best] || (jobs[j] == jobs[best] && j < best)) best = j;
    return best;
}

}  // namespace

Schedule normalize(const Schedule& schedule, const RequestSequence& jobs, Objective objective, Epsilon eps,
                   const Rational& U) {
    const JobClassifier classes(eps, U);
    const unsigned v = objective.pattern_size(eps);
    const std::size_t m = schedule.machine_count();
    const Rational value = objective.value(schedule);
    std::vector<std::size_t> machine_of = machine_map(schedule, jobs.size());
    std::vector<int> type(jobs.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) type[j] = classes.classify(jobs[j]);

    const std::size_t max_moves = 4 * (jobs.size() + 1) * (m + 1);
    for (std::size_t round = 0;; ++round) {
        const Schedule current = schedule_from_assignment(machine_of, jobs.entries(), m);
        std::size_t violator = SIZE_MAX;
        bool huge_case = false;
        for (std::size_t i = m; i-- > 0 && violator == SIZE_MAX;) {
            const auto& on = current.jobs_on(i);
            const auto huge = std::count_if(on.begin(), on.end(), [&](auto j) { return type[j] == classes.huge_type(); });
            const auto big = std::count_if(on.begin(), on.end(), [&](auto j) { return type[j] != small_type; });
            if (huge > 0 && on.size() > 1) {
                violator = i;
                huge_case = true;
            } else if (static_cast<std::size_t>(big) > v) {
                violator = i;
            }
        }
        if (violator == SIZE_MAX) return current;
        if (objective.kind != ObjectiveKind::cover)
            throw NormalizationFailure(huge_case ? "a huge job shares a machine in an optimum"
                                                 : "a machine holds more than v non-small jobs in an optimum");
        if (round >= max_moves) throw NormalizationFailure("exchange moves did not terminate");

        std::size_t target = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (current.load(i) < current.load(target)) target = i;
        if (target == violator) throw NormalizationFailure("violating machine carries the minimum load");

        const auto& on = current.jobs_on(violator);
        std::vector<std::size_t> moving;
        if (huge_case) {
            std::vector<std::size_t> huge;
            for (auto j : on)
                if (type[j] == classes.huge_type()) huge.push_back(j);
            const std::size_t keep = largest(huge, jobs);
            for (auto j : on)
                if (j != keep) moving.push_back(j);
        } else {
            std::vector<std::size_t> big;
            for (auto j : on) {
                if (type[j] == small_type)
                    moving.push_back(j);
                else
                    big.push_back(j);
            }
            moving.push_back(largest(big, jobs));
        }
        for (auto j : moving) machine_of[j] = target;
        const Schedule moved = schedule_from_assignment(machine_of, jobs.entries(), m);
        if (objective.value(moved) != value) throw NormalizationFailure("an exchange move changed the cover");
    }
}

bool within_window(const Rational& load, const Rational& optimal_load, Epsilon eps, const Rational& U) {
    const Rational e = eps.value();
    return (1 - e) * optimal_load - e * U <= load && load <= (1 + e) * optimal_load + e * U;
}

SchedulePlan build_plan_from_optimum(const RequestSequence& jobs, std::size_t machines, Epsilon eps,
                                     Objective objective, const OptimalSchedule& optimum) {
    require_scheduling_range(eps);
    if (jobs.kind() != RequestKind::jobs) throw InvalidInput("scheduling needs a job instance");
    if (jobs.empty()) throw InvalidInput("the job sequence is empty");
    if (optimum.schedule.machine_count() != machines) throw InvalidInput("optimum has the wrong machine count");

    SchedulePlan plan;
    plan.objective = objective;
    plan.eps = eps;
    plan.machines = machines;
    plan.opt_value = optimum.value;
    plan.optimum = optimum.schedule;
    plan.U = choose_U(jobs, machines, objective, optimum.value);
    if (objective.kind == ObjectiveKind::cover && plan.U == 0)
        throw DegenerateInstance("cover optimum is 0: fewer jobs than machines");
    plan.types = type_count(eps);
    plan.max_jobs = objective.pattern_size(eps);

    const Schedule normalized = normalize(optimum.schedule, jobs, objective, eps, plan.U);
    if (objective.value(normalized) != optimum.value)
        throw NormalizationFailure("normalization changed the objective value");

    const JobClassifier classes(eps, plan.U);
    const std::size_t n = jobs.size();
    plan.job_type.resize(n);
    for (std::size_t j = 0; j < n; ++j) plan.job_type[j] = classes.classify(jobs[j]);

    // Machines by the arrival of their first non-small job, the rest by index.
    std::vector<std::size_t> first(machines, SIZE_MAX);
    for (std::size_t i = 0; i < machines; ++i)
        for (auto j : normalized.jobs_on(i))
            if (plan.job_type[j] != small_type) first[i] = std::min(first[i], j);
    plan.order.resize(machines);
    std::iota(plan.order.begin(), plan.order.end(), 0);
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](std::size_t a, std::size_t b) { return first[a] < first[b]; });
    plan.s_star = normalized.reordered(plan.order, jobs.entries());

    for (std::size_t k = 0; k < machines; ++k) {
        std::vector<unsigned> types;
        bool huge = false;
        for (auto j : plan.s_star.jobs_on(k)) {
            if (plan.job_type[j] == classes.huge_type())
                huge = true;
            else if (plan.job_type[j] != small_type)
                types.push_back(static_cast<unsigned>(plan.job_type[j]));
        }
        if (huge)
            plan.patterns.push_back(MachinePattern::huge_only());
        else if (types.empty())
            plan.patterns.push_back(MachinePattern::small_only());
        else
            plan.patterns.push_back(MachinePattern::of_jobs(std::move(types)));
        if (plan.patterns.back().types.size() > plan.max_jobs)
            throw InternalBoundViolation("machine pattern longer than v");
    }

    std::vector<Rational> small_sizes;
    for (std::size_t j = 0; j < n; ++j)
        if (plan.job_type[j] == small_type) {
            plan.small_jobs.push_back(j);
            small_sizes.push_back(jobs[j]);
        }
    plan.small_target.assign(machines, Rational(0));
    for (std::size_t k = 0; k < machines; ++k)
        for (auto j : plan.s_star.jobs_on(k))
            if (plan.job_type[j] == small_type) plan.small_target[k] += jobs[j];
    plan.quotas = small_quota_assignment(small_sizes, plan.small_target);

    // S: patterns in order, non-small jobs to the first machine with a free slot.
    plan.target = Schedule(machines);
    std::vector<std::map<int, std::size_t>> fill(machines);
    std::vector<Rational> small_load(machines, Rational(0));
    std::size_t small_seen = 0;
    std::size_t machine = 0;
    std::vector<std::size_t> small_machine(n, SIZE_MAX);
    for (std::size_t k = 0; k < machines; ++k)
        for (; small_seen < plan.quotas.ends[k]; ++small_seen) small_machine[plan.small_jobs[small_seen]] = k;
    for (std::size_t j = 0; j < n; ++j) {
        const int t = plan.job_type[j];
        if (t == small_type) continue;
        machine = SIZE_MAX;
        for (std::size_t k = 0; k < machines && machine == SIZE_MAX; ++k)
            if (fill[k][t] < plan.patterns[k].slots(t, classes.huge_type())) machine = k;
        if (machine == SIZE_MAX) throw InternalBoundViolation("no machine pattern has room for a job");
        ++fill[machine][t];
        plan.target.assign(j, jobs[j], machine);
    }
    for (auto j : plan.small_jobs) {
        plan.target.assign(j, jobs[j], small_machine[j]);
        small_load[small_machine[j]] += jobs[j];
    }

    const Rational slack = eps.value() * plan.U;
    for (std::size_t k = 0; k < machines; ++k) {
        if (small_load[k] < plan.small_target[k] - slack || small_load[k] > plan.small_target[k] + slack)
            throw InternalBoundViolation("small-job quota misses its target by more than eps U");
        if (!within_window(plan.target.load(k), plan.s_star.load(k), eps, plan.U))
            throw InternalBoundViolation("replayed load leaves its window on machine " + std::to_string(k + 1));
    }

    plan.permutation.resize(machines);
    std::size_t low = 0;
    std::size_t high = machines;
    for (std::size_t k = 0; k < machines; ++k)
        plan.permutation[k] = plan.quotas.kappa[k] > 0 ? --high : low++;
    return plan;
}

SchedulePlan build_plan(const RequestSequence& jobs, std::size_t machines, Epsilon eps, Objective objective,
                        std::uint64_t node_limit) {
    require_scheduling_range(eps);
    const OptimalSchedule optimum = solve_optimal_schedule(jobs, machines, objective, node_limit);
    return build_plan_from_optimum(jobs, machines, eps, objective, optimum);
}

std::vector<bool> small_move_bits(const SchedulePlan& plan) {
    return pointer_move_bits(plan.quotas.kappa, plan.small_jobs.size());
}

nlohmann::json plan_to_json(const SchedulePlan& plan) {
    using nlohmann::json;
    json machines = json::array();
    for (std::size_t k = 0; k < plan.machines; ++k) {
        json jobs = json::array();
        for (auto j : plan.s_star.jobs_on(k)) jobs.push_back(j + 1);
        machines.push_back(json{{"pattern", plan.patterns[k].to_string()},
                                {"kappa", plan.quotas.kappa[k]},
                                {"online_machine", plan.permutation[k] + 1},
                                {"optimal_jobs", jobs},
                                {"optimal_load", format_rational(plan.s_star.load(k))},
                                {"replayed_load", format_rational(plan.target.load(k))}});
    }
    return json{{"objective", plan.objective.to_string()},
                {"epsilon", plan.eps.to_string()},
                {"U", format_rational(plan.U)},
                {"T", plan.types},
                {"v", plan.max_jobs},
                {"opt_value", format_rational(plan.opt_value)},
                {"machines", machines}};
}

}  // namespace advlab::sched
