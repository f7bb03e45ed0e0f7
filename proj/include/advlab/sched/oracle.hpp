#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "advlab/core/epsilon.hpp"
#include "advlab/core/request_sequence.hpp"
#include "advlab/core/schedule.hpp"
#include "advlab/sched/exact_solver.hpp"
#include "advlab/sched/objective.hpp"

namespace advlab::sched {

inline constexpr int small_type = -1;

// Smallest T with (1+eps)^T >= 1/eps.
unsigned type_count(Epsilon eps);

// Geometric job classes relative to U: -1 small (v <= eps U), i in [0, T) for
// v in (eps (1+eps)^i U, eps (1+eps)^(i+1) U] (the last class stops at U), T huge.
class JobClassifier {
public:
    JobClassifier(Epsilon eps, Rational U);

    unsigned types() const { return types_; }
    int huge_type() const { return static_cast<int>(types_); }
    const Rational& U() const { return U_; }
    int classify(const Rational& v) const;

private:
    Epsilon eps_;
    Rational U_;
    unsigned types_;
    std::vector<Rational> upper_;  // upper_[i] = eps (1+eps)^(i+1) U
};

struct MachinePattern {
    enum class Kind { small_only, huge_only, jobs };
    Kind kind = Kind::small_only;
    std::vector<unsigned> types;  // sorted, jobs kind only

    static MachinePattern small_only() { return {}; }
    static MachinePattern huge_only() { return {Kind::huge_only, {}}; }
    static MachinePattern of_jobs(std::vector<unsigned> types);

    // Slots for a job type; huge jobs use huge_type.
    std::size_t slots(int type, int huge_type) const;
    std::string to_string() const;

    friend bool operator==(const MachinePattern&, const MachinePattern&) = default;
};

// Next-fit split of the small jobs: ends[k] is the number of small
// jobs given to machines 0..k, the least count whose prefix volume reaches
// y_0 + ... + y_k.
struct SmallQuotas {
    std::vector<std::size_t> ends;
    std::vector<std::size_t> kappa;
};

SmallQuotas small_quota_assignment(std::span<const Rational> small_sizes, std::span<const Rational> targets);

Rational choose_U(const RequestSequence& jobs, std::size_t machines, Objective objective, const Rational& opt_value);

// Rewrites an optimal schedule so every huge job sits alone and no machine has
// more than v non-small jobs. Only cover schedules are changed; the others are
// checked. Throws NormalizationFailure when the input cannot be optimal.
Schedule normalize(const Schedule& schedule, const RequestSequence& jobs, Objective objective, Epsilon eps,
                   const Rational& U);

struct SchedulePlan {
    Objective objective;
    Epsilon eps = Epsilon::from_inverse(3);
    std::size_t machines = 0;
    Rational U;
    unsigned types = 0;    // T
    unsigned max_jobs = 0; // v
    Rational opt_value;

    Schedule optimum;     // as solved
    Schedule s_star;      // normalized and renumbered by first non-small arrival
    std::vector<std::size_t> order;  // s_star machine k was machine order[k] of the normalized optimum
    std::vector<int> job_type;
    std::vector<MachinePattern> patterns;
    std::vector<std::size_t> small_jobs;  // request indices, arrival order
    std::vector<Rational> small_target;   // y_k
    SmallQuotas quotas;
    Schedule target;                      // S, same numbering as s_star
    std::vector<std::size_t> permutation; // s_star machine -> online machine

    const std::vector<std::size_t>& kappa() const { return quotas.kappa; }
};

// Load window for machine k of S*: [(1-eps) L - eps U, (1+eps) L + eps U].
bool within_window(const Rational& load, const Rational& optimal_load, Epsilon eps, const Rational& U);

SchedulePlan build_plan_from_optimum(const RequestSequence& jobs, std::size_t machines, Epsilon eps,
                                     Objective objective, const OptimalSchedule& optimum);
// Throws DegenerateInstance for cover instances whose optimum is 0.
SchedulePlan build_plan(const RequestSequence& jobs, std::size_t machines, Epsilon eps, Objective objective,
                        std::uint64_t node_limit = default_node_limit);

std::vector<bool> small_move_bits(const SchedulePlan& plan);

nlohmann::json plan_to_json(const SchedulePlan& plan);

}  // namespace advlab::sched
