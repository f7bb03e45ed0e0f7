#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "advlab/core/request_sequence.hpp"
#include "advlab/core/schedule.hpp"
#include "advlab/sched/objective.hpp"

namespace advlab::sched {

inline constexpr std::uint64_t default_node_limit = 20'000'000;

struct OptimalSchedule {
    Rational value;  // objective value; the power sum for lp
    Schedule schedule;
    std::uint64_t nodes = 0;
};

// Exact optimum by depth-first branch and bound over assignments of the jobs
// in nonincreasing order. Machines with equal current load are interchangeable
// so only the first of them is tried. Throws ResourceExceeded past node_limit.
OptimalSchedule solve_optimal_schedule(std::span<const Rational> jobs, std::size_t machines, Objective objective,
                                       std::uint64_t node_limit = default_node_limit);
OptimalSchedule solve_optimal_schedule(const RequestSequence& jobs, std::size_t machines, Objective objective,
                                       std::uint64_t node_limit = default_node_limit);

}  // namespace advlab::sched
