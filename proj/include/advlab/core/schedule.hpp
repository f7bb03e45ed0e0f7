#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "advlab/core/rational.hpp"

namespace advlab {

// Assignment of jobs to m identical machines.
class Schedule {
public:
    Schedule() = default;
    explicit Schedule(std::size_t machines);

    std::size_t machine_count() const { return machines_.size(); }
    const std::vector<std::vector<std::size_t>>& machines() const { return machines_; }
    const std::vector<std::size_t>& jobs_on(std::size_t machine) const { return machines_[machine]; }
    const std::vector<Rational>& loads() const { return loads_; }
    const Rational& load(std::size_t machine) const { return loads_[machine]; }
    std::size_t job_count() const;

    void assign(std::size_t job, const Rational& size, std::size_t machine);

    // Machine i of the result is machine order[i] of this schedule.
    Schedule reordered(std::span<const std::size_t> order, std::span<const Rational> sizes) const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::vector<std::vector<std::size_t>> machines_;
    std::vector<Rational> loads_;
};

// Builds a schedule from a job -> machine map.
Schedule schedule_from_assignment(std::span<const std::size_t> machine_of, std::span<const Rational> sizes,
                                  std::size_t machines);

std::vector<Rational> load_vector(const Schedule& schedule);

// Sum of L_i^p. Norm comparisons stay exact since a <= b iff a^p <= b^p.
Rational lp_power_sum(std::span<const Rational> loads, unsigned p);
Rational lp_power_sum(const Schedule& schedule, unsigned p);

Rational makespan(const Schedule& schedule);
Rational machine_cover(const Schedule& schedule);

}  // namespace advlab
