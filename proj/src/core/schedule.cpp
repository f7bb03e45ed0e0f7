#include "advlab/core/schedule.hpp"

#include <algorithm>

#include "advlab/core/errors.hpp"

namespace advlab {

Schedule::Schedule(std::size_t machines) : machines_(machines), loads_(machines, Rational(0)) {
    if (machines == 0) throw InvalidInput("a schedule needs at least one machine");
}

std::size_t Schedule::job_count() const {
    std::size_t n = 0;
    for (const auto& jobs : machines_) n += jobs.size();
    return n;
}

void Schedule::assign(std::size_t job, const Rational& size, std::size_t machine) {
    if (machine >= machines_.size())
        throw InvalidInput("machine " + std::to_string(machine + 1) + " does not exist");
    machines_[machine].push_back(job);
    loads_[machine] += size;
}

Schedule Schedule::reordered(std::span<const std::size_t> order, std::span<const Rational> sizes) const {
    if (order.size() != machines_.size()) throw InvalidInput("machine order has the wrong length");
    Schedule out(machines_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t job : machines_.at(order[i])) out.assign(job, sizes[job], i);
    return out;
}

Schedule schedule_from_assignment(std::span<const std::size_t> machine_of, std::span<const Rational> sizes,
                                  std::size_t machines) {
    Schedule s(machines);
    for (std::size_t j = 0; j < machine_of.size(); ++j) s.assign(j, sizes[j], machine_of[j]);
    return s;
}

std::vector<Rational> load_vector(const Schedule& schedule) {
    return schedule.loads();
}

Rational lp_power_sum(std::span<const Rational> loads, unsigned p) {
    if (p < 2) throw InvalidInput("lp power sums need an integer p >= 2");
    Rational sum = 0;
    for (const auto& l : loads) sum += power(l, p);
    return sum;
}

Rational lp_power_sum(const Schedule& schedule, unsigned p) {
    return lp_power_sum(schedule.loads(), p);
}

Rational makespan(const Schedule& schedule) {
    return *std::max_element(schedule.loads().begin(), schedule.loads().end());
}

Rational machine_cover(const Schedule& schedule) {
    return *std::min_element(schedule.loads().begin(), schedule.loads().end());
}

}  // namespace advlab
