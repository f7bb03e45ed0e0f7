#include "advlab/sched/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "advlab/core/errors.hpp"

namespace advlab::sched {

namespace {

using i128 = __int128;

constexpr std::int64_t scale_limit = std::int64_t(1) << 40;

i128 ipow(i128 base, unsigned p) {
    i128 r = 1;
    for (unsigned k = 0; k < p; ++k) r *= base;
    return r;
}

class Search {
public:
    Search(std::vector<std::int64_t> sizes, std::size_t m, Objective objective, std::uint64_t limit)
        : sizes_(std::move(sizes)), m_(m), obj_(objective), limit_(limit), loads_(m, 0), assign_(sizes_.size()) {
        suffix_.assign(sizes_.size() + 1, 0);
        for (std::size_t j = sizes_.size(); j-- > 0;) suffix_[j] = suffix_[j + 1] + sizes_[j];
        total_ = suffix_[0];
    }

    void run() {
        incumbent_lpt();
        if (!optimal_by_bound()) dfs(0);
    }

    const std::vector<std::size_t>& best_assignment() const { return best_assign_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Scaled objective of a full load vector; lp uses the exact power sum.
    i128 score(const std::vector<std::int64_t>& loads) const {
        switch (obj_.kind) {
        case ObjectiveKind::makespan: return *std::max_element(loads.begin(), loads.end());
        case ObjectiveKind::cover: return *std::min_element(loads.begin(), loads.end());
        case ObjectiveKind::lp: {
            i128 s = 0;
            for (auto l : loads) s += ipow(l, obj_.p);
            return s;
        }
        }
        return 0;
    }

    bool improves(i128 candidate) const {
        if (best_assign_.empty()) return true;
        return obj_.minimizing() ? candidate < best_ : candidate > best_;
    }

    void incumbent_lpt() {
        std::vector<std::int64_t> loads(m_, 0);
        std::vector<std::size_t> assign(sizes_.size());
        for (std::size_t j = 0; j < sizes_.size(); ++j) {
            const auto it = std::min_element(loads.begin(), loads.end());
            assign[j] = static_cast<std::size_t>(it - loads.begin());
            *it += sizes_[j];
        }
        best_ = score(loads);
        best_assign_ = assign;
    }

    // Global bounds: average load, largest job.
    bool optimal_by_bound() const {
        const std::int64_t m = static_cast<std::int64_t>(m_);
        switch (obj_.kind) {
        case ObjectiveKind::makespan: {
            const std::int64_t lb = std::max<std::int64_t>((total_ + m - 1) / m, sizes_.empty() ? 0 : sizes_[0]);
            return best_ == lb;
        }
        case ObjectiveKind::cover: return best_ == total_ / m;
        case ObjectiveKind::lp: {
            if (total_ % m != 0) return false;
            return best_ == i128(m) * ipow(total_ / m, obj_.p);
        }
        }
        return false;
    }

    // Lowest water level reachable by pouring `rest` onto the current loads.
    long double water_level(std::int64_t rest, std::vector<std::int64_t>& sorted) const {
        sorted = loads_;
        std::sort(sorted.begin(), sorted.end());
        long double remaining = static_cast<long double>(rest);
        std::size_t k = 1;
        long double level = static_cast<long double>(sorted[0]);
        while (true) {
            const long double next = k < sorted.size() ? static_cast<long double>(sorted[k]) : INFINITY;
            const long double need = (next - level) * static_cast<long double>(k);
            if (k == sorted.size() || need >= remaining) return level + remaining / static_cast<long double>(k);
            remaining -= need;
            level = next;
            ++k;
        }
    }

    bool prune(std::size_t j) const {
        const std::int64_t rest = suffix_[j];
        switch (obj_.kind) {
        case ObjectiveKind::makespan: return false;  // handled at placement
        case ObjectiveKind::cover: {
            // Even with splittable remaining work the minimum stays at or below the water level.
            std::vector<std::int64_t> sorted;
            const long double level = water_level(rest, sorted);
            return std::floor(level + 1e-9L) <= static_cast<long double>(best_);
        }
        case ObjectiveKind::lp: {
            std::vector<std::int64_t> sorted;
            const long double level = water_level(rest, sorted);
            long double lb = 0;
            for (auto l : sorted) {
                const long double x = std::max(static_cast<long double>(l), level);
                lb += std::pow(x, static_cast<long double>(obj_.p));
            }
            return lb * (1 - 1e-12L) >= static_cast<long double>(best_);
        }
        }
        return false;
    }

    void dfs(std::size_t j) {
        if (++nodes_ > limit_) throw ResourceExceeded("exact scheduling search exceeded its node limit");
        if (done_) return;
        if (j == sizes_.size()) {
            const i128 s = score(loads_);
            if (improves(s)) {
                best_ = s;
                best_assign_ = assign_;
                done_ = optimal_by_bound();
            }
            return;
        }
        if (prune(j)) return;
        const std::int64_t size = sizes_[j];
        for (std::size_t i = 0; i < m_ && !done_; ++i) {
            bool seen = false;
            for (std::size_t k = 0; k < i && !seen; ++k) seen = loads_[k] == loads_[i];
            if (seen) continue;
            if (obj_.kind == ObjectiveKind::makespan && loads_[i] + size >= best_) continue;
            loads_[i] += size;
            assign_[j] = i;
            dfs(j + 1);
            loads_[i] -= size;
        }
    }

    std::vector<std::int64_t> sizes_;
    std::size_t m_;
    Objective obj_;
    std::uint64_t limit_;
    std::vector<std::int64_t> loads_;
    std::vector<std::size_t> assign_;
    std::vector<std::int64_t> suffix_;
    std::int64_t total_ = 0;
    i128 best_ = 0;
    std::vector<std::size_t> best_assign_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
};

}  // namespace

OptimalSchedule solve_optimal_schedule(std::span<const Rational> jobs, std::size_t machines, Objective objective,
                                       std::uint64_t node_limit) {
    if (machines == 0) throw InvalidInput("at least one machine is required");
    for (const auto& v : jobs)
        if (v <= 0) throw InvalidInput("processing times must be positive");
    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a] > jobs[b]; });
    std::vector<Rational> sorted;
    for (auto j : order) sorted.push_back(jobs[j]);

    OptimalSchedule out;
    out.schedule = Schedule(machines);
    if (jobs.empty()) {
        out.value = objective.value(out.schedule);
        return out;
    }
    const ScaledIntegers scaled = scale_to_common_denominator(sorted, scale_limit);
    const i128 total = std::accumulate(scaled.values.begin(), scaled.values.end(), i128(0));
    if (total > scale_limit) throw ResourceExceeded("total processing time too large to scale exactly");
    if (objective.kind == ObjectiveKind::lp) {
        // Power sums must fit comfortably in 127 bits.
        long double bits = static_cast<long double>(objective.p) * std::log2(static_cast<long double>(total)) +
                           std::log2(static_cast<long double>(machines));
        if (bits > 120) throw ResourceExceeded("power sums would overflow the exact search");
    }

    Search search(scaled.values, machines, objective, node_limit);
    search.run();
    const auto& assign = search.best_assignment();
    std::vector<std::size_t> machine_of(jobs.size());
    for (std::size_t k = 0; k < order.size(); ++k) machine_of[order[k]] = assign[k];
    out.schedule = schedule_from_assignment(machine_of, jobs, machines);
    out.value = objective.value(out.schedule);
    out.nodes = search.nodes();
    return out;
}

OptimalSchedule solve_optimal_schedule(const RequestSequence& jobs, std::size_t machines, Objective objective,
                                       std::uint64_t node_limit) {
    if (jobs.kind() != RequestKind::jobs) throw InvalidInput("scheduling needs a job instance");
    return solve_optimal_schedule(jobs.entries(), machines, objective, node_limit);
}

}  // namespace advlab::sched
