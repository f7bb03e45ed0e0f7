#pragma once

// Independent reference computations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "advlab/core/rational.hpp"

namespace testing {

using advlab::Rational;

inline Rational q(long a, long b = 1) {
    return Rational(a, b);
}

inline std::vector<Rational> fractions(std::initializer_list<std::pair<long, long>> list) {
    std::vector<Rational> out;
    for (auto [a, b] : list) out.emplace_back(a, b);
    return out;
}

// Minimum bins by enumerating set partitions (restricted growth strings).
inline std::size_t brute_force_bins(const std::vector<Rational>& sizes) {
    const std::size_t n = sizes.size();
    if (n == 0) return 0;
    std::size_t best = n;
    std::vector<Rational> load;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (load.size() >= best) return;
        if (i == n) {
            best = load.size();
            return;
        }
        for (std::size_t b = 0; b < load.size(); ++b) {
            if (load[b] + sizes[i] > 1) continue;
            load[b] += sizes[i];
            go(i + 1);
            load[b] -= sizes[i];
        }
        load.push_back(sizes[i]);
        go(i + 1);
        load.pop_back();
    };
    go(0);
    return best;
}

// Every assignment of n jobs to m machines; f receives the load vector.
inline void for_each_assignment(const std::vector<Rational>& jobs, std::size_t m,
                                const std::function<void(const std::vector<Rational>&)>& f) {
    std::vector<Rational> loads(m, Rational(0));
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == jobs.size()) {
            f(loads);
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            loads[i] += jobs[j];
            go(j + 1);
            loads[i] -= jobs[j];
        }
    };
    go(0);
}

inline std::vector<Rational> random_grid(std::mt19937_64& rng, std::size_t n, unsigned lo, unsigned hi, unsigned grid) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(lo + rng() % (hi - lo + 1), grid);
    return out;
}

}  // namespace testing
