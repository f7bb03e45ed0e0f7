#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "advlab/core/packing.hpp"
#include "advlab/core/request_sequence.hpp"

namespace advlab::bp {

inline constexpr std::uint64_t default_node_limit = 5'000'000;

struct OptimalPacking {
    std::size_t bins = 0;  // N
    Packing packing;       // bins numbered by the arrival of their first item
    std::uint64_t nodes = 0;
};

// Exact minimum bin count by branch and bound (Martello-Toth L2 lower bound,
// first/best fit decreasing upper bound, equal-residual dominance). Throws
// ResourceExceeded once node_limit search nodes have been expanded.
OptimalPacking solve_optimal_packing(std::span<const IndexedSize> items, std::uint64_t node_limit = default_node_limit);
OptimalPacking solve_optimal_packing(const RequestSequence& items, std::uint64_t node_limit = default_node_limit);

}  // namespace advlab::bp
