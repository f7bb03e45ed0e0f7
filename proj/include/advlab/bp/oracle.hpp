#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "advlab/bp/exact_solver.hpp"
#include "advlab/core/epsilon.hpp"
#include "advlab/core/packing.hpp"
#include "advlab/core/request_sequence.hpp"

namespace advlab::bp {

// Item types: 0 marks a small item, 1..groups a large one.
struct ItemClassification {
    std::vector<std::size_t> large_indices;  // nonincreasing size, ties by arrival
    std::vector<unsigned> type_of;           // per request
    std::vector<Rational> rounded_size;      // per request; small items keep their size
    std::size_t large_count = 0;             // L
    std::size_t group_size = 0;              // h = ceil(eps^2 L)
    std::size_t group_count = 0;             // groups available (1/eps^2)

    bool is_large(std::size_t i) const { return type_of[i] != 0; }
};

// Items strictly above `threshold` are large; they are cut into consecutive
// runs of ceil(L / groups) by rank and rounded up to the run's largest size.
ItemClassification group_large_items(std::span<const Rational> sizes, const Rational& threshold, std::size_t groups);

ItemClassification classify_and_round(const RequestSequence& items, Epsilon eps);

// Sorted type list; empty for small-only bins, {1} for a type-1 bin.
using BinPattern = std::vector<unsigned>;

struct OraclePlan {
    Epsilon eps = Epsilon::from_inverse(2);
    std::size_t optimal_bins = 0;  // N
    Packing optimal;
    bool case2 = false;  // N <= 1/eps

    ItemClassification classification;
    Packing target;                    // S, in opening order
    std::vector<BinPattern> patterns;  // per bin of S
    std::vector<std::size_t> kappa;    // small items per bin of S
    std::vector<std::size_t> bin_of;   // request -> bin of S
    std::vector<bool> large_with_small;
    std::vector<std::size_t> b2_bins;  // bins of S built from B2, in opening order
    std::size_t b1_count = 0;
    std::size_t prefix_bins = 0;  // |S'| = |B1| + |B2|

    std::size_t small_count() const;
};

// Builds S from a known optimum. B2 is an exact optimal packing of the rounded
// type >= 2 items. Throws InternalBoundViolation if a proved size bound fails.
OraclePlan build_target_packing(const RequestSequence& items, Epsilon eps, const OptimalPacking& optimum,
                                std::uint64_t node_limit = default_node_limit);

// Solves for the optimum first.
OraclePlan build_plan(const RequestSequence& items, Epsilon eps, std::uint64_t node_limit = default_node_limit);

// Pointer-move bit for each small item in arrival order: 1 iff the number of
// earlier small items equals a prefix sum of the positive quotas.
std::vector<bool> small_move_bits(std::span<const std::size_t> kappa, std::size_t small_items);
std::vector<bool> small_quota_bits(const OraclePlan& plan);

nlohmann::json plan_to_json(const OraclePlan& plan);

}  // namespace advlab::bp
