#pragma once

#include <cstddef>
#include <cstdint>

#include "advlab/core/request_sequence.hpp"

namespace advlab::harness {

// Sizes k/grid, 1 <= k <= grid: a third drawn from the bottom quarter of the
// grid, the rest from above it. Reproducible across platforms for a seed.
RequestSequence generate_bin_instance(std::uint64_t seed, std::size_t n, unsigned grid = 64);

// Processing times k/grid from a two-mode mixture: short jobs with
// k in [1, grid] and long ones with k in [2 grid, 8 grid].
RequestSequence generate_job_instance(std::uint64_t seed, std::size_t n, unsigned grid = 4);

}  // namespace advlab::harness
