#include "advlab/harness/generator.hpp"

#include <random>

#include "advlab/core/errors.hpp"

namespace advlab::harness {

namespace {

// Modulo mapping keeps draws identical across standard libraries.
unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

}  // namespace

RequestSequence generate_bin_instance(std::uint64_t seed, std::size_t n, unsigned grid) {
    if (grid < 4) throw InvalidInput("bin grid must be at least 4");
    std::mt19937_64 rng(seed);
    std::vector<Rational> sizes;
    for (std::size_t i = 0; i < n; ++i) {
        const bool small = rng() % 3 == 0;
        const unsigned k = small ? draw(rng, 1, grid / 4) : draw(rng, grid / 4 + 1, grid);
        sizes.emplace_back(k, grid);
    }
    return RequestSequence(RequestKind::bin_items, std::move(sizes));
}

RequestSequence generate_job_instance(std::uint64_t seed, std::size_t n, unsigned grid) {
    if (grid == 0) throw InvalidInput("job grid must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Rational> sizes;
    for (std::size_t i = 0; i < n; ++i) {
        const bool small = rng() % 2 == 0;
        const unsigned k = small ? draw(rng, 1, grid) : draw(rng, 2 * grid, 8 * grid);
        sizes.emplace_back(k, grid);
    }
    return RequestSequence(RequestKind::jobs, std::move(sizes));
}

}  // namespace advlab::harness
