#include "advlab/core/quota.hpp"

#include <set>

namespace advlab {

std::vector<bool> pointer_move_bits(std::span<const std::size_t> kappa, std::size_t requests) {
    std::set<std::size_t> boundaries;
    std::size_t running = 0;
    for (auto k : kappa) {
        if (k == 0) continue;
        running += k;
        boundaries.insert(running);
    }
    std::vector<bool> bits(requests);
    for (std::size_t s = 0; s < requests; ++s) bits[s] = boundaries.count(s) != 0;
    return bits;
}

bool pointer_move_bit(std::span<const std::size_t> kappa, std::size_t request) {
    std::size_t running = 0;
    for (auto k : kappa) {
        running += k;
        if (k > 0 && running == request) return true;
    }
    return false;
}

}  // namespace advlab
