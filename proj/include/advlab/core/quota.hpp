#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace advlab {

// A pointer walks through the containers that receive small requests, and
// container k takes the next kappa[k] of them. Bit s (0-based) is 1 iff the
// pointer must advance before request s is placed: s equals the running sum
// of the positive quotas seen so far. Zero quotas never advance it.
std::vector<bool> pointer_move_bits(std::span<const std::size_t> kappa, std::size_t requests);
bool pointer_move_bit(std::span<const std::size_t> kappa, std::size_t request);

}  // namespace advlab
