#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "advlab/core/rational.hpp"

namespace advlab {

BigInt binomial(std::size_t n, std::size_t k);

// Ranks multisets of at most `max_size` symbols from {0, ..., alphabet-1}.
// A multiset is a nondecreasing vector padded with a blank that sorts before
// every symbol; ranks follow lexicographic order of the padded vectors, so the
// empty multiset has rank 0. count() == C(alphabet + max_size, max_size).
class MultisetIndexing {
public:
    MultisetIndexing(std::size_t alphabet, std::size_t max_size);

    std::size_t alphabet() const { return alphabet_; }
    std::size_t max_size() const { return max_size_; }
    const BigInt& count() const { return count_; }

    // Throws InvalidInput for unsorted input, out-of-range symbols or size > max_size.
    BigInt rank(std::span<const std::size_t> sorted_symbols) const;
    // Throws MalformedAdvice if rank >= count().
    std::vector<std::size_t> unrank(BigInt rank) const;

private:
    // Multisets of size <= slots over {lowest, ..., alphabet-1}.
    BigInt completions(std::size_t lowest, std::size_t slots) const;

    std::size_t alphabet_;
    std::size_t max_size_;
    BigInt count_;
};

}  // namespace advlab
