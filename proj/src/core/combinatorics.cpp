#include "advlab/core/combinatorics.hpp"

#include "advlab/core/errors.hpp"

namespace advlab {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.backend().data(), n, k);
    return result;
}

MultisetIndexing::MultisetIndexing(std::size_t alphabet, std::size_t max_size)
    : alphabet_(alphabet), max_size_(max_size), count_(binomial(alphabet + max_size, max_size)) {
    if (alphabet == 0) throw InvalidInput("multiset alphabet must be nonempty");
}

BigInt MultisetIndexing::completions(std::size_t lowest, std::size_t slots) const {
    return binomial(alphabet_ - lowest + slots, slots);
}

BigInt MultisetIndexing::rank(std::span<const std::size_t> sorted_symbols) const {
    if (sorted_symbols.size() > max_size_) throw InvalidInput("multiset larger than the pattern length");
    BigInt r = 0;
    std::size_t lowest = 0;
    for (std::size_t pos = 0; pos < sorted_symbols.size(); ++pos) {
        const std::size_t x = sorted_symbols[pos];
        if (x >= alphabet_) throw InvalidInput("multiset symbol out of range");
        if (x < lowest) throw InvalidInput("multiset symbols must be nondecreasing");
        const std::size_t slots = max_size_ - pos - 1;
        r += 1;  // the blank at this position sorts first
        for (std::size_t y = lowest; y < x; ++y) r += completions(y, slots);
        lowest = x;
    }
    return r;
}

std::vector<std::size_t> MultisetIndexing::unrank(BigInt r) const {
    if (r < 0 || r >= count_) throw MalformedAdvice("pattern index " + r.str() + " out of range");
    std::vector<std::size_t> symbols;
    std::size_t lowest = 0;
    for (std::size_t pos = 0; pos < max_size_ && r != 0; ++pos) {
        r -= 1;
        const std::size_t slots = max_size_ - pos - 1;
        std::size_t y = lowest;
        for (;; ++y) {
            const BigInt c = completions(y, slots);
            if (r < c) break;
            r -= c;
        }
        symbols.push_back(y);
        lowest = y;
    }
    return symbols;
}

}  // namespace advlab
