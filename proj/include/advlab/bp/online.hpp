#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "advlab/bp/advice.hpp"
#include "advlab/core/packing.hpp"

namespace advlab::bp {

// The online side of the bin packing scheme. Bins are kept in two lists:
// L1 for bins that will also hold small items, L2 for the rest.
class BpaOnline {
public:
    explicit BpaOnline(Epsilon eps);

    // Places request `index` using a decoded frame. Any pattern rank carried
    // by the frame is queued first.
    void step(std::size_t index, const Rational& size, const BitString& frame);
    void step(std::size_t index, const Rational& size, const BpaAdvice& advice);

    // Semi-online use: patterns known up front.
    void preload_patterns(std::span<const BigInt> ranks);

    const Packing& packing() const { return packing_; }
    std::size_t l1_size() const { return l1_.size(); }
    std::size_t l2_size() const { return l2_.size(); }

private:
    struct BinState {
        BinPattern pattern;
        std::map<unsigned, std::size_t> fill;
        bool has_pattern = false;
    };

    void place_small(std::size_t index, const Rational& size, bool move);
    void place_large(std::size_t index, const Rational& size, unsigned type, bool with_small);
    void place_case2(std::size_t index, const Rational& size, std::size_t bin_index);
    std::size_t open(std::vector<std::size_t>& list);
    bool has_room(std::size_t bin, unsigned type) const;
    BinPattern next_pattern();

    Epsilon eps_;
    BpaAdviceLayout layout_;
    BinPatternIndexing indexing_;
    Packing packing_;
    std::vector<BinState> state_;
    std::vector<std::size_t> l1_;
    std::vector<std::size_t> l2_;
    std::size_t pointer_ = 0;
    std::deque<BigInt> queue_;
    std::map<std::size_t, std::size_t> case2_bins_;
    std::optional<bool> case2_;
};

Packing run_online(const RequestSequence& items, std::span<const BitString> frames, Epsilon eps);
Packing run_semionline(const RequestSequence& items, const BitString& tape, Epsilon eps);

}  // namespace advlab::bp
