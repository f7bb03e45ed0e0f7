#pragma once

#include <cstddef>
#include <vector>

#include "advlab/bp/oracle.hpp"
#include "advlab/core/bit_string.hpp"
#include "advlab/core/combinatorics.hpp"

namespace advlab::bp {

// All bin patterns: multisets of at most 1/eps types from {1..1/eps^2}.
// Rank 0 is the empty pattern.
class BinPatternIndexing {
public:
    explicit BinPatternIndexing(Epsilon eps);

    const BigInt& count() const { return index_.count(); }
    std::size_t width() const { return width_; }
    unsigned type_count() const { return types_; }

    BigInt rank(const BinPattern& pattern) const;
    BinPattern unrank(const BigInt& rank) const;

private:
    unsigned types_;
    MultisetIndexing index_;
    std::size_t width_;
};

// Frame layout w | x | y | z.
struct BpaAdviceLayout {
    Epsilon eps = Epsilon::from_inverse(2);
    std::size_t w_width = 1;
    std::size_t x_width = 0;  // ceil(log(1/eps^2 + 1))
    std::size_t y_width = 1;
    std::size_t z_width = 0;  // ceil(log(#bin patterns))
    std::size_t total_width = 0;
    std::size_t case2_index_width = 0;  // ceil(log(1/eps))

    std::size_t case2_width() const { return 1 + case2_index_width; }

    static BpaAdviceLayout for_epsilon(Epsilon eps);
};

struct BpaAdvice {
    bool case2 = false;
    // case 1
    unsigned type = 0;  // 0 small, 1..1/eps^2 large
    bool y = false;     // small: pointer move; large: packed with small items
    BigInt pattern_rank = 0;
    // case 2
    std::size_t bin_index = 0;

    friend bool operator==(const BpaAdvice&, const BpaAdvice&) = default;
};

// Advice for request i: the i-th B2 pattern (opening order) rides in z while
// any remain, otherwise z is all zeros. Case 2 frames carry the optimal bin.
BitString encode_request(const OraclePlan& plan, std::size_t i, const BpaAdviceLayout& layout,
                         const BinPatternIndexing& patterns);
std::vector<BitString> encode_stream(const OraclePlan& plan);

// Throws MalformedAdvice on a width mismatch or nonzero case-2 padding.
BpaAdvice decode_request(const BitString& frame, const BpaAdviceLayout& layout);

// One tape for the whole sequence:
//   w; case 2: per request ceil(log(1/eps)) bits of optimal bin index.
//   case 1: N (self-delimiting), then N records (pattern rank, small flag)
//   listing the B2 patterns in opening order followed by empty-pattern
//   padding, then per request a small/large bit followed by the move bit
//   (small) or ceil(log(1/eps^2)) bits of type - 1 and the y bit (large).
BitString encode_semionline_tape(const OraclePlan& plan, const RequestSequence& items, Epsilon eps);

struct BpaTapeHeader {
    bool case2 = false;
    std::size_t optimal_bins = 0;  // 0 in case 2
    std::vector<BigInt> pattern_ranks;
    std::vector<bool> small_flags;
};

// Reads the tape front to back as the requests arrive.
class BpaTapeReader {
public:
    BpaTapeReader(const BitString& tape, Epsilon eps);

    const BpaTapeHeader& header() const { return header_; }
    // Advice record for the next request. pattern_rank is left at 0; the
    // patterns come from the header.
    BpaAdvice next();
    std::size_t position() const { return reader_.position(); }
    std::size_t remaining() const { return reader_.remaining(); }

private:
    BitReader reader_;
    BpaAdviceLayout layout_;
    std::size_t type_width_;
    BpaTapeHeader header_;
};

}  // namespace advlab::bp
