#pragma once

#include <cstddef>
#include <vector>

#include "advlab/core/bit_string.hpp"
#include "advlab/core/combinatorics.hpp"
#include "advlab/sched/oracle.hpp"

namespace advlab::sched {

// Rank 0 small-only, rank 1 huge-only, then 2 + the multiset rank of the
// sorted type vector (at most v entries over T types).
class MachinePatternIndexing {
public:
    MachinePatternIndexing(Epsilon eps, unsigned max_jobs);

    unsigned types() const { return types_; }
    unsigned max_jobs() const { return max_jobs_; }
    const BigInt& count() const { return count_; }
    std::size_t width() const { return width_; }  // beta

    BigInt rank(const MachinePattern& pattern) const;
    MachinePattern unrank(const BigInt& rank) const;

private:
    unsigned types_;
    unsigned max_jobs_;
    MultisetIndexing jobs_;
    BigInt count_;
    std::size_t width_;
};

// Type codes in w: 0..T-1 large, T huge, T+1 small.
struct SchedAdviceLayout {
    Epsilon eps = Epsilon::from_inverse(3);
    unsigned types = 0;
    std::size_t w_width = 0;  // ceil(log(T + 2))
    std::size_t x_width = 1;
    std::size_t y_width = 1;
    std::size_t z_width = 0;  // beta
    std::size_t total_width = 0;

    unsigned small_code() const { return types + 1; }

    static SchedAdviceLayout for_plan(Epsilon eps, Objective objective);
};

struct SchedAdvice {
    int type = 0;  // -1 small, T huge
    bool move = false;
    bool y = false;  // 1: machine without small jobs
    BigInt pattern_rank = 0;

    friend bool operator==(const SchedAdvice&, const SchedAdvice&) = default;
};

unsigned type_code(int type, unsigned types);

BitString encode_request(const SchedulePlan& plan, std::size_t i, const SchedAdviceLayout& layout,
                         const MachinePatternIndexing& patterns);
std::vector<BitString> encode_stream(const SchedulePlan& plan);

// Throws MalformedAdvice on a width mismatch or an unused type code.
SchedAdvice decode_request(const BitString& frame, const SchedAdviceLayout& layout);

// m patterns (beta bits each) in online machine order, then per request the
// type code and, for small jobs only, the pointer-move bit.
BitString encode_semionline_tape(const SchedulePlan& plan);

class SchedTapeReader {
public:
    SchedTapeReader(const BitString& tape, Epsilon eps, Objective objective, std::size_t machines);

    const std::vector<MachinePattern>& patterns() const { return patterns_; }
    SchedAdvice next();
    std::size_t remaining() const { return reader_.remaining(); }

private:
    BitReader reader_;
    SchedAdviceLayout layout_;
    std::vector<MachinePattern> patterns_;
};

}  // namespace advlab::sched
