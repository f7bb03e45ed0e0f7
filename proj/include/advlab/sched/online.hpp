#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "advlab/sched/advice.hpp"

namespace advlab::sched {

// The online side of the scheduling framework. The first m frames hand out
// machine patterns: y = 1 takes the lowest free machine, y = 0 the highest.
// Small jobs follow a pointer that starts at the last machine and only moves
// down; other jobs go to a machine whose pattern still has a free slot for
// their type, the earliest assigned pattern first.
class FrameworkOnline {
public:
    FrameworkOnline(Epsilon eps, Objective objective, std::size_t machines);

    // Returns the machine the job was placed on.
    std::size_t step(std::size_t index, const Rational& size, const BitString& frame);

    const Schedule& schedule() const { return schedule_; }
    const std::optional<MachinePattern>& pattern_of(std::size_t machine) const { return slots_[machine].pattern; }

private:
    struct Slot {
        std::optional<MachinePattern> pattern;
        std::map<int, std::size_t> fill;
        std::size_t assigned_at = 0;
    };

    SchedAdviceLayout layout_;
    MachinePatternIndexing indexing_;
    Schedule schedule_;
    std::vector<Slot> slots_;
    std::size_t low_ = 0;
    std::size_t high_;
    std::size_t pointer_;
    std::size_t requests_ = 0;
};

Schedule run_online(const RequestSequence& jobs, std::span<const BitString> frames, Epsilon eps, Objective objective,
                    std::size_t machines);

// Semi-online: every pattern is known before the first job, so a job goes to
// the lowest-numbered machine with a free slot.
Schedule run_semionline(const RequestSequence& jobs, const BitString& tape, Epsilon eps, Objective objective,
                        std::size_t machines);

// The trivial scheme: each job's machine in ceil(log m) bits.
std::size_t index_advice_width(std::size_t machines);
std::vector<BitString> encode_index_advice(const Schedule& schedule, std::size_t jobs);
Schedule run_index_advice(const RequestSequence& jobs, std::span<const BitString> frames, std::size_t machines);

}  // namespace advlab::sched
