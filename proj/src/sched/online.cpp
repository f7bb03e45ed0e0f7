#include "advlab/sched/online.hpp"

#include "advlab/core/errors.hpp"

namespace advlab::sched {

FrameworkOnline::FrameworkOnline(Epsilon eps, Objective objective, std::size_t machines)
    : layout_(SchedAdviceLayout::for_plan(eps, objective)),
      indexing_(eps, objective.pattern_size(eps)),
      schedule_(machines),
      slots_(machines),
      high_(machines),
      pointer_(machines - 1) {}

std::size_t FrameworkOnline::step(std::size_t index, const Rational& size, const BitString& frame) {
    const SchedAdvice advice = decode_request(frame, layout_);
    const std::size_t m = slots_.size();
    const std::size_t request = requests_++;
    if (request < m) {
        if (low_ >= high_) throw AdviceInconsistency("no machine left for a pattern");
        const std::size_t machine = advice.y ? low_++ : --high_;
        slots_[machine].pattern = indexing_.unrank(advice.pattern_rank);
        slots_[machine].assigned_at = request;
    }
    std::size_t machine = SIZE_MAX;
    if (advice.type == small_type) {
        if (advice.move) {
            if (pointer_ == 0) throw AdviceInconsistency("small-job pointer moved below machine 1");
            --pointer_;
        }
        machine = pointer_;
    } else {
        const int huge = static_cast<int>(layout_.types);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& slot = slots_[i];
            if (!slot.pattern) continue;
            const auto it = slot.fill.find(advice.type);
            const std::size_t used = it == slot.fill.end() ? 0 : it->second;
            if (used >= slot.pattern->slots(advice.type, huge)) continue;
            if (machine == SIZE_MAX || slot.assigned_at < slots_[machine].assigned_at) machine = i;
        }
        if (machine == SIZE_MAX)
            throw AdviceInconsistency("no machine pattern has room for job " + std::to_string(index + 1));
        ++slots_[machine].fill[advice.type];
    }
    schedule_.assign(index, size, machine);
    return machine;
}

Schedule run_online(const RequestSequence& jobs, std::span<const BitString> frames, Epsilon eps, Objective objective,
                    std::size_t machines) {
    if (frames.size() != jobs.size()) throw InvalidInput("one advice frame per job is required");
    FrameworkOnline online(eps, objective, machines);
    for (std::size_t i = 0; i < jobs.size(); ++i) online.step(i, jobs[i], frames[i]);
    return online.schedule();
}

Schedule run_semionline(const RequestSequence& jobs, const BitString& tape, Epsilon eps, Objective objective,
                        std::size_t machines) {
    SchedTapeReader reader(tape, eps, objective, machines);
    const auto& patterns = reader.patterns();
    const int huge = static_cast<int>(type_count(eps));
    Schedule schedule(machines);
    std::vector<std::map<int, std::size_t>> fill(machines);
    std::size_t pointer = machines - 1;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const SchedAdvice advice = reader.next();
        std::size_t machine = SIZE_MAX;
        if (advice.type == small_type) {
            if (advice.move) {
                if (pointer == 0) throw AdviceInconsistency("small-job pointer moved below machine 1");
                --pointer;
            }
            machine = pointer;
        } else {
            for (std::size_t k = 0; k < machines && machine == SIZE_MAX; ++k)
                if (fill[k][advice.type] < patterns[k].slots(advice.type, huge)) machine = k;
            if (machine == SIZE_MAX)
                throw AdviceInconsistency("no machine pattern has room for job " + std::to_string(i + 1));
            ++fill[machine][advice.type];
        }
        schedule.assign(i, jobs[i], machine);
    }
    if (reader.remaining() != 0) throw MalformedAdvice("unread bits left on the advice tape");
    return schedule;
}

std::size_t index_advice_width(std::size_t machines) {
    return ceil_log2(BigInt(machines));
}

std::vector<BitString> encode_index_advice(const Schedule& schedule, std::size_t jobs) {
    std::vector<std::size_t> machine_of(jobs, SIZE_MAX);
    for (std::size_t i = 0; i < schedule.machine_count(); ++i)
        for (auto j : schedule.jobs_on(i)) machine_of.at(j) = i;
    const std::size_t width = index_advice_width(schedule.machine_count());
    std::vector<BitString> frames;
    for (auto machine : machine_of) {
        if (machine == SIZE_MAX) throw InvalidInput("schedule does not cover every job");
        BitString frame;
        frame.append_uint(machine, width);
        frames.push_back(std::move(frame));
    }
    return frames;
}

Schedule run_index_advice(const RequestSequence& jobs, std::span<const BitString> frames, std::size_t machines) {
    if (frames.size() != jobs.size()) throw InvalidInput("one advice frame per job is required");
    const std::size_t width = index_advice_width(machines);
    Schedule schedule(machines);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (frames[i].width() != width) throw MalformedAdvice("index frame has the wrong width");
        BitReader in(frames[i]);
        const std::size_t machine = in.read_small(width);
        if (machine >= machines) throw MalformedAdvice("machine index out of range");
        schedule.assign(i, jobs[i], machine);
    }
    return schedule;
}

}  // namespace advlab::sched
