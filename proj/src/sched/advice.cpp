#include "advlab/sched/advice.hpp"

#include "advlab/core/errors.hpp"
#include "advlab/core/quota.hpp"

namespace advlab::sched {

MachinePatternIndexing::MachinePatternIndexing(Epsilon eps, unsigned max_jobs)
    : types_(type_count(eps)), max_jobs_(max_jobs), jobs_(types_, max_jobs),
      count_(jobs_.count() + 2), width_(ceil_log2(count_)) {}

BigInt MachinePatternIndexing::rank(const MachinePattern& pattern) const {
    switch (pattern.kind) {
    case MachinePattern::Kind::small_only: return 0;
    case MachinePattern::Kind::huge_only: return 1;
    case MachinePattern::Kind::jobs: break;
    }
    std::vector<std::size_t> symbols(pattern.types.begin(), pattern.types.end());
    return 2 + jobs_.rank(symbols);
}

MachinePattern MachinePatternIndexing::unrank(const BigInt& rank) const {
    if (rank == 0) return MachinePattern::small_only();
    if (rank == 1) return MachinePattern::huge_only();
    if (rank >= count_) throw MalformedAdvice("machine pattern rank out of range");
    std::vector<unsigned> types;
    for (auto s : jobs_.unrank(rank - 2)) types.push_back(static_cast<unsigned>(s));
    return MachinePattern::of_jobs(std::move(types));
}

SchedAdviceLayout SchedAdviceLayout::for_plan(Epsilon eps, Objective objective) {
    require_scheduling_range(eps);
    SchedAdviceLayout layout;
    layout.eps = eps;
    layout.types = type_count(eps);
    layout.w_width = ceil_log2(BigInt(layout.types + 2));
    layout.z_width = MachinePatternIndexing(eps, objective.pattern_size(eps)).width();
    layout.total_width = layout.w_width + layout.x_width + layout.y_width + layout.z_width;
    return layout;
}

unsigned type_code(int type, unsigned types) {
    if (type == small_type) return types + 1;
    if (type < 0 || type > static_cast<int>(types)) throw InvalidInput("job type out of range");
    return static_cast<unsigned>(type);
}

BitString encode_request(const SchedulePlan& plan, std::size_t i, const SchedAdviceLayout& layout,
                         const MachinePatternIndexing& patterns) {
    BitString frame;
    const int t = plan.job_type.at(i);
    frame.append_uint(type_code(t, plan.types), layout.w_width);
    bool move = false;
    if (t == small_type) {
        std::size_t before = 0;
        while (before < plan.small_jobs.size() && plan.small_jobs[before] < i) ++before;
        move = pointer_move_bit(plan.quotas.kappa, before);
    }
    frame.append(move);
    if (i < plan.machines) {
        frame.append(plan.quotas.kappa[i] == 0);
        frame.append_uint(patterns.rank(plan.patterns[i]), layout.z_width);
    } else {
        frame.append(false);
        frame.append_uint(0, layout.z_width);
    }
    return frame;
}

std::vector<BitString> encode_stream(const SchedulePlan& plan) {
    const auto layout = SchedAdviceLayout::for_plan(plan.eps, plan.objective);
    const MachinePatternIndexing patterns(plan.eps, plan.max_jobs);
    std::vector<BitString> frames;
    for (std::size_t i = 0; i < plan.job_type.size(); ++i) frames.push_back(encode_request(plan, i, layout, patterns));
    return frames;
}

SchedAdvice decode_request(const BitString& frame, const SchedAdviceLayout& layout) {
    if (frame.width() != layout.total_width)
        throw MalformedAdvice("frame has " + std::to_string(frame.width()) + " bits, expected " +
                              std::to_string(layout.total_width));
    BitReader in(frame);
    SchedAdvice out;
    const std::size_t code = in.read_small(layout.w_width);
    if (code > layout.small_code()) throw MalformedAdvice("unused job type code " + std::to_string(code));
    out.type = code == layout.small_code() ? small_type : static_cast<int>(code);
    out.move = in.read_bit();
    out.y = in.read_bit();
    out.pattern_rank = in.read_uint(layout.z_width);
    return out;
}

BitString encode_semionline_tape(const SchedulePlan& plan) {
    const auto layout = SchedAdviceLayout::for_plan(plan.eps, plan.objective);
    const MachinePatternIndexing patterns(plan.eps, plan.max_jobs);
    std::vector<std::size_t> plan_machine(plan.machines);
    for (std::size_t k = 0; k < plan.machines; ++k) plan_machine[plan.permutation[k]] = k;
    BitString tape;
    for (std::size_t online = 0; online < plan.machines; ++online)
        tape.append_uint(patterns.rank(plan.patterns[plan_machine[online]]), layout.z_width);
    const auto moves = small_move_bits(plan);
    std::size_t small_seen = 0;
    for (std::size_t i = 0; i < plan.job_type.size(); ++i) {
        const int t = plan.job_type[i];
        tape.append_uint(type_code(t, plan.types), layout.w_width);
        if (t == small_type) tape.append(moves[small_seen++]);
    }
    return tape;
}

SchedTapeReader::SchedTapeReader(const BitString& tape, Epsilon eps, Objective objective, std::size_t machines)
    : reader_(tape), layout_(SchedAdviceLayout::for_plan(eps, objective)) {
    const MachinePatternIndexing indexing(eps, objective.pattern_size(eps));
    for (std::size_t i = 0; i < machines; ++i) patterns_.push_back(indexing.unrank(reader_.read_uint(layout_.z_width)));
}

SchedAdvice SchedTapeReader::next() {
    SchedAdvice out;
    const std::size_t code = reader_.read_small(layout_.w_width);
    if (code > layout_.small_code()) throw MalformedAdvice("unused job type code " + std::to_string(code));
    out.type = code == layout_.small_code() ? small_type : static_cast<int>(code);
    if (out.type == small_type) out.move = reader_.read_bit();
    return out;
}

}  // namespace advlab::sched
