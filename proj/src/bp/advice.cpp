#include "advlab/bp/advice.hpp"

#include "advlab/core/errors.hpp"
#include "advlab/core/quota.hpp"

namespace advlab::bp {

BinPatternIndexing::BinPatternIndexing(Epsilon eps)
    : types_(eps.inverse() * eps.inverse()),
      index_(types_, eps.inverse()),
      width_(ceil_log2(index_.count())) {}

BigInt BinPatternIndexing::rank(const BinPattern& pattern) const {
    std::vector<std::size_t> symbols;
    for (unsigned t : pattern) {
        if (t < 1 || t > types_) throw InvalidInput("bin pattern type out of range");
        symbols.push_back(t - 1);
    }
    return index_.rank(symbols);
}

BinPattern BinPatternIndexing::unrank(const BigInt& rank) const {
    BinPattern out;
    for (auto s : index_.unrank(rank)) out.push_back(static_cast<unsigned>(s + 1));
    return out;
}

BpaAdviceLayout BpaAdviceLayout::for_epsilon(Epsilon eps) {
    require_bin_packing_range(eps);
    const std::size_t q = eps.inverse();
    BpaAdviceLayout layout;
    layout.eps = eps;
    layout.x_width = ceil_log2(BigInt(q * q + 1));
    layout.z_width = BinPatternIndexing(eps).width();
    layout.total_width = layout.w_width + layout.x_width + layout.y_width + layout.z_width;
    layout.case2_index_width = ceil_log2(BigInt(q));
    return layout;
}

BitString encode_request(const OraclePlan& plan, std::size_t i, const BpaAdviceLayout& layout,
                         const BinPatternIndexing& patterns) {
    BitString frame;
    if (plan.case2) {
        frame.append(true);
        std::size_t bin = SIZE_MAX;
        for (std::size_t b = 0; b < plan.optimal.size() && bin == SIZE_MAX; ++b)
            for (auto item : plan.optimal[b].items)
                if (item == i) bin = b;
        if (bin == SIZE_MAX) throw InvalidInput("request missing from the optimal packing");
        frame.append_uint(bin, layout.case2_index_width);
        while (frame.width() < layout.total_width) frame.append(false);
        return frame;
    }
    const auto& cls = plan.classification;
    frame.append(false);
    const unsigned type = cls.type_of.at(i);
    frame.append_uint(type, layout.x_width);
    bool y = false;
    if (type == 0) {
        std::size_t before = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (cls.type_of[j] == 0) ++before;
        y = pointer_move_bit(plan.kappa, before);
    } else {
        y = plan.large_with_small[i];
    }
    frame.append(y);
    BigInt rank = 0;
    if (i < plan.b2_bins.size()) rank = patterns.rank(plan.patterns[plan.b2_bins[i]]);
    frame.append_uint(rank, layout.z_width);
    return frame;
}

std::vector<BitString> encode_stream(const OraclePlan& plan) {
    const auto layout = BpaAdviceLayout::for_epsilon(plan.eps);
    const BinPatternIndexing patterns(plan.eps);
    std::vector<BitString> frames;
    frames.reserve(plan.bin_of.size());
    for (std::size_t i = 0; i < plan.bin_of.size(); ++i) frames.push_back(encode_request(plan, i, layout, patterns));
    return frames;
}

BpaAdvice decode_request(const BitString& frame, const BpaAdviceLayout& layout) {
    if (frame.width() != layout.total_width)
        throw MalformedAdvice("frame has " + std::to_string(frame.width()) + " bits, expected " +
                              std::to_string(layout.total_width));
    BitReader in(frame);
    BpaAdvice out;
    out.case2 = in.read_bit();
    if (out.case2) {
        out.bin_index = in.read_small(layout.case2_index_width);
        while (in.remaining() > 0)
            if (in.read_bit()) throw MalformedAdvice("nonzero padding in a case-2 frame");
        return out;
    }
    out.type = static_cast<unsigned>(in.read_small(layout.x_width));
    const unsigned q = layout.eps.inverse();
    if (out.type > q * q) throw MalformedAdvice("item type out of range");
    out.y = in.read_bit();
    out.pattern_rank = in.read_uint(layout.z_width);
    return out;
}

BitString encode_semionline_tape(const OraclePlan& plan, const RequestSequence& items, Epsilon eps) {
    const auto layout = BpaAdviceLayout::for_epsilon(eps);
    BitString tape;
    tape.append(plan.case2);
    if (plan.case2) {
        std::vector<std::size_t> bin_of(items.size());
        for (std::size_t b = 0; b < plan.optimal.size(); ++b)
            for (auto i : plan.optimal[b].items) bin_of[i] = b;
        for (auto b : bin_of) tape.append_uint(b, layout.case2_index_width);
        return tape;
    }
    const BinPatternIndexing patterns(eps);
    append_self_delimiting(tape, plan.optimal_bins);
    for (std::size_t j = 0; j < plan.optimal_bins; ++j) {
        if (j < plan.b2_bins.size()) {
            const std::size_t bin = plan.b2_bins[j];
            tape.append_uint(patterns.rank(plan.patterns[bin]), layout.z_width);
            tape.append(plan.kappa[bin] > 0);
        } else {
            tape.append_uint(0, layout.z_width);
            tape.append(false);
        }
    }
    const std::size_t q = eps.inverse();
    const std::size_t type_width = ceil_log2(BigInt(q * q));
    const auto& cls = plan.classification;
    const auto moves = small_quota_bits(plan);
    std::size_t small_seen = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const unsigned t = cls.type_of[i];
        tape.append(t != 0);
        if (t == 0) {
            tape.append(moves[small_seen++]);
        } else {
            tape.append_uint(t - 1, type_width);
            tape.append(plan.large_with_small[i]);
        }
    }
    return tape;
}

BpaTapeReader::BpaTapeReader(const BitString& tape, Epsilon eps)
    : reader_(tape), layout_(BpaAdviceLayout::for_epsilon(eps)),
      type_width_(ceil_log2(BigInt(eps.inverse() * eps.inverse()))) {
    header_.case2 = reader_.read_bit();
    if (header_.case2) return;
    const BigInt n = read_self_delimiting(reader_);
    if (n > BigInt(1) << 24) throw MalformedAdvice("implausible optimal bin count on the tape");
    header_.optimal_bins = n.convert_to<std::size_t>();
    for (std::size_t j = 0; j < header_.optimal_bins; ++j) {
        header_.pattern_ranks.push_back(reader_.read_uint(layout_.z_width));
        header_.small_flags.push_back(reader_.read_bit());
    }
}

BpaAdvice BpaTapeReader::next() {
    BpaAdvice out;
    out.case2 = header_.case2;
    if (out.case2) {
        out.bin_index = reader_.read_small(layout_.case2_index_width);
        return out;
    }
    if (!reader_.read_bit()) {
        out.type = 0;
        out.y = reader_.read_bit();
        return out;
    }
    out.type = static_cast<unsigned>(reader_.read_small(type_width_)) + 1;
    const unsigned q = layout_.eps.inverse();
    if (out.type > q * q) throw MalformedAdvice("item type out of range");
    out.y = reader_.read_bit();
    return out;
}

}  // namespace advlab::bp
