#include "advlab/bp/online.hpp"

#include <algorithm>

#include "advlab/core/errors.hpp"

namespace advlab::bp {

BpaOnline::BpaOnline(Epsilon eps)
    : eps_(eps), layout_(BpaAdviceLayout::for_epsilon(eps)), indexing_(eps) {}

void BpaOnline::preload_patterns(std::span<const BigInt> ranks) {
    queue_.insert(queue_.end(), ranks.begin(), ranks.end());
}

void BpaOnline::step(std::size_t index, const Rational& size, const BitString& frame) {
    const BpaAdvice advice = decode_request(frame, layout_);
    if (!advice.case2) queue_.push_back(advice.pattern_rank);
    step(index, size, advice);
}

void BpaOnline::step(std::size_t index, const Rational& size, const BpaAdvice& advice) {
    if (case2_ && *case2_ != advice.case2) throw AdviceInconsistency("case bit changed mid-sequence");
    case2_ = advice.case2;
    if (advice.case2) {
        place_case2(index, size, advice.bin_index);
        return;
    }
    const bool large = size > eps_.value();
    if (large != (advice.type != 0))
        throw AdviceInconsistency("advice type disagrees with the size of request " + std::to_string(index + 1));
    if (advice.type == 0)
        place_small(index, size, advice.y);
    else
        place_large(index, size, advice.type, advice.y);
}

std::size_t BpaOnline::open(std::vector<std::size_t>& list) {
    const std::size_t bin = packing_.open_bin();
    state_.emplace_back();
    list.push_back(bin);
    return bin;
}

bool BpaOnline::has_room(std::size_t bin, unsigned type) const {
    const auto& s = state_[bin];
    if (!s.has_pattern) return false;
    const auto want = static_cast<std::size_t>(std::count(s.pattern.begin(), s.pattern.end(), type));
    const auto it = s.fill.find(type);
    return (it == s.fill.end() ? 0 : it->second) < want;
}

BinPattern BpaOnline::next_pattern() {
    if (queue_.empty()) throw AdviceInconsistency("no bin pattern left to open a bin with");
    const BigInt rank = queue_.front();
    queue_.pop_front();
    if (rank == 0) throw AdviceInconsistency("empty pattern handed to a large item");
    return indexing_.unrank(rank);
}

void BpaOnline::place_small(std::size_t index, const Rational& size, bool move) {
    if (move) ++pointer_;
    if (pointer_ > l1_.size()) throw AdviceInconsistency("small-item pointer skipped past the open bins");
    if (pointer_ == l1_.size()) open(l1_);
    packing_.place(l1_[pointer_], index, size);
}

void BpaOnline::place_large(std::size_t index, const Rational& size, unsigned type, bool with_small) {
    auto& list = with_small ? l1_ : l2_;
    std::size_t bin = SIZE_MAX;
    if (type == 1) {
        if (with_small)
            for (auto b : l1_)
                if (!state_[b].has_pattern) {
                    bin = b;
                    break;
                }
        if (bin == SIZE_MAX) bin = open(list);
        state_[bin].pattern = {1};
        state_[bin].has_pattern = true;
    } else {
        for (auto b : list)
            if (has_room(b, type)) {
                bin = b;
                break;
            }
        if (bin == SIZE_MAX) {
            if (with_small)
                for (auto b : l1_)
                    if (!state_[b].has_pattern) {
                        bin = b;
                        break;
                    }
            if (bin == SIZE_MAX) bin = open(list);
            state_[bin].pattern = next_pattern();
            state_[bin].has_pattern = true;
            if (!has_room(bin, type))
                throw AdviceInconsistency("opened pattern has no slot for type " + std::to_string(type));
        }
    }
    ++state_[bin].fill[type];
    packing_.place(bin, index, size);
}

void BpaOnline::place_case2(std::size_t index, const Rational& size, std::size_t bin_index) {
    auto it = case2_bins_.find(bin_index);
    if (it == case2_bins_.end()) it = case2_bins_.emplace(bin_index, open(l2_)).first;
    packing_.place(it->second, index, size);
}

Packing run_online(const RequestSequence& items, std::span<const BitString> frames, Epsilon eps) {
    if (frames.size() != items.size()) throw InvalidInput("one advice frame per request is required");
    BpaOnline online(eps);
    for (std::size_t i = 0; i < items.size(); ++i) online.step(i, items[i], frames[i]);
    return online.packing();
}

Packing run_semionline(const RequestSequence& items, const BitString& tape, Epsilon eps) {
    BpaTapeReader reader(tape, eps);
    BpaOnline online(eps);
    online.preload_patterns(reader.header().pattern_ranks);
    for (std::size_t i = 0; i < items.size(); ++i) online.step(i, items[i], reader.next());
    if (reader.remaining() != 0) throw MalformedAdvice("unread bits left on the advice tape");
    return online.packing();
}

}  // namespace advlab::bp
