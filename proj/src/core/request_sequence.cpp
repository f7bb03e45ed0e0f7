#include "advlab/core/request_sequence.hpp"

#include "advlab/core/errors.hpp"

namespace advlab {

std::string_view to_string(RequestKind kind) {
    return kind == RequestKind::bin_items ? "bin" : "sched";
}

RequestSequence::RequestSequence(RequestKind kind, std::vector<Rational> entries)
    : kind_(kind), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Rational& v = entries_[i];
        if (v <= 0) throw InvalidInput("request " + std::to_string(i + 1) + " is not positive");
        if (kind_ == RequestKind::bin_items && v > 1)
            throw InvalidInput("item " + std::to_string(i + 1) + " is larger than a bin");
    }
}

Rational RequestSequence::total() const {
    Rational sum = 0;
    for (const auto& v : entries_) sum += v;
    return sum;
}

}  // namespace advlab
