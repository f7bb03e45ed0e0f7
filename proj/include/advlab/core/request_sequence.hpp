#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "advlab/core/rational.hpp"

namespace advlab {

enum class RequestKind { bin_items, jobs };

std::string_view to_string(RequestKind kind);

// Requests in arrival order. Index 0 is the first request.
class RequestSequence {
public:
    RequestSequence() = default;
    // Bin items must lie in (0, 1], jobs must be positive.
    RequestSequence(RequestKind kind, std::vector<Rational> entries);

    RequestKind kind() const { return kind_; }
    std::span<const Rational> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    Rational total() const;

    friend bool operator==(const RequestSequence&, const RequestSequence&) = default;

private:
    RequestKind kind_ = RequestKind::bin_items;
    std::vector<Rational> entries_;
};

}  // namespace advlab
