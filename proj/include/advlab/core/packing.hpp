#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "advlab/core/rational.hpp"

namespace advlab {

struct Bin {
    std::vector<std::size_t> items;  // request indices in placement order
    Rational load;
};

// Bins of capacity 1, kept in opening order.
class Packing {
public:
    std::size_t size() const { return bins_.size(); }
    bool empty() const { return bins_.empty(); }
    const std::vector<Bin>& bins() const { return bins_; }
    const Bin& operator[](std::size_t b) const { return bins_[b]; }

    std::size_t open_bin();
    bool fits(std::size_t bin, const Rational& size) const;
    // Throws CapacityViolation if the bin would exceed capacity 1.
    void place(std::size_t bin, std::size_t item, const Rational& size);

    // Each bin's items sorted, bins sorted lexicographically; empty bins dropped.
    std::vector<std::vector<std::size_t>> partition() const;

private:
    std::vector<Bin> bins_;
};

bool same_partition(const Packing& a, const Packing& b);

struct IndexedSize {
    std::size_t index;
    Rational size;
};

// Next fit starting at the first bin of `packing`. Once an item does not fit
// the current bin is abandoned for good; past the last bin new bins open.
Packing next_fit(std::span<const IndexedSize> items, Packing packing);

}  // namespace advlab
