#include "advlab/core/packing.hpp"

#include <algorithm>

#include "advlab/core/errors.hpp"

namespace advlab {

std::size_t Packing::open_bin() {
    bins_.push_back(Bin{{}, Rational(0)});
    return bins_.size() - 1;
}

bool Packing::fits(std::size_t bin, const Rational& size) const {
    return bins_[bin].load + size <= 1;
}

void Packing::place(std::size_t bin, std::size_t item, const Rational& size) {
    if (bin >= bins_.size()) throw InvalidInput("no such bin");
    if (!fits(bin, size))
        throw CapacityViolation("item " + std::to_string(item + 1) + " overflows bin " + std::to_string(bin + 1));
    bins_[bin].items.push_back(item);
    bins_[bin].load += size;
}

std::vector<std::vector<std::size_t>> Packing::partition() const {
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& bin : bins_) {
        if (bin.items.empty()) continue;
        auto items = bin.items;
        std::sort(items.begin(), items.end());
        parts.push_back(std::move(items));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool same_partition(const Packing& a, const Packing& b) {
    return a.partition() == b.partition();
}

Packing next_fit(std::span<const IndexedSize> items, Packing packing) {
    std::size_t current = 0;
    for (const auto& item : items) {
        while (current < packing.size() && !packing.fits(current, item.size)) ++current;
        if (current == packing.size()) packing.open_bin();
        packing.place(current, item.index, item.size);
    }
    return packing;
}

}  // namespace advlab
