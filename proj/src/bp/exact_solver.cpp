#include "advlab/bp/exact_solver.hpp"

#include <algorithm>
#include <numeric>

#include "advlab/core/errors.hpp"

namespace advlab::bp {

namespace {

using Weight = std::int64_t;

constexpr Weight kScaleLimit = Weight(1) << 40;

Weight ceil_div(Weight a, Weight b) {
    return a <= 0 ? 0 : (a + b - 1) / b;
}

// Martello-Toth L2 over weights sorted nonincreasing.
std::size_t lower_bound_l2(const std::vector<Weight>& w, Weight cap) {
    const Weight total = std::accumulate(w.begin(), w.end(), Weight(0));
    std::size_t best = static_cast<std::size_t>(ceil_div(total, cap));
    std::vector<Weight> alphas{0};
    for (Weight x : w)
        if (2 * x <= cap) alphas.push_back(x);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (Weight alpha : alphas) {
        std::size_t j1 = 0, j2 = 0;
        Weight sum2 = 0, sum3 = 0;
        for (Weight x : w) {
            if (x > cap - alpha)
                ++j1;
            else if (2 * x > cap) {
                ++j2;
                sum2 += x;
            } else if (x >= alpha)
                sum3 += x;
        }
        const Weight spare = static_cast<Weight>(j2) * cap - sum2;
        const std::size_t bound = j1 + j2 + static_cast<std::size_t>(ceil_div(sum3 - spare, cap));
        best = std::max(best, bound);
    }
    return best;
}

// First or best fit over weights in the given order.
std::vector<std::size_t> greedy_fit(const std::vector<Weight>& w, Weight cap, bool best_fit, std::size_t& bins) {
    std::vector<Weight> residual;
    std::vector<std::size_t> bin_of(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::size_t chosen = residual.size();
        for (std::size_t b = 0; b < residual.size(); ++b) {
            if (residual[b] < w[k]) continue;
            if (!best_fit) {
                chosen = b;
                break;
            }
            if (chosen == residual.size() || residual[b] < residual[chosen]) chosen = b;
        }
        if (chosen == residual.size()) residual.push_back(cap);
        residual[chosen] -= w[k];
        bin_of[k] = chosen;
    }
    bins = residual.size();
    return bin_of;
}

class Search {
public:
    Search(const std::vector<Weight>& w, Weight cap, std::size_t lower, std::size_t upper,
           std::vector<std::size_t> incumbent, std::uint64_t node_limit)
        : w_(w), cap_(cap), lower_(lower), best_(upper), best_bin_of_(std::move(incumbent)),
          node_limit_(node_limit), bin_of_(w.size()), suffix_(w.size() + 1, 0) {
        for (std::size_t k = w.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] + w[k];
    }

    void run() {
        if (best_ > lower_) dfs(0);
    }

    std::size_t best() const { return best_; }
    const std::vector<std::size_t>& best_bin_of() const { return best_bin_of_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(std::size_t k) {
        if (done_) return;
        if (++nodes_ > node_limit_) throw ResourceExceeded("bin packing search exceeded its node limit");
        const std::size_t used = residual_.size();
        if (k == w_.size()) {
            best_ = used;
            best_bin_of_ = bin_of_;
            done_ = best_ <= lower_;
            return;
        }
        Weight free = 0;
        for (Weight r : residual_) free += r;
        const std::size_t needed = used + static_cast<std::size_t>(ceil_div(suffix_[k] - free, cap_));
        if (needed >= best_) return;

        for (std::size_t b = 0; b < used && !done_; ++b) {
            if (residual_[b] < w_[k]) continue;
            bool seen = false;
            for (std::size_t c = 0; c < b && !seen; ++c) seen = residual_[c] == residual_[b];
            if (seen) continue;
            residual_[b] -= w_[k];
            bin_of_[k] = b;
            dfs(k + 1);
            residual_[b] += w_[k];
        }
        if (!done_ && used + 1 < best_) {
            residual_.push_back(cap_ - w_[k]);
            bin_of_[k] = used;
            dfs(k + 1);
            residual_.pop_back();
        }
    }

    const std::vector<Weight>& w_;
    Weight cap_;
    std::size_t lower_;
    std::size_t best_;
    std::vector<std::size_t> best_bin_of_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    std::vector<std::size_t> bin_of_;
    std::vector<Weight> residual_;
    std::vector<Weight> suffix_;
};

}  // namespace

OptimalPacking solve_optimal_packing(std::span<const IndexedSize> items, std::uint64_t node_limit) {
    OptimalPacking out;
    if (items.empty()) return out;

    std::vector<Rational> sizes;
    sizes.reserve(items.size() + 1);
    for (const auto& it : items) {
        if (it.size <= 0 || it.size > 1) throw InvalidInput("bin item size outside (0, 1]");
        sizes.push_back(it.size);
    }
    const ScaledIntegers scaled = scale_to_common_denominator(sizes, kScaleLimit);
    const Weight cap = scaled.denominator;

    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scaled.values[a] > scaled.values[b]; });
    std::vector<Weight> w;
    for (auto i : order) w.push_back(scaled.values[i]);

    const std::size_t lower = lower_bound_l2(w, cap);
    std::size_t ff_bins = 0, bf_bins = 0;
    auto ff = greedy_fit(w, cap, false, ff_bins);
    auto bf = greedy_fit(w, cap, true, bf_bins);
    const bool use_bf = bf_bins < ff_bins;

    Search search(w, cap, lower, use_bf ? bf_bins : ff_bins, use_bf ? bf : ff, node_limit);
    search.run();

    // Renumber bins by the arrival of their first item.
    std::vector<std::size_t> sorted_bin(items.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted_bin[order[k]] = search.best_bin_of()[k];
    std::vector<std::size_t> relabel(search.best(), SIZE_MAX);
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::size_t& b = relabel[sorted_bin[i]];
        if (b == SIZE_MAX) b = out.packing.open_bin();
        out.packing.place(b, items[i].index, items[i].size);
    }
    out.bins = out.packing.size();
    out.nodes = search.nodes();
    return out;
}

OptimalPacking solve_optimal_packing(const RequestSequence& items, std::uint64_t node_limit) {
    std::vector<IndexedSize> indexed;
    for (std::size_t i = 0; i < items.size(); ++i) indexed.push_back({i, items[i]});
    return solve_optimal_packing(indexed, node_limit);
}

}  // namespace advlab::bp
