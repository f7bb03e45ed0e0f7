#include "advlab/bp/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "advlab/core/errors.hpp"
#include "advlab/core/quota.hpp"

namespace advlab::bp {

ItemClassification group_large_items(std::span<const Rational> sizes, const Rational& threshold, std::size_t groups) {
    if (groups == 0) throw InvalidInput("at least one group is required");
    ItemClassification out;
    out.group_count = groups;
    out.type_of.assign(sizes.size(), 0);
    out.rounded_size.assign(sizes.begin(), sizes.end());
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] > threshold) out.large_indices.push_back(i);
    std::stable_sort(out.large_indices.begin(), out.large_indices.end(),
                     [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
    out.large_count = out.large_indices.size();
    if (out.large_count == 0) return out;
    out.group_size = (out.large_count + groups - 1) / groups;
    for (std::size_t rank = 0; rank < out.large_count; ++rank) {
        const std::size_t group = rank / out.group_size;
        const std::size_t item = out.large_indices[rank];
        out.type_of[item] = static_cast<unsigned>(group + 1);
        out.rounded_size[item] = sizes[out.large_indices[group * out.group_size]];
    }
    return out;
}

ItemClassification classify_and_round(const RequestSequence& items, Epsilon eps) {
    require_bin_packing_range(eps);
    const std::size_t q = eps.inverse();
    return group_large_items(items.entries(), eps.value(), q * q);
}

std::size_t OraclePlan::small_count() const {
    return std::accumulate(kappa.begin(), kappa.end(), std::size_t(0));
}

namespace {

BinPattern sorted_pattern(std::vector<unsigned> types) {
    std::sort(types.begin(), types.end());
    return types;
}

std::size_t count_of(const BinPattern& p, unsigned type) {
    return static_cast<std::size_t>(std::count(p.begin(), p.end(), type));
}

}  // namespace

OraclePlan build_target_packing(const RequestSequence& items, Epsilon eps, const OptimalPacking& optimum,
                                std::uint64_t node_limit) {
    require_bin_packing_range(eps);
    if (items.kind() != RequestKind::bin_items) throw InvalidInput("bin packing needs a bin instance");
    OraclePlan plan;
    plan.eps = eps;
    plan.optimal_bins = optimum.bins;
    plan.optimal = optimum.packing;
    plan.case2 = optimum.bins <= eps.inverse();
    plan.classification = classify_and_round(items, eps);
    const auto& cls = plan.classification;
    const std::size_t n = items.size();
    const Rational N(static_cast<long>(optimum.bins));

    // B2': optimal packing of the rounded type >= 2 items.
    std::vector<IndexedSize> rounded;
    for (std::size_t i = 0; i < n; ++i)
        if (cls.type_of[i] >= 2) rounded.push_back({i, cls.rounded_size[i]});
    const OptimalPacking b2_prime = solve_optimal_packing(rounded, node_limit);
    if (b2_prime.bins > optimum.bins)
        throw InternalBoundViolation("rounded packing of types >= 2 needs more than N bins");
    std::vector<BinPattern> closed_patterns;
    for (const auto& bin : b2_prime.packing.bins()) {
        std::vector<unsigned> types;
        for (auto i : bin.items) types.push_back(cls.type_of[i]);
        closed_patterns.push_back(sorted_pattern(std::move(types)));
    }
    std::vector<bool> opened(closed_patterns.size(), false);

    // Replay the large items in arrival order.
    std::vector<std::map<unsigned, std::size_t>> fill;
    std::vector<bool> is_b2;
    plan.bin_of.assign(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned t = cls.type_of[i];
        if (t == 0) continue;
        std::size_t bin = SIZE_MAX;
        if (t == 1) {
            bin = plan.target.open_bin();
            plan.patterns.push_back({1});
            fill.emplace_back();
            is_b2.push_back(false);
            ++plan.b1_count;
        } else {
            for (std::size_t b = 0; b < plan.target.size() && bin == SIZE_MAX; ++b)
                if (is_b2[b] && fill[b][t] < count_of(plan.patterns[b], t)) bin = b;
            if (bin == SIZE_MAX) {
                std::size_t pick = 0;
                while (pick < closed_patterns.size() && (opened[pick] || count_of(closed_patterns[pick], t) == 0))
                    ++pick;
                if (pick == closed_patterns.size())
                    throw InternalBoundViolation("no closed B2 bin accepts an item of type " + std::to_string(t));
                opened[pick] = true;
                bin = plan.target.open_bin();
                plan.patterns.push_back(closed_patterns[pick]);
                fill.emplace_back();
                is_b2.push_back(true);
                plan.b2_bins.push_back(bin);
            }
        }
        ++fill[bin][t];
        plan.target.place(bin, i, items[i]);
        plan.bin_of[i] = bin;
    }
    plan.prefix_bins = plan.target.size();

    // Small items by next fit over S' and then fresh bins.
    std::vector<IndexedSize> small;
    for (std::size_t i = 0; i < n; ++i)
        if (cls.type_of[i] == 0) small.push_back({i, items[i]});
    plan.target = next_fit(small, std::move(plan.target));
    plan.patterns.resize(plan.target.size());
    plan.kappa.assign(plan.target.size(), 0);
    for (std::size_t b = 0; b < plan.target.size(); ++b)
        for (auto i : plan.target[b].items) {
            plan.bin_of[i] = b;
            if (cls.type_of[i] == 0) ++plan.kappa[b];
        }
    plan.large_with_small.assign(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (cls.type_of[i] != 0) plan.large_with_small[i] = plan.kappa[plan.bin_of[i]] > 0;

    const Rational eps_value = eps.value();
    if (Rational(static_cast<long>(plan.b1_count)) > Rational(ceil(eps_value * N)))
        throw InternalBoundViolation("|B1| exceeds ceil(eps N)");
    if (Rational(static_cast<long>(plan.prefix_bins)) > (1 + eps_value) * N + 1)
        throw InternalBoundViolation("|S'| exceeds (1 + eps) N + 1");
    if (Rational(static_cast<long>(plan.target.size())) > (1 + 2 * eps_value) * N + 1)
        throw InternalBoundViolation("|S| exceeds (1 + 2 eps) N + 1");
    return plan;
}

OraclePlan build_plan(const RequestSequence& items, Epsilon eps, std::uint64_t node_limit) {
    return build_target_packing(items, eps, solve_optimal_packing(items, node_limit), node_limit);
}

std::vector<bool> small_move_bits(std::span<const std::size_t> kappa, std::size_t small_items) {
    return pointer_move_bits(kappa, small_items);
}

std::vector<bool> small_quota_bits(const OraclePlan& plan) {
    return small_move_bits(plan.kappa, plan.small_count());
}

nlohmann::json plan_to_json(const OraclePlan& plan) {
    using nlohmann::json;
    json bins = json::array();
    for (std::size_t b = 0; b < plan.target.size(); ++b) {
        json items = json::array();
        for (auto i : plan.target[b].items) items.push_back(i + 1);
        bins.push_back(json{{"items", items}, {"pattern", plan.patterns[b]}, {"kappa", plan.kappa[b]}});
    }
    return json{{"epsilon", plan.eps.to_string()},
                {"N", plan.optimal_bins},
                {"case2", plan.case2},
                {"L", plan.classification.large_count},
                {"h", plan.classification.group_size},
                {"B1", plan.b1_count},
                {"B2", plan.b2_bins.size()},
                {"kappa", plan.kappa},
                {"bins", bins}};
}

}  // namespace advlab::bp
