#include "advlab/lb/adversary.hpp"

#include <algorithm>
#include <set>

#include "advlab/core/errors.hpp"
#include "advlab/core/instance_io.hpp"

namespace advlab::lb {

namespace {

constexpr std::size_t max_advice_bits = 20;
constexpr std::size_t max_space = std::size_t(1) << 22;

std::size_t space_size(std::size_t m, std::size_t k) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        size *= m;
        if (size > max_space) throw ResourceExceeded("m^k is too large to enumerate");
    }
    return size;
}

BitString advice_string(std::size_t value, std::size_t bits) {
    BitString out;
    out.append_uint(value, bits);
    return out;
}

std::size_t least_loaded(const Schedule& s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.machine_count(); ++i)
        if (s.load(i) < s.load(best)) best = i;
    return best;
}

}  // namespace

Schedule run_algorithm(const AdviceAlgorithm& alg, std::span<const Rational> sizes, std::size_t m,
                       const BitString& advice) {
    Schedule s(m);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        const std::size_t machine = alg.place(sizes.subspan(0, j + 1), s, advice);
        if (machine >= m) throw InvalidInput(alg.name() + " chose a machine that does not exist");
        s.assign(j, sizes[j], machine);
    }
    return s;
}

std::vector<Rational> build_sigma1(std::size_t n, std::size_t m) {
    if (m == 0 || n <= 2 * m) throw InvalidInput("the lower-bound sequence needs n > 2m");
    const std::size_t k = n - 2 * m;
    std::vector<Rational> out;
    for (std::size_t e = k + 2; e <= k + m + 1; ++e) out.emplace_back(Rational(1) / power(Rational(2), e));
    for (std::size_t e = 2; e <= k + 1; ++e) out.emplace_back(Rational(1) / power(Rational(2), e));
    return out;
}

bool subset_sums_distinct(std::span<const Rational> sizes) {
    if (sizes.size() > 24) throw ResourceExceeded("too many subsets to enumerate");
    const ScaledIntegers scaled = scale_to_common_denominator(sizes, std::int64_t(1) << 40);
    std::vector<std::int64_t> sums{0};
    for (auto v : scaled.values) {
        const std::size_t half = sums.size();
        for (std::size_t s = 0; s < half; ++s) sums.push_back(sums[s] + v);
    }
    std::sort(sums.begin(), sums.end());
    if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) return false;
    return 2 * sums.back() < scaled.denominator;
}

std::optional<Labels> canonical_labels(const Schedule& schedule, std::size_t m) {
    std::vector<std::size_t> machine_of(schedule.job_count(), SIZE_MAX);
    for (std::size_t i = 0; i < schedule.machine_count(); ++i)
        for (auto j : schedule.jobs_on(i)) machine_of.at(j) = i;
    if (machine_of.size() < m) throw InvalidInput("schedule is shorter than m");
    std::vector<std::size_t> label_of(schedule.machine_count(), SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
        if (label_of[machine_of[i]] != SIZE_MAX) return std::nullopt;
        label_of[machine_of[i]] = i;
    }
    Labels labels;
    for (std::size_t j = m; j < machine_of.size(); ++j) labels.push_back(label_of[machine_of[j]]);
    return labels;
}

Schedule schedule_from_labels(const Labels& labels, std::span<const Rational> sigma1, std::size_t m) {
    if (sigma1.size() != m + labels.size()) throw InvalidInput("labels do not match sigma1");
    Schedule s(m);
    for (std::size_t i = 0; i < m; ++i) s.assign(i, sigma1[i], i);
    for (std::size_t j = 0; j < labels.size(); ++j) s.assign(m + j, sigma1[m + j], labels[j]);
    return s;
}

Labels choose_adversarial_schedule(const AdviceAlgorithm& alg, std::size_t n, std::size_t m) {
    const auto sigma1 = build_sigma1(n, m);
    const std::size_t k = n - 2 * m;
    const std::size_t b = alg.advice_bits(n, m);
    const std::size_t space = space_size(m, k);
    if (b >= 63 || (std::size_t(1) << b) >= space)
        throw BudgetTooLarge(std::to_string(b) + " advice bits cover all " + std::to_string(space) + " schedules");
    std::set<Labels> images;
    for (std::size_t u = 0; u < (std::size_t(1) << b); ++u)
        if (auto labels = canonical_labels(run_algorithm(alg, sigma1, m, advice_string(u, b)), m))
            images.insert(*labels);
    Labels candidate(k, 0);
    while (images.count(candidate)) {
        std::size_t pos = k;
        while (pos-- > 0) {
            if (++candidate[pos] < m) break;
            candidate[pos] = 0;
        }
    }
    return candidate;
}

std::vector<Rational> build_sigma2(const Schedule& adversarial, std::size_t m) {
    std::vector<Rational> x;
    for (std::size_t i = 0; i < m; ++i) x.push_back(1 - adversarial.load(i));
    return x;
}

Certificate certify_nonoptimal(const Schedule& final_schedule) {
    Certificate c;
    std::optional<std::size_t> over;
    std::optional<std::size_t> under;
    for (std::size_t i = 0; i < final_schedule.machine_count(); ++i) {
        if (!over && final_schedule.load(i) > 1) over = i;
        if (!under && final_schedule.load(i) < 1) under = i;
    }
    if (!over && !under) {
        c.balanced = true;
        return c;
    }
    if (!over || !under) throw InvalidInput("loads do not total m");
    c.over = *over;
    c.under = *under;
    return c;
}

bool GameResult::lower_bound_holds() const {
    return std::none_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.certificate.balanced; });
}

std::optional<std::size_t> GameResult::balanced_outcome() const {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i].certificate.balanced) return i;
    return std::nullopt;
}

GameResult play_game(const AdviceAlgorithm& alg, std::size_t n, std::size_t m) {
    GameResult game;
    game.algorithm = alg.name();
    game.n = n;
    game.m = m;
    game.sigma1 = build_sigma1(n, m);
    game.k = n - 2 * m;
    game.bits = alg.advice_bits(n, m);
    if (game.bits > max_advice_bits) throw ResourceExceeded("advice space too large to enumerate");
    try {
        game.adversarial = choose_adversarial_schedule(alg, n, m);
    } catch (const BudgetTooLarge&) {
        game.budget_too_large = true;
        game.adversarial.assign(game.k, 0);
    }
    const Schedule s_adv = schedule_from_labels(game.adversarial, game.sigma1, m);
    game.sigma2 = build_sigma2(s_adv, m);
    std::vector<Rational> sigma = game.sigma1;
    sigma.insert(sigma.end(), game.sigma2.begin(), game.sigma2.end());
    for (std::size_t u = 0; u < (std::size_t(1) << game.bits); ++u) {
        AdviceOutcome outcome;
        outcome.advice = advice_string(u, game.bits);
        const Schedule full = run_algorithm(alg, sigma, m, outcome.advice);
        Schedule prefix(m);
        for (std::size_t i = 0; i < m; ++i)
            for (auto j : full.jobs_on(i))
                if (j < game.sigma1.size()) prefix.assign(j, sigma[j], i);
        outcome.sigma1_in_v = canonical_labels(prefix, m).has_value();
        outcome.certificate = certify_nonoptimal(full);
        game.outcomes.push_back(std::move(outcome));
    }
    return game;
}

nlohmann::json to_json(const GameResult& game) {
    using nlohmann::json;
    auto fractions = [](const std::vector<Rational>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(format_rational(x));
        return out;
    };
    json labels = json::array();
    for (auto l : game.adversarial) labels.push_back(l + 1);
    json outcomes = json::array();
    for (const auto& o : game.outcomes) {
        json c = {{"advice", o.advice.to_binary()}, {"sigma1_in_V", o.sigma1_in_v}, {"balanced", o.certificate.balanced}};
        if (!o.certificate.balanced) {
            c["over_machine"] = o.certificate.over + 1;
            c["under_machine"] = o.certificate.under + 1;
        }
        outcomes.push_back(std::move(c));
    }
    return json{{"algorithm", game.algorithm},
                {"n", game.n},
                {"m", game.m},
                {"k", game.k},
                {"advice_bits", game.bits},
                {"budget_too_large", game.budget_too_large},
                {"sigma1", fractions(game.sigma1)},
                {"adversarial_labels", labels},
                {"sigma2", fractions(game.sigma2)},
                {"outcomes", outcomes},
                {"lower_bound_holds", game.lower_bound_holds()}};
}

namespace {

class Greedy : public AdviceAlgorithm {
public:
    std::string name() const override { return "greedy"; }
    std::size_t advice_bits(std::size_t, std::size_t) const override { return 0; }
    std::size_t place(std::span<const Rational>, const Schedule& so_far, const BitString&) const override {
        return least_loaded(so_far);
    }
};

class OneBitSplitter : public AdviceAlgorithm {
public:
    std::string name() const override { return "one-bit-splitter"; }
    std::size_t advice_bits(std::size_t, std::size_t) const override { return 1; }
    std::size_t place(std::span<const Rational> sizes, const Schedule& so_far, const BitString& advice) const override {
        if (advice[0]) return (sizes.size() - 1) % so_far.machine_count();
        return least_loaded(so_far);
    }
};

class Table : public AdviceAlgorithm {
public:
    Table(std::size_t bits, std::string name) : bits_(bits), name_(std::move(name)) {}
    std::string name() const override { return name_; }
    std::size_t advice_bits(std::size_t, std::size_t) const override { return bits_; }
    std::size_t place(std::span<const Rational> sizes, const Schedule& so_far, const BitString& advice) const override {
        const std::size_t m = so_far.machine_count();
        const std::size_t j = sizes.size() - 1;
        if (j < m) return j;
        // sigma1 jobs are below 1/2, sigma2 jobs above.
        if (sizes[j] < Rational(1, 2)) {
            BitReader in(advice);
            std::size_t code = bits_ == 0 ? 0 : in.read_small(bits_);
            // Job m + d reads base-m digit d of the advice, least significant first.
            for (std::size_t d = m; d < j; ++d) code /= m;
            return code % m;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (so_far.load(i) + sizes[j] == 1) return i;
        return least_loaded(so_far);
    }

private:
    std::size_t bits_;
    std::string name_;
};

class AllOnOne : public AdviceAlgorithm {
public:
    std::string name() const override { return "all-on-one"; }
    std::size_t advice_bits(std::size_t, std::size_t) const override { return 0; }
    std::size_t place(std::span<const Rational>, const Schedule&, const BitString&) const override { return 0; }
};

}  // namespace

std::unique_ptr<AdviceAlgorithm> make_greedy() { return std::make_unique<Greedy>(); }
std::unique_ptr<AdviceAlgorithm> make_one_bit_splitter() { return std::make_unique<OneBitSplitter>(); }
std::unique_ptr<AdviceAlgorithm> make_table(std::size_t bits) {
    return std::make_unique<Table>(bits, "table-" + std::to_string(bits));
}
std::unique_ptr<AdviceAlgorithm> make_index_advice(std::size_t n, std::size_t m) {
    if (n <= 2 * m) throw InvalidInput("the lower-bound sequence needs n > 2m");
    const std::size_t k = n - 2 * m;
    BigInt space = 1;
    for (std::size_t i = 0; i < k; ++i) space *= m;
    return std::make_unique<Table>(ceil_log2(space), "index-advice");
}
std::unique_ptr<AdviceAlgorithm> make_all_on_one() { return std::make_unique<AllOnOne>(); }

}  // namespace advlab::lb
