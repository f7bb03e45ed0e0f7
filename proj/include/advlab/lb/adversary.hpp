#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "advlab/core/bit_string.hpp"
#include "advlab/core/schedule.hpp"

namespace advlab::lb {

// A deterministic online scheduler that reads all of its advice up front.
class AdviceAlgorithm {
public:
    virtual ~AdviceAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual std::size_t advice_bits(std::size_t n, std::size_t m) const = 0;
    // Machine for the last entry of `sizes`, given where the earlier ones went.
    virtual std::size_t place(std::span<const Rational> sizes, const Schedule& so_far, const BitString& advice) const = 0;
};

Schedule run_algorithm(const AdviceAlgorithm& alg, std::span<const Rational> sizes, std::size_t m,
                       const BitString& advice);

// 1/2^(k+2), ..., 1/2^(k+m+1), 1/2^2, ..., 1/2^(k+1) with k = n - 2m.
std::vector<Rational> build_sigma1(std::size_t n, std::size_t m);

// True iff all 2^|sizes| subset sums are distinct and below 1/2.
bool subset_sums_distinct(std::span<const Rational> sizes);

// Schedules of sigma1 that put the first m jobs on distinct machines, written
// as the machine label (the first-m job it shares with) of each of the last k.
using Labels = std::vector<std::size_t>;

// Labels if the schedule lies in V, nothing otherwise.
std::optional<Labels> canonical_labels(const Schedule& schedule, std::size_t m);
Schedule schedule_from_labels(const Labels& labels, std::span<const Rational> sigma1, std::size_t m);

// The lexicographically smallest element of V that `alg` does not produce
// under any advice string. Throws BudgetTooLarge if 2^b >= m^k.
Labels choose_adversarial_schedule(const AdviceAlgorithm& alg, std::size_t n, std::size_t m);

std::vector<Rational> build_sigma2(const Schedule& adversarial, std::size_t m);

struct Certificate {
    bool balanced = false;
    std::size_t over = 0;   // machine with load > 1
    std::size_t under = 0;  // machine with load < 1
};

Certificate certify_nonoptimal(const Schedule& final_schedule);

struct AdviceOutcome {
    BitString advice;
    bool sigma1_in_v = false;
    Certificate certificate;
};

struct GameResult {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t bits = 0;
    bool budget_too_large = false;
    std::vector<Rational> sigma1;
    Labels adversarial;
    std::vector<Rational> sigma2;
    std::vector<AdviceOutcome> outcomes;

    // Every advice string ends unbalanced.
    bool lower_bound_holds() const;
    // Index into outcomes of a balanced run, if any.
    std::optional<std::size_t> balanced_outcome() const;
};

GameResult play_game(const AdviceAlgorithm& alg, std::size_t n, std::size_t m);

nlohmann::json to_json(const GameResult& game);

// Reference algorithms.
std::unique_ptr<AdviceAlgorithm> make_greedy();
std::unique_ptr<AdviceAlgorithm> make_one_bit_splitter();
// Reads the last k placements of sigma1 as a base-m number from `bits` advice
// bits, then puts each sigma2 job where it completes a load of exactly 1.
std::unique_ptr<AdviceAlgorithm> make_table(std::size_t bits);
// The table algorithm with ceil(k log m) bits: every element of V reachable.
std::unique_ptr<AdviceAlgorithm> make_index_advice(std::size_t n, std::size_t m);
std::unique_ptr<AdviceAlgorithm> make_all_on_one();

}  // namespace advlab::lb
