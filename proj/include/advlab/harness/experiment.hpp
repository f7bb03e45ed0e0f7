#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advlab/core/epsilon.hpp"
#include "advlab/core/request_sequence.hpp"

namespace advlab::harness {

enum class Model { online, semionline };

Model parse_model(const std::string& text);
std::string to_string(Model model);

struct ExperimentConfig {
    std::string label;
    std::string problem = "bin";  // "bin" or an objective name: makespan, cover, lp2, ...
    Epsilon eps = Epsilon::from_inverse(2);
    std::size_t machines = 0;  // scheduling only
    RequestSequence requests;
    Model model = Model::online;
    std::uint64_t node_limit = 0;  // 0: the oracle's default
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class RunStatus { pass, fail, skipped, error };

std::string to_string(RunStatus status);

struct RunReport {
    std::string label;
    std::string problem;
    std::string epsilon;
    std::string model;
    std::size_t n = 0;
    std::size_t machines = 0;
    std::string digest;

    RunStatus status = RunStatus::pass;
    std::string message;

    // Exact rationals as "a/b"; for lp the values are power sums.
    std::string oracle_value;
    std::string online_value;
    std::string ratio;
    std::string bits_per_request;
    std::size_t total_bits = 0;
    std::optional<double> width_bound;

    std::vector<Check> checks;
    double wall_ms = 0;

    bool all_passed() const;
    const Check* find(const std::string& name) const;
};

// Stable 64-bit FNV-1a digest of the instance, as 16 hex digits.
std::string instance_digest(const RequestSequence& requests, std::size_t machines);

// Oracle, encoder, online consumer and verifier. ResourceExceeded and
// degenerate instances produce SKIPPED reports; other errors produce ERROR.
RunReport run_experiment(const ExperimentConfig& config);

// Runs with up to `parallelism` concurrent workers; order is preserved.
std::vector<RunReport> run_suite(const std::vector<ExperimentConfig>& configs, std::size_t parallelism);

}  // namespace advlab::harness
