#pragma once

#include <cstddef>

#include "advlab/core/epsilon.hpp"
#include "advlab/core/rational.hpp"
#include "advlab/sched/objective.hpp"

namespace advlab::harness {

// A closed interval with exact endpoints.
struct Interval {
    Rational lo;
    Rational hi;
};

// Enclosures of ln x and log2 x for rational x > 0, tighter with more terms.
Interval ln_enclosure(const Rational& x, unsigned terms);
Interval log2_enclosure(const Rational& x, unsigned terms);

// log2(3 log(1/eps) / log(1 + eps)), the per-entry alphabet term of the
// scheduling bounds.
Interval sched_alphabet_log2(Epsilon eps, unsigned terms);

// All checks below are exact: rational arithmetic or interval enclosures
// refined until they separate.

// width <= (1/eps) log(2/eps^2) + log(2/eps^2) + 3
bool bin_width_within_bound(Epsilon eps, std::size_t width);
// length < 1 + ceil(log N) + 2 ceil(log ceil(log N)) + N((1/eps) log(2/eps^2) + 1) + N + n(log(2/eps^2) + 2)
bool bin_tape_within_bound(Epsilon eps, std::size_t optimal_bins, std::size_t requests, std::size_t length);

// width <= log X + beta + 3
bool sched_width_within_bound(Epsilon eps, std::size_t width, std::size_t beta);
// ceil(log(T + 2)) < log X + 1
bool sched_type_width_within_bound(Epsilon eps, std::size_t type_width);
// beta <= v log X + 1
bool beta_within_bound(Epsilon eps, unsigned max_jobs, std::size_t beta);
// width <= (c/eps) log X + 4, c = 3 for cover and 2 otherwise
bool objective_width_within_bound(Epsilon eps, sched::Objective objective, std::size_t width);
// length < m beta + n(log X + 2)
bool sched_tape_within_bound(Epsilon eps, std::size_t machines, std::size_t requests, std::size_t beta,
                             std::size_t length);

// Approximate values for reports.
double bin_width_bound_value(Epsilon eps);
double sched_width_bound_value(Epsilon eps, std::size_t beta);

}  // namespace advlab::harness
