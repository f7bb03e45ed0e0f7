#pragma once

#include <string>
#include <string_view>

#include "advlab/core/rational.hpp"

namespace advlab {

// A unit fraction 1/q, q >= 2.
class Epsilon {
public:
    static Epsilon from_inverse(unsigned q);
    static Epsilon parse(std::string_view text);

    unsigned inverse() const { return q_; }
    Rational value() const { return Rational(1, q_); }
    std::string to_string() const;

    friend bool operator==(const Epsilon&, const Epsilon&) = default;

private:
    explicit Epsilon(unsigned q) : q_(q) {}
    unsigned q_;
};

// Bin packing accepts 0 < eps <= 1/2.
void require_bin_packing_range(Epsilon eps);
// Scheduling accepts 0 < eps < 1/2.
void require_scheduling_range(Epsilon eps);

}  // namespace advlab
