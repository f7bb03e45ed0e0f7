#pragma once

#include <string>
#include <string_view>

#include "advlab/core/epsilon.hpp"
#include "advlab/core/schedule.hpp"

namespace advlab::sched {

enum class ObjectiveKind { makespan, cover, lp };

// lp carries an integer p >= 2; p = infinity is spelled "makespan".
struct Objective {
    ObjectiveKind kind = ObjectiveKind::makespan;
    unsigned p = 0;

    static Objective makespan() { return {ObjectiveKind::makespan, 0}; }
    static Objective cover() { return {ObjectiveKind::cover, 0}; }
    static Objective lp(unsigned p);

    // "makespan", "cover", "lp2", "lp3", ... "lpinf" aliases makespan.
    static Objective parse(std::string_view text);
    std::string to_string() const;

    bool minimizing() const { return kind != ObjectiveKind::cover; }

    // Max load, min load, or the power sum sum L_i^p.
    Rational value(const Schedule& schedule) const;
    Rational value(std::span<const Rational> loads) const;
    // True iff a is strictly better than b.
    bool better(const Rational& a, const Rational& b) const;

    // Most non-small jobs per machine in a normalized optimum (v).
    unsigned pattern_size(Epsilon eps) const;

    // Guaranteed bound on the online value given OPT (as a value()).
    // makespan: (1+2eps) OPT; cover: (1-2eps) OPT; lp: (1+2eps)^p OPT.
    Rational guarantee(const Rational& opt, Epsilon eps) const;
    bool meets_guarantee(const Rational& online, const Rational& opt, Epsilon eps) const;

    friend bool operator==(const Objective&, const Objective&) = default;
};

}  // namespace advlab::sched
