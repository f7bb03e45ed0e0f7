#include "advlab/sched/objective.hpp"

#include <algorithm>
#include <charconv>

#include "advlab/core/errors.hpp"

namespace advlab::sched {

Objective Objective::lp(unsigned p) {
    if (p < 2) throw InvalidInput("lp needs an integer p >= 2");
    return {ObjectiveKind::lp, p};
}

Objective Objective::parse(std::string_view text) {
    if (text == "makespan" || text == "lpinf") return makespan();
    if (text == "cover") return cover();
    if (text.starts_with("lp")) {
        auto digits = text.substr(2);
        if (digits.starts_with(':') || digits.starts_with('=')) digits.remove_prefix(1);
        unsigned p = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return lp(p);
    }
    throw InvalidInput("unknown objective '" + std::string(text) + "'");
}

std::string Objective::to_string() const {
    switch (kind) {
    case ObjectiveKind::makespan: return "makespan";
    case ObjectiveKind::cover: return "cover";
    case ObjectiveKind::lp: return "lp" + std::to_string(p);
    }
    return "?";
}

Rational Objective::value(std::span<const Rational> loads) const {
    if (loads.empty()) throw InvalidInput("no machines");
    switch (kind) {
    case ObjectiveKind::makespan: return *std::max_element(loads.begin(), loads.end());
    case ObjectiveKind::cover: return *std::min_element(loads.begin(), loads.end());
    case ObjectiveKind::lp: return lp_power_sum(loads, p);
    }
    return 0;
}

Rational Objective::value(const Schedule& schedule) const {
    return value(schedule.loads());
}

bool Objective::better(const Rational& a, const Rational& b) const {
    return minimizing() ? a < b : a > b;
}

unsigned Objective::pattern_size(Epsilon eps) const {
    return kind == ObjectiveKind::cover ? eps.inverse() + 1 : eps.inverse();
}

Rational Objective::guarantee(const Rational& opt, Epsilon eps) const {
    const Rational e = eps.value();
    switch (kind) {
    case ObjectiveKind::makespan: return (1 + 2 * e) * opt;
    case ObjectiveKind::cover: return (1 - 2 * e) * opt;
    case ObjectiveKind::lp: return power(1 + 2 * e, p) * opt;
    }
    return 0;
}

bool Objective::meets_guarantee(const Rational& online, const Rational& opt, Epsilon eps) const {
    const Rational bound = guarantee(opt, eps);
    return minimizing() ? online <= bound : online >= bound;
}

}  // namespace advlab::sched
