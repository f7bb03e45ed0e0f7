#include "advlab/harness/bounds.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "advlab/core/errors.hpp"

namespace advlab::harness {

namespace {

constexpr unsigned precision_bits = 256;

Rational round_down(const Rational& x) {
    const BigInt scale = BigInt(1) << precision_bits;
    return Rational(floor(x * scale), scale);
}

Rational round_up(const Rational& x) {
    const BigInt scale = BigInt(1) << precision_bits;
    return Rational(ceil(x * scale), scale);
}

// 2 atanh(z) for 0 <= z < 1, which is ln((1+z)/(1-z)).
Interval two_atanh(const Rational& z, unsigned terms) {
    Rational sum = 0;
    Rational zpow = z;
    const Rational z2 = z * z;
    for (unsigned i = 0; i < terms; ++i) {
        sum += zpow / (2 * i + 1);
        zpow *= z2;
    }
    const Rational tail = zpow / ((2 * terms + 1) * (1 - z2));
    return {round_down(2 * sum), round_up(2 * (sum + tail))};
}

Interval ln2(unsigned terms) {
    return two_atanh(Rational(1, 3), terms);
}

Interval scale(const Interval& a, const Rational& c) {
    if (c >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

Interval add(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

// Division by an interval of positive numbers.
Interval divide(const Interval& a, const Interval& b) {
    if (b.lo <= 0) throw InvalidInput("interval divisor must be positive");
    const Rational lo = a.lo >= 0 ? a.lo / b.hi : a.lo / b.lo;
    const Rational hi = a.hi >= 0 ? a.hi / b.lo : a.hi / b.hi;
    return {round_down(lo), round_up(hi)};
}

// Decides 0 <= f by refining; f returns enclosures of the quantity.
bool nonnegative(const std::function<Interval(unsigned)>& f) {
    for (unsigned terms = 24; terms <= 384; terms *= 2) {
        const Interval v = f(terms);
        if (v.lo >= 0) return true;
        if (v.hi < 0) return false;
    }
    throw InternalBoundViolation("bound comparison did not separate; the two sides may be equal");
}

bool positive(const std::function<Interval(unsigned)>& f) {
    for (unsigned terms = 24; terms <= 384; terms *= 2) {
        const Interval v = f(terms);
        if (v.lo > 0) return true;
        if (v.hi <= 0) return false;
    }
    throw InternalBoundViolation("bound comparison did not separate; the two sides may be equal");
}

Rational r(std::size_t v) {
    return Rational(BigInt(v));
}

std::size_t ceil_log2_or_zero(std::size_t v) {
    return v <= 1 ? 0 : ceil_log2(BigInt(v));
}

}  // namespace

Interval ln_enclosure(const Rational& x, unsigned terms) {
    if (x <= 0) throw InvalidInput("logarithm of a non-positive number");
    // x = 2^k r with 1 <= r < 2.
    long k = 0;
    Rational rr = x;
    while (rr >= 2) {
        rr /= 2;
        ++k;
    }
    while (rr < 1) {
        rr *= 2;
        --k;
    }
    const Interval lr = two_atanh((rr - 1) / (rr + 1), terms);
    return add(scale(ln2(terms), Rational(k)), lr);
}

Interval log2_enclosure(const Rational& x, unsigned terms) {
    return divide(ln_enclosure(x, terms), ln2(terms));
}

Interval sched_alphabet_log2(Epsilon eps, unsigned terms) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, Interval> cache;
    const std::lock_guard lock(mutex);
    const auto key = std::make_pair(eps.inverse(), terms);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
    const Rational q(eps.inverse());
    const Interval num = scale(ln_enclosure(q, terms), Rational(3));
    const Interval den = ln_enclosure((q + 1) / q, terms);
    const Interval x = divide(num, den);
    const Interval lo = ln_enclosure(x.lo, terms);
    const Interval hi = ln_enclosure(x.hi, terms);
    return cache[key] = divide({lo.lo, hi.hi}, ln2(terms));
}

bool bin_width_within_bound(Epsilon eps, std::size_t width) {
    // width - 3 <= (q + 1) log(2 q^2)  <=>  2^(width - 3) <= (2 q^2)^(q + 1)
    if (width <= 3) return true;
    const BigInt q = eps.inverse();
    return (BigInt(1) << (width - 3)) <= power(BigInt(2 * q * q), eps.inverse() + 1);
}

bool bin_tape_within_bound(Epsilon eps, std::size_t optimal_bins, std::size_t requests, std::size_t length) {
    const std::size_t log_n = ceil_log2_or_zero(optimal_bins);
    const std::size_t header = log_n + 2 * ceil_log2_or_zero(log_n);
    // length < A + K log(2 q^2) with A = 1 + header + 2N + 2n and K = N q + n.
    const std::size_t a = 1 + header + 2 * optimal_bins + 2 * requests;
    const std::size_t k = optimal_bins * eps.inverse() + requests;
    if (length < a) return true;
    const BigInt q = eps.inverse();
    if (k == 0) return false;
    return (BigInt(1) << (length - a)) < power(BigInt(2 * q * q), static_cast<unsigned>(k));
}

bool sched_width_within_bound(Epsilon eps, std::size_t width, std::size_t beta) {
    return nonnegative([&](unsigned terms) {
        const Interval lx = sched_alphabet_log2(eps, terms);
        const Rational rhs_minus = r(beta) + 3 - r(width);
        return Interval{lx.lo + rhs_minus, lx.hi + rhs_minus};
    });
}

bool sched_type_width_within_bound(Epsilon eps, std::size_t type_width) {
    return positive([&](unsigned terms) {
        const Interval lx = sched_alphabet_log2(eps, terms);
        return Interval{lx.lo + 1 - r(type_width), lx.hi + 1 - r(type_width)};
    });
}

bool beta_within_bound(Epsilon eps, unsigned max_jobs, std::size_t beta) {
    return nonnegative([&](unsigned terms) {
        const Interval lx = scale(sched_alphabet_log2(eps, terms), Rational(max_jobs));
        return Interval{lx.lo + 1 - r(beta), lx.hi + 1 - r(beta)};
    });
}

bool objective_width_within_bound(Epsilon eps, sched::Objective objective, std::size_t width) {
    const unsigned c = objective.kind == sched::ObjectiveKind::cover ? 3 : 2;
    return nonnegative([&](unsigned terms) {
        const Interval lx = scale(sched_alphabet_log2(eps, terms), Rational(c * eps.inverse()));
        return Interval{lx.lo + 4 - r(width), lx.hi + 4 - r(width)};
    });
}

bool sched_tape_within_bound(Epsilon eps, std::size_t machines, std::size_t requests, std::size_t beta,
                             std::size_t length) {
    return positive([&](unsigned terms) {
        const Interval lx = scale(sched_alphabet_log2(eps, terms), r(requests));
        const Rational rest = r(machines * beta + 2 * requests) - r(length);
        return Interval{lx.lo + rest, lx.hi + rest};
    });
}

double bin_width_bound_value(Epsilon eps) {
    const double q = eps.inverse();
    return (q + 1) * std::log2(2 * q * q) + 3;
}

double sched_width_bound_value(Epsilon eps, std::size_t beta) {
    const double q = eps.inverse();
    return std::log2(3 * std::log(q) / std::log1p(1 / q)) + static_cast<double>(beta) + 3;
}

}  // namespace advlab::harness
