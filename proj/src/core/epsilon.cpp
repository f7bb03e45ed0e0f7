#include "advlab/core/epsilon.hpp"

#include "advlab/core/errors.hpp"

namespace advlab {

Epsilon Epsilon::from_inverse(unsigned q) {
    if (q < 2) throw InvalidInput("epsilon must be 1/q with q >= 2");
    return Epsilon(q);
}

Epsilon Epsilon::parse(std::string_view text) {
    const Rational value = parse_rational(text);
    if (value <= 0) throw InvalidInput("epsilon must be positive: " + std::string(text));
    const Rational inverse = 1 / value;
    if (boost::multiprecision::denominator(inverse) != 1)
        throw InvalidInput("epsilon must be a unit fraction 1/q: " + std::string(text));
    const BigInt q = boost::multiprecision::numerator(inverse);
    if (q < 2 || q > 4096) throw InvalidInput("epsilon out of range: " + std::string(text));
    return from_inverse(q.convert_to<unsigned>());
}

std::string Epsilon::to_string() const {
    return "1/" + std::to_string(q_);
}

void require_bin_packing_range(Epsilon eps) {
    if (eps.inverse() < 2) throw InvalidInput("bin packing needs 0 < eps <= 1/2");
}

void require_scheduling_range(Epsilon eps) {
    if (eps.inverse() < 3) throw InvalidInput("scheduling needs 0 < eps < 1/2, got " + eps.to_string());
}

}  // namespace advlab
