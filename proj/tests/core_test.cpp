#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "advlab/core/bit_string.hpp"
#include "advlab/core/combinatorics.hpp"
#include "advlab/core/epsilon.hpp"
#include "advlab/core/errors.hpp"
#include "advlab/core/instance_io.hpp"
#include "advlab/core/packing.hpp"
#include "advlab/core/quota.hpp"
#include "advlab/core/schedule.hpp"
#include "support.hpp"

using namespace advlab;
using testing::q;

TEST_CASE("rational parse and format") {
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-2") == q(-2));
    CHECK(format_rational(q(3, 2)) == "3/2");
    CHECK(format_rational(q(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational x(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97 + 1));
        CHECK(parse_rational(format_rational(x)) == x);
    }
}

TEST_CASE("integer helpers") {
    CHECK(ceil_log2(BigInt(1)) == 0);
    CHECK(ceil_log2(BigInt(5)) == 3);
    CHECK(ceil_log2(BigInt(8)) == 3);
    CHECK(ceil_log2(BigInt(332)) == 9);
    CHECK(bit_length(BigInt(0)) == 0);
    CHECK(bit_length(BigInt(8)) == 4);
    CHECK(floor(q(-7, 2)) == -4);
    CHECK(ceil(q(7, 2)) == 4);
    CHECK(power(q(5, 4), 7) == Rational(78125, 16384));
    CHECK(binomial(11, 7) == 330);
    CHECK(binomial(3, 5) == 0);

    auto s = scale_to_common_denominator(std::vector<Rational>{q(1, 4), q(1, 6), q(2)}, 1 << 20);
    CHECK(s.denominator == 12);
    CHECK(s.values == std::vector<std::int64_t>{3, 2, 24});
    CHECK_THROWS_AS(scale_to_common_denominator(std::vector<Rational>{q(1, 1 << 20), q(1, 3)}, 1 << 20),
                    ResourceExceeded);
}

TEST_CASE("epsilon") {
    CHECK(Epsilon::parse("1/4").inverse() == 4);
    CHECK(Epsilon::parse("1/4").value() == q(1, 4));
    CHECK(Epsilon::from_inverse(3).to_string() == "1/3");
    CHECK_THROWS_AS(Epsilon::parse("2/5"), InvalidInput);
    CHECK_THROWS_AS(Epsilon::from_inverse(1), InvalidInput);
    CHECK_NOTHROW(require_bin_packing_range(Epsilon::from_inverse(2)));
    CHECK_THROWS_AS(require_scheduling_range(Epsilon::from_inverse(2)), InvalidInput);
    CHECK_NOTHROW(require_scheduling_range(Epsilon::from_inverse(3)));
}

TEST_CASE("bit strings") {
    BitString b;
    b.append_uint(BigInt(5), 4);
    b.append(true);
    CHECK(b.to_binary() == "01011");
    CHECK(b.to_hex() == "58");
    CHECK(BitString::from_hex("58", 5) == b);
    CHECK(BitString::from_binary("01011") == b);
    CHECK_FALSE(b.all_zero());
    CHECK(BitString(6).all_zero());

    BitReader r(b);
    CHECK(r.read_uint(4) == 5);
    CHECK(r.read_bit());
    CHECK(r.remaining() == 0);
    CHECK_THROWS_AS(r.read_bit(), MalformedAdvice);

    CHECK_THROWS_AS(BitString::from_hex("5f", 5), MalformedAdvice);
    CHECK_THROWS_AS(BitString::from_binary("012"), MalformedAdvice);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        BitString x;
        std::size_t w = rng() % 40;
        for (std::size_t k = 0; k < w; ++k) x.append(rng() & 1);
        CHECK(BitString::from_hex(x.to_hex(), w) == x);
        CHECK(BitString::from_binary(x.to_binary()) == x);
    }
}

TEST_CASE("self-delimiting code") {
    BitString four;
    append_self_delimiting(four, BigInt(4));
    CHECK(four.width() == 4);
    CHECK(self_delimiting_length(BigInt(4)) == 4);

    auto reference_length = [](std::size_t n) {
        std::size_t l = 0;
        while ((std::size_t{1} << l) < n) ++l;
        l = std::max<std::size_t>(l, 1);
        std::size_t j = 0;
        while ((std::size_t{1} << j) < l) ++j;
        j = std::max<std::size_t>(j, 1);
        return l + 2 * j;
    };

    // Concatenated codes must decode back in sequence.
    BitString tape;
    std::vector<BigInt> values;
    for (std::size_t n = 1; n <= 3000; n += (n < 100 ? 1 : 37)) {
        values.emplace_back(n);
        append_self_delimiting(tape, BigInt(n));
        CHECK(self_delimiting_length(BigInt(n)) == reference_length(n));
    }
    BigInt big = power(BigInt(2), 70) + 3;
    values.push_back(big);
    append_self_delimiting(tape, big);
    BitReader r(tape);
    for (const auto& v : values) CHECK(read_self_delimiting(r) == v);
    CHECK(r.remaining() == 0);

    // For N >= 3 the length is ceil(log N) + 2 ceil(log ceil(log N)).
    for (std::size_t n = 3; n <= 1000; ++n) {
        std::size_t l = ceil_log2(BigInt(n));
        CHECK(self_delimiting_length(BigInt(n)) == l + 2 * ceil_log2(BigInt(l)));
    }
}

namespace {

// Multisets padded at the end with a blank (-1), in lexicographic order.
std::vector<std::vector<std::size_t>> enumerate_multisets(std::size_t alphabet, std::size_t slots) {
    std::vector<std::vector<long>> padded;
    std::vector<long> cur;
    std::function<void(long)> go = [&](long lowest) {
        std::vector<long> p = cur;
        p.resize(slots, -1);
        padded.push_back(p);
        if (cur.size() == slots) return;
        for (long s = lowest; s < static_cast<long>(alphabet); ++s) {
            cur.push_back(s);
            go(s);
            cur.pop_back();
        }
    };
    go(0);
    std::sort(padded.begin(), padded.end());
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : padded) {
        std::vector<std::size_t> m;
        for (long s : p)
            if (s >= 0) m.push_back(static_cast<std::size_t>(s));
        out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("multiset indexing matches exhaustive order") {
    for (std::size_t alphabet = 1; alphabet <= 6; ++alphabet) {
        for (std::size_t slots = 0; slots <= 4; ++slots) {
            MultisetIndexing idx(alphabet, slots);
            auto all = enumerate_multisets(alphabet, slots);
            REQUIRE(idx.count() == all.size());
            CHECK(idx.count() == binomial(alphabet + slots, slots));
            for (std::size_t r = 0; r < all.size(); ++r) {
                CHECK(idx.rank(all[r]) == r);
                CHECK(idx.unrank(BigInt(r)) == all[r]);
            }
            CHECK_THROWS_AS(idx.unrank(idx.count()), MalformedAdvice);
        }
    }
    MultisetIndexing idx(4, 2);
    CHECK(idx.count() == 15);
    CHECK(idx.rank(std::vector<std::size_t>{}) == 0);
    CHECK_THROWS_AS(idx.rank(std::vector<std::size_t>{2, 1}), InvalidInput);
    CHECK_THROWS_AS(idx.rank(std::vector<std::size_t>{4}), InvalidInput);
    CHECK_THROWS_AS(idx.rank(std::vector<std::size_t>{0, 0, 0}), InvalidInput);
}

TEST_CASE("next fit") {
    auto run = [](std::vector<Rational> sizes) {
        std::vector<IndexedSize> items;
        for (std::size_t i = 0; i < sizes.size(); ++i) items.push_back({i, sizes[i]});
        return next_fit(items, Packing{});
    };
    auto p = run({q(1, 2), q(1, 2), q(1, 2)});
    CHECK(p.partition() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    CHECK(run({q(3, 5), q(3, 5), q(3, 5)}).size() == 3);
    CHECK(run({}).empty());

    // Abandoned bins stay abandoned even if a later item would fit.
    auto abandoned = run({q(1, 2), q(3, 4), q(1, 4)});
    CHECK(abandoned.partition() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});

    // Existing bins are filled first.
    Packing pre;
    pre.place(pre.open_bin(), 9, q(1, 2));
    std::vector<IndexedSize> items{{0, q(1, 4)}, {1, q(1, 2)}};
    auto ext = next_fit(items, pre);
    CHECK(ext.size() == 2);
    CHECK(ext[0].load == q(3, 4));

    Packing bad;
    bad.place(bad.open_bin(), 0, q(2, 3));
    CHECK_THROWS_AS(bad.place(0, 1, q(1, 2)), CapacityViolation);

    // Property: total load preserved, no bin overfull, consecutive bins overflow.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto sizes = testing::random_grid(rng, rng() % 20, 1, 64, 64);
        auto pk = run(sizes);
        Rational total = 0;
        for (const auto& b : pk.bins()) {
            CHECK(b.load <= 1);
            total += b.load;
        }
        CHECK(total == std::accumulate(sizes.begin(), sizes.end(), Rational(0)));
        for (std::size_t b = 0; b + 1 < pk.size(); ++b) CHECK(pk[b].load + sizes[pk[b + 1].items.front()] > 1);
    }
}

TEST_CASE("schedules and loads") {
    std::vector<Rational> jobs{q(3), q(3), q(2), q(2), q(2)};
    auto s = schedule_from_assignment(std::vector<std::size_t>{0, 0, 1, 1, 1}, jobs, 2);
    CHECK(load_vector(s) == std::vector<Rational>{q(6), q(6)});
    CHECK(lp_power_sum(s, 2) == 72);
    CHECK(makespan(s) == 6);
    CHECK(machine_cover(s) == 6);
    CHECK(load_vector(Schedule(2)) == std::vector<Rational>{q(0), q(0)});
    CHECK(lp_power_sum(std::vector<Rational>{q(1), q(2), q(3)}, 3) == 36);
    CHECK(lp_power_sum(std::vector<Rational>{q(0), q(0)}, 2) == 0);
    CHECK_THROWS_AS(lp_power_sum(std::vector<Rational>{q(1)}, 1), InvalidInput);

    Schedule one(3);
    one.assign(0, q(7, 3), 0);
    CHECK(load_vector(one) == std::vector<Rational>{q(7, 3), q(0), q(0)});

    auto r = s.reordered(std::vector<std::size_t>{1, 0}, jobs);
    CHECK(r.jobs_on(0) == std::vector<std::size_t>{2, 3, 4});
    CHECK(r.job_count() == 5);
}

TEST_CASE("request sequences") {
    CHECK_THROWS_AS(RequestSequence(RequestKind::bin_items, {q(3, 2)}), InvalidInput);
    CHECK_THROWS_AS(RequestSequence(RequestKind::bin_items, {q(0)}), InvalidInput);
    CHECK_THROWS_AS(RequestSequence(RequestKind::jobs, {q(-1)}), InvalidInput);
    RequestSequence jobs(RequestKind::jobs, {q(5), q(1, 2)});
    CHECK(jobs.total() == q(11, 2));
}

TEST_CASE("pointer move bits") {
    CHECK(pointer_move_bits(std::vector<std::size_t>{2, 1}, 3) == std::vector<bool>{false, false, true});
    CHECK(pointer_move_bits(std::vector<std::size_t>{5}, 5) == std::vector<bool>(5, false));
    CHECK(pointer_move_bits(std::vector<std::size_t>{0, 2, 0, 1}, 3) == std::vector<bool>{false, false, true});
    CHECK(pointer_move_bits(std::vector<std::size_t>{}, 0).empty());
    CHECK(pointer_move_bit(std::vector<std::size_t>{2, 1}, 2));
}

TEST_CASE("json round trips") {
    Instance inst{RequestSequence(RequestKind::jobs, {q(3), q(1, 4)}), 2};
    auto doc = to_json(inst);
    CHECK(doc["kind"] == "sched");
    CHECK(doc["entries"][1] == "1/4");
    auto back = instance_from_json(doc);
    CHECK(back.requests == inst.requests);
    CHECK(back.machines == std::optional<std::size_t>(2));

    CHECK_THROWS_AS(instance_from_json(nlohmann::json{{"kind", "bin"}, {"entries", {"2"}}}), InvalidInput);

    auto bits = BitString::from_binary("1010011");
    CHECK(bit_string_from_json(to_json(bits)) == bits);
}
