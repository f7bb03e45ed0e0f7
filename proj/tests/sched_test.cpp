#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "advlab/core/errors.hpp"
#include "advlab/sched/advice.hpp"
#include "advlab/sched/exact_solver.hpp"
#include "advlab/sched/online.hpp"
#include "advlab/sched/oracle.hpp"
#include "support.hpp"

using namespace advlab;
using namespace advlab::sched;
using testing::q;

namespace {

RequestSequence jobs(std::vector<Rational> v) {
    return RequestSequence(RequestKind::jobs, std::move(v));
}

RequestSequence random_jobs(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 2)
            v.emplace_back(1 + rng() % 4, 4);
        else
            v.emplace_back(8 + rng() % 25, 4);
    }
    return jobs(std::move(v));
}

Rational brute_force_optimum(const RequestSequence& s, std::size_t m, Objective obj) {
    std::vector<Rational> v(s.entries().begin(), s.entries().end());
    std::optional<Rational> best;
    testing::for_each_assignment(v, m, [&](const std::vector<Rational>& loads) {
        Rational val = obj.value(loads);
        if (!best || obj.better(val, *best)) best = val;
    });
    return *best;
}

const std::vector<Objective> objectives{Objective::makespan(), Objective::cover(), Objective::lp(2), Objective::lp(3)};

}  // namespace

TEST_CASE("objectives") {
    CHECK(Objective::parse("makespan") == Objective::makespan());
    CHECK(Objective::parse("lpinf") == Objective::makespan());
    CHECK(Objective::parse("cover") == Objective::cover());
    CHECK(Objective::parse("lp2") == Objective::lp(2));
    CHECK(Objective::parse("lp:3") == Objective::lp(3));
    CHECK_THROWS_AS(Objective::parse("lp1"), InvalidInput);
    CHECK_THROWS_AS(Objective::parse("median"), InvalidInput);
    std::vector<Rational> loads{q(6), q(4)};
    CHECK(Objective::makespan().value(loads) == 6);
    CHECK(Objective::cover().value(loads) == 4);
    CHECK(Objective::lp(2).value(loads) == 52);
    CHECK(Objective::cover().better(q(5), q(4)));
    CHECK(Objective::makespan().better(q(4), q(5)));
    auto e = Epsilon::from_inverse(4);
    CHECK(Objective::makespan().guarantee(q(6), e) == 9);
    CHECK(Objective::cover().guarantee(q(6), e) == 3);
    CHECK(Objective::lp(2).guarantee(q(72), e) == 162);
    CHECK(Objective::makespan().pattern_size(e) == 4);
    CHECK(Objective::lp(2).pattern_size(e) == 4);
    CHECK(Objective::cover().pattern_size(e) == 5);
}

TEST_CASE("exact scheduling solver") {
    auto s = jobs({q(3), q(3), q(2), q(2), q(2)});
    CHECK(solve_optimal_schedule(s, 2, Objective::makespan()).value == 6);
    CHECK(solve_optimal_schedule(s, 2, Objective::cover()).value == 6);
    CHECK(solve_optimal_schedule(s, 2, Objective::lp(2)).value == 72);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 120; ++t) {
        std::size_t m = 2 + rng() % 2;
        auto inst = random_jobs(rng, 1 + rng() % 7);
        for (const auto& obj : objectives) {
            auto opt = solve_optimal_schedule(inst, m, obj);
            CHECK(opt.value == brute_force_optimum(inst, m, obj));
            CHECK(obj.value(opt.schedule) == opt.value);
            CHECK(opt.schedule.job_count() == inst.size());
        }
    }

    std::vector<Rational> many;
    for (int i = 0; i < 30; ++i) many.emplace_back(100 + (i * 53) % 97, 7);
    CHECK_THROWS_AS(solve_optimal_schedule(jobs(many), 4, Objective::lp(2), 50), ResourceExceeded);
}

TEST_CASE("job classes") {
    auto e = Epsilon::from_inverse(4);
    CHECK(type_count(e) == 7);
    CHECK(type_count(Epsilon::from_inverse(3)) == 4);
    JobClassifier c(e, q(1));
    CHECK(c.classify(q(3, 10)) == 0);
    CHECK(c.classify(q(1, 5)) == small_type);
    CHECK(c.classify(q(1, 4)) == small_type);
    CHECK(c.classify(q(5, 16)) == 0);
    CHECK(c.classify(q(1)) == 6);
    CHECK(c.classify(q(101, 100)) == 7);
    CHECK(c.huge_type() == 7);

    // Against a direct evaluation of the geometric classes, on the 1/64 grid.
    for (unsigned qq : {3u, 4u, 5u}) {
        auto eps = Epsilon::from_inverse(qq);
        JobClassifier cl(eps, q(2));
        unsigned T = type_count(eps);
        CHECK(power(Rational(qq + 1, qq), T) >= qq);
        CHECK(power(Rational(qq + 1, qq), T - 1) < qq);
        int last = -2;
        for (int k = 1; k <= 200; ++k) {
            Rational v(k, 64);
            int expect;
            if (v <= 2 * eps.value())
                expect = small_type;
            else if (v > 2)
                expect = static_cast<int>(T);
            else {
                expect = 0;
                while (v > 2 * eps.value() * power(1 + eps.value(), expect + 1) && expect + 1 < static_cast<int>(T))
                    ++expect;
            }
            CHECK(cl.classify(v) == expect);
            CHECK(cl.classify(v) >= last);
            last = cl.classify(v);
        }
    }
}

TEST_CASE("machine patterns") {
    auto e = Epsilon::from_inverse(4);
    MachinePatternIndexing idx(e, 4);
    CHECK(idx.count() == 332);
    CHECK(idx.width() == 9);
    auto layout = SchedAdviceLayout::for_plan(e, Objective::makespan());
    CHECK(layout.w_width == 4);
    CHECK(layout.z_width == 9);
    CHECK(layout.total_width == 15);
    CHECK(layout.small_code() == 8);

    CHECK(idx.rank(MachinePattern::small_only()) == 0);
    CHECK(idx.rank(MachinePattern::huge_only()) == 1);
    CHECK(idx.rank(MachinePattern::of_jobs({})) == 2);

    // Count equals the number of multisets of size <= v over T types, plus two.
    for (unsigned qq : {3u, 4u}) {
        auto eps = Epsilon::from_inverse(qq);
        unsigned T = type_count(eps);
        for (unsigned v : {qq, qq + 1}) {
            std::size_t multisets = 0;
            std::vector<unsigned> cur;
            std::function<void(unsigned)> go = [&](unsigned lo) {
                ++multisets;
                if (cur.size() == v) return;
                for (unsigned t = lo; t < T; ++t) {
                    cur.push_back(t);
                    go(t);
                    cur.pop_back();
                }
            };
            go(0);
            MachinePatternIndexing mi(eps, v);
            CHECK(mi.count() == multisets + 2);
            for (std::size_t r = 0; r < multisets + 2; ++r) CHECK(mi.rank(mi.unrank(BigInt(r))) == r);
        }
    }
    CHECK_THROWS_AS(idx.unrank(BigInt(332)), MalformedAdvice);

    auto p = MachinePattern::of_jobs({0, 3, 3});
    CHECK(p.slots(3, 7) == 2);
    CHECK(p.slots(1, 7) == 0);
    CHECK(MachinePattern::huge_only().slots(7, 7) == 1);
    CHECK(MachinePattern::small_only().slots(0, 7) == 0);
}

TEST_CASE("frames") {
    auto e = Epsilon::from_inverse(4);
    auto layout = SchedAdviceLayout::for_plan(e, Objective::makespan());
    auto zero = decode_request(BitString(15), layout);
    CHECK(zero == SchedAdvice{});
    CHECK_THROWS_AS(decode_request(BitString(14), layout), MalformedAdvice);
    BitString bad;
    bad.append_uint(BigInt(9), 4);
    bad.append_uint(BigInt(0), 11);
    CHECK_THROWS_AS(decode_request(bad, layout), MalformedAdvice);

    MachinePatternIndexing idx(e, 4);
    for (int r = 0; r < 332; r += 7) {
        BitString f;
        f.append_uint(BigInt(8), 4);
        f.append(true);
        f.append(r % 2);
        f.append_uint(BigInt(r), 9);
        auto a = decode_request(f, layout);
        CHECK(a.type == small_type);
        CHECK(a.move);
        CHECK(a.y == (r % 2 == 1));
        CHECK(a.pattern_rank == r);
    }
}

TEST_CASE("small quotas") {
    std::vector<Rational> quarter(8, q(1, 4));
    auto sq = small_quota_assignment(quarter, std::vector<Rational>{q(1), q(1)});
    CHECK(sq.ends == std::vector<std::size_t>{4, 8});
    CHECK(sq.kappa == std::vector<std::size_t>{4, 4});

    auto none = small_quota_assignment(std::vector<Rational>{}, std::vector<Rational>{q(0), q(0)});
    CHECK(none.kappa == std::vector<std::size_t>{0, 0});

    auto zero = small_quota_assignment(std::vector<Rational>{q(1, 4), q(1, 4)}, std::vector<Rational>{q(0), q(1, 2)});
    CHECK(zero.kappa == std::vector<std::size_t>{0, 2});

    // Property: each machine's share lies within the largest small job of its target.
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; ++t) {
        std::size_t m = 1 + rng() % 5;
        std::vector<std::vector<Rational>> per(m);
        std::vector<Rational> targets(m, Rational(0));
        std::vector<std::size_t> owner;
        std::vector<Rational> sizes;
        std::size_t n = rng() % 20;
        for (std::size_t j = 0; j < n; ++j) {
            Rational s(1 + rng() % 8, 32);
            std::size_t k = rng() % m;
            sizes.push_back(s);
            targets[k] += s;
        }
        auto r = small_quota_assignment(sizes, targets);
        REQUIRE(r.kappa.size() == m);
        Rational biggest = sizes.empty() ? Rational(0) : *std::max_element(sizes.begin(), sizes.end());
        std::size_t start = 0;
        for (std::size_t k = 0; k < m; ++k) {
            Rational got = 0;
            for (std::size_t j = start; j < start + r.kappa[k]; ++j) got += sizes[j];
            start += r.kappa[k];
            CHECK(got >= targets[k] - biggest);
            CHECK(got <= targets[k] + biggest);
        }
        CHECK(start == n);
    }
}

TEST_CASE("choose U and normalization") {
    auto s = jobs({q(3), q(3), q(2), q(2), q(2)});
    CHECK(choose_U(s, 2, Objective::makespan(), q(6)) == 6);
    CHECK(choose_U(s, 2, Objective::lp(2), q(72)) == 6);
    CHECK(choose_U(s, 2, Objective::cover(), q(6)) == 6);
    CHECK_THROWS_AS(build_plan(jobs({q(1), q(1)}), 3, Epsilon::from_inverse(4), Objective::cover()),
                    DegenerateInstance);

    // Cover optimum 4 with the huge job sharing a machine.
    auto c = jobs({q(10), q(4), q(4), q(1)});
    auto opt = schedule_from_assignment(std::vector<std::size_t>{0, 1, 2, 0}, c.entries(), 3);
    auto norm = normalize(opt, c, Objective::cover(), Epsilon::from_inverse(4), q(4));
    CHECK(machine_cover(norm) == 4);
    for (std::size_t i = 0; i < 3; ++i)
        if (std::count(norm.jobs_on(i).begin(), norm.jobs_on(i).end(), 0)) CHECK(norm.jobs_on(i).size() == 1);

    // A non-optimal makespan schedule with a job above U is rejected.
    auto bad = schedule_from_assignment(std::vector<std::size_t>{0, 0, 1, 1, 1}, s.entries(), 2);
    CHECK_THROWS_AS(normalize(bad, s, Objective::makespan(), Epsilon::from_inverse(4), q(2)), NormalizationFailure);
    auto good = normalize(bad, s, Objective::makespan(), Epsilon::from_inverse(4), q(6));
    CHECK(good == bad);
}

namespace {

void check_plan(const SchedulePlan& p, const RequestSequence& s) {
    const std::size_t m = p.machines;
    const Rational e = p.eps.value();
    // Machines are ordered by their first non-small job; the rest go last.
    std::vector<std::size_t> first(m, SIZE_MAX);
    for (std::size_t k = 0; k < m; ++k)
        for (auto j : p.s_star.jobs_on(k))
            if (p.job_type[j] != small_type) first[k] = std::min(first[k], j);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (first[k] == SIZE_MAX) CHECK(first[k + 1] == SIZE_MAX);
        else if (first[k + 1] != SIZE_MAX) CHECK(first[k] < first[k + 1]);
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t nonsmall = 0;
        Rational y = 0, huge = 0;
        for (auto j : p.s_star.jobs_on(k)) {
            if (p.job_type[j] == small_type) y += s[j];
            else ++nonsmall;
            if (p.job_type[j] == static_cast<int>(p.types)) CHECK(p.s_star.jobs_on(k).size() == 1);
        }
        CHECK(nonsmall <= p.max_jobs);
        CHECK(p.small_target[k] == y);
        CHECK(within_window(p.target.load(k), p.s_star.load(k), p.eps, p.U));
    }
    // Permutation: zero-quota machines ascending from 0, the others descending from m-1.
    std::size_t lo = 0, hi = m;
    for (std::size_t k = 0; k < m; ++k) {
        if (p.kappa()[k] == 0) CHECK(p.permutation[k] == lo++);
        else CHECK(p.permutation[k] == --hi);
    }
    CHECK(p.objective.value(p.s_star) == p.opt_value);
    (void)e;
}

void check_online(const SchedulePlan& p, const RequestSequence& s, const Schedule& out) {
    const Rational eU = p.eps.value() * p.U;
    for (std::size_t k = 0; k < p.machines; ++k) {
        const std::size_t i = p.permutation[k];
        CHECK(within_window(out.load(i), p.s_star.load(k), p.eps, p.U));
        Rational small = 0;
        for (auto j : out.jobs_on(i))
            if (p.job_type[j] == small_type) small += s[j];
        CHECK(small >= p.small_target[k] - eU);
        CHECK(small <= p.small_target[k] + eU);
    }
    CHECK(p.objective.meets_guarantee(p.objective.value(out), p.opt_value, p.eps));
}

}  // namespace

TEST_CASE("plans and online replay") {
    auto s = jobs({q(3), q(3), q(2), q(2), q(2)});
    auto e = Epsilon::from_inverse(4);
    auto plan = build_plan(s, 2, e, Objective::makespan());
    check_plan(plan, s);
    auto out = run_online(s, encode_stream(plan), e, Objective::makespan(), 2);
    check_online(plan, s, out);
    CHECK(makespan(out) <= 9);

    auto tape = encode_semionline_tape(plan);
    std::size_t per_request = 0;
    for (auto t : plan.job_type) per_request += 4 + (t == small_type ? 1 : 0);
    CHECK(tape.width() == 18 + per_request);

    auto single = jobs({q(5)});
    auto sp = build_plan(single, 1, e, Objective::makespan());
    auto so = run_online(single, encode_stream(sp), e, Objective::makespan(), 1);
    CHECK(so.load(0) == 5);

    auto smalls = jobs({q(1), q(1), q(1), q(1), q(1), q(1), q(1), q(1), q(9)});
    auto ap = build_plan(smalls, 2, Epsilon::from_inverse(3), Objective::lp(2));
    check_plan(ap, smalls);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 160; ++t) {
        std::size_t m = 2 + t % 3;
        auto inst = random_jobs(rng, m + rng() % (11 - m));
        auto eps = Epsilon::from_inverse(t % 2 ? 3 : 4);
        for (const auto& obj : objectives) {
            auto p = build_plan(inst, m, eps, obj);
            check_plan(p, inst);
            auto o = run_online(inst, encode_stream(p), eps, obj, m);
            check_online(p, inst, o);
            auto so2 = run_semionline(inst, encode_semionline_tape(p), eps, obj, m);
            check_online(p, inst, so2);
            if (obj.kind == ObjectiveKind::cover)
                for (std::size_t i = 0; i < m; ++i)
                    for (auto j : o.jobs_on(i))
                        if (p.job_type[j] == static_cast<int>(p.types)) CHECK(o.jobs_on(i).size() == 1);
        }
    }
}

TEST_CASE("online framework steps") {
    auto e = Epsilon::from_inverse(4);
    auto layout = SchedAdviceLayout::for_plan(e, Objective::makespan());
    MachinePatternIndexing idx(e, 4);
    auto frame = [&](unsigned code, bool move, bool y, const BigInt& rank) {
        BitString f;
        f.append_uint(BigInt(code), layout.w_width);
        f.append(move);
        f.append(y);
        f.append_uint(rank, layout.z_width);
        return f;
    };
    {
        FrameworkOnline on(e, Objective::makespan(), 3);
        CHECK(on.step(0, q(1), frame(6, false, true, idx.rank(MachinePattern::of_jobs({6})))) == 0);
        CHECK(on.pattern_of(0).has_value());
    }
    {
        FrameworkOnline on(e, Objective::makespan(), 3);
        CHECK(on.step(0, q(1, 8), frame(8, false, false, 0)) == 2);
        CHECK(on.pattern_of(2) == MachinePattern::small_only());
        CHECK(on.step(1, q(1, 8), frame(8, true, false, 0)) == 1);
    }
    {
        FrameworkOnline on(e, Objective::makespan(), 2);
        on.step(0, q(1, 8), frame(8, false, false, 0));
        on.step(1, q(1, 8), frame(8, true, false, 0));
        CHECK_THROWS_AS(on.step(2, q(1, 8), frame(8, true, false, 0)), AdviceInconsistency);
    }
    {
        FrameworkOnline on(e, Objective::makespan(), 1);
        CHECK_THROWS_AS(on.step(0, q(1), frame(6, false, true, 0)), AdviceInconsistency);
    }
}

TEST_CASE("index advice") {
    auto s = jobs({q(3), q(1), q(2)});
    auto target = schedule_from_assignment(std::vector<std::size_t>{2, 0, 2}, s.entries(), 3);
    CHECK(index_advice_width(3) == 2);
    CHECK(index_advice_width(1) == 0);
    auto frames = encode_index_advice(target, 3);
    CHECK(run_index_advice(s, frames, 3) == target);
}

TEST_CASE("plan json") {
    auto s = jobs({q(3), q(3), q(2), q(2), q(2)});
    auto doc = plan_to_json(build_plan(s, 2, Epsilon::from_inverse(4), Objective::makespan()));
    CHECK(doc.is_object());
}
