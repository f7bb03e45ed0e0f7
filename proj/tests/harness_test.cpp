#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "advlab/harness/bounds.hpp"
#include "advlab/harness/experiment.hpp"
#include "advlab/harness/generator.hpp"
#include "advlab/harness/report.hpp"
#include "support.hpp"

using namespace advlab;
using namespace advlab::harness;
using testing::q;

TEST_CASE("generators") {
    CHECK(generate_bin_instance(0, 0).empty());
    CHECK(generate_bin_instance(5, 30) == generate_bin_instance(5, 30));
    CHECK_FALSE(generate_bin_instance(5, 30) == generate_bin_instance(6, 30));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto b = generate_bin_instance(seed, 40);
        CHECK(b.kind() == RequestKind::bin_items);
        for (const auto& s : b.entries()) {
            CHECK(64 % boost::multiprecision::denominator(s) == 0);
            CHECK(s > 0);
            CHECK(s <= 1);
        }
        auto j = generate_job_instance(seed, 14);
        CHECK(j.kind() == RequestKind::jobs);
        for (const auto& v : j.entries()) {
            CHECK(4 % boost::multiprecision::denominator(v) == 0);
            CHECK(v > 0);
            CHECK(v <= 8);
        }
    }
}

TEST_CASE("log enclosures") {
    for (auto x : {q(3, 2), q(5, 4), q(7), q(1, 3), q(1000, 999), q(65536)}) {
        auto e = ln_enclosure(x, 30);
        double truth = std::log(to_double(x));
        CHECK(to_double(e.lo) <= truth + 1e-12);
        CHECK(to_double(e.hi) >= truth - 1e-12);
        CHECK(e.lo <= e.hi);
        CHECK(to_double(e.hi - e.lo) < 1e-9);
        auto l2 = log2_enclosure(x, 30);
        CHECK(to_double(l2.lo) <= std::log2(to_double(x)) + 1e-12);
        CHECK(to_double(l2.hi) >= std::log2(to_double(x)) - 1e-12);
    }
    auto one = ln_enclosure(q(1), 5);
    CHECK(one.lo <= 0);
    CHECK(one.hi >= 0);
    auto a = sched_alphabet_log2(Epsilon::from_inverse(4), 30);
    double truth = std::log2(3 * std::log(4.0) / std::log(1.25));
    CHECK(to_double(a.lo) <= truth + 1e-12);
    CHECK(to_double(a.hi) >= truth - 1e-12);
    CHECK(to_double(a.hi - a.lo) < 1e-9);
}

TEST_CASE("width bounds") {
    auto e2 = Epsilon::from_inverse(2);
    CHECK(bin_width_within_bound(e2, 9));
    CHECK(bin_width_within_bound(e2, 12));
    CHECK_FALSE(bin_width_within_bound(e2, 13));
    CHECK(bin_width_bound_value(e2) == doctest::Approx(12.0));

    auto e4 = Epsilon::from_inverse(4);
    CHECK(sched_width_within_bound(e4, 15, 9));
    double bound = sched_width_bound_value(e4, 9);
    CHECK(bound > 15);
    CHECK_FALSE(sched_width_within_bound(e4, static_cast<std::size_t>(bound) + 1, 9));
    CHECK(sched_width_within_bound(e4, static_cast<std::size_t>(bound), 9));
    CHECK(sched_type_width_within_bound(e4, 4));
    CHECK(beta_within_bound(e4, 4, 9));
    CHECK(objective_width_within_bound(e4, sched::Objective::makespan(), 15));

    // N = 4, n = 10, eps = 1/2: 1 + 2 + 2 + 4 (6 + 1) + 4 + 10 (3 + 2) = 87.
    CHECK(bin_tape_within_bound(e2, 4, 10, 86));
    CHECK_FALSE(bin_tape_within_bound(e2, 4, 10, 87));
    CHECK(sched_tape_within_bound(e4, 2, 5, 9, 18 + 5 * 4));
    CHECK_FALSE(sched_tape_within_bound(e4, 2, 5, 9, 1000));
}

TEST_CASE("single experiments") {
    ExperimentConfig bin;
    bin.label = "halves";
    bin.requests = RequestSequence(RequestKind::bin_items, {q(1, 2), q(1, 2), q(1, 2), q(1, 2)});
    auto r = run_experiment(bin);
    CHECK(r.status == RunStatus::pass);
    CHECK(r.oracle_value == "2");
    CHECK(r.online_value == "2");
    CHECK(r.ratio == "1");
    CHECK(r.total_bits == 36);
    REQUIRE(r.find("ratio"));
    CHECK(r.find("ratio")->passed);
    CHECK(r.find("width_bound")->passed);
    CHECK(r.find("no_such_check") == nullptr);

    ExperimentConfig sched;
    sched.problem = "makespan";
    sched.eps = Epsilon::from_inverse(4);
    sched.machines = 2;
    sched.requests = RequestSequence(RequestKind::jobs, {q(3), q(3), q(2), q(2), q(2)});
    auto s = run_experiment(sched);
    CHECK(s.status == RunStatus::pass);
    CHECK(s.oracle_value == "6");
    CHECK(s.find("load_windows")->passed);
    CHECK(s.find("objective_ratio")->passed);
    CHECK(boost::multiprecision::mpq_rational(parse_rational(s.ratio)) <= q(3, 2));

    sched.model = Model::semionline;
    CHECK(run_experiment(sched).status == RunStatus::pass);

    auto degenerate = sched;
    degenerate.problem = "cover";
    degenerate.machines = 3;
    degenerate.requests = RequestSequence(RequestKind::jobs, {q(1), q(2)});
    CHECK(run_experiment(degenerate).status == RunStatus::skipped);

    auto starved = bin;
    starved.requests = generate_bin_instance(3, 40);
    starved.node_limit = 1;
    auto sk = run_experiment(starved);
    CHECK((sk.status == RunStatus::skipped || sk.status == RunStatus::pass));

    auto wrong = sched;
    wrong.requests = RequestSequence(RequestKind::bin_items, {q(1, 2)});
    CHECK(run_experiment(wrong).status == RunStatus::error);

    CHECK(instance_digest(bin.requests, 0) == instance_digest(bin.requests, 0));
    CHECK(instance_digest(bin.requests, 0) != instance_digest(bin.requests, 2));
    CHECK(instance_digest(bin.requests, 0).size() == 16);
}

TEST_CASE("suites and reports") {
    CHECK(run_suite({}, 4).empty());
    CHECK(suite_passed({}));
    CHECK(summarize({}).empty());

    std::vector<ExperimentConfig> configs;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ExperimentConfig c;
        c.label = "b" + std::to_string(seed);
        c.eps = Epsilon::from_inverse(seed % 2 ? 2 : 4);
        c.requests = generate_bin_instance(seed, 12);
        configs.push_back(c);
        ExperimentConfig s;
        s.label = "s" + std::to_string(seed);
        s.problem = seed % 2 ? "cover" : "lp2";
        s.eps = Epsilon::from_inverse(3);
        s.machines = 2;
        s.requests = generate_job_instance(seed, 6);
        configs.push_back(s);
    }
    auto serial = run_suite(configs, 1);
    auto parallel = run_suite(configs, 3);
    REQUIRE(serial.size() == configs.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].label == configs[i].label);
        CHECK(to_json(serial[i]).dump().size() > 0);
        CHECK(serial[i].ratio == parallel[i].ratio);
        CHECK(serial[i].status == parallel[i].status);
    }
    CHECK(suite_passed(serial));
    auto groups = summarize(serial);
    CHECK(groups.size() == 4);
    std::size_t runs = 0;
    for (const auto& [key, g] : groups) runs += g.runs;
    CHECK(runs == configs.size());

    auto doc = suite_to_json(serial);
    CHECK(doc["schema"] == report_schema);
    CHECK(doc["runs"].size() == configs.size());
    CHECK(doc["all_passed"] == true);

    std::ostringstream csv;
    write_csv(csv, serial);
    const std::string text = csv.str();
    CHECK(text.substr(0, text.find('\n')) == "instance,problem,epsilon,model,status,oracle,online,ratio,bits_per_request");
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(configs.size() + 1));

    auto broken = serial;
    broken[0].status = RunStatus::fail;
    CHECK_FALSE(suite_passed(broken));
    broken[0].status = RunStatus::skipped;
    CHECK(suite_passed(broken));
}
