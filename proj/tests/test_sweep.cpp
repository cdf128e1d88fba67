#include <doctest.h>

#include "koszul/report.hpp"
#include "koszul/sweep.hpp"

using namespace koszul;

namespace {

Json verdicts_json(const SweepResult& res) {
    Json j = Json::array();
    for (const auto& v : res.verdicts) j.push_back(verdict_json(v));
    return j;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("verify_pattern passes on the shipped fixtures") {
    VerifyOptions opt;
    for (auto rels : std::vector<std::vector<std::pair<int, int>>>{
             {{0, 3}}, {{0, 3}, {3, 6}}, {{0, 3}, {2, 4}, {3, 6}}}) {
        int n = rels.back().second;
        PatternVerdict v = verify_pattern(RelationPattern::normalize(n, rels), opt);
        CHECK_MESSAGE(v.all_passed(), v.first_failure());
    }
}

TEST_CASE("serial and four-way parallel sweeps agree byte for byte") {
    for (int n_max : {3, 4}) {
        SweepConfig cfg;
        cfg.n_max = n_max;
        cfg.jobs = 1;
        SweepResult serial = run_sweep_serial(cfg);
        cfg.jobs = 4;
        SweepResult parallel = run_sweep_parallel(cfg);
        CHECK(serial.patterns == parallel.patterns);
        CHECK(verdicts_json(serial).dump() == verdicts_json(parallel).dump());
        CHECK(serial.adjudication.last_arg_failures ==
              parallel.adjudication.last_arg_failures);
        CHECK(serial.adjudication.first_arg_failures ==
              parallel.adjudication.first_arg_failures);
        CHECK(serial.all_passed());
        CHECK(parallel.all_passed());
    }
}

TEST_CASE("the n=6 enumeration contains the shipped fixture patterns") {
    auto pats = enumerate_patterns_up_to(6);
    auto find = [&](std::vector<std::pair<int, int>> rels) {
        RelationPattern want = RelationPattern::normalize(6, rels);
        for (const auto& pat : pats)
            if (pat == want) return true;
        return false;
    };
    CHECK(find({{0, 3}, {3, 6}}));
    CHECK(find({{0, 3}, {2, 4}, {3, 6}}));
}

TEST_CASE("sweep counts follow the enumerator") {
    SweepConfig cfg;
    cfg.n_max = 3;
    SweepResult res = run_sweep_serial(cfg);
    CHECK(res.patterns == 9);  // 1 + 1 + 2 + 5
    CHECK_FALSE(res.minimal_failure());
}

TEST_SUITE_END();
