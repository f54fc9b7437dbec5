#include <doctest.h>

#include "inaccess/verify.hpp"

using namespace inaccess;

TEST_CASE("marginal-map ranks") {
    const MesModel m2 = MesModel::build(2);
    CHECK(rank_of_marginal_map(m2) == 3);
    for (int k = 0; k < 3; ++k) CHECK(rank_of_marginal_map(m2, k) == 2);

    const MesModel m3 = MesModel::build(3);
    CHECK(rank_of_marginal_map(m3) == 8);
    for (int k = 0; k < 4; ++k) CHECK(rank_of_marginal_map(m3, k) <= 6);

    const MesModel m5 = MesModel::build(5);
    CHECK(rank_of_marginal_map(m5) == 24);
    CHECK(rank_of_marginal_map(m5, 0) < 24);
}

TEST_CASE("full verification sweep passes at desk scale") {
    const auto reports = run_all(6, 7);
    REQUIRE(reports.size() == 12);
    const char* expected_ids[] = {"L1", "L2", "L3", "L4", "L5", "L6",
                                  "L7", "L8", "E1-E3", "C3", "Q2", "B3"};
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == expected_ids[i]);
        INFO(reports[i].id << ": " << reports[i].counterexample);
        CHECK(reports[i].pass);
    }
    CHECK(all_pass(reports));

    // the inflation-set sweep annotates the narrower printed union bound
    bool l5_note = false;
    for (const auto& r : reports)
        if (r.id == "L5" && !r.note.empty()) l5_note = true;
    CHECK(l5_note);
}

TEST_CASE("report serialization is deterministic and omits timings by default") {
    const auto reports = run_all(5, 3);
    const std::string a = reports_to_json(reports);
    const std::string b = reports_to_json(run_all(5, 3));
    CHECK(a == b);
    CHECK(a.find("\"id\":\"L1\"") != std::string::npos);
    CHECK(a.find("elapsed") == std::string::npos);
    CHECK(reports_to_json(reports, true).find("elapsed_seconds") != std::string::npos);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(run_all(13, 7), std::invalid_argument);
    CHECK_THROWS_AS(run_all(3, 7), std::invalid_argument);
}
