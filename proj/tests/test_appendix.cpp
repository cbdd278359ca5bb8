#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "weyl/appendix.hpp"
#include "weyl/error.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/rootset.hpp"

using namespace weyl;

TEST_CASE("fixture counts per rank") {
    const std::map<int, int> expected{{3, 50}, {4, 11}, {5, 6}, {6, 4}, {7, 2}, {8, 1}};
    for (const auto& [rank, count] : expected) {
        std::vector<RootSet> systems = load_fixtures(rank);
        CHECK(static_cast<int>(systems.size()) == count);
        for (const RootSet& R : systems) CHECK(R.rank == rank);
    }
    CHECK_THROWS_AS(load_fixtures(2), input_error);
    CHECK_THROWS_AS(load_fixtures(9), input_error);
}

TEST_CASE("table rows match the fixtures") {
    const std::vector<Table1Row>& rows = table1();
    CHECK(rows.size() == 74);
    std::map<int, int> seen;
    for (const Table1Row& row : rows) {
        CHECK(row.nr == ++seen[row.rank]);
        // n = m * |Aut|, and the label names a group of the tabulated order.
        CHECK(row.n_objects ==
              row.aut_order * static_cast<std::uint64_t>(row.n_root_sets));
        CHECK(coxeter_order(row.group_label) == row.aut_order);
        const RootSet R = load_fixtures(row.rank).at(static_cast<std::size_t>(row.nr - 1));
        CHECK(static_cast<int>(R.roots.size()) == row.n_positive);
    }
    CHECK(seen == std::map<int, int>{{3, 50}, {4, 11}, {5, 6}, {6, 4}, {7, 2}, {8, 1}});
    CHECK(table1_row(3, 1).n_objects == 60);
    CHECK(table1_row(8, 1).n_positive == 120);
    CHECK_THROWS_AS(table1_row(3, 51), input_error);
    CHECK_THROWS_AS(table1_row(9, 1), input_error);
}

TEST_CASE("reflection group orders") {
    CHECK(coxeter_order("1") == 1);
    CHECK(coxeter_order("A1") == 2);
    CHECK(coxeter_order("A2") == 6);
    CHECK(coxeter_order("A5") == 720);
    CHECK(coxeter_order("B3") == 48);
    CHECK(coxeter_order("C3") == 48);
    CHECK(coxeter_order("B6") == 46080);
    CHECK(coxeter_order("D6") == 23040);
    CHECK(coxeter_order("G2") == 12);
    CHECK(coxeter_order("F4") == 1152);
    CHECK(coxeter_order("E6") == 51840);
    CHECK(coxeter_order("E7") == 2903040);
    CHECK(coxeter_order("E8") == 696729600);
    CHECK(coxeter_order("A1xA2") == 12);
    CHECK(coxeter_order("A1xA1xA1") == 8);
    CHECK(coxeter_order("G2xG2") == 144);
    CHECK(coxeter_order("F4xA1") == 2304);
    CHECK_THROWS_AS(coxeter_order(""), input_error);
    CHECK_THROWS_AS(coxeter_order("H3"), input_error);
    CHECK_THROWS_AS(coxeter_order("E9"), input_error);
    CHECK_THROWS_AS(coxeter_order("Ax"), input_error);
}

TEST_CASE("fixtures are stored in canonical presentation") {
    // Spot rows; the full sweep over all 74 systems runs in the acceptance
    // suite.
    for (auto [rank, nr] : {std::pair{3, 1}, {3, 2}, {3, 17}, {3, 50}, {4, 6}, {5, 3}}) {
        const RootSet R = load_fixtures(rank).at(static_cast<std::size_t>(nr - 1));
        CartanSchemeGraph G = generate_objects(R);
        CHECK(canonical_presentation(G).roots == R.roots);
    }
}

TEST_CASE("recomputed invariants match spot rows") {
    auto run = [](int rank, int nr) {
        const RootSet R = load_fixtures(rank).at(static_cast<std::size_t>(nr - 1));
        return verify_against_table1(R, table1_row(rank, nr));
    };
    for (auto [rank, nr] : {std::pair{3, 6}, {3, 24}, {4, 11}, {5, 6}, {6, 1}}) {
        TableCheck check = run(rank, nr);
        INFO("rank " << rank << " Nr. " << nr << ": " << check.detail);
        CHECK(check.ok);
    }

    // A doctored row is reported, not thrown.
    const RootSet R = load_fixtures(3).at(0);
    Table1Row bad = table1_row(3, 1);
    bad.n_objects = 72;
    bad.aut_order = 72 / static_cast<std::uint64_t>(bad.n_root_sets);
    TableCheck check = verify_against_table1(R, bad);
    CHECK_FALSE(check.ok);
    CHECK(!check.detail.empty());
}
