#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/groupoid.hpp"
#include "weyl/rootset.hpp"

namespace weyl {

// One row of the published invariant table for the sporadic systems.
struct Table1Row {
    int rank = 0;
    int nr = 0;
    int n_positive = 0;         // positive roots per object
    int n_root_sets = 0;        // distinct root sets (m)
    std::uint64_t n_objects = 0;  // objects of the connected groupoid (n)
    std::string group_label;    // isomorphism type of Aut as a reflection group
    std::uint64_t aut_order = 0;
};

// Root sets of the sporadic irreducible systems of the given rank, in the
// published numbering (index 0 is Nr. 1).  Counts per rank: 50 at rank 3,
// 11, 6, 4, 2, 1 at ranks 4..8.
std::vector<RootSet> load_fixtures(int rank);

// All rows of the invariant table, rank-major then by number.
const std::vector<Table1Row>& table1();

// Row for a given rank and number; throws input_error if absent.
const Table1Row& table1_row(int rank, int nr);

// Order of the finite reflection group named by a table label, e.g.
// "A2" -> 6, "B3" -> 48, "A1xG2" -> 24, "1" -> 1.
std::uint64_t coxeter_order(const std::string& label);

// Result of recomputing one table row from its root set.
struct TableCheck {
    bool ok = true;
    std::string detail;  // first mismatch, empty when ok
};

// Regenerates the groupoid of `fixture` and compares every invariant of
// `row` against the computed values.
TableCheck verify_against_table1(const RootSet& fixture, const Table1Row& row,
                                 const GenerationLimits& limits = {});

}  // namespace weyl
