#include <string>

#include "doctest.h"
#include "weyl/appendix.hpp"
#include "weyl/error.hpp"
#include "weyl/rootset.hpp"
#include "weyl/series.hpp"

using namespace weyl;

TEST_CASE("make_root_set validation") {
    Vec a1 = unit(0), a2 = unit(1);
    CHECK(make_root_set(2, {a2, a1, add(a1, a2)}).roots.size() == 3);
    // Sorted regardless of input order; the first word is "1" = unit(1).
    CHECK(make_root_set(2, {add(a1, a2), a2, a1}).roots[0] == parse_root_word("1", 2));
    CHECK(parse_root_word("1", 2) == a2);
    CHECK_THROWS_AS(make_root_set(0, {}), input_error);
    CHECK_THROWS_AS(make_root_set(13, {}), input_error);
    CHECK_THROWS_AS(make_root_set(2, {a1, a2, a1}), root_system_error);
    CHECK_THROWS_AS(make_root_set(2, {a1}), root_system_error);           // missing simple
    CHECK_THROWS_AS(make_root_set(2, {a1, a2, sub(a1, a2)}), root_system_error);
    CHECK_THROWS_AS(make_root_set(2, {a1, a2, unit(2)}), root_system_error);  // beyond rank

    RootSet R = make_root_set(2, {a1, a2});
    CHECK(contains(R, a1));
    CHECK_FALSE(contains(R, add(a1, a2)));
}

TEST_CASE("text format round-trip") {
    for (int rank = 3; rank <= 8; ++rank) {
        for (const RootSet& R : load_fixtures(rank)) {
            CHECK(parse_root_set_text(format_root_set_text(R)) == R);
            CHECK(parse_root_set_auto(format_root_set_text(R)) == R);
        }
    }
    RootSet R = parse_root_set_text("rank 2\n1 0\n0 1\n1 1\n");
    CHECK(R.roots.size() == 3);
    CHECK_THROWS_AS(parse_root_set_text("rank 2\n1\n0 1\n"), input_error);      // too few
    CHECK_THROWS_AS(parse_root_set_text("rank 2\n1 0 0\n0 1\n"), input_error);  // too many
    CHECK_THROWS_AS(parse_root_set_text("1 0\n0 1\n"), input_error);            // no header
    CHECK_THROWS_AS(parse_root_set_text("rank 2\n1 0\n0 x\n"), input_error);
    CHECK_THROWS_AS(parse_root_set_text(""), input_error);
}

TEST_CASE("word format round-trip") {
    for (int rank = 3; rank <= 8; ++rank) {
        for (const RootSet& R : load_fixtures(rank)) {
            CHECK(parse_root_set_words(format_root_set_words(R)) == R);
            CHECK(parse_root_set_auto(format_root_set_words(R)) == R);
        }
    }
    RootSet B3 = standard_roots(StandardFamily::B, 3);
    CHECK(parse_root_set_auto(format_root_set_words(B3)) == B3);
    CHECK(parse_root_set_auto(format_root_set_text(B3)) == B3);

    CHECK(parse_root_set_words("# rank 2\n# comment\n1\n2\n12\n").roots.size() == 3);
    CHECK_THROWS_AS(parse_root_set_words("# rank 2\n# rank 3\n1\n2\n"), input_error);
    CHECK_THROWS_AS(parse_root_set_words("1\n2\n"), input_error);  // no rank line
    CHECK_THROWS_AS(parse_root_set_words("# rank 2\n1\n3\n"), input_error);
}
