#include "weyl/appendix.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weyl/appendix_data.hpp"
#include "weyl/error.hpp"
#include "weyl/hash.hpp"

namespace weyl {

namespace {

void check_embedded(const char* text, std::uint64_t expect, const char* what) {
    std::string_view sv(text);
    if (fnv64(sv.data(), sv.size()) != expect)
        throw internal_error(std::string("embedded ") + what + " is corrupted");
}

// Blocks of the fixture text: "# rank r", "# nr k", then one root word per
// line, separated by blank lines.
std::map<int, std::vector<RootSet>> parse_fixture_blocks() {
    check_embedded(detail::kFixtureText, detail::kFixtureChecksum, "fixture text");
    std::map<int, std::vector<RootSet>> out;
    std::istringstream in(detail::kFixtureText);
    std::string line;
    int rank = 0, nr = 0;
    std::vector<Vec> roots;
    auto flush = [&] {
        if (roots.empty()) return;
        if (rank == 0) throw internal_error("fixture block without a rank header");
        std::vector<RootSet>& list = out[rank];
        if (nr != static_cast<int>(list.size()) + 1)
            throw internal_error("fixture numbering is not consecutive");
        list.push_back(make_root_set(rank, roots));
        roots.clear();
        rank = nr = 0;
    };
    while (std::getline(in, line)) {
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string key;
            h >> key;
            int value = 0;
            if (!(h >> value) || value <= 0) throw internal_error("bad fixture header: " + line);
            if (key == "rank")
                rank = value;
            else if (key == "nr")
                nr = value;
            else
                throw internal_error("bad fixture header: " + line);
            continue;
        }
        if (rank <= 0) throw internal_error("fixture root before its rank header");
        roots.push_back(parse_root_word(line, rank));
    }
    flush();
    return out;
}

const std::map<int, std::vector<RootSet>>& fixture_blocks() {
    static const std::map<int, std::vector<RootSet>> blocks = parse_fixture_blocks();
    return blocks;
}

std::vector<Table1Row> parse_table1() {
    check_embedded(detail::kTable1Csv, detail::kTable1Checksum, "invariant table");
    std::vector<Table1Row> rows;
    std::istringstream in(detail::kTable1Csv);
    std::string line;
    if (!std::getline(in, line) ||
        line != "rank,nr,n_positive,n_root_sets,n_objects,group_label,aut_order")
        throw internal_error("invariant table header mismatch");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 7) throw internal_error("invariant table row needs 7 cells: " + line);
        Table1Row row;
        row.rank = std::stoi(cells[0]);
        row.nr = std::stoi(cells[1]);
        row.n_positive = std::stoi(cells[2]);
        row.n_root_sets = std::stoi(cells[3]);
        row.n_objects = std::stoull(cells[4]);
        row.group_label = cells[5];
        row.aut_order = std::stoull(cells[6]);
        if (row.rank < 3 || row.nr < 1 || row.n_positive < row.rank || row.n_root_sets < 1 ||
            row.n_objects == 0 || row.aut_order == 0)
            throw internal_error("invariant table row out of range: " + line);
        if (row.n_objects != row.aut_order * static_cast<std::uint64_t>(row.n_root_sets))
            throw internal_error("invariant table row breaks n = m * aut: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
        if (f > UINT64_MAX / static_cast<std::uint64_t>(i))
            throw capacity_error("factorial exceeds 64 bits");
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

std::uint64_t reflection_group_order(const std::string& factor) {
    if (factor == "1") return 1;
    if (factor.size() < 2) throw input_error("unknown group label factor: " + factor);
    char family = factor[0];
    int k = 0;
    for (std::size_t p = 1; p < factor.size(); ++p) {
        if (factor[p] < '0' || factor[p] > '9')
            throw input_error("unknown group label factor: " + factor);
        k = k * 10 + (factor[p] - '0');
    }
    if (k < 1) throw input_error("unknown group label factor: " + factor);
    switch (family) {
        case 'A':
            return factorial_u64(k + 1);
        case 'B':
        case 'C':
            if (k >= 58) throw capacity_error("group order exceeds 64 bits");
            return (std::uint64_t{1} << k) * factorial_u64(k);
        case 'D':
            if (k < 2) throw input_error("unknown group label factor: " + factor);
            return (std::uint64_t{1} << (k - 1)) * factorial_u64(k);
        case 'E':
            if (k == 6) return 51840;
            if (k == 7) return 2903040;
            if (k == 8) return 696729600;
            throw input_error("unknown group label factor: " + factor);
        case 'F':
            if (k == 4) return 1152;
            throw input_error("unknown group label factor: " + factor);
        case 'G':
            if (k == 2) return 12;
            throw input_error("unknown group label factor: " + factor);
        default:
            throw input_error("unknown group label factor: " + factor);
    }
}

}  // namespace

std::vector<RootSet> load_fixtures(int rank) {
    const auto& blocks = fixture_blocks();
    auto it = blocks.find(rank);
    if (it == blocks.end()) throw input_error("no tabulated systems of rank " + std::to_string(rank));
    return it->second;
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = parse_table1();
    return rows;
}

const Table1Row& table1_row(int rank, int nr) {
    for (const Table1Row& row : table1())
        if (row.rank == rank && row.nr == nr) return row;
    throw input_error("no table row for rank " + std::to_string(rank) + " Nr. " +
                      std::to_string(nr));
}

std::uint64_t coxeter_order(const std::string& label) {
    if (label.empty()) throw input_error("empty group label");
    std::uint64_t order = 1;
    std::size_t start = 0;
    while (start <= label.size()) {
        std::size_t end = label.find('x', start);
        if (end == std::string::npos) end = label.size();
        std::uint64_t f = reflection_group_order(label.substr(start, end - start));
        if (f != 0 && order > UINT64_MAX / f) throw capacity_error("group order exceeds 64 bits");
        order *= f;
        start = end + 1;
        if (end == label.size()) break;
    }
    return order;
}

TableCheck verify_against_table1(const RootSet& fixture, const Table1Row& row,
                                 const GenerationLimits& limits) {
    TableCheck check;
    auto fail = [&](const std::string& detail) {
        if (check.ok) {
            check.ok = false;
            check.detail = detail;
        }
    };
    if (fixture.rank != row.rank) {
        fail("rank " + std::to_string(fixture.rank) + " != " + std::to_string(row.rank));
        return check;
    }
    if (static_cast<int>(fixture.roots.size()) != row.n_positive)
        fail("positive roots: " + std::to_string(fixture.roots.size()) + " != " +
             std::to_string(row.n_positive));
    CartanSchemeGraph G = generate_objects(fixture, limits);
    if (G.n_root_sets() != row.n_root_sets)
        fail("root sets: " + std::to_string(G.n_root_sets()) + " != " +
             std::to_string(row.n_root_sets));
    AxiomReport axioms = verify_axioms(G);
    if (!axioms.all_pass()) fail("axiom failure: " + axioms.failures.front().detail);
    if (!is_irreducible(G)) fail("scheme is reducible");
    std::uint64_t label_order = coxeter_order(row.group_label);
    if (label_order != row.aut_order)
        fail("label order " + std::to_string(label_order) + " != tabulated " +
             std::to_string(row.aut_order));
    std::uint64_t n = count_objects(G, limits);
    if (n != row.n_objects)
        fail("objects: " + std::to_string(n) + " != " + std::to_string(row.n_objects));
    if (n != row.aut_order * static_cast<std::uint64_t>(G.n_root_sets()))
        fail("object count does not split as m * aut");
    return check;
}

}  // namespace weyl
