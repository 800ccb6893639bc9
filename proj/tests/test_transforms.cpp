#include <doctest.h>

#include <random>

#include "suitable/constructions.hpp"
#include "suitable/search.hpp"
#include "suitable/transforms.hpp"
#include "suitable/verify.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace suitable;
using namespace suitable::tests;

namespace {

PermTable fig(const char* name) {
    return complete_pattern(catalog(name).pattern);
}

} // namespace

TEST_CASE("push_symbol moves one occurrence to the end of its row") {
    const PermTable pushed = push_symbol(example_array_573(), 3, 3);
    CHECK(pushed.row(3) == Row{6, 4, 5, 2, 1, 7, 3});
    // other rows untouched
    CHECK(pushed.row(0) == example_array_573().row(0));
    CHECK(pushed.row(4) == example_array_573().row(4));
}

TEST_CASE("push_symbol requires the symbol to lead a different row") {
    // 2 leads only row 0; pushing it within row 0 is not allowed
    const PermTable a(3, Role::array, {{2, 1, 3}, {1, 2, 3}, {3, 1, 2}});
    CHECK_THROWS_AS(push_symbol(a, 2, 0), PreconditionError);
    CHECK(push_symbol(a, 2, 1).row(1) == Row{1, 3, 2});
}

TEST_CASE("push_symbol preserves suitability at every valid strength") {
    const PermTable a = example_array_573();
    for (int t = 1; t <= 3; ++t) REQUIRE(array_ok(a, t));
    PermTable b = a;
    const std::vector<std::pair<Symbol, int>> moves = {
        {3, 3}, {4, 3}, {5, 3}, {6, 4}, {7, 0}, {7, 1}, {7, 2}, {7, 3}};
    for (auto [alpha, row] : moves) {
        b = push_symbol(b, alpha, row);
        for (int t = 1; t <= 3; ++t) CHECK(array_ok(b, t));
    }
}

TEST_CASE("normalize_to_core extracts the 5x2 middle block") {
    const NormalizationResult result = normalize_to_core(example_array_573(), 3);
    CHECK(result.core == example_core_523());
    CHECK(core_ok(result.core, 3));
    CHECK(result.trace.first_symbols == std::vector<Symbol>{3, 4, 5, 6, 7});
    CHECK_FALSE(result.trace.moves.empty());
}

TEST_CASE("normalize_to_core rejects unsuitable input") {
    const PermTable junk(4, Role::array, {{1, 2, 3, 4}, {1, 2, 4, 3}});
    CHECK_THROWS_AS(normalize_to_core(junk, 2), PreconditionError);
}

TEST_CASE("normalizing a square array gives a zero-width core") {
    const NormalizationResult result = normalize_to_core(trivial_array(3), 3);
    CHECK(result.core.v() == 0);
    CHECK(result.core.n_rows() == 3);
}

TEST_CASE("expand then normalize returns the original core") {
    for (const char* name : {"fig1-483", "fig2-955", "fig3-1767"}) {
        const CatalogEntry entry = catalog(name);
        const PermTable core = complete_pattern(entry.pattern);
        const int t = entry.params.strength;
        const NormalizationResult back = normalize_to_core(expand_to_array(core), t);
        CHECK(back.core == core);
    }
    std::mt19937 rng(811);
    int checked = 0;
    for (int iter = 0; iter < 200 && checked < 25; ++iter) {
        const int v = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 5);
        const int t = 1 + static_cast<int>(rng() % n);
        const PermTable c = random_table(n, v, Role::core, rng);
        if (!core_ok(c, t)) continue;
        ++checked;
        CHECK(normalize_to_core(expand_to_array(c), t).core == c);
    }
    CHECK(checked > 0);
}

TEST_CASE("expand_to_array lays out fresh leaders and ascending tails") {
    const PermTable expanded = expand_to_array(example_core_523());
    CHECK(expanded.v() == 7);
    CHECK(expanded.n_rows() == 5);
    CHECK(expanded.row(0) == Row{3, 1, 2, 4, 5, 6, 7});
    CHECK(expanded.row(4) == Row{7, 2, 1, 3, 4, 5, 6});
    CHECK(array_ok(expanded, 3));
}

TEST_CASE("expanding fig2 gives a 9x14 array verifying at t=5") {
    const PermTable expanded = expand_to_array(fig("fig2-955"));
    CHECK(expanded.v() == 14);
    CHECK(array_ok(expanded, 5));
}

TEST_CASE("a zero-width core expands to the square array") {
    const PermTable zero(0, Role::core, std::vector<Row>(4));
    const PermTable expanded = expand_to_array(zero);
    CHECK(expanded.v() == 4);
    for (int t = 1; t <= 4; ++t) CHECK(array_ok(expanded, t));
}

TEST_CASE("expansion verifies exactly when the core does") {
    std::mt19937 rng(812);
    for (int iter = 0; iter < 150; ++iter) {
        const int v = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 6);
        const int t = 1 + static_cast<int>(rng() % n);
        const PermTable c = random_table(n, v, Role::core, rng);
        CHECK(array_ok(expand_to_array(c), t) == core_ok(c, t));
    }
}

TEST_CASE("remove_symbol keeps cores verifying") {
    const RemoveSymbolResult r1 = remove_symbol(fig("fig1-483"), 8);
    CHECK(r1.table.v() == 7);
    CHECK(core_ok(r1.table, 3));
    CHECK(r1.old_of_new == std::vector<Symbol>{1, 2, 3, 4, 5, 6, 7});

    const RemoveSymbolResult r3 = remove_symbol(fig("fig3-1767"), 6);
    CHECK(r3.table.v() == 5);
    CHECK(r3.table.n_rows() == 17);
    CHECK(core_ok(r3.table, 7));
}

TEST_CASE("remove_symbol relabels the survivors in order") {
    const PermTable c(3, Role::core, {{2, 3, 1}});
    const RemoveSymbolResult r = remove_symbol(c, 2);
    CHECK(r.table.row(0) == Row{2, 1});
    CHECK(r.old_of_new == std::vector<Symbol>{1, 3});
    CHECK_THROWS_AS(remove_symbol(c, 4), PreconditionError);
}

TEST_CASE("removing the only symbol leaves an empty core") {
    const PermTable c(1, Role::core, {{1}, {1}});
    const RemoveSymbolResult r = remove_symbol(c, 1);
    CHECK(r.table.v() == 0);
    CHECK(r.table.n_rows() == 2);
}

TEST_CASE("remove_symbol preserves suitability for both roles") {
    std::mt19937 rng(813);
    int checked = 0;
    for (int iter = 0; iter < 300 && checked < 30; ++iter) {
        const int v = 2 + static_cast<int>(rng() % 3);
        const int n = 2 + static_cast<int>(rng() % 6);
        const int t = 1 + static_cast<int>(rng() % n);
        const PermTable c = random_table(n, v, Role::core, rng);
        if (!core_ok(c, t)) continue;
        ++checked;
        const Symbol sigma = 1 + static_cast<int>(rng() % v);
        CHECK(core_ok(remove_symbol(c, sigma).table, t));
    }
    CHECK(checked > 0);
    // array role: drop a symbol from the 3x4 witness
    const RemoveSymbolResult r = remove_symbol(example_array_343(), 2);
    CHECK(array_ok(r.table, 3));
}

TEST_CASE("add_row repairs a single missing row") {
    const PermTable fig2 = fig("fig2-955");
    std::vector<Row> rows = fig2.rows();
    const Row dropped = rows.front();
    rows.erase(rows.begin());
    const PermTable dented(5, Role::core, rows);
    CHECK_FALSE(core_ok(dented, 5));
    CHECK(core_ok(add_row(dented, dropped), 5));
}

TEST_CASE("add_row validates the new row") {
    const PermTable fig2 = fig("fig2-955");
    CHECK(add_row(fig2, {1, 2, 3, 4, 5}).n_rows() == 10);
    CHECK_THROWS_AS(add_row(fig2, {1, 2, 3, 4}), PreconditionError);
    CHECK_THROWS_AS(add_row(fig2, {1, 2, 3, 4, 4}), PreconditionError);
    const PermTable empty(3, Role::core);
    CHECK(add_row(empty, {3, 1, 2}).n_rows() == 1);
}
