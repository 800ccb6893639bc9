#include "suitable/constructions.hpp"

#include <algorithm>
#include <functional>

#include "suitable/verify.hpp"

namespace suitable {

PermTable trivial_array(int v) {
    if (v < 1) throw PreconditionError("trivial_array requires v >= 1");
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(v));
    for (Symbol lead = 1; lead <= v; ++lead) {
        Row row{lead};
        for (Symbol s = 1; s <= v; ++s)
            if (s != lead) row.push_back(s);
        rows.push_back(std::move(row));
    }
    return PermTable(v, Role::array, std::move(rows));
}

PermTable small_core(int v, int t, int n_rows) {
    if (v < 1 || t < 1)
        throw PreconditionError("small_core requires v, t >= 1");
    if (2 * v > t + 2)
        throw PreconditionError("small_core requires v <= (t+2)/2");
    const int per_leader = t + 1 - v;
    if (n_rows < v * per_leader)
        throw PreconditionError("small_core requires N >= v(t+1-v)");

    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(n_rows));
    for (Symbol lead = 1; lead <= v; ++lead) {
        std::vector<Symbol> others;
        for (Symbol s = 1; s <= v; ++s)
            if (s != lead) others.push_back(s);
        // v <= (t+2)/2 gives per_leader >= v-1, so the round-robin reaches
        // every other symbol at least once.
        for (int k = 0; k < per_leader; ++k) {
            Row row{lead};
            if (!others.empty()) {
                const Symbol second = others[static_cast<size_t>(k) % others.size()];
                row.push_back(second);
                for (Symbol s : others)
                    if (s != second) row.push_back(s);
            }
            rows.push_back(std::move(row));
        }
    }
    for (int r = v * per_leader; r < n_rows; ++r) {
        Row row;
        for (Symbol s = 1; s <= v; ++s) row.push_back(s);
        rows.push_back(std::move(row));
    }
    return PermTable(v, Role::core, std::move(rows));
}

PermTable extend_t_plus_1(const PermTable& core, int t) {
    const int n = core.n_rows();
    const int v = core.v();
    if (core.role() != Role::core)
        throw PreconditionError("extend_t_plus_1 requires role=core");
    if (v < 1)
        throw PreconditionError("extend_t_plus_1 requires v >= 1");
    if (n <= v * (t + 1 - v))
        throw PreconditionError("extend_t_plus_1 requires N > v(t+1-v)");
    if (!core_ok(core, t))
        throw PreconditionError("input does not verify as a core at t=" + std::to_string(t));

    std::vector<int> starts(static_cast<size_t>(v) + 1, 0);
    for (const Row& row : core.rows()) ++starts[static_cast<size_t>(row[0])];
    Symbol heavy = 1;
    for (Symbol s = 2; s <= v; ++s)
        if (starts[static_cast<size_t>(s)] > starts[static_cast<size_t>(heavy)]) heavy = s;
    // N > v(t+1-v) pigeonholes some symbol into >= t+2-v leading slots.

    std::vector<Row> rows = core.rows();
    if (heavy != v) {
        for (Row& row : rows)
            for (Symbol& s : row) {
                if (s == heavy) s = v;
                else if (s == v) s = heavy;
            }
    }
    for (Symbol c = 1; c < v; ++c) {
        Row row{c, v};
        for (Symbol s = 1; s < v; ++s)
            if (s != c) row.push_back(s);
        rows.push_back(std::move(row));
    }
    return PermTable(v, Role::core, std::move(rows));
}

namespace {

PatternTable make_pattern(int v, std::vector<Row> prefixes) {
    PatternTable p;
    p.v = v;
    p.role = Role::core;
    for (Row& prefix : prefixes) {
        const int w = v - static_cast<int>(prefix.size());
        p.rows.push_back({std::move(prefix), w});
    }
    return p;
}

CatalogEntry entry_fig1() {
    PatternTable p = make_pattern(8, {
        {2, 1, 4, 3, 6, 5, 8, 7},
        {3, 4, 1, 2, 7, 8, 5, 6},
        {5, 6, 7, 8, 1, 2, 3, 4},
        {8, 7, 6, 5, 4, 3, 2, 1},
    });
    return {"fig1-483", {4, 8, 3}, std::move(p)};
}

CatalogEntry entry_fig2() {
    PatternTable p = make_pattern(5, {
        {1, 2, 3, 5, 4},
        {2, 1, 4, 5, 3},
        {3, 1, 4, 5, 2},
        {3, 2, 4, 5, 1},
        {4, 1, 3, 5, 2},
        {4, 2, 3, 5, 1},
        {5, 1, 4, 2, 3},
        {5, 2, 4, 1, 3},
        {5, 3, 4, 1, 2},
    });
    return {"fig2-955", {9, 5, 5}, std::move(p)};
}

CatalogEntry entry_fig3() {
    PatternTable p = make_pattern(6, {
        {1, 4},
        {1, 2, 5},
        {1, 6, 5},
        {2, 4},
        {2, 3},
        {2, 6, 5},
        {3, 5},
        {3, 2, 1},
        {3, 6, 1},
        {4, 1, 3},
        {4, 5, 3},
        {4, 6},
        {5, 1, 3},
        {5, 4, 2},
        {5, 6},
        {6, 2, 1},
        {6, 3, 4},
    });
    return {"fig3-1767", {17, 6, 7}, std::move(p)};
}

CatalogEntry entry_fig4() {
    PatternTable p = make_pattern(7, {
        {1, 6, 5},
        {1, 7, 5},
        {1, 3, 5},
        {1, 4, 2},
        {2, 6, 1},
        {2, 7, 1},
        {2, 5, 3},
        {2, 4, 1},
        {3, 6, 5},
        {3, 7, 5},
        {3, 1},
        {3, 2},
        {4, 6, 1},
        {4, 7, 1},
        {4, 5, 2},
        {4, 3},
        {5, 6},
        {5, 7, 3},
        {5, 1, 2},
        {5, 4},
        {6, 7, 5},
        {6, 2},
        {6, 3, 4},
        {7, 6, 1},
        {7, 4},
        {7, 2, 3},
    });
    return {"fig4-2679", {26, 7, 9}, std::move(p)};
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"fig1-483", "fig2-955", "fig3-1767", "fig4-2679"};
}

CatalogEntry catalog(const std::string& name) {
    if (name == "fig1-483") return entry_fig1();
    if (name == "fig2-955") return entry_fig2();
    if (name == "fig3-1767") return entry_fig3();
    if (name == "fig4-2679") return entry_fig4();
    throw PreconditionError("unknown catalog name \"" + name + "\"");
}

namespace {

PermTable complete_with(const PatternTable& pattern,
                        const std::function<void(std::vector<Symbol>&)>& arrange) {
    std::vector<Row> rows;
    rows.reserve(pattern.rows.size());
    for (const PatternRow& pr : pattern.rows) {
        SymbolSet used;
        for (Symbol s : pr.prefix) {
            if (s < 1 || s > pattern.v || used.contains(s))
                throw PreconditionError("pattern prefix is not a partial permutation");
            used.insert(s);
        }
        if (static_cast<int>(pr.prefix.size()) + pr.wildcards != pattern.v)
            throw PreconditionError("pattern row has wrong width");
        std::vector<Symbol> missing;
        for (Symbol s = 1; s <= pattern.v; ++s)
            if (!used.contains(s)) missing.push_back(s);
        arrange(missing);
        Row row = pr.prefix;
        row.insert(row.end(), missing.begin(), missing.end());
        rows.push_back(std::move(row));
    }
    return PermTable(pattern.v, pattern.role, std::move(rows));
}

} // namespace

PermTable complete_pattern(const PatternTable& pattern) {
    return complete_with(pattern, [](std::vector<Symbol>&) {});
}

PermTable complete_pattern_random(const PatternTable& pattern, std::mt19937& rng) {
    return complete_with(pattern, [&rng](std::vector<Symbol>& tail) {
        std::shuffle(tail.begin(), tail.end(), rng);
    });
}

} // namespace suitable
