#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "suitable/table.hpp"
#include "suitable/verify.hpp"

namespace suitable::tests {

inline std::vector<Row> all_permutations(int v) {
    Row row(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) row[static_cast<size_t>(i)] = i + 1;
    std::vector<Row> out;
    do {
        out.push_back(row);
    } while (std::next_permutation(row.begin(), row.end()));
    return out;
}

// Every multiset of n rows drawn from `perms`, as nondecreasing index
// tuples; fn receives the assembled row list.
template <typename Fn>
void for_each_row_multiset(const std::vector<Row>& perms, int n, Fn&& fn) {
    std::vector<int> pick(static_cast<size_t>(n), 0);
    const int m = static_cast<int>(perms.size());
    while (true) {
        std::vector<Row> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i : pick) rows.push_back(perms[static_cast<size_t>(i)]);
        fn(rows);
        int i = n - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == m - 1) --i;
        if (i < 0) break;
        const int next = pick[static_cast<size_t>(i)] + 1;
        for (int j = i; j < n; ++j) pick[static_cast<size_t>(j)] = next;
    }
}

// Existence of an (n, v, t)-core decided by plain enumeration of every row
// multiset plus the verifier. Independent of the search module.
inline bool brute_force_core_exists(int n, int v, int t) {
    if (n == 0) return false;   // some requirement is positive for every t >= 1
    const std::vector<Row> perms = all_permutations(v);
    bool exists = false;
    for_each_row_multiset(perms, n, [&](const std::vector<Row>& rows) {
        if (exists) return;
        if (core_ok(PermTable(v, Role::core, rows), t)) exists = true;
    });
    return exists;
}

inline Row random_permutation(int v, std::mt19937& rng) {
    Row row(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) row[static_cast<size_t>(i)] = i + 1;
    std::shuffle(row.begin(), row.end(), rng);
    return row;
}

inline PermTable random_table(int n, int v, Role role, std::mt19937& rng) {
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows.push_back(random_permutation(v, rng));
    return PermTable(v, role, std::move(rows));
}

} // namespace suitable::tests
