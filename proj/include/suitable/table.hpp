#pragma once

#include <string>
#include <vector>

#include "suitable/symbol_set.hpp"

namespace suitable {

// A row is a permutation of 1..v, stored left to right.
using Row = std::vector<Symbol>;

enum class Role { array, core };

std::string role_name(Role role);

// (N, v, t) parameter triple. N = rows, v = symbols, t = strength.
struct Params {
    int n_rows = 0;
    int n_symbols = 0;
    int strength = 0;
};

// Checks that `row` uses each of 1..v exactly once.
bool is_permutation_row(const Row& row, int v);

// N x v table of permutations with a role tag. Rows form a multiset: every
// verification result is invariant under row reordering. v may be 0 (a core
// produced from an array with v == N has no columns at all).
class PermTable {
public:
    PermTable(int v, Role role) : v_(v), role_(role) { check_v(v); }

    PermTable(int v, Role role, std::vector<Row> rows) : v_(v), role_(role), rows_(std::move(rows)) {
        check_v(v);
        for (const Row& r : rows_)
            if (!is_permutation_row(r, v_))
                throw PreconditionError("row is not a permutation of 1.." + std::to_string(v_));
    }

    int v() const { return v_; }
    int n_rows() const { return static_cast<int>(rows_.size()); }
    Role role() const { return role_; }

    const Row& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    const std::vector<Row>& rows() const { return rows_; }

    PermTable with_role(Role role) const { return PermTable(v_, role, rows_); }

    friend bool operator==(const PermTable& a, const PermTable& b) {
        return a.v_ == b.v_ && a.role_ == b.role_ && a.rows_ == b.rows_;
    }

private:
    static void check_v(int v) {
        if (v < 0 || v > SymbolSet::max_symbol)
            throw PreconditionError("table width must be in 0..64");
    }

    int v_;
    Role role_;
    std::vector<Row> rows_;
};

// One row of a pattern: a fixed prefix of distinct symbols followed by
// `wildcards` free positions ("*" in the text format).
struct PatternRow {
    Row prefix;
    int wildcards = 0;
};

// Table whose rows may end in wildcards; completing every row with its
// missing symbols (in any order) yields a PermTable.
struct PatternTable {
    int v = 0;
    Role role = Role::core;
    std::vector<PatternRow> rows;

    bool has_wildcards() const {
        for (const PatternRow& r : rows)
            if (r.wildcards > 0) return true;
        return false;
    }
};

// Set of row indices into a PermTable (0-based).
using RowSet = std::vector<int>;

} // namespace suitable
