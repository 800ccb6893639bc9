#pragma once

#include <utility>
#include <vector>

#include "suitable/table.hpp"

namespace suitable {

// Record of how an array was rewritten into first-symbol form: the pushes
// performed (symbol, 0-based source row) and the resulting leftmost column.
struct NormalizationTrace {
    std::vector<std::pair<Symbol, int>> moves;
    std::vector<Symbol> first_symbols;
};

struct NormalizationResult {
    PermTable core;
    NormalizationTrace trace;
};

// Moves one occurrence of alpha in `row` to the rightmost position of that
// row. Legal only when alpha is leftmost in some other row; suitability at
// every valid t is preserved.
PermTable push_symbol(const PermTable& array, Symbol alpha, int row);

// Rewrites a suitable array (v >= N) into one whose leftmost column holds N
// distinct symbols and whose columns 2..v-N+1 avoid them, then returns that
// middle block with the non-first symbols relabeled to 1..v-N in order.
// Throws CannotNormalizeError if the greedy push schedule stalls.
NormalizationResult normalize_to_core(const PermTable& array, int t);

// Inverse direction: prepend fresh symbol v+i to row i (1-based) and append
// the other new symbols in ascending order, giving an N x (v+N) array over
// 1..v+N. A core verifying at t expands to an array verifying at t.
PermTable expand_to_array(const PermTable& core);

struct RemoveSymbolResult {
    PermTable table;
    std::vector<Symbol> old_of_new;   // old_of_new[s-1] = original label of new symbol s
};

// Deletes every occurrence of sigma, left-justifies, and relabels the
// remaining symbols to 1..v-1 preserving order. Suitability at any t is
// preserved for both roles.
RemoveSymbolResult remove_symbol(const PermTable& table, Symbol sigma);

// Appends one row. Never breaks suitability at any t.
PermTable add_row(const PermTable& table, Row row);

} // namespace suitable
