#pragma once

#include <vector>

#include "suitable/table.hpp"

namespace suitable {

// Which of the three equivalent suitability conditions produced a violation.
enum class Condition { definition, core_ii, core_iii };

struct Violation {
    Symbol sigma = 0;       // the symbol whose requirement failed
    SymbolSet witness;      // the offending subset (S for definition/core_ii, T for core_iii)
    int required = 0;
    int actual = 0;
    Condition condition = Condition::definition;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;   // ok <=> violations.empty()
};

// Symbols strictly left of sigma in the row. Throws PreconditionError if
// sigma does not occur.
SymbolSet prefix_before(const Row& row, Symbol sigma);

// Rows of `table` in which sigma starts the row or is preceded only by
// elements of T (0-based indices, ascending).
RowSet pre_set(const PermTable& table, Symbol sigma, SymbolSet T);

// Definition-based check for an (N, v, t)-suitable array: every symbol must
// precede every (t-1)-subset of the others in at least one row. Deliberately
// the naive enumeration; it is the oracle the rest of the library is tested
// against. Requires role == array and t <= min(N, v).
VerificationReport verify_array(const PermTable& table, int t);

// Core check via prefix sets: for every symbol sigma and every subset T of
// the other symbols, |pre_set(table, sigma, T)| >= t+1-v+|T|. Enumerates all
// 2^(v-1) subsets per symbol (fine for the target regime v <= 10; refuses
// v > 20). Reported required counts are capped at N so a deficit never asks
// for more rows than the table could hold. Requires role == core.
VerificationReport verify_core(const PermTable& table, int t);

// Independent core check: for each s in 0..t-1, each symbol precedes each
// s-subset of others in at least t-s rows. Same ok verdict as verify_core
// on every table; the two are maintained as separate routes on purpose.
VerificationReport verify_core_by_subsets(const PermTable& table, int t);

// Boolean fast paths with early exit; agree with the full reports.
bool array_ok(const PermTable& table, int t);
bool core_ok(const PermTable& table, int t);

} // namespace suitable
