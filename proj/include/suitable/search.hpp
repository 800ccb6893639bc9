#pragma once

#include <optional>

#include "suitable/table.hpp"

namespace suitable {

struct SearchBudget {
    std::optional<long long> max_nodes = 100'000'000;
    std::optional<double> max_seconds;   // no time limit by default
    int worker_count = 1;
};

enum class SearchStatus { found, exhausted_none, aborted };

std::string status_name(SearchStatus s);

struct SearchStats {
    long long nodes_expanded = 0;
    int max_depth = 0;
    double elapsed_seconds = 0.0;
    long long deficit_prunes = 0;    // one (sigma, T) requirement out of reach
    long long packing_prunes = 0;    // disjoint requirements of a symbol set out of reach
    long long start_prunes = 0;      // a passed-over leading symbol fell short
    long long dominance_skips = 0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::aborted;
    std::optional<PermTable> witness;   // set iff status == found
    SearchStats stats;
};

// Representative of a core's class under symbol relabeling plus row
// reordering: the lexicographically least relabeled-and-sorted table.
PermTable canonical_form(const PermTable& core);

// Complete decision procedure for the existence of an (N, v, t)-core.
// Depth-first search over nondecreasing row multisets with the first row
// pinned to the identity permutation; prunes on per-constraint deficits and
// on leading-symbol obligations. `exhausted_none` is a proof of
// nonexistence: it is only returned when the whole tree was covered within
// budget. `prefix_dominance` additionally skips sibling rows that agree on
// every position still able to influence an open constraint; off by
// default. v is capped at 10 (subset enumeration).
SearchOutcome exists_core(int n_rows, int v, int t, const SearchBudget& budget = {},
                          bool prefix_dominance = false);

struct ExactOutcome {
    enum class Status {
        exact,        // value settled by a completed search
        cap_reached,  // ran out of range before settling (see per-function notes)
        aborted,      // some inner search hit its budget
    };
    Status status = Status::aborted;
    int value = 0;
    SearchStats stats;   // aggregated over all inner searches
};

// Largest v <= v_cap admitting an (N, v, t)-core. Ascends v and stops at the
// first nonexistence (sound by symbol removal: no core at v means none at
// v+1). cap_reached means every v up to v_cap exists, so value = v_cap is
// only a lower bound for scn(t, N).
ExactOutcome scn_exact(int t, int n_rows, int v_cap, const SearchBudget& budget = {});

// Smallest N <= n_cap admitting an (N, v, t)-suitable array, computed
// through the core equivalence: for t <= N <= v, such an array exists iff
// an (N, v-N, t)-core does. cap_reached means no N within the cap works.
ExactOutcome n_exact(int v, int t, int n_cap, const SearchBudget& budget = {});

} // namespace suitable
