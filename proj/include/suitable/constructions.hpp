#pragma once

#include <random>
#include <string>
#include <vector>

#include "suitable/table.hpp"

namespace suitable {

// A named core from the built-in catalog. Any completion of the pattern
// verifies at params.strength.
struct CatalogEntry {
    std::string name;
    Params params;
    PatternTable pattern;
};

// The v x v array whose row i starts with symbol i, remainder ascending.
// Suitable at every t <= v.
PermTable trivial_array(int v);

// (N, v, t)-core for the boundary regime v <= (t+2)/2, N >= v(t+1-v): each
// symbol leads t+1-v rows, second positions chosen round-robin so every
// other symbol appears directly after it; remaining rows ascending.
PermTable small_core(int v, int t, int n_rows);

// Turns an (N, v, t)-core with N > v(t+1-v) into an (N+v-1, v, t+1)-core:
// relabels the most frequent leading symbol (ties to the smallest label) to
// v, then appends rows starting 1 v, 2 v, ..., (v-1) v completed ascending.
PermTable extend_t_plus_1(const PermTable& core, int t);

// Built-in cores: fig1-483 (4,8,3), fig2-955 (9,5,5), fig3-1767 (17,6,7),
// fig4-2679 (26,7,9). The last two carry wildcard tails.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

// Fills each row's wildcards with its missing symbols in ascending order.
PermTable complete_pattern(const PatternTable& pattern);

// Same, but each tail is an independently shuffled arrangement.
PermTable complete_pattern_random(const PatternTable& pattern, std::mt19937& rng);

} // namespace suitable
