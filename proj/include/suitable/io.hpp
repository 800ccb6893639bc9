#pragma once

#include <iosfwd>
#include <string>

#include "suitable/table.hpp"

namespace suitable {

// Shared text format. First line "N v t role", then N lines of v
// space-separated entries; an entry is a symbol or "*". Wildcards form a
// trailing block per row and make the file a pattern. Rows without wildcards
// must be permutations of 1..v.
struct TableFile {
    Params params;          // n_rows/n_symbols from the header, strength = t
    PatternTable pattern;   // wildcard-free files parse with wildcards == 0

    bool has_wildcards() const { return pattern.has_wildcards(); }

    // Only valid when !has_wildcards(); throws otherwise.
    PermTable table() const;
};

TableFile read_table(std::istream& in);
TableFile read_table_file(const std::string& path);

void write_table(std::ostream& out, const PermTable& table, int t);
void write_pattern(std::ostream& out, const PatternTable& pattern, int t);
void write_table_file(const std::string& path, const PermTable& table, int t);

std::string to_string(const PermTable& table, int t);

} // namespace suitable
