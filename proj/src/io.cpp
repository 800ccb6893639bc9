#include "suitable/io.hpp"

#include <fstream>
#include <sstream>

namespace suitable {

PermTable TableFile::table() const {
    if (has_wildcards())
        throw PreconditionError("file contains wildcards; complete the pattern first");
    std::vector<Row> rows;
    rows.reserve(pattern.rows.size());
    for (const PatternRow& r : pattern.rows) rows.push_back(r.prefix);
    return PermTable(pattern.v, pattern.role, std::move(rows));
}

TableFile read_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("empty input, expected header line \"N v t role\"");

    int n = 0, v = 0, t = 0;
    std::string role_str;
    {
        std::istringstream hs(header);
        if (!(hs >> n >> v >> t >> role_str))
            throw ParseError("bad header line, expected \"N v t role\"");
        std::string extra;
        if (hs >> extra) throw ParseError("trailing tokens in header line");
    }
    if (n < 0 || v < 0 || v > SymbolSet::max_symbol || t < 1)
        throw ParseError("header out of range: need N >= 0, 0 <= v <= 64, t >= 1");

    TableFile file;
    file.params = {n, v, t};
    if (role_str == "array")
        file.pattern.role = Role::array;
    else if (role_str == "core")
        file.pattern.role = Role::core;
    else
        throw ParseError("unknown role \"" + role_str + "\" (expected array or core)");
    file.pattern.v = v;

    for (int r = 0; r < n; ++r) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(r));
        std::istringstream ls(line);
        PatternRow row;
        std::string tok;
        bool in_wildcards = false;
        SymbolSet seen;
        while (ls >> tok) {
            if (tok == "*") {
                in_wildcards = true;
                ++row.wildcards;
                continue;
            }
            if (in_wildcards)
                throw ParseError("row " + std::to_string(r + 1) + ": symbol after wildcard");
            int s = 0;
            try {
                size_t pos = 0;
                s = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("row " + std::to_string(r + 1) + ": bad entry \"" + tok + "\"");
            }
            if (s < 1 || s > v)
                throw ParseError("row " + std::to_string(r + 1) + ": symbol " + std::to_string(s) +
                                 " out of range 1.." + std::to_string(v));
            if (seen.contains(s))
                throw ParseError("row " + std::to_string(r + 1) + ": duplicate symbol " + std::to_string(s));
            seen.insert(s);
            row.prefix.push_back(s);
        }
        if (static_cast<int>(row.prefix.size()) + row.wildcards != v)
            throw ParseError("row " + std::to_string(r + 1) + ": expected " + std::to_string(v) +
                             " entries, got " + std::to_string(row.prefix.size() + static_cast<size_t>(row.wildcards)));
        file.pattern.rows.push_back(std::move(row));
    }
    return file;
}

TableFile read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return read_table(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_pattern(std::ostream& out, const PatternTable& pattern, int t) {
    out << pattern.rows.size() << ' ' << pattern.v << ' ' << t << ' ' << role_name(pattern.role) << '\n';
    for (const PatternRow& r : pattern.rows) {
        for (size_t i = 0; i < r.prefix.size(); ++i) {
            if (i) out << ' ';
            out << r.prefix[i];
        }
        for (int w = 0; w < r.wildcards; ++w) {
            if (w || !r.prefix.empty()) out << ' ';
            out << '*';
        }
        out << '\n';
    }
}

void write_table(std::ostream& out, const PermTable& table, int t) {
    PatternTable p;
    p.v = table.v();
    p.role = table.role();
    for (const Row& r : table.rows()) p.rows.push_back({r, 0});
    write_pattern(out, p, t);
}

void write_table_file(const std::string& path, const PermTable& table, int t) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_table(out, table, t);
}

std::string to_string(const PermTable& table, int t) {
    std::ostringstream out;
    write_table(out, table, t);
    return out.str();
}

} // namespace suitable
