#include "suitable/transforms.hpp"

#include <algorithm>
#include <string>

#include "suitable/verify.hpp"

namespace suitable {

namespace {

bool leftmost_in_other_row(const std::vector<Row>& rows, Symbol alpha, int row) {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (r != row && !rows[static_cast<size_t>(r)].empty() && rows[static_cast<size_t>(r)][0] == alpha)
            return true;
    return false;
}

void push_in_place(Row& row, Symbol alpha) {
    auto it = std::find(row.begin(), row.end(), alpha);
    row.erase(it);
    row.push_back(alpha);
}

} // namespace

PermTable push_symbol(const PermTable& array, Symbol alpha, int row) {
    if (array.role() != Role::array)
        throw PreconditionError("push_symbol requires role=array");
    if (row < 0 || row >= array.n_rows())
        throw PreconditionError("row index out of range");
    if (alpha < 1 || alpha > array.v())
        throw PreconditionError("symbol out of range");
    if (!leftmost_in_other_row(array.rows(), alpha, row))
        throw PreconditionError("symbol " + std::to_string(alpha) +
                                " is not leftmost in any other row");
    std::vector<Row> rows = array.rows();
    push_in_place(rows[static_cast<size_t>(row)], alpha);
    return PermTable(array.v(), Role::array, std::move(rows));
}

NormalizationResult normalize_to_core(const PermTable& array, int t) {
    const int n = array.n_rows();
    const int v = array.v();
    if (array.role() != Role::array)
        throw PreconditionError("normalize_to_core requires role=array");
    if (v < n)
        throw PreconditionError("normalize_to_core requires v >= N");
    if (!array_ok(array, t))
        throw PreconditionError("input array is not suitable at t=" + std::to_string(t));

    std::vector<Row> rows = array.rows();
    NormalizationTrace trace;
    auto do_push = [&](Symbol alpha, int r) {
        push_in_place(rows[static_cast<size_t>(r)], alpha);
        trace.moves.emplace_back(alpha, r);
    };

    // Stage 1: make the leftmost column distinct. Rotate away the leader of
    // any row whose leader already leads an earlier row, lowest symbol
    // first. Termination is not proven in general, so a stalled schedule is
    // reported as a distinguished error rather than looping forever.
    const size_t push_cap = 64 + 4 * static_cast<size_t>(n) * static_cast<size_t>(v);
    while (true) {
        Symbol best_alpha = 0;
        int best_row = -1;
        std::vector<int> owner(static_cast<size_t>(v) + 1, -1);
        for (int r = 0; r < n; ++r) {
            const Symbol lead = rows[static_cast<size_t>(r)][0];
            if (owner[static_cast<size_t>(lead)] < 0) {
                owner[static_cast<size_t>(lead)] = r;
            } else if (best_row < 0 || lead < best_alpha) {
                best_alpha = lead;
                best_row = r;
            }
        }
        if (best_row < 0) break;   // leaders distinct
        if (trace.moves.size() >= push_cap)
            throw CannotNormalizeError("push schedule stalled while separating first symbols");
        do_push(best_alpha, best_row);
    }

    SymbolSet first;
    for (int r = 0; r < n; ++r) {
        trace.first_symbols.push_back(rows[static_cast<size_t>(r)][0]);
        first.insert(rows[static_cast<size_t>(r)][0]);
    }

    // Stage 2: per row, push every first symbol that still precedes a
    // non-first symbol. Each push removes all its inversions and creates
    // none, so this terminates.
    for (int r = 0; r < n; ++r) {
        while (true) {
            const Row& row = rows[static_cast<size_t>(r)];
            int last_non_first = -1;
            for (int i = 1; i < v; ++i)
                if (!first.contains(row[static_cast<size_t>(i)])) last_non_first = i;
            int bad = -1;
            for (int i = 1; i < last_non_first; ++i)
                if (first.contains(row[static_cast<size_t>(i)])) { bad = i; break; }
            if (bad < 0) break;
            do_push(row[static_cast<size_t>(bad)], r);
        }
    }

    // Middle block = columns 2..v-N+1, non-first symbols relabeled to
    // 1..v-N preserving order.
    const std::vector<Symbol> non_first =
        SymbolSet(SymbolSet::full(v).bits() & ~first.bits()).to_vector();
    std::vector<Symbol> new_label(static_cast<size_t>(v) + 1, 0);
    for (size_t i = 0; i < non_first.size(); ++i)
        new_label[static_cast<size_t>(non_first[i])] = static_cast<Symbol>(i) + 1;

    std::vector<Row> core_rows(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        Row& out = core_rows[static_cast<size_t>(r)];
        out.reserve(static_cast<size_t>(v - n));
        for (int i = 1; i <= v - n; ++i)
            out.push_back(new_label[static_cast<size_t>(rows[static_cast<size_t>(r)][static_cast<size_t>(i)])]);
    }
    return {PermTable(v - n, Role::core, std::move(core_rows)), std::move(trace)};
}

PermTable expand_to_array(const PermTable& core) {
    if (core.role() != Role::core)
        throw PreconditionError("expand_to_array requires role=core");
    const int n = core.n_rows();
    const int v = core.v();
    if (v + n > SymbolSet::max_symbol)
        throw PreconditionError("expanded array would exceed 64 symbols");

    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        Row row;
        row.reserve(static_cast<size_t>(v + n));
        row.push_back(v + r + 1);
        row.insert(row.end(), core.row(r).begin(), core.row(r).end());
        for (int s = v + 1; s <= v + n; ++s)
            if (s != v + r + 1) row.push_back(s);
        rows.push_back(std::move(row));
    }
    return PermTable(v + n, Role::array, std::move(rows));
}

RemoveSymbolResult remove_symbol(const PermTable& table, Symbol sigma) {
    const int v = table.v();
    if (sigma < 1 || sigma > v)
        throw PreconditionError("symbol out of range");

    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(table.n_rows()));
    for (const Row& row : table.rows()) {
        Row out;
        out.reserve(static_cast<size_t>(v) - 1);
        for (Symbol s : row)
            if (s != sigma) out.push_back(s > sigma ? s - 1 : s);
        rows.push_back(std::move(out));
    }
    RemoveSymbolResult result{PermTable(v - 1, table.role(), std::move(rows)), {}};
    for (Symbol s = 1; s <= v; ++s)
        if (s != sigma) result.old_of_new.push_back(s);
    return result;
}

PermTable add_row(const PermTable& table, Row row) {
    if (!is_permutation_row(row, table.v()))
        throw PreconditionError("added row is not a permutation of 1.." + std::to_string(table.v()));
    std::vector<Row> rows = table.rows();
    rows.push_back(std::move(row));
    return PermTable(table.v(), table.role(), std::move(rows));
}

} // namespace suitable
