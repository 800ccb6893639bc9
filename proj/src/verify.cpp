#include "suitable/verify.hpp"

#include <algorithm>
#include <string>

namespace suitable {

std::string role_name(Role role) {
    return role == Role::array ? "array" : "core";
}

bool is_permutation_row(const Row& row, int v) {
    if (static_cast<int>(row.size()) != v) return false;
    SymbolSet seen;
    for (Symbol s : row) {
        if (s < 1 || s > v || seen.contains(s)) return false;
        seen.insert(s);
    }
    return true;
}

SymbolSet prefix_before(const Row& row, Symbol sigma) {
    SymbolSet prefix;
    for (Symbol s : row) {
        if (s == sigma) return prefix;
        prefix.insert(s);
    }
    throw PreconditionError("symbol " + std::to_string(sigma) + " not present in row");
}

namespace {

// prefix mask of every symbol in every row, indexed [row][symbol-1]
std::vector<std::vector<SymbolSet>> prefix_masks(const PermTable& table) {
    std::vector<std::vector<SymbolSet>> pm(static_cast<size_t>(table.n_rows()),
                                           std::vector<SymbolSet>(static_cast<size_t>(table.v())));
    for (int r = 0; r < table.n_rows(); ++r) {
        SymbolSet seen;
        for (Symbol s : table.row(r)) {
            pm[static_cast<size_t>(r)][static_cast<size_t>(s - 1)] = seen;
            seen.insert(s);
        }
    }
    return pm;
}

void check_strength(int t) {
    if (t < 1) throw PreconditionError("strength must be >= 1");
}

// Calls fn(mask) for every size-k subset of the set `universe`.
template <typename Fn>
void for_each_subset_of_size(SymbolSet universe, int k, Fn&& fn) {
    std::vector<Symbol> elems = universe.to_vector();
    const int n = static_cast<int>(elems.size());
    if (k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        SymbolSet s;
        for (int i : idx) s.insert(elems[static_cast<size_t>(i)]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Calls fn(mask) for every subset of `universe`, including the empty one.
template <typename Fn>
void for_each_subset(SymbolSet universe, Fn&& fn) {
    const std::uint64_t u = universe.bits();
    std::uint64_t m = 0;
    while (true) {
        fn(SymbolSet(m));
        if (m == u) break;
        m = (m - u) & u;   // next subset in increasing numeric order
    }
}

} // namespace

RowSet pre_set(const PermTable& table, Symbol sigma, SymbolSet T) {
    const int v = table.v();
    if (sigma < 1 || sigma > v)
        throw PreconditionError("symbol out of range");
    if (T.contains(sigma) || !T.subset_of(SymbolSet::full(v)))
        throw PreconditionError("T must be a set of symbols other than sigma");
    RowSet rows;
    for (int r = 0; r < table.n_rows(); ++r)
        if (prefix_before(table.row(r), sigma).subset_of(T))
            rows.push_back(r);
    return rows;
}

VerificationReport verify_array(const PermTable& table, int t) {
    check_strength(t);
    if (table.role() != Role::array)
        throw PreconditionError("verify_array requires role=array");
    const int n = table.n_rows();
    const int v = table.v();
    if (t > std::min(n, v))
        throw PreconditionError("strength too large: t must be <= min(N, v)");

    const auto pm = prefix_masks(table);
    VerificationReport report;
    for (Symbol sigma = 1; sigma <= v; ++sigma) {
        const SymbolSet others = SymbolSet::full(v).without(sigma);
        for_each_subset_of_size(others, t - 1, [&](SymbolSet s) {
            // sigma precedes all of s in row r iff s avoids sigma's prefix there
            for (int r = 0; r < n; ++r)
                if (!s.intersects(pm[static_cast<size_t>(r)][static_cast<size_t>(sigma - 1)]))
                    return;
            report.violations.push_back({sigma, s, 1, 0, Condition::definition});
        });
    }
    report.ok = report.violations.empty();
    return report;
}

VerificationReport verify_core(const PermTable& table, int t) {
    check_strength(t);
    if (table.role() != Role::core)
        throw PreconditionError("verify_core requires role=core");
    const int n = table.n_rows();
    const int v = table.v();
    if (v > 20)
        throw PreconditionError("core verification enumerates 2^(v-1) subsets; v > 20 unsupported");

    const auto pm = prefix_masks(table);
    VerificationReport report;
    for (Symbol sigma = 1; sigma <= v; ++sigma) {
        const SymbolSet others = SymbolSet::full(v).without(sigma);
        for_each_subset(others, [&](SymbolSet T) {
            const int required = t + 1 - v + T.size();
            if (required <= 0) return;   // vacuous
            int count = 0;
            for (int r = 0; r < n; ++r)
                if (pm[static_cast<size_t>(r)][static_cast<size_t>(sigma - 1)].subset_of(T))
                    ++count;
            if (count < required)
                report.violations.push_back({sigma, T, std::min(required, n), count, Condition::core_iii});
        });
    }
    report.ok = report.violations.empty();
    return report;
}

VerificationReport verify_core_by_subsets(const PermTable& table, int t) {
    check_strength(t);
    if (table.role() != Role::core)
        throw PreconditionError("verify_core_by_subsets requires role=core");
    const int n = table.n_rows();
    const int v = table.v();

    const auto pm = prefix_masks(table);
    VerificationReport report;
    for (int s = 0; s <= std::min(t - 1, v - 1); ++s) {
        for (Symbol sigma = 1; sigma <= v; ++sigma) {
            const SymbolSet others = SymbolSet::full(v).without(sigma);
            for_each_subset_of_size(others, s, [&](SymbolSet set) {
                int count = 0;
                for (int r = 0; r < n; ++r)
                    if (!set.intersects(pm[static_cast<size_t>(r)][static_cast<size_t>(sigma - 1)]))
                        ++count;
                if (count < t - s)
                    report.violations.push_back({sigma, set, t - s, count, Condition::core_ii});
            });
        }
    }
    report.ok = report.violations.empty();
    return report;
}

bool array_ok(const PermTable& table, int t) {
    check_strength(t);
    if (table.role() != Role::array)
        throw PreconditionError("array_ok requires role=array");
    const int n = table.n_rows();
    const int v = table.v();
    if (t > std::min(n, v))
        throw PreconditionError("strength too large: t must be <= min(N, v)");

    const auto pm = prefix_masks(table);
    for (Symbol sigma = 1; sigma <= v; ++sigma) {
        const SymbolSet others = SymbolSet::full(v).without(sigma);
        bool bad = false;
        for_each_subset_of_size(others, t - 1, [&](SymbolSet s) {
            if (bad) return;
            for (int r = 0; r < n; ++r)
                if (!s.intersects(pm[static_cast<size_t>(r)][static_cast<size_t>(sigma - 1)]))
                    return;
            bad = true;
        });
        if (bad) return false;
    }
    return true;
}

bool core_ok(const PermTable& table, int t) {
    check_strength(t);
    if (table.role() != Role::core)
        throw PreconditionError("core_ok requires role=core");
    const int n = table.n_rows();
    const int v = table.v();
    if (v > 20)
        throw PreconditionError("core verification enumerates 2^(v-1) subsets; v > 20 unsupported");

    const auto pm = prefix_masks(table);
    for (Symbol sigma = 1; sigma <= v; ++sigma) {
        const SymbolSet others = SymbolSet::full(v).without(sigma);
        bool bad = false;
        for_each_subset(others, [&](SymbolSet T) {
            if (bad) return;
            const int required = t + 1 - v + T.size();
            if (required <= 0) return;
            int count = 0;
            for (int r = 0; r < n; ++r) {
                if (pm[static_cast<size_t>(r)][static_cast<size_t>(sigma - 1)].subset_of(T)) {
                    ++count;
                    if (count >= required) return;
                }
            }
            bad = true;
        });
        if (bad) return false;
    }
    return true;
}

} // namespace suitable
