#include "suitable/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "suitable/errors.hpp"

namespace suitable {

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted-none";
        case SearchStatus::aborted: return "aborted";
    }
    return "?";
}

PermTable canonical_form(const PermTable& core) {
    if (core.role() != Role::core)
        throw PreconditionError("canonical_form requires role=core");
    const int v = core.v();
    if (core.n_rows() == 0 || v == 0) {
        std::vector<Row> rows = core.rows();
        std::sort(rows.begin(), rows.end());
        return PermTable(v, Role::core, std::move(rows));
    }

    // The minimum relabeled-and-sorted table must contain the identity row
    // (identity is the lex-least permutation), so it is enough to try the
    // inverse of each row as the relabeling.
    std::optional<std::vector<Row>> best;
    std::vector<Symbol> inv(static_cast<size_t>(v) + 1, 0);
    for (const Row& pivot : core.rows()) {
        for (int i = 0; i < v; ++i)
            inv[static_cast<size_t>(pivot[static_cast<size_t>(i)])] = i + 1;
        std::vector<Row> mapped;
        mapped.reserve(core.rows().size());
        for (const Row& row : core.rows()) {
            Row m;
            m.reserve(static_cast<size_t>(v));
            for (Symbol s : row) m.push_back(inv[static_cast<size_t>(s)]);
            mapped.push_back(std::move(m));
        }
        std::sort(mapped.begin(), mapped.end());
        if (!best || mapped < *best) best = std::move(mapped);
    }
    return PermTable(v, Role::core, std::move(*best));
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
    std::atomic<bool> found{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<long long> nodes{0};
    long long max_nodes = -1;       // <0: unlimited
    double max_seconds = -1.0;      // <0: unlimited
    Clock::time_point start;
    std::mutex witness_mutex;
    std::optional<std::vector<Row>> witness;

    bool stop() const {
        return found.load(std::memory_order_relaxed) ||
               budget_hit.load(std::memory_order_relaxed);
    }
};

// One depth-first explorer. Holds the incremental constraint coverage:
// cnt[sigma][T] = |pre(partial, sigma, T)| for every subset T avoiding
// sigma, plus leading-symbol counts.
class Explorer {
public:
    Explorer(int n, int v, int t, bool dominance, SharedState& shared)
        : n_(n), v_(v), t_(t), dominance_(dominance), shared_(shared),
          full_((v == 0) ? 0 : (~std::uint64_t{0} >> (64 - v))),
          cnt_(static_cast<size_t>(v) + 1, std::vector<int>(std::uint64_t{1} << v, 0)),
          start_count_(static_cast<size_t>(v) + 1, 0) {
        rows_.reserve(static_cast<size_t>(n));
    }

    SearchStats stats;

    void apply_row(const Row& row) {
        ++start_count_[static_cast<size_t>(row[0])];
        std::uint64_t prefix = 0;
        for (Symbol s : row) {
            const std::uint64_t sbit = std::uint64_t{1} << (s - 1);
            const std::uint64_t rest = full_ & ~prefix & ~sbit;
            std::vector<int>& c = cnt_[static_cast<size_t>(s)];
            std::uint64_t m = rest;
            while (true) {
                ++c[prefix | m];
                if (m == 0) break;
                m = (m - 1) & rest;
            }
            prefix |= sbit;
        }
        rows_.push_back(row);
    }

    void unapply_row() {
        const Row row = rows_.back();
        rows_.pop_back();
        --start_count_[static_cast<size_t>(row[0])];
        std::uint64_t prefix = 0;
        for (Symbol s : row) {
            const std::uint64_t sbit = std::uint64_t{1} << (s - 1);
            const std::uint64_t rest = full_ & ~prefix & ~sbit;
            std::vector<int>& c = cnt_[static_cast<size_t>(s)];
            std::uint64_t m = rest;
            while (true) {
                --c[prefix | m];
                if (m == 0) break;
                m = (m - 1) & rest;
            }
            prefix |= sbit;
        }
    }

    enum class Verdict { solved, open, deficit_prune, packing_prune, start_prune };

    struct NodeCheck {
        Verdict verdict;
        int p_star;   // positions that can still influence an open constraint
    };

    // Examines every (sigma, T) requirement against the rows placed so far.
    NodeCheck check() const {
        const int placed = static_cast<int>(rows_.size());
        const int remaining = n_ - placed;
        int max_deficit = 0;
        int widest_open = -1;
        for (Symbol s = 1; s <= v_; ++s) {
            const std::uint64_t others = full_ & ~(std::uint64_t{1} << (s - 1));
            const std::vector<int>& c = cnt_[static_cast<size_t>(s)];
            std::uint64_t m = others;
            while (true) {
                const int set_size = __builtin_popcountll(m);
                const int required = t_ + 1 - v_ + set_size;
                if (required > 0) {
                    const int deficit = required - c[m];
                    if (deficit > 0) {
                        if (deficit > max_deficit) max_deficit = deficit;
                        // T = all others admits every row, so it puts no
                        // constraint on row content
                        if (set_size <= v_ - 2 && set_size > widest_open)
                            widest_open = set_size;
                    }
                }
                if (m == 0) break;
                m = (m - 1) & others;
            }
        }
        if (max_deficit == 0) return {Verdict::solved, 0};
        if (max_deficit > remaining) return {Verdict::deficit_prune, 0};

        // Packing: for a symbol set S, the rows where sigma in S is preceded
        // only by symbols outside S are disjoint across S (two members of S
        // cannot both come first), so their deficits add up and one future
        // row pays down at most one of them.
        for (std::uint64_t set = 1; set <= full_; ++set) {
            const int size = __builtin_popcountll(set);
            const int required = t_ + 1 - size;
            if (required <= 0) continue;
            const std::uint64_t outside = full_ & ~set;
            int missing = 0;
            std::uint64_t rest = set;
            while (rest) {
                const Symbol s = __builtin_ctzll(rest) + 1;
                rest &= rest - 1;
                missing += std::max(0, required - cnt_[static_cast<size_t>(s)][outside]);
                if (missing > remaining) return {Verdict::packing_prune, 0};
            }
        }

        // Leading-symbol finality: rows are nondecreasing, so symbols below
        // the current last leader can never start another row.
        const int need_starts = t_ + 1 - v_;
        if (need_starts > 0 && !rows_.empty()) {
            const Symbol lead = rows_.back()[0];
            for (Symbol s = 1; s < lead; ++s)
                if (start_count_[static_cast<size_t>(s)] < need_starts)
                    return {Verdict::start_prune, 0};
        }
        return {Verdict::open, widest_open + 1};
    }

    // True once the budget is exceeded; also flushes the node counter.
    bool count_node() {
        ++stats.nodes_expanded;
        const long long total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.max_nodes >= 0 && total > shared_.max_nodes) {
            shared_.budget_hit.store(true, std::memory_order_relaxed);
            return true;
        }
        if (shared_.max_seconds >= 0 && (total & 1023) == 0) {
            const double elapsed =
                std::chrono::duration<double>(Clock::now() - shared_.start).count();
            if (elapsed > shared_.max_seconds) {
                shared_.budget_hit.store(true, std::memory_order_relaxed);
                return true;
            }
        }
        return false;
    }

    void record_witness(const Row& pad) {
        std::vector<Row> result = rows_;
        while (static_cast<int>(result.size()) < n_) result.push_back(pad);
        std::lock_guard<std::mutex> lock(shared_.witness_mutex);
        if (!shared_.found.load(std::memory_order_relaxed)) {
            shared_.witness = std::move(result);
            shared_.found.store(true, std::memory_order_relaxed);
        }
    }

    // Places `cand` as the next row and explores. Returns true iff a
    // witness was recorded below this placement.
    bool try_candidate(const Row& cand) {
        if (count_node()) return false;
        apply_row(cand);
        stats.max_depth = std::max(stats.max_depth, static_cast<int>(rows_.size()));
        const NodeCheck nc = check();
        bool ok = false;
        switch (nc.verdict) {
            case Verdict::solved:
                record_witness(cand);
                ok = true;
                break;
            case Verdict::deficit_prune:
                ++stats.deficit_prunes;
                break;
            case Verdict::packing_prune:
                ++stats.packing_prunes;
                break;
            case Verdict::start_prune:
                ++stats.start_prunes;
                break;
            case Verdict::open:
                if (static_cast<int>(rows_.size()) < n_)
                    ok = dfs(cand, nc.p_star);
                break;
        }
        unapply_row();
        return ok;
    }

    // Iterates candidate rows >= lb in lex order at the current depth.
    bool dfs(const Row& lb, int p_star) {
        Row cand = lb;
        while (true) {
            if (shared_.stop()) return false;
            if (try_candidate(cand)) return true;
            if (dominance_ && p_star < v_ - 1) {
                // Everything agreeing with cand on the first p_star
                // positions contributes identically to every open
                // constraint; jump past the whole block. p_star == 0 means
                // no open constraint reads row content at all, so the one
                // candidate just tried spoke for every sibling.
                std::sort(cand.begin() + p_star, cand.end(), std::greater<Symbol>());
                ++stats.dominance_skips;
            }
            if (!std::next_permutation(cand.begin(), cand.end())) return false;
        }
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    int n_, v_, t_;
    bool dominance_;
    SharedState& shared_;
    std::uint64_t full_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> start_count_;
    std::vector<Row> rows_;
};

Row identity_row(int v) {
    Row row(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) row[static_cast<size_t>(i)] = i + 1;
    return row;
}

} // namespace

SearchOutcome exists_core(int n_rows, int v, int t, const SearchBudget& budget,
                          bool prefix_dominance) {
    if (v < 1 || v > 10)
        throw PreconditionError("exists_core supports 1 <= v <= 10");
    if (t < 1 || n_rows < 0)
        throw PreconditionError("exists_core requires t >= 1 and N >= 0");
    if (budget.worker_count < 1)
        throw PreconditionError("worker_count must be >= 1");

    SharedState shared;
    shared.start = Clock::now();
    if (budget.max_nodes) shared.max_nodes = *budget.max_nodes;
    if (budget.max_seconds) shared.max_seconds = *budget.max_seconds;

    SearchOutcome outcome;
    auto finish = [&](SearchStats stats) {
        stats.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - shared.start).count();
        stats.nodes_expanded = shared.nodes.load();
        outcome.stats = stats;
        if (shared.found.load()) {
            outcome.status = SearchStatus::found;
            outcome.witness = PermTable(v, Role::core, std::move(*shared.witness));
        } else if (shared.budget_hit.load()) {
            outcome.status = SearchStatus::aborted;
        } else {
            outcome.status = SearchStatus::exhausted_none;
        }
        return outcome;
    };

    // With no rows every positive requirement is already hopeless; for
    // t >= 1 the full-T requirement is t > 0, so N = 0 never verifies.
    if (n_rows == 0) return finish(SearchStats{});

    Explorer root(n_rows, v, t, prefix_dominance, shared);
    const Row id = identity_row(v);

    // Row 0 is pinned to the identity: any core relabels so that its
    // lex-least row is the identity, and sorting puts it first.
    bool done = false;
    if (root.count_node()) {
        done = true;
    } else {
        root.apply_row(id);
        root.stats.max_depth = 1;
        const Explorer::NodeCheck nc = root.check();
        switch (nc.verdict) {
            case Explorer::Verdict::solved:
                root.record_witness(id);
                done = true;
                break;
            case Explorer::Verdict::deficit_prune:
                ++root.stats.deficit_prunes;
                done = true;
                break;
            case Explorer::Verdict::packing_prune:
                ++root.stats.packing_prunes;
                done = true;
                break;
            case Explorer::Verdict::start_prune:
                ++root.stats.start_prunes;
                done = true;
                break;
            case Explorer::Verdict::open:
                // remaining == 0 always resolves to solved or deficit_prune,
                // so an open root implies n_rows >= 2
                if (budget.worker_count == 1 || n_rows < 3 || v > 8) {
                    root.dfs(id, nc.p_star);
                    done = true;
                }
                break;
        }
    }
    if (done) return finish(root.stats);

    // Parallel mode: distribute the second-row candidates; each worker
    // explores its subtrees with a private state. Status is independent of
    // scheduling: found wins, budget makes it aborted, and exhausted-none
    // requires every subtree to have completed.
    std::vector<Row> frontier;
    {
        Row cand = id;
        do {
            frontier.push_back(cand);
        } while (std::next_permutation(cand.begin(), cand.end()));
    }
    std::atomic<size_t> next{0};
    const int workers = std::min<int>(budget.worker_count, static_cast<int>(frontier.size()));
    std::vector<SearchStats> worker_stats(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            Explorer ex(n_rows, v, t, prefix_dominance, shared);
            ex.apply_row(id);
            ex.stats.max_depth = 1;
            while (!shared.stop()) {
                const size_t i = next.fetch_add(1);
                if (i >= frontier.size()) break;
                if (ex.try_candidate(frontier[i])) break;
            }
            worker_stats[static_cast<size_t>(w)] = ex.stats;
        });
    }
    for (std::thread& th : threads) th.join();

    SearchStats merged = root.stats;
    for (const SearchStats& s : worker_stats) {
        merged.max_depth = std::max(merged.max_depth, s.max_depth);
        merged.deficit_prunes += s.deficit_prunes;
        merged.packing_prunes += s.packing_prunes;
        merged.start_prunes += s.start_prunes;
        merged.dominance_skips += s.dominance_skips;
    }
    return finish(merged);
}

ExactOutcome scn_exact(int t, int n_rows, int v_cap, const SearchBudget& budget) {
    if (v_cap < 0) throw PreconditionError("v_cap must be >= 0");
    ExactOutcome out;
    out.value = 0;
    for (int v = 1; v <= v_cap; ++v) {
        SearchOutcome inner = exists_core(n_rows, v, t, budget);
        out.stats.nodes_expanded += inner.stats.nodes_expanded;
        out.stats.max_depth = std::max(out.stats.max_depth, inner.stats.max_depth);
        out.stats.elapsed_seconds += inner.stats.elapsed_seconds;
        out.stats.deficit_prunes += inner.stats.deficit_prunes;
        out.stats.packing_prunes += inner.stats.packing_prunes;
        out.stats.start_prunes += inner.stats.start_prunes;
        out.stats.dominance_skips += inner.stats.dominance_skips;
        if (inner.status == SearchStatus::aborted) {
            out.status = ExactOutcome::Status::aborted;
            return out;
        }
        if (inner.status == SearchStatus::exhausted_none) {
            // no core at v means none at any larger v (remove a symbol)
            out.status = ExactOutcome::Status::exact;
            out.value = v - 1;
            return out;
        }
        out.value = v;
    }
    out.status = ExactOutcome::Status::cap_reached;
    return out;
}

ExactOutcome n_exact(int v, int t, int n_cap, const SearchBudget& budget) {
    if (t < 1 || t > v)
        throw PreconditionError("n_exact requires 1 <= t <= v");
    ExactOutcome out;
    out.value = 0;
    for (int n = t; n <= std::min(v, n_cap); ++n) {
        if (n == v) {
            // zero-width core: the trivial v x v array settles it
            out.status = ExactOutcome::Status::exact;
            out.value = n;
            return out;
        }
        SearchOutcome inner = exists_core(n, v - n, t, budget);
        out.stats.nodes_expanded += inner.stats.nodes_expanded;
        out.stats.max_depth = std::max(out.stats.max_depth, inner.stats.max_depth);
        out.stats.elapsed_seconds += inner.stats.elapsed_seconds;
        out.stats.deficit_prunes += inner.stats.deficit_prunes;
        out.stats.packing_prunes += inner.stats.packing_prunes;
        out.stats.start_prunes += inner.stats.start_prunes;
        out.stats.dominance_skips += inner.stats.dominance_skips;
        if (inner.status == SearchStatus::aborted) {
            out.status = ExactOutcome::Status::aborted;
            return out;
        }
        if (inner.status == SearchStatus::found) {
            out.status = ExactOutcome::Status::exact;
            out.value = n;
            return out;
        }
    }
    out.status = ExactOutcome::Status::cap_reached;
    return out;
}

} // namespace suitable
