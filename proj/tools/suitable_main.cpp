// Command-line front end: verification, transforms, constructions, bounds
// tables, and exhaustive search over suitable arrays and cores.
//
// Exit codes, stable per failure class:
//   0  success (verify ok / search found / operation completed)
//   1  semantic failure (verification violations, normalize stall, ...)
//   2  parse or parameter error
//   3  search exhausted the space: no such core exists
//   4  search aborted on budget
//   5  table --confirm found a search result contradicting a formula value

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "suitable/bounds.hpp"
#include "suitable/constructions.hpp"
#include "suitable/io.hpp"
#include "suitable/search.hpp"
#include "suitable/transforms.hpp"
#include "suitable/verify.hpp"

namespace {

using namespace suitable;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_parse = 2;
constexpr int exit_none = 3;
constexpr int exit_aborted = 4;
constexpr int exit_inconsistent = 5;

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::definition: return "definition";
        case Condition::core_ii: return "core-ii";
        case Condition::core_iii: return "core-iii";
    }
    return "?";
}

std::string set_to_string(SymbolSet set) {
    std::string out = "{";
    bool sep = false;
    for (Symbol s : set.to_vector()) {
        if (sep) out += ',';
        out += std::to_string(s);
        sep = true;
    }
    return out + "}";
}

void print_report(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                  const std::string& outcome, const std::vector<std::string>& artifacts, int exit_code) {
    std::cout << "report command=" << command;
    for (const auto& [k, v] : inputs) std::cout << ' ' << k << '=' << v;
    std::cout << " outcome=" << outcome;
    if (!artifacts.empty()) {
        std::cout << " artifacts=";
        for (size_t i = 0; i < artifacts.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << artifacts[i];
        }
    }
    std::cout << " exit=" << exit_code << '\n';
}

// Parses "ascending" or "random:<seed>"; completes the pattern accordingly.
PermTable complete_by_policy(const PatternTable& pattern, const std::string& fill) {
    if (fill == "ascending") return complete_pattern(pattern);
    const std::string prefix = "random:";
    if (fill.rfind(prefix, 0) == 0) {
        std::mt19937 rng(static_cast<unsigned>(std::stoul(fill.substr(prefix.size()))));
        return complete_pattern_random(pattern, rng);
    }
    throw ParseError("bad --fill value \"" + fill + "\" (ascending or random:<seed>)");
}

// Transform inputs may be pattern files; complete them ascending with a
// notice, like verify does.
PermTable load_table(const TableFile& tf) {
    if (tf.has_wildcards()) {
        std::cerr << "note: pattern input, completing wildcards (ascending)\n";
        return complete_pattern(tf.pattern);
    }
    return tf.table();
}

void write_output(const PermTable& table, int t, const std::string& out_path,
                  std::vector<std::string>& artifacts) {
    if (out_path.empty()) {
        write_table(std::cout, table, t);
    } else {
        write_table_file(out_path, table, t);
        artifacts.push_back(out_path);
    }
}

struct VerifyArgs {
    std::string file;
    std::string role_override;
    int t_override = -1;
    std::string fill = "ascending";
    bool quiet = false;
};

int run_verify(const VerifyArgs& args) {
    TableFile tf = read_table_file(args.file);
    Role role = tf.pattern.role;
    if (!args.role_override.empty()) {
        if (args.role_override == "array") role = Role::array;
        else if (args.role_override == "core") role = Role::core;
        else throw ParseError("bad --role value \"" + args.role_override + "\"");
    }
    const int t = args.t_override > 0 ? args.t_override : tf.params.strength;

    PermTable table = [&] {
        if (tf.has_wildcards()) {
            std::cerr << "note: pattern input, completing wildcards (" << args.fill << ")\n";
            PatternTable p = tf.pattern;
            p.role = role;
            return complete_by_policy(p, args.fill);
        }
        return tf.table().with_role(role);
    }();

    const VerificationReport report =
        role == Role::array ? verify_array(table, t) : verify_core(table, t);
    if (report.ok) {
        std::cout << "ok: " << table.n_rows() << " x " << table.v() << ' ' << role_name(role)
                  << " verifies at t=" << t << '\n';
    } else {
        std::cout << "not ok: " << report.violations.size() << " violated constraint(s) at t=" << t << '\n';
        if (!args.quiet) {
            const size_t shown = std::min<size_t>(report.violations.size(), 20);
            for (size_t i = 0; i < shown; ++i) {
                const Violation& viol = report.violations[i];
                std::cout << "violation sigma=" << viol.sigma << " set=" << set_to_string(viol.witness)
                          << " required=" << viol.required << " actual=" << viol.actual
                          << " condition=" << condition_name(viol.condition) << '\n';
            }
            if (report.violations.size() > shown)
                std::cout << "... and " << report.violations.size() - shown << " more\n";
        }
    }
    const int code = report.ok ? exit_ok : exit_failed;
    print_report("verify",
                 {{"file", args.file}, {"role", role_name(role)}, {"t", std::to_string(t)}},
                 report.ok ? "ok" : "violations", {}, code);
    return code;
}

SearchBudget make_budget(long long max_nodes, double max_seconds, int workers) {
    SearchBudget budget;
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    if (max_seconds > 0) budget.max_seconds = max_seconds;
    budget.worker_count = workers;
    return budget;
}

void print_stats(const SearchStats& stats) {
    std::cout << "stats nodes=" << stats.nodes_expanded << " depth=" << stats.max_depth
              << " deficit_prunes=" << stats.deficit_prunes << " packing_prunes=" << stats.packing_prunes
              << " start_prunes=" << stats.start_prunes
              << " dominance_skips=" << stats.dominance_skips << '\n';
    std::cerr << "elapsed " << stats.elapsed_seconds << " s\n";
}

int outcome_exit(SearchStatus status) {
    switch (status) {
        case SearchStatus::found: return exit_ok;
        case SearchStatus::exhausted_none: return exit_none;
        case SearchStatus::aborted: return exit_aborted;
    }
    return exit_failed;
}

int run_table(int t_min, int t_max, int n_min, int n_max, bool confirm, bool records,
              const SearchBudget& budget) {
    if (t_min > t_max || n_min > n_max)
        throw ParseError("empty range: need t-min <= t-max and n-min <= n-max");
    int code = exit_ok;
    for (int t = t_min; t <= t_max; ++t) {
        for (int n = n_min; n <= n_max; ++n) {
            std::vector<BoundsRecord> recs = theorem_table(t, n);
            for (const BoundsRecord& rec : recs) {
                if (records) {
                    std::cout << "record quantity=" << quantity_name(rec.quantity) << " t=" << rec.p1
                              << " N=" << rec.p2 << " kind=" << kind_name(rec.kind)
                              << " value=" << rec.value << " provenance=\"" << rec.provenance << "\"\n";
                } else {
                    std::cout << std::setw(3) << t << std::setw(5) << n << "  scn "
                              << (rec.kind == BoundKind::exact ? " = " :
                                  rec.kind == BoundKind::lower ? ">= " : "<= ")
                              << std::setw(3) << rec.value << "  [" << rec.provenance << "]\n";
                }
            }
            if (confirm) {
                if (auto k = small_scn(t, n)) {
                    const ExactOutcome got = scn_exact(t, n, *k + 1, budget);
                    if (got.status == ExactOutcome::Status::aborted) {
                        std::cout << "confirm t=" << t << " N=" << n << " aborted (budget)\n";
                        if (code == exit_ok) code = exit_aborted;
                    } else if (got.status == ExactOutcome::Status::exact && got.value == *k) {
                        std::cout << "confirm t=" << t << " N=" << n << " scn=" << *k
                                  << " confirmed by search\n";
                    } else {
                        std::cout << "confirm t=" << t << " N=" << n << " FORMULA=" << *k
                                  << " SEARCH=" << got.value << " INCONSISTENT\n";
                        code = exit_inconsistent;
                    }
                }
            }
        }
    }
    print_report("table",
                 {{"t", std::to_string(t_min) + ".." + std::to_string(t_max)},
                  {"N", std::to_string(n_min) + ".." + std::to_string(n_max)},
                  {"confirm", confirm ? "yes" : "no"}},
                 code == exit_ok ? "ok" : (code == exit_inconsistent ? "inconsistent" : "aborted"),
                 {}, code);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"suitable sets of permutations: verify, transform, construct, bound, search"};
    app.require_subcommand(1);

    // verify
    VerifyArgs vargs;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a table file against its role");
    verify_cmd->add_option("file", vargs.file, "table file")->required();
    verify_cmd->add_option("--role", vargs.role_override, "override role from header (array|core)");
    verify_cmd->add_option("-t,--strength", vargs.t_override, "override strength from header");
    verify_cmd->add_option("--fill", vargs.fill, "wildcard fill: ascending | random:<seed>");
    verify_cmd->add_flag("--quiet", vargs.quiet, "suppress the violation list");

    // transforms
    std::string in_file, out_file;
    int t_override = -1;
    CLI::App* normalize_cmd = app.add_subcommand("normalize", "rewrite a suitable array into its core");
    normalize_cmd->add_option("file", in_file, "array file")->required();
    normalize_cmd->add_option("-o,--output", out_file, "output path (default stdout)");
    normalize_cmd->add_option("-t,--strength", t_override, "override strength from header");

    CLI::App* expand_cmd = app.add_subcommand("expand", "expand a core back into a suitable array");
    expand_cmd->add_option("file", in_file, "core file")->required();
    expand_cmd->add_option("-o,--output", out_file, "output path (default stdout)");

    int remove_sym = 0;
    CLI::App* remove_cmd = app.add_subcommand("remove-symbol", "delete one symbol and relabel");
    remove_cmd->add_option("file", in_file, "table file")->required();
    remove_cmd->add_option("symbol", remove_sym, "symbol to remove")->required();
    remove_cmd->add_option("-o,--output", out_file, "output path (default stdout)");

    CLI::App* extend_cmd = app.add_subcommand("extend", "turn a t-core into a (t+1)-core with v-1 extra rows");
    extend_cmd->add_option("file", in_file, "core file")->required();
    extend_cmd->add_option("-o,--output", out_file, "output path (default stdout)");
    extend_cmd->add_option("-t,--strength", t_override, "override strength from header");

    // construct
    CLI::App* construct_cmd = app.add_subcommand("construct", "built-in constructions");
    construct_cmd->require_subcommand(1);
    int cons_v = 0, cons_t = 0, cons_n = 0;
    CLI::App* trivial_cmd = construct_cmd->add_subcommand("trivial", "v x v array, row i led by symbol i");
    trivial_cmd->add_option("v", cons_v, "number of symbols")->required();
    trivial_cmd->add_option("-o,--output", out_file, "output path (default stdout)");
    CLI::App* small_cmd = construct_cmd->add_subcommand("small-core", "boundary core for v <= (t+2)/2");
    small_cmd->add_option("v", cons_v)->required();
    small_cmd->add_option("t", cons_t)->required();
    small_cmd->add_option("N", cons_n)->required();
    small_cmd->add_option("-o,--output", out_file, "output path (default stdout)");
    std::string catalog_name, fill = "ascending";
    bool complete = false;
    CLI::App* catalog_cmd = construct_cmd->add_subcommand("catalog", "built-in example cores");
    catalog_cmd->add_option("name", catalog_name, "fig1-483 | fig2-955 | fig3-1767 | fig4-2679");
    catalog_cmd->add_flag("--complete", complete, "fill wildcards instead of printing them");
    catalog_cmd->add_option("--fill", fill, "wildcard fill: ascending | random:<seed>");
    catalog_cmd->add_option("-o,--output", out_file, "output path (default stdout)");

    // search
    long long max_nodes = 100'000'000;
    double max_seconds = 0;
    int workers = 1;
    bool dominance = false;
    CLI::App* search_cmd = app.add_subcommand("search", "complete existence search for cores");
    search_cmd->require_subcommand(1);
    int s_n = 0, s_v = 0, s_t = 0, v_cap = 10, n_cap = -1;
    std::string witness_path;
    CLI::App* exists_cmd = search_cmd->add_subcommand("exists", "decide existence of an (N,v,t)-core");
    exists_cmd->add_option("N", s_n)->required();
    exists_cmd->add_option("v", s_v)->required();
    exists_cmd->add_option("t", s_t)->required();
    exists_cmd->add_option("--witness", witness_path, "write the found core here");
    CLI::App* scn_cmd = search_cmd->add_subcommand("scn", "largest core width for (t,N) by search");
    scn_cmd->add_option("t", s_t)->required();
    scn_cmd->add_option("N", s_n)->required();
    scn_cmd->add_option("--v-cap", v_cap, "stop widening at this v (default 10)");
    CLI::App* n_cmd = search_cmd->add_subcommand("n", "smallest N with an (N,v,t)-suitable array");
    n_cmd->add_option("v", s_v)->required();
    n_cmd->add_option("t", s_t)->required();
    n_cmd->add_option("--n-cap", n_cap, "stop at this N (default v)");
    for (CLI::App* sub : {exists_cmd, scn_cmd, n_cmd}) {
        sub->add_option("--max-nodes", max_nodes, "node budget (default 1e8)");
        sub->add_option("--max-seconds", max_seconds, "time budget (default none)");
        sub->add_option("--workers", workers, "worker threads (default 1)");
        sub->add_flag("--dominance", dominance, "enable prefix-dominance sibling skipping");
    }

    // table
    int t_min = 0, t_max = -1, n_min = 0, n_max = -1;
    bool confirm = false, records = false;
    CLI::App* table_cmd = app.add_subcommand("table", "known scn values and bounds with provenance");
    table_cmd->add_option("--t-min", t_min)->required();
    table_cmd->add_option("--t-max", t_max)->required();
    table_cmd->add_option("--n-min", n_min)->required();
    table_cmd->add_option("--n-max", n_max)->required();
    table_cmd->add_flag("--confirm", confirm, "re-derive formula values by complete search");
    table_cmd->add_flag("--records", records, "one structured record per line");
    table_cmd->add_option("--max-nodes", max_nodes, "node budget for --confirm searches");
    table_cmd->add_option("--workers", workers, "worker threads for --confirm searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_parse;
    }

    try {
        if (*verify_cmd) return run_verify(vargs);

        std::vector<std::string> artifacts;
        if (*normalize_cmd) {
            TableFile tf = read_table_file(in_file);
            const int t = t_override > 0 ? t_override : tf.params.strength;
            NormalizationResult result = normalize_to_core(load_table(tf), t);
            std::cerr << "first symbols:";
            for (Symbol s : result.trace.first_symbols) std::cerr << ' ' << s;
            std::cerr << "\nmoves: " << result.trace.moves.size() << '\n';
            write_output(result.core, t, out_file, artifacts);
            print_report("normalize", {{"file", in_file}, {"t", std::to_string(t)}}, "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*expand_cmd) {
            TableFile tf = read_table_file(in_file);
            write_output(expand_to_array(load_table(tf)), tf.params.strength, out_file, artifacts);
            print_report("expand", {{"file", in_file}}, "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*remove_cmd) {
            TableFile tf = read_table_file(in_file);
            RemoveSymbolResult result = remove_symbol(load_table(tf), remove_sym);
            write_output(result.table, tf.params.strength, out_file, artifacts);
            print_report("remove-symbol", {{"file", in_file}, {"symbol", std::to_string(remove_sym)}},
                         "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*extend_cmd) {
            TableFile tf = read_table_file(in_file);
            const int t = t_override > 0 ? t_override : tf.params.strength;
            write_output(extend_t_plus_1(load_table(tf), t), t + 1, out_file, artifacts);
            print_report("extend", {{"file", in_file}, {"t", std::to_string(t)}}, "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*trivial_cmd) {
            write_output(trivial_array(cons_v), std::max(1, cons_v), out_file, artifacts);
            print_report("construct.trivial", {{"v", std::to_string(cons_v)}}, "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*small_cmd) {
            write_output(small_core(cons_v, cons_t, cons_n), cons_t, out_file, artifacts);
            print_report("construct.small-core",
                         {{"v", std::to_string(cons_v)}, {"t", std::to_string(cons_t)}, {"N", std::to_string(cons_n)}},
                         "ok", artifacts, exit_ok);
            return exit_ok;
        }
        if (*catalog_cmd) {
            if (catalog_name.empty()) {
                for (const std::string& name : catalog_names()) std::cout << name << '\n';
                print_report("construct.catalog", {}, "ok", {}, exit_ok);
                return exit_ok;
            }
            const CatalogEntry entry = catalog(catalog_name);
            if (complete || !entry.pattern.has_wildcards()) {
                write_output(complete_by_policy(entry.pattern, fill), entry.params.strength, out_file, artifacts);
            } else if (out_file.empty()) {
                write_pattern(std::cout, entry.pattern, entry.params.strength);
            } else {
                std::ofstream out(out_file);
                if (!out) throw ParseError("cannot open " + out_file + " for writing");
                write_pattern(out, entry.pattern, entry.params.strength);
                artifacts.push_back(out_file);
            }
            print_report("construct.catalog", {{"name", catalog_name}}, "ok", artifacts, exit_ok);
            return exit_ok;
        }

        const SearchBudget budget = make_budget(max_nodes, max_seconds, workers);
        if (*exists_cmd) {
            const SearchOutcome outcome = exists_core(s_n, s_v, s_t, budget, dominance);
            std::cout << "exists(" << s_n << ',' << s_v << ',' << s_t << ") = "
                      << status_name(outcome.status) << '\n';
            print_stats(outcome.stats);
            if (outcome.witness) {
                if (!witness_path.empty()) {
                    write_table_file(witness_path, *outcome.witness, s_t);
                    artifacts.push_back(witness_path);
                    std::cout << "witness " << witness_path << '\n';
                } else {
                    write_table(std::cout, *outcome.witness, s_t);
                }
            }
            const int code = outcome_exit(outcome.status);
            print_report("search.exists",
                         {{"N", std::to_string(s_n)}, {"v", std::to_string(s_v)}, {"t", std::to_string(s_t)}},
                         status_name(outcome.status), artifacts, code);
            return code;
        }
        if (*scn_cmd || *n_cmd) {
            const ExactOutcome outcome = *scn_cmd ? scn_exact(s_t, s_n, v_cap, budget)
                                                  : n_exact(s_v, s_t, n_cap > 0 ? n_cap : s_v, budget);
            const char* what = *scn_cmd ? "scn" : "N";
            std::string shown;
            int code = exit_ok;
            switch (outcome.status) {
                case ExactOutcome::Status::exact:
                    shown = std::to_string(outcome.value);
                    break;
                case ExactOutcome::Status::cap_reached:
                    shown = *scn_cmd ? (">= " + std::to_string(outcome.value)) : "none within cap";
                    code = *scn_cmd ? exit_ok : exit_none;
                    break;
                case ExactOutcome::Status::aborted:
                    shown = "aborted";
                    code = exit_aborted;
                    break;
            }
            if (*scn_cmd)
                std::cout << what << '(' << s_t << ',' << s_n << ") = " << shown << '\n';
            else
                std::cout << what << '(' << s_v << ',' << s_t << ") = " << shown << '\n';
            print_stats(outcome.stats);
            print_report(*scn_cmd ? "search.scn" : "search.n",
                         *scn_cmd
                             ? std::vector<std::pair<std::string, std::string>>{{"t", std::to_string(s_t)}, {"N", std::to_string(s_n)}}
                             : std::vector<std::pair<std::string, std::string>>{{"v", std::to_string(s_v)}, {"t", std::to_string(s_t)}},
                         shown, artifacts, code);
            return code;
        }
        if (*table_cmd) return run_table(t_min, t_max, n_min, n_max, confirm, records, budget);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const CannotNormalizeError& e) {
        std::cerr << "error: normalization stalled: " << e.what() << '\n';
        return exit_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_parse;
}
