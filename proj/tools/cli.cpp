#include "cli.hpp"

#include <sys/resource.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <new>

#include "CLI11.hpp"
#include "theta/chain_complex.hpp"
#include "theta/counting.hpp"
#include "theta/errors.hpp"
#include "theta/json_io.hpp"
#include "theta/level_tree.hpp"
#include "theta/ngraph.hpp"
#include "theta/oracle.hpp"
#include "theta/presheaf.hpp"
#include "theta/verify.hpp"

namespace theta::cli {

namespace {

// Caps the address space at its current size plus THETA_MAX_MEM_MB; allocation
// failures past that point surface as std::bad_alloc.
void apply_memory_cap(std::ostream& err) {
    static bool applied = false;
    if (applied) return;
    applied = true;
    const char* env = std::getenv("THETA_MAX_MEM_MB");
    if (!env || !*env) return;
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (*end != '\0' || mb == 0) {
        err << "warning: ignoring THETA_MAX_MEM_MB=" << env << "\n";
        return;
    }
    unsigned long long pages = 0;
    std::ifstream statm("/proc/self/statm");
    statm >> pages;
    const auto baseline = pages * static_cast<unsigned long long>(sysconf(_SC_PAGESIZE));
    rlimit lim{};
    getrlimit(RLIMIT_AS, &lim);
    const rlim_t want = static_cast<rlim_t>(baseline + mb * 1024ULL * 1024ULL);
    if (lim.rlim_max != RLIM_INFINITY && want > lim.rlim_max) return;
    lim.rlim_cur = want;
    setrlimit(RLIMIT_AS, &lim);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // JSON cells that are numbers rather than strings.
    std::vector<bool> numeric;
};

void print_table(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& row : t.rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < t.header.size(); ++i)
                obj[t.header[i]] = t.numeric[i] ? Json::parse(row[i]) : Json(row[i]);
            arr.push_back(std::move(obj));
        }
        out << arr.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

struct Options {
    int n = 1;
    int edges = 0;
    bool pruned = false;
    std::string tree;
    std::string group = "z2";
    int max_dim = 6;
    std::string format = "csv";
    bool oracle = false;
    int order = 2;
    int terms = 10;
    std::string suite;
    std::uint64_t seed = 0;
};

int cmd_trees(const Options& o, std::ostream& out) {
    const auto trees = o.pruned ? enumerate_pruned(o.n, o.edges) : enumerate_trees(o.n, o.edges);
    for (const auto& t : trees) out << render(t) << "\n";
    return kOk;
}

int cmd_star(const Options& o, std::ostream& out) {
    out << to_json(star(parse_tree(o.tree), o.n)).dump() << "\n";
    return kOk;
}

int cmd_em_cells(const Options& o, std::ostream& out) {
    const auto census = cell_census(em_set(FiniteAbelianGroup::parse(o.group), o.n), o.max_dim);
    Table t{{"dimension", "count"}, {}, {true, true}};
    for (std::size_t d = 0; d < census.size(); ++d) t.rows.push_back({std::to_string(d), std::to_string(census[d])});
    print_table(t, o.format, out);
    return kOk;
}

int cmd_em_homology(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.max_dim < 1) throw ArgumentError("--max-dim must be >= 1 for homology");
    const auto pi = FiniteAbelianGroup::parse(o.group);
    if (o.oracle && o.n > 2) {
        err << "error: the oracle supports n <= 2 only\n";
        return kUnsupported;
    }
    const auto betti = betti_numbers(chain_complex(em_set(pi, o.n), o.max_dim));
    Table t{{"degree", "betti_f2"}, {}, {true, true}};
    for (std::size_t d = 0; d < betti.size(); ++d) t.rows.push_back({std::to_string(d), std::to_string(betti[d])});
    print_table(t, o.format, out);
    if (!o.oracle) return kOk;
    const auto expected = oracle_multisimplicial(pi, o.n, o.max_dim);
    for (std::size_t d = 0; d < betti.size(); ++d) {
        if (d >= expected.size() || betti[d] != expected[d]) {
            err << "oracle mismatch in degree " << d << ": " << betti[d] << " vs "
                << (d < expected.size() ? std::to_string(expected[d]) : "-") << "\n";
            return kMismatch;
        }
    }
    return kOk;
}

int cmd_count_fib(const Options& o, std::ostream& out) {
    if (o.terms < 1) throw ArgumentError("--terms must be >= 1");
    const auto f = fib_numbers(o.n, o.order, o.terms - 1);
    Table t{{"k", "f"}, {}, {true, true}};
    for (std::size_t k = 0; k < f.size(); ++k) t.rows.push_back({std::to_string(k), f[k].str()});
    print_table(t, o.format, out);
    return kOk;
}

int cmd_count_euler(const Options& o, std::ostream& out, std::ostream& err) {
    const auto chi = euler_char(o.n, o.order);
    const auto text = format_rational(chi);
    if (o.format == "json")
        out << Json{{"n", o.n}, {"order", o.order}, {"euler", text}}.dump() << "\n";
    else
        out << text << "\n";
    if (chi != expected_euler_char(o.n, o.order)) {
        err << "euler characteristic " << text << " differs from " << format_rational(expected_euler_char(o.n, o.order))
            << "\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    auto reports = run_suite(o.suite, o.seed);
    if (!reports) {
        err << "error: unknown suite '" << o.suite << "'\n";
        return kUsage;
    }
    bool ok = true;
    for (const auto& r : *reports) {
        out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks << " checks, " << r.failed
            << " failed)\n";
        for (const auto& f : r.failures) out << "  " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of the categories Theta_n and the K(pi,n) Theta_n-sets", "theta"};
    app.require_subcommand(1);
    Options o;

    auto formats = CLI::IsMember({"csv", "json"});

    auto* trees = app.add_subcommand("trees", "list level-trees in canonical bracket form");
    trees->add_option("--n", o.n, "maximal height")->required()->check(CLI::NonNegativeNumber);
    trees->add_option("--edges", o.edges, "number of edges")->required()->check(CLI::NonNegativeNumber);
    trees->add_flag("--pruned", o.pruned, "only trees whose leaves all sit at height n");

    auto* star_cmd = app.add_subcommand("star", "print the n-graph of a level-tree as JSON");
    star_cmd->add_option("--tree", o.tree, "bracket encoding, e.g. [[],[[]]]")->required();
    star_cmd->add_option("--n", o.n, "ambient level")->required()->check(CLI::NonNegativeNumber);

    auto* em = app.add_subcommand("em", "cells and F2 homology of K(pi,n)");
    em->require_subcommand(1);
    auto em_options = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "level")->required()->check(CLI::PositiveNumber);
        sub->add_option("--group", o.group, "finite abelian group, e.g. z2, z3, z2xz4")->required();
        sub->add_option("--max-dim", o.max_dim, "dimension bound")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--format", o.format, "csv or json")->check(formats);
    };
    auto* cells = em->add_subcommand("cells", "non-degenerate cell counts per dimension");
    em_options(cells);
    auto* homology = em->add_subcommand("homology", "F2 Betti numbers in degrees below --max-dim");
    em_options(homology);
    homology->add_flag("--oracle", o.oracle, "cross-check against the multisimplicial computation");

    auto* count = app.add_subcommand("count", "generalized Fibonacci numbers and Euler characteristics");
    count->require_subcommand(1);
    auto count_options = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "level")->required()->check(CLI::PositiveNumber);
        sub->add_option("--order", o.order, "group order p")->required();
        sub->add_option("--format", o.format, "csv or json")->check(formats);
    };
    auto* fib = count->add_subcommand("fib", "f^0 .. f^(terms-1)");
    count_options(fib);
    fib->add_option("--terms", o.terms, "number of terms")->check(CLI::PositiveNumber);
    auto* euler = count->add_subcommand("euler", "value of the cell-count series at t = -1");
    count_options(euler);

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", o.suite, "wreath-laws, factorization, gamma-functor, chain, counts or all")->required();
    verify->add_option("--seed", o.seed, "seed for the sampled checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    apply_memory_cap(err);
    try {
        if (*trees) return cmd_trees(o, out);
        if (*star_cmd) return cmd_star(o, out);
        if (*cells) return cmd_em_cells(o, out);
        if (*homology) return cmd_em_homology(o, out, err);
        if (*fib || *euler) {
            if (o.order < 2) {
                err << "error: --order must be >= 2\n";
                return kUsage;
            }
            return *fib ? cmd_count_fib(o, out) : cmd_count_euler(o, out, err);
        }
        if (*verify) return cmd_verify(o, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::bad_alloc&) {
        err << "error: memory limit exceeded\n";
        return kUnsupported;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
    err << app.help();
    return kUsage;
}

}  // namespace theta::cli
