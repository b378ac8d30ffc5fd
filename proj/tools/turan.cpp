#include "turan/cache.hpp"
#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/hypergraph.hpp"
#include "turan/oracle.hpp"
#include "turan/patterns.hpp"
#include "turan/problem.hpp"

#include "table.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace turan;

constexpr int kExitFree = 0;
constexpr int kExitContains = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInexact = 3;

struct PatternFlags {
    std::string kind;
    int r = 3;
    std::string lengths;
    long long s = -1;
};

void add_pattern_flags(CLI::App* cmd, PatternFlags& p, bool with_r = true) {
    cmd->add_option("--kind", p.kind, "pattern kind: loose, linear, berge, matching, graph, lcycle")
        ->required()
        ->check(CLI::IsMember({"loose", "linear", "berge", "matching", "graph", "lcycle"}));
    if (with_r) cmd->add_option("--r", p.r, "edge uniformity r")->check(CLI::Range(2, kMaxVertices));
    cmd->add_option("--lengths", p.lengths, "comma-separated path lengths, e.g. 3,3");
    cmd->add_option("--s", p.s, "matching parameter: forbid s+1 disjoint edges");
}

std::vector<long long> parse_lengths(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw OutOfScopeError("empty entry in --lengths");
        out.push_back(std::stoll(item));
    }
    return out;
}

Problem make_problem(const PatternFlags& p) {
    auto kind = problem_kind_from_string(p.kind);
    if (!kind) throw OutOfScopeError("unknown pattern kind: " + p.kind);
    Problem problem;
    problem.kind = *kind;
    problem.r = p.r;
    if (*kind == ProblemKind::Matching) {
        if (p.s < 0) throw OutOfScopeError("matching patterns require --s");
        problem.s = p.s;
    } else {
        if (p.lengths.empty()) throw OutOfScopeError("this pattern kind requires --lengths");
        problem.lengths = parse_lengths(p.lengths);
    }
    problem.validate();
    return problem;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw OutOfScopeError("empty n range: " + text);
    return {lo, hi};
}

struct OracleFlags {
    std::string mode = "auto";
    int workers = 1;
    std::uint64_t node_budget = 500'000'000;
    double time_budget_sec = 0.0;
    std::string cache_path;
    bool no_cache = false;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& f) {
    cmd->add_option("--mode", f.mode, "search mode")->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
    cmd->add_option("--workers", f.workers, "parallel workers for branch and bound")->check(CLI::Range(1, 256));
    cmd->add_option("--node-budget", f.node_budget, "node limit (checked every 4096 nodes)");
    cmd->add_option("--time-budget-sec", f.time_budget_sec, "wall-clock limit in seconds, 0 = unlimited");
    cmd->add_option("--cache", f.cache_path, "result cache file (default: TURAN_CACHE or turan_cache.jsonl)");
    cmd->add_flag("--no-cache", f.no_cache, "do not read or write the result cache");
}

OracleOptions make_oracle_options(const OracleFlags& f) {
    OracleOptions o;
    o.budget.max_nodes = f.node_budget;
    o.budget.max_seconds = f.time_budget_sec;
    o.workers = f.workers;
    if (f.mode == "exhaustive")
        o.mode = SearchMode::Exhaustive;
    else if (f.mode == "bnb")
        o.mode = SearchMode::BranchAndBound;
    else
        o.mode = SearchMode::Auto;
    return o;
}

std::unique_ptr<ResultCache> make_cache(const OracleFlags& f) {
    if (f.no_cache) return nullptr;
    std::string path = f.cache_path.empty() ? ResultCache::default_path() : f.cache_path;
    return std::make_unique<ResultCache>(path);
}

std::string big_str(const BigInt& v) { return v.str(); }

int cmd_formula(const PatternFlags& pf, const std::string& n_range, const std::string& format,
                std::ostream& out) {
    Problem problem = make_problem(pf);
    if (!problem.has_formula()) throw OutOfScopeError("no closed form is provided for this kind");
    auto [lo, hi] = parse_n_range(n_range);
    Table table({"kind", "r", "pattern", "n", "t", "star_sum", "correction", "value", "validity", "warning"});
    for (int n = lo; n <= hi; ++n) {
        FormulaResult f = problem.formula(n);
        table.add_row({to_string(problem.kind), std::to_string(problem.r), problem.pattern_string(),
                       std::to_string(n), std::to_string(f.t), big_str(f.star_sum), big_str(f.correction),
                       big_str(f.value), f.validity, f.warning});
    }
    table.write(out, format);
    return kExitFree;
}

int cmd_construct(const PatternFlags& pf, int n, const std::string& out_path, std::ostream& out) {
    Problem problem = make_problem(pf);
    std::string comment = "turan construct --kind " + to_string(problem.kind) + " --r " +
                          std::to_string(problem.r) +
                          (problem.kind == ProblemKind::Matching ? " --s " + std::to_string(problem.s)
                                                                 : " --lengths " + problem.pattern_string()) +
                          " --n " + std::to_string(n);
    FormulaResult f = problem.formula(n);

    if (problem.kind == ProblemKind::Matching) {
        MatchingCandidates c = matching_candidates(n, problem.r, problem.s);
        auto dot = out_path.rfind('.');
        std::string stem = dot == std::string::npos ? out_path : out_path.substr(0, dot);
        std::string ext = dot == std::string::npos ? "" : out_path.substr(dot);
        std::string path_a = stem + ".A" + ext;
        std::string path_b = stem + ".B" + ext;
        save_hg(c.clique, path_a, comment + " (clique candidate)");
        save_hg(c.star, path_b, comment + " (cover candidate)");
        out << "wrote " << path_a << " (" << c.clique.edge_count() << " edges)\n";
        out << "wrote " << path_b << " (" << c.star.edge_count() << " edges)\n";
        long long best = std::max(c.clique.edge_count(), c.star.edge_count());
        out << "formula value: " << big_str(f.value) << "\n";
        bool agree = BigInt(best) == f.value;
        out << "agreement: " << (agree ? "yes" : "no") << "\n";
        return agree ? kExitFree : kExitContains;
    }

    std::optional<Hypergraph> g;
    switch (problem.kind) {
        case ProblemKind::Loose: g = loose_extremal(n, problem.r, problem.lengths); break;
        case ProblemKind::Linear:
        case ProblemKind::LinearCycle: g = linear_extremal(n, problem.r, problem.lengths); break;
        default: throw OutOfScopeError("no construction is provided for this kind");
    }
    save_hg(*g, out_path, comment);
    out << "wrote " << out_path << " (" << g->edge_count() << " edges)\n";
    out << "formula value: " << big_str(f.value) << "\n";
    bool agree = BigInt(static_cast<long long>(g->edge_count())) == f.value;
    out << "agreement: " << (agree ? "yes" : "no") << "\n";
    return agree ? kExitFree : kExitContains;
}

int cmd_check(const PatternFlags& pf, bool r_given, const std::string& input,
              const std::string& witness_out, std::ostream& out) {
    Hypergraph h = load_hg(input);
    PatternFlags adjusted = pf;
    if (r_given && pf.r != h.uniformity())
        throw OutOfScopeError("--r " + std::to_string(pf.r) + " does not match the file's uniformity " +
                              std::to_string(h.uniformity()));
    adjusted.r = h.uniformity();
    Problem problem = make_problem(adjusted);
    auto witness = contains_forest(h, problem.forest());
    if (!witness) {
        out << "FREE\n";
        return kExitFree;
    }
    std::string json = witness_to_json(*witness, h.vertex_count(), h.uniformity());
    out << "CONTAINS\n" << json << "\n";
    if (!witness_out.empty()) {
        std::ofstream wf(witness_out, std::ios::binary);
        if (!wf) throw Error(witness_out + ": cannot open for writing");
        wf << json << "\n";
    }
    return kExitContains;
}

void print_oracle_result(const OracleResult& res, std::ostream& out) {
    out << "value: " << res.value << "\n";
    out << "exact: " << (res.exact ? "yes" : "no") << "\n";
    out << "mode: " << to_string(res.mode_used) << "\n";
    out << "nodes: " << res.nodes_explored << "\n";
    out << "elapsed_sec: " << res.elapsed_seconds << "\n";
    out << "cached: " << (res.from_cache ? "yes" : "no") << "\n";
}

int cmd_oracle(const PatternFlags& pf, int n, const OracleFlags& of, const std::string& witness_out,
               std::ostream& out) {
    Problem problem = make_problem(pf);
    auto cache = make_cache(of);
    OracleResult res = solve_problem(problem, n, make_oracle_options(of), cache.get());
    print_oracle_result(res, out);
    if (!witness_out.empty()) {
        save_hg(res.witness, witness_out,
                "turan oracle witness: kind " + to_string(problem.kind) + " pattern " +
                    problem.pattern_string() + " n " + std::to_string(n) + " value " +
                    std::to_string(res.value));
        out << "witness: " << witness_out << "\n";
    }
    return res.exact ? kExitFree : kExitInexact;
}

int cmd_singleton_free(int n, int r, const OracleFlags& of, std::ostream& out) {
    auto cache = make_cache(of);
    OracleResult res = solve_singleton_free(n, r, make_oracle_options(of), cache.get());
    print_oracle_result(res, out);
    out << "upper_bound_check: value <= C(n, r-2) = " << big_str(binom(n, r - 2)) << " -> "
        << (BigInt(res.value) <= binom(n, r - 2) ? "holds" : "VIOLATED") << "\n";
    return res.exact ? kExitFree : kExitInexact;
}

int cmd_verify(const PatternFlags& pf, const std::string& n_range, const OracleFlags& of,
               const std::string& format, std::ostream& out) {
    Problem problem = make_problem(pf);
    auto [lo, hi] = parse_n_range(n_range);
    auto cache = make_cache(of);
    VerifyReport report = verify_threshold(problem, lo, hi, make_oracle_options(of), cache.get());
    Table table({"kind", "r", "pattern", "n", "oracle", "exact", "mode", "formula", "construction", "agree"});
    for (const VerifyRow& row : report.rows) {
        table.add_row({to_string(problem.kind), std::to_string(problem.r), problem.pattern_string(),
                       std::to_string(row.n), std::to_string(row.oracle_value), row.oracle_exact ? "yes" : "no",
                       to_string(row.mode_used), big_str(row.formula_value),
                       row.construction_count ? std::to_string(*row.construction_count) : "",
                       row.agree ? "yes" : "no"});
    }
    table.write(out, format);
    if (report.threshold)
        out << "empirical threshold: n >= " << *report.threshold << "\n";
    else
        out << "no agreement in range\n";
    return report.all_exact ? kExitFree : kExitInexact;
}

// Internal consistency sweep: witness replay, memoized vs plain search, and
// branch-and-bound vs exhaustive on random instances.
int cmd_selftest(std::uint64_t seed, int trials, std::ostream& out) {
    std::mt19937_64 rng(seed);
    int checks = 0;

    auto random_graph = [&](int n, int r, int m) {
        auto all = all_r_subsets(n, r);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::min<std::size_t>(all.size(), m));
        return Hypergraph(n, r, std::move(all));
    };

    std::vector<ForestSpec> specs;
    for (PathKind k : {PathKind::Loose, PathKind::Linear, PathKind::Berge})
        for (int l : {1, 2, 3}) specs.push_back(ForestSpec::single(k, l));
    specs.push_back(ForestSpec::uniform(PathKind::Loose, {2, 2}));
    specs.push_back(ForestSpec::uniform(PathKind::Linear, {2, 1}));
    specs.push_back(ForestSpec::matching(2));

    for (int t = 0; t < trials; ++t) {
        Hypergraph h = random_graph(7, 3, 9);
        for (const ForestSpec& spec : specs) {
            auto w = contains_forest(h, spec);  // replay-validated internally
            ++checks;
            if (w) {
                std::string why;
                if (!validate_witness(h, spec, *w, &why)) {
                    out << "selftest FAILED: witness replay: " << why << "\n";
                    return 1;
                }
            }
        }
    }

    SearchOptions on, off;
    on.memo = SearchOptions::Memo::On;
    off.memo = SearchOptions::Memo::Off;
    for (int t = 0; t < trials; ++t) {
        Hypergraph h = random_graph(12, 3, 40);
        for (const ForestSpec& spec :
             {ForestSpec::uniform(PathKind::Linear, {3, 2}), ForestSpec::uniform(PathKind::Loose, {3, 3})}) {
            ++checks;
            if (contains_forest(h, spec, on).has_value() != contains_forest(h, spec, off).has_value()) {
                out << "selftest FAILED: memoized and plain search disagree\n";
                return 1;
            }
        }
    }

    for (int t = 0; t < std::min(trials, 10); ++t) {
        OracleOptions ex, bb;
        ex.mode = SearchMode::Exhaustive;
        bb.mode = SearchMode::BranchAndBound;
        ForestSpec spec = (t % 2) ? ForestSpec::single(PathKind::Loose, 2) : ForestSpec::matching(2);
        int n = 5 + (t % 2);
        ++checks;
        if (turan_exact(n, 3, spec, ex).value != turan_exact(n, 3, spec, bb).value) {
            out << "selftest FAILED: search modes disagree\n";
            return 1;
        }
    }

    out << "selftest: " << checks << " checks passed (seed " << seed << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Turan numbers for forests of loose and linear hyperpaths: formulas, "
                 "constructions, containment checking, and a small-n search oracle"};
    app.require_subcommand(1);

    PatternFlags pf_formula, pf_construct, pf_check, pf_oracle, pf_verify;
    OracleFlags of_oracle, of_verify, of_singleton;
    std::string n_range_formula, n_range_verify;
    std::string format_formula = "csv", format_verify = "csv";
    std::string out_path, check_input, check_witness_out, oracle_witness_out;
    int n_construct = 0, n_oracle = 0, n_singleton = 0, r_singleton = 3;
    std::uint64_t selftest_seed = 20259;
    int selftest_trials = 40;

    CLI::App* formula = app.add_subcommand("formula", "evaluate a closed-form extremal number");
    add_pattern_flags(formula, pf_formula);
    formula->add_option("--n,--n-range", n_range_formula, "single n or range A..B")->required();
    formula->add_option("--format", format_formula, "output format")
        ->check(CLI::IsMember({"csv", "md", "tsv"}));

    CLI::App* construct = app.add_subcommand("construct", "write an extremal construction as a .hg file");
    add_pattern_flags(construct, pf_construct);
    construct->add_option("--n", n_construct, "vertex count")->required();
    construct->add_option("--out", out_path, "output path (.hg)")->required();

    CLI::App* check = app.add_subcommand("check", "decide containment of a pattern in a .hg file");
    add_pattern_flags(check, pf_check);
    check->add_option("--input", check_input, "hypergraph file to test")->required();
    check->add_option("--witness-out", check_witness_out, "write the witness JSON here");

    CLI::App* oracle = app.add_subcommand("oracle", "exact maximum pattern-free edge count at small n");
    add_pattern_flags(oracle, pf_oracle);
    oracle->add_option("--n", n_oracle, "vertex count")->required();
    add_oracle_flags(oracle, of_oracle);
    oracle->add_option("--witness-out", oracle_witness_out, "write a maximizing hypergraph here (.hg)");

    CLI::App* verify = app.add_subcommand("verify", "compare oracle, formula and construction over a range");
    add_pattern_flags(verify, pf_verify);
    verify->add_option("--n-range,--n", n_range_verify, "range A..B or single n")->required();
    add_oracle_flags(verify, of_verify);
    verify->add_option("--format", format_verify, "output format")->check(CLI::IsMember({"csv", "md", "tsv"}));

    CLI::App* singleton = app.add_subcommand(
        "singleton-free", "maximum edges with no two edges sharing exactly one vertex");
    singleton->add_option("--n", n_singleton, "vertex count")->required();
    singleton->add_option("--r", r_singleton, "edge uniformity")->check(CLI::Range(2, kMaxVertices));
    add_oracle_flags(singleton, of_singleton);

    CLI::App* selftest = app.add_subcommand("selftest", "randomized internal consistency sweep");
    selftest->add_option("--seed", selftest_seed, "RNG seed");
    selftest->add_option("--trials", selftest_trials, "trials per stage");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*formula)
            return cmd_formula(pf_formula, n_range_formula, format_formula, std::cout);
        if (*construct)
            return cmd_construct(pf_construct, n_construct, out_path, std::cout);
        if (*check)
            return cmd_check(pf_check, check->count("--r") > 0, check_input, check_witness_out, std::cout);
        if (*oracle)
            return cmd_oracle(pf_oracle, n_oracle, of_oracle, oracle_witness_out, std::cout);
        if (*verify)
            return cmd_verify(pf_verify, n_range_verify, of_verify, format_verify, std::cout);
        if (*singleton)
            return cmd_singleton_free(n_singleton, r_singleton, of_singleton, std::cout);
        if (*selftest)
            return cmd_selftest(selftest_seed, selftest_trials, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
