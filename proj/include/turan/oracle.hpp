#pragma once

#include "turan/formulas.hpp"
#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"
#include "turan/problem.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace turan {

class ResultCache;

struct Budget {
    std::uint64_t max_nodes = 500'000'000;
    double max_seconds = 0.0;  // 0 = unlimited
};

enum class SearchMode { Auto, Exhaustive, BranchAndBound };

std::string to_string(SearchMode m);

struct OracleOptions {
    Budget budget;
    SearchMode mode = SearchMode::Auto;
    int workers = 1;
    // Known feasible graph used as incumbent and pruning floor; checked for
    // freeness before use and ignored when it is not.
    std::optional<Hypergraph> seed;
};

struct OracleResult {
    long long value;
    Hypergraph witness;  // spec-free with `value` edges; a lower-bound witness when !exact
    std::uint64_t nodes_explored;
    SearchMode mode_used;
    double elapsed_seconds;
    bool exact;       // false only when the budget ran out
    bool from_cache;
};

// Exact maximum edge count among spec-free r-graphs on [n]: depth-first
// include/exclude branch and bound over candidate r-sets in canonical order,
// pruned when current + remaining <= best.  Exhaustive mode scans all
// 2^C(n,r) subsets and requires C(n,r) <= 24.
OracleResult turan_exact(int n, int r, const ForestSpec& spec, const OracleOptions& opts = {});

// Maximum edges with no two edges meeting in exactly one vertex.
OracleResult singleton_free_max(int n, int r, const OracleOptions& opts = {});

struct VerifyRow {
    int n;
    long long oracle_value;
    bool oracle_exact;
    SearchMode mode_used;
    std::uint64_t nodes;
    BigInt formula_value;
    std::optional<long long> construction_count;
    bool agree;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::optional<int> threshold;  // least n from which all rows through the end agree
    bool all_exact;
};

// Per-n comparison of oracle value, formula value and construction count,
// locating the least n from which all agree through the end of the range.
VerifyReport verify_threshold(const Problem& problem, int n_lo, int n_hi, const OracleOptions& opts = {},
                              ResultCache* cache = nullptr);

// Oracle entry with optional construction seeding and caching, shared by the
// CLI and the verify pipeline.
OracleResult solve_problem(const Problem& problem, int n, OracleOptions opts, ResultCache* cache);

// Same wrapper for the singleton-free maximum.
OracleResult solve_singleton_free(int n, int r, OracleOptions opts, ResultCache* cache);

}  // namespace turan
