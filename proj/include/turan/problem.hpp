#pragma once

#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turan {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ProblemKind { Loose, Linear, Berge, Matching, Graph, LinearCycle };

std::string to_string(ProblemKind k);
std::optional<ProblemKind> problem_kind_from_string(const std::string& s);

// One forbidden-pattern query: kind + uniformity + lengths (or s for
// matchings).  Bundles the forest to embed, the closed-form evaluator, and
// the extremal construction where one exists.
struct Problem {
    ProblemKind kind;
    int r = 3;
    std::vector<long long> lengths;  // per-path lengths; vertex counts for Graph
    long long s = 0;                 // Matching only: forbid s+1 disjoint edges

    // Throws OutOfScopeError naming the violated precondition.
    void validate() const;

    ForestSpec forest() const;

    bool has_formula() const;
    FormulaResult formula(long long n) const;

    bool has_construction() const;
    // Empty when the construction is infeasible at this n.
    std::optional<Hypergraph> construction(int n) const;

    std::string pattern_string() const;  // "3,3" or "s=1"
    std::string cache_key(const std::string& op, int n) const;
};

}  // namespace turan
