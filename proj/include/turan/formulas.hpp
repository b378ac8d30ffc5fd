#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; zero outside 0 <= k <= n (negative upper index vanishes).
BigInt binom(long long n, long long k);

// C(n-1, r-1) + C(n-2, r-1) + ... + C(n-t, r-1); equals C(n, r) - C(n-t, r).
BigInt star_sum(long long n, int r, long long t);

// Result of a closed-form extremal-number evaluation.
// For star-type formulas: value = star_sum(n, r, t) + correction.
// For the matching conjecture: star_sum holds the cover-candidate count,
// correction the clique-candidate count, and value their maximum.
struct FormulaResult {
    BigInt value;
    long long t = 0;
    BigInt star_sum;
    BigInt correction;
    std::string validity;
    std::string warning;  // empty unless the value is known to be suspect
};

// Largest r-graph on [n] with no forest of vertex-disjoint loose paths of the
// given lengths.  Requires r >= 3; lengths all >= 1.
FormulaResult ex_loose_forest(long long n, int r, const std::vector<long long>& lengths);

// Same for linear paths.
FormulaResult ex_linear_forest(long long n, int r, const std::vector<long long>& lengths);

// Largest r-graph on [n] with no s+1 pairwise disjoint edges: the larger of a
// clique on min(n, r(s+1)-1) vertices and the cover of a fixed s-set.
FormulaResult ex_matching_conjecture(long long n, int r, long long s);

// Graph case (r = 2): k vertex-disjoint paths, each on ell vertices.
// Supported shapes: ell = 3 (any k >= 1), or ell >= 4 with k >= 2.
FormulaResult ex_graph_path_forest(long long n, const std::vector<long long>& lengths);

// Linear cycle on ell edges; equals the length-ell linear path value on its
// validity range r >= 3, ell >= 4, (r, ell) != (3, 4).
FormulaResult ex_linear_cycle(long long n, int r, long long ell);

}  // namespace turan
