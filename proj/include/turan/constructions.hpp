#pragma once

#include "turan/hypergraph.hpp"

#include <vector>

namespace turan {

// All r-sets of [n] meeting the fixed set S = {1, ..., t}.
// Edge count is C(n, r) - C(n-t, r).
Hypergraph star_cover(int n, int r, int t);

// Star cover for the forest's star size t, plus the single edge
// {t+1, ..., t+r} when every length is even.  Free of the loose forest.
Hypergraph loose_extremal(int n, int r, const std::vector<long long>& lengths);

// Star cover plus, when every length is even, all r-sets of [n] \ S through
// the fixed pair {t+1, t+2}.  Free of the linear forest.
Hypergraph linear_extremal(int n, int r, const std::vector<long long>& lengths);

// The two candidate extremal graphs for forbidding s+1 disjoint edges: the
// complete r-graph on the first min(n, r(s+1)-1) vertices, and the cover of
// the fixed set [s].  `clique_truncated` marks the clique being clipped to [n].
struct MatchingCandidates {
    Hypergraph clique;
    Hypergraph star;
    bool clique_truncated;
};

MatchingCandidates matching_candidates(int n, int r, long long s);

}  // namespace turan
