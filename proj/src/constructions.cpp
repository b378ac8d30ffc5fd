#include "turan/constructions.hpp"

#include "turan/formulas.hpp"

#include <algorithm>

namespace turan {

namespace {

// Enumerating C(n, r) candidate sets; keep generation at desk scale.
constexpr long long kMaxGeneratedEdges = 5'000'000;

void check_generation_size(int n, int r) {
    if (binom(n, r) > kMaxGeneratedEdges)
        throw InfeasibleError("construction on " + std::to_string(n) + " vertices with r = " +
                              std::to_string(r) + " exceeds the generation limit");
}

long long forest_star_size(const std::vector<long long>& lengths) {
    long long t = -1;
    for (long long l : lengths) t += (l + 1) / 2;
    return t;
}

void check_forest_args(int r, const std::vector<long long>& lengths) {
    if (r < 3) throw OutOfScopeError("path-forest constructions require uniformity r >= 3");
    if (lengths.empty()) throw OutOfScopeError("at least one path length is required");
    for (long long l : lengths)
        if (l < 1) throw OutOfScopeError("path lengths must be at least 1");
}

bool all_even(const std::vector<long long>& lengths) {
    return std::all_of(lengths.begin(), lengths.end(), [](long long l) { return l % 2 == 0; });
}

}  // namespace

Hypergraph star_cover(int n, int r, int t) {
    if (t < 0 || t > n) throw InfeasibleError("star size t must be in 0..n");
    if (r > n) return Hypergraph(n, r);
    check_generation_size(n, r);
    EdgeMask s = EdgeMask::first_n(t);
    std::vector<EdgeMask> edges;
    for (EdgeMask e : all_r_subsets(n, r))
        if (e.intersects(s)) edges.push_back(e);
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph loose_extremal(int n, int r, const std::vector<long long>& lengths) {
    check_forest_args(r, lengths);
    long long t = forest_star_size(lengths);
    if (n < t + r)
        throw InfeasibleError("construction needs n >= t + r = " + std::to_string(t + r) + ", got n = " +
                              std::to_string(n));
    Hypergraph h = star_cover(n, r, static_cast<int>(t));
    if (all_even(lengths)) {
        EdgeMask extra;
        for (int v = static_cast<int>(t) + 1; v <= static_cast<int>(t) + r; ++v) extra.set(v);
        h = h.add_edge(extra);
    }
    return h;
}

Hypergraph linear_extremal(int n, int r, const std::vector<long long>& lengths) {
    check_forest_args(r, lengths);
    long long t = forest_star_size(lengths);
    if (n < t + r)
        throw InfeasibleError("construction needs n >= t + r = " + std::to_string(t + r) + ", got n = " +
                              std::to_string(n));
    std::vector<EdgeMask> edges = star_cover(n, r, static_cast<int>(t)).edges();
    if (all_even(lengths)) {
        // All r-sets avoiding S that contain both fixed vertices t+1 and t+2.
        EdgeMask pair;
        pair.set(static_cast<int>(t) + 1);
        pair.set(static_cast<int>(t) + 2);
        int rest = n - static_cast<int>(t) - 2;
        for (EdgeMask tail : all_r_subsets(rest, r - 2)) {
            EdgeMask e = pair;
            for (int v = tail.next_vertex(); v != 0; v = tail.next_vertex(v))
                e.set(v + static_cast<int>(t) + 2);
            edges.push_back(e);
        }
    }
    return Hypergraph(n, r, std::move(edges));
}

MatchingCandidates matching_candidates(int n, int r, long long s) {
    if (s < 0) throw OutOfScopeError("matching size s must be nonnegative");
    long long clique_vertices = r * (s + 1) - 1;
    bool truncated = clique_vertices > n;
    if (truncated) clique_vertices = n;
    check_generation_size(static_cast<int>(clique_vertices), r);
    std::vector<EdgeMask> clique_edges =
        static_cast<int>(clique_vertices) >= r ? all_r_subsets(static_cast<int>(clique_vertices), r)
                                               : std::vector<EdgeMask>{};
    Hypergraph clique(n, r, std::move(clique_edges));
    Hypergraph star = star_cover(n, r, static_cast<int>(std::min<long long>(s, n)));
    return {std::move(clique), std::move(star), truncated};
}

}  // namespace turan
