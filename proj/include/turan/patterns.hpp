#pragma once

#include "turan/hypergraph.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace turan {

enum class PathKind { Loose, Linear, Berge, LinearCycle };

std::string to_string(PathKind k);

// A forbidden pattern: a path family of the given kind with exactly `length`
// edges.  Loose containment accepts any member of the loose family
// (consecutive overlaps of any size, nonconsecutive edges disjoint).
struct PathSpec {
    PathKind kind;
    int length;

    void validate() const;
};

// A forest: all parts must embed vertex-disjointly.  A matching M_s is s
// parts of kind Linear with length 1.
struct ForestSpec {
    std::vector<PathSpec> parts;

    static ForestSpec single(PathKind kind, int length) { return {{{kind, length}}}; }
    static ForestSpec uniform(PathKind kind, const std::vector<long long>& lengths);
    static ForestSpec matching(long long edges);

    void validate() const;
};

struct WitnessPart {
    PathSpec spec;
    std::vector<EdgeMask> edges;      // in path order
    std::vector<int> berge_vertices;  // v_1..v_{l+1}, Berge parts only
};

// An explicit embedding certifying containment; parts follow the ForestSpec order.
struct Witness {
    std::vector<WitnessPart> parts;
};

struct SearchOptions {
    // Twin-class failure memoization; Auto enables it on graphs large enough
    // for it to pay off and only for specs made of loose/linear parts.
    enum class Memo { Auto, On, Off } memo = Memo::Auto;
};

std::optional<Witness> contains_path(const Hypergraph& h, const PathSpec& spec,
                                     const SearchOptions& opts = {});
std::optional<Witness> contains_forest(const Hypergraph& h, const ForestSpec& spec,
                                       const SearchOptions& opts = {});

// Internal entry point over a raw edge list (canonical order not required).
std::optional<Witness> contains_forest_in_edges(int n, int r, std::span<const EdgeMask> edges,
                                                const ForestSpec& spec, const SearchOptions& opts = {});

// Containment restricted to embeddings that use `seed` in some part; the
// incremental test for "does adding this edge create the forbidden forest".
std::optional<Witness> contains_forest_using_edge(int n, int r, std::span<const EdgeMask> edges,
                                                  const ForestSpec& spec, EdgeMask seed);

// First pair (in canonical edge order) of distinct edges meeting in exactly
// one vertex and avoiding T entirely.
std::optional<std::pair<EdgeMask, EdgeMask>> find_one_intersecting_pair_avoiding(const Hypergraph& h,
                                                                                 EdgeMask avoid);

// True iff some pair of distinct edges intersects in exactly one vertex.
bool has_singleton_intersection(const Hypergraph& h);

// Replays a witness against the definitions; reason receives the first
// violation when the witness is rejected.
bool validate_witness(const Hypergraph& h, const ForestSpec& spec, const Witness& w,
                      std::string* reason = nullptr);

std::string witness_to_json(const Witness& w, int n, int r);

// Vertex partition into exchangeability classes: swapping any two vertices of
// a class maps the edge set onto itself.  Entry v (1-based) is the class of
// vertex v; entry 0 holds the number of classes.
std::vector<int> twin_classes(int n, std::span<const EdgeMask> edges);

}  // namespace turan
