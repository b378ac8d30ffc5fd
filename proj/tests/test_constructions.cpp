#include "turan/constructions.hpp"

#include "turan/formulas.hpp"
#include "turan/patterns.hpp"

#include <doctest.h>

#include <random>

using namespace turan;

TEST_CASE("star cover counts") {
    CHECK(star_cover(7, 3, 1).edge_count() == 15);
    CHECK(star_cover(12, 3, 3).edge_count() == 136);
    CHECK(star_cover(6, 3, 0).edge_count() == 0);
    CHECK(star_cover(6, 3, 6).edge_count() == 20);  // complete graph

    for (int n : {6, 9, 12})
        for (int t = 0; t <= n; ++t)
            REQUIRE(BigInt(star_cover(n, 3, t).edge_count()) == binom(n, 3) - binom(n - t, 3));
}

TEST_CASE("loose extremal counts match the formula") {
    CHECK(loose_extremal(10, 3, {4}).edge_count() == 37);
    CHECK(loose_extremal(12, 3, {3, 3}).edge_count() == 136);
    CHECK(loose_extremal(12, 3, {2, 2}).edge_count() == 56);

    for (int r : {3, 4})
        for (auto& lengths : std::vector<std::vector<long long>>{{3}, {4}, {1, 1}, {3, 3}, {4, 4}, {3, 4}}) {
            long long t = ex_loose_forest(20, r, lengths).t;
            for (int n = static_cast<int>(t) + r; n <= 16; ++n) {
                REQUIRE(BigInt(loose_extremal(n, r, lengths).edge_count()) ==
                        ex_loose_forest(n, r, lengths).value);
                REQUIRE(BigInt(linear_extremal(n, r, lengths).edge_count()) ==
                        ex_linear_forest(n, r, lengths).value);
            }
        }
}

TEST_CASE("even lengths add the disjoint edge / fixed pair block") {
    Hypergraph lo = loose_extremal(10, 3, {4});  // t = 1, star at {1}
    CHECK(lo.has_edge(mask_from_vertices({2, 3, 4})));

    Hypergraph li = linear_extremal(15, 3, {4});
    CHECK(li.edge_count() == 103);
    // pair block: all r-sets avoiding S containing {2, 3}
    CHECK(li.has_edge(mask_from_vertices({2, 3, 15})));
    CHECK(!li.has_edge(mask_from_vertices({2, 4, 5})));

    Hypergraph odd = linear_extremal(10, 3, {3});
    CHECK(odd.edge_count() == 36);  // star only, d = 0
}

TEST_CASE("constructions are free of their pattern") {
    for (int r : {3, 4})
        for (auto& lengths : std::vector<std::vector<long long>>{{3}, {4}, {1, 1}, {3, 3}}) {
            long long t = ex_loose_forest(20, r, lengths).t;
            for (int n = static_cast<int>(t) + r; n <= 13; n += 3) {
                CAPTURE(r);
                CAPTURE(n);
                Hypergraph lo = loose_extremal(n, r, lengths);
                REQUIRE(!contains_forest(lo, ForestSpec::uniform(PathKind::Loose, lengths)).has_value());
                Hypergraph li = linear_extremal(n, r, lengths);
                REQUIRE(!contains_forest(li, ForestSpec::uniform(PathKind::Linear, lengths)).has_value());
            }
        }
}

TEST_CASE("infeasible when n < t + r") {
    CHECK_THROWS_AS(loose_extremal(5, 3, {3, 3}), InfeasibleError);  // t = 3 needs n >= 6
    CHECK_THROWS_AS(linear_extremal(4, 4, {4}), InfeasibleError);    // t = 1 needs n >= 5
    CHECK(linear_extremal(5, 4, {4}).edge_count() > 0);              // boundary n = t + r
}

TEST_CASE("matching candidates") {
    MatchingCandidates c5 = matching_candidates(5, 3, 1);
    CHECK(c5.clique.edge_count() == 10);
    CHECK(c5.star.edge_count() == 6);
    CHECK(!c5.clique_truncated);

    MatchingCandidates c7 = matching_candidates(7, 3, 1);
    CHECK(c7.clique.edge_count() == 10);
    CHECK(c7.star.edge_count() == 15);

    MatchingCandidates c4 = matching_candidates(4, 3, 1);
    CHECK(c4.clique_truncated);
    CHECK(c4.clique.edge_count() == 4);
    CHECK(c4.star.edge_count() == 3);

    MatchingCandidates c0 = matching_candidates(6, 3, 0);
    CHECK(c0.clique.edge_count() == 0);
    CHECK(c0.star.edge_count() == 0);

    // Both candidates avoid s+1 disjoint edges.
    for (int n : {4, 5, 6, 7, 8})
        for (long long s : {1LL, 2LL}) {
            MatchingCandidates c = matching_candidates(n, 3, s);
            ForestSpec forbidden = ForestSpec::matching(s + 1);
            REQUIRE(!contains_forest(c.clique, forbidden).has_value());
            REQUIRE(!contains_forest(c.star, forbidden).has_value());
        }
}

TEST_CASE("construction output is deterministic") {
    std::string a = to_hg(linear_extremal(12, 3, {4, 4}));
    std::string b = to_hg(linear_extremal(12, 3, {4, 4}));
    CHECK(a == b);
    CHECK(to_hg(star_cover(9, 3, 2)) == to_hg(star_cover(9, 3, 2)));
}

TEST_CASE("saturation probe (diagnostic)") {
    // Fraction of sampled non-edges whose addition creates the forbidden
    // forest; reported, not asserted.
    std::mt19937_64 rng(99);
    for (auto& lengths : std::vector<std::vector<long long>>{{3}, {3, 3}}) {
        Hypergraph g = loose_extremal(11, 3, lengths);
        ForestSpec spec = ForestSpec::uniform(PathKind::Loose, lengths);
        auto comp = g.complement_candidates();
        std::shuffle(comp.begin(), comp.end(), rng);
        comp.resize(std::min<std::size_t>(comp.size(), 20));
        int creating = 0;
        for (EdgeMask e : comp)
            if (contains_forest(g.add_edge(e), spec).has_value()) ++creating;
        MESSAGE("saturation fraction for loose lengths starting " << lengths[0] << ": " << creating << "/"
                                                                  << comp.size());
    }
}
