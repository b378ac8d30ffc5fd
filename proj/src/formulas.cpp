#include "turan/formulas.hpp"

#include "turan/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace turan {

BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt star_sum(long long n, int r, long long t) {
    BigInt s = 0;
    for (long long i = 1; i <= t; ++i) s += binom(n - i, r - 1);
    return s;
}

namespace {

long long forest_star_size(const std::vector<long long>& lengths) {
    long long t = -1;
    for (long long l : lengths) t += (l + 1) / 2;
    return t;
}

void check_forest_args(int r, const std::vector<long long>& lengths) {
    if (r < 3)
        throw OutOfScopeError("path-forest formulas require uniformity r >= 3; use the graph-path formula for r = 2");
    if (lengths.empty()) throw OutOfScopeError("at least one path length is required");
    for (long long l : lengths)
        if (l < 1) throw OutOfScopeError("path lengths must be at least 1");
}

bool all_even(const std::vector<long long>& lengths) {
    return std::all_of(lengths.begin(), lengths.end(), [](long long l) { return l % 2 == 0; });
}

std::string large_n_validity(long long n, int r, long long t) {
    std::string note = "exact for all sufficiently large n";
    if (n < t + r) note += "; below construction scale (n < t+r)";
    return note;
}

}  // namespace

FormulaResult ex_loose_forest(long long n, int r, const std::vector<long long>& lengths) {
    check_forest_args(r, lengths);
    FormulaResult res;
    res.t = forest_star_size(lengths);
    res.star_sum = star_sum(n, r, res.t);
    res.correction = all_even(lengths) ? 1 : 0;
    res.value = res.star_sum + res.correction;
    res.validity = large_n_validity(n, r, res.t);
    if (std::any_of(lengths.begin(), lengths.end(), [](long long l) { return l == 2; }))
        res.warning =
            "suspect value for a length-2 loose component: a perfect matching is free of it "
            "with floor(n/r) edges, which exceeds this value once n >= 2r";
    return res;
}

FormulaResult ex_linear_forest(long long n, int r, const std::vector<long long>& lengths) {
    check_forest_args(r, lengths);
    FormulaResult res;
    res.t = forest_star_size(lengths);
    res.star_sum = star_sum(n, r, res.t);
    res.correction = all_even(lengths) ? binom(n - res.t - 2, r - 2) : 0;
    res.value = res.star_sum + res.correction;
    res.validity = large_n_validity(n, r, res.t);
    return res;
}

FormulaResult ex_matching_conjecture(long long n, int r, long long s) {
    if (r < 2) throw OutOfScopeError("uniformity must be at least 2");
    if (s < 0) throw OutOfScopeError("matching size s must be nonnegative");
    FormulaResult res;
    long long clique_vertices = r * (s + 1) - 1;
    bool truncated = clique_vertices > n;
    if (truncated) clique_vertices = n;
    res.t = s;
    res.star_sum = binom(n, r) - binom(n - s, r);  // edges meeting a fixed s-set
    res.correction = binom(clique_vertices, r);    // clique candidate
    res.value = std::max(res.star_sum, res.correction);
    res.validity = (r == 3) ? "exact for all n (the r = 3 case of the matching conjecture is settled)"
                            : "exact for sufficiently large n; conjectured for all n";
    if (truncated) res.validity += "; clique candidate truncated to n vertices";
    return res;
}

FormulaResult ex_graph_path_forest(long long n, const std::vector<long long>& lengths) {
    if (lengths.empty()) throw OutOfScopeError("at least one path is required");
    long long ell = lengths.front();
    if (!std::all_of(lengths.begin(), lengths.end(), [&](long long l) { return l == ell; }))
        throw OutOfScopeError("graph path-forest formula requires all paths to have equal vertex count");
    long long k = static_cast<long long>(lengths.size());
    FormulaResult res;
    if (ell == 3) {
        res.t = k - 1;
        res.validity = "exact for n >= " + std::to_string(7 * k);
    } else if (ell >= 4 && k >= 2) {
        res.t = k * (ell / 2) - 1;
        BigInt threshold = 2 * ell + BigInt(2 * k * ell) * ((ell + 1) / 2 + 1) * binom(ell, ell / 2);
        res.validity = "exact for n >= " + threshold.str();
    } else {
        throw OutOfScopeError(
            "graph path-forest formula covers paths on 3 vertices (any k) or on >= 4 vertices with k >= 2");
    }
    res.star_sum = BigInt(res.t) * n - BigInt(res.t) * (res.t + 1) / 2;
    if (ell == 3)
        res.correction = (n - res.t) / 2;
    else
        res.correction = (ell % 2 == 1) ? 1 : 0;
    res.value = res.star_sum + res.correction;
    return res;
}

FormulaResult ex_linear_cycle(long long n, int r, long long ell) {
    if (r < 3) throw OutOfScopeError("linear-cycle formula requires uniformity r >= 3");
    if (ell < 4) throw OutOfScopeError("linear-cycle formula requires cycle length >= 4");
    if (r == 3 && ell == 4) throw OutOfScopeError("linear-cycle formula excludes the case (r, length) = (3, 4)");
    FormulaResult res = ex_linear_forest(n, r, {ell});
    res.validity +=
        "; equals the linear-path value on the range r >= 3, length >= 4, (r, length) != (3, 4)";
    return res;
}

}  // namespace turan
