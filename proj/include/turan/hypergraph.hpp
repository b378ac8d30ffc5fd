#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

// Vertices are 1-based: [n] = {1, ..., n}.  Hard cap so an edge fits in two words.
inline constexpr int kMaxVertices = 128;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UniformityError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InfeasibleError : public Error {
public:
    using Error::Error;
};

class OutOfScopeError : public Error {
public:
    using Error::Error;
};

// A set of vertices from [n] as a 128-bit mask; bit v-1 holds vertex v.
// The numeric value (hi, lo) defines the canonical (colex) order on r-sets.
struct EdgeMask {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static EdgeMask single(int v) {
        EdgeMask m;
        m.set(v);
        return m;
    }

    static EdgeMask first_n(int n) {
        EdgeMask m;
        for (int v = 1; v <= n; ++v) m.set(v);
        return m;
    }

    void set(int v) {
        if (v < 1 || v > kMaxVertices) throw Error("vertex " + std::to_string(v) + " out of supported range");
        if (v <= 64)
            lo |= std::uint64_t{1} << (v - 1);
        else
            hi |= std::uint64_t{1} << (v - 65);
    }

    bool test(int v) const {
        if (v < 1 || v > kMaxVertices) return false;
        return v <= 64 ? (lo >> (v - 1)) & 1 : (hi >> (v - 65)) & 1;
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool none() const { return lo == 0 && hi == 0; }
    bool any() const { return !none(); }

    EdgeMask operator&(EdgeMask o) const { return {lo & o.lo, hi & o.hi}; }
    EdgeMask operator|(EdgeMask o) const { return {lo | o.lo, hi | o.hi}; }
    EdgeMask minus(EdgeMask o) const { return {lo & ~o.lo, hi & ~o.hi}; }

    bool intersects(EdgeMask o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }
    bool disjoint_from(EdgeMask o) const { return !intersects(o); }
    bool subset_of(EdgeMask o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    // Smallest vertex strictly greater than `after`, or 0 when exhausted.
    int next_vertex(int after = 0) const {
        if (after < 64) {
            std::uint64_t rest = lo & (after == 0 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << after) - 1));
            if (rest != 0) return std::countr_zero(rest) + 1;
            if (hi != 0) return std::countr_zero(hi) + 65;
            return 0;
        }
        if (after >= 128) return 0;
        std::uint64_t rest = hi & (after == 64 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << (after - 64)) - 1));
        if (rest != 0) return std::countr_zero(rest) + 65;
        return 0;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = next_vertex(); v != 0; v = next_vertex(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(EdgeMask a, EdgeMask b) = default;
    friend std::strong_ordering operator<=>(EdgeMask a, EdgeMask b) {
        if (auto c = a.hi <=> b.hi; c != 0) return c;
        return a.lo <=> b.lo;
    }
};

struct EdgeMaskHash {
    std::size_t operator()(EdgeMask m) const noexcept {
        std::uint64_t h = m.lo * 0x9e3779b97f4a7c15ull;
        h ^= m.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline int intersection_size(EdgeMask a, EdgeMask b) { return (a & b).count(); }

EdgeMask mask_from_vertices(const std::vector<int>& vs);

// All r-subsets of [n] in canonical (ascending mask value) order.
std::vector<EdgeMask> all_r_subsets(int n, int r);

// An r-uniform hypergraph on [n].  Values are immutable; mutators return new values.
// Edges are kept sorted by mask value so equal hypergraphs compare equal bit-for-bit.
class Hypergraph {
public:
    Hypergraph(int n, int r);
    Hypergraph(int n, int r, std::vector<EdgeMask> edges);

    static Hypergraph from_vertex_lists(int n, int r, const std::vector<std::vector<int>>& lists);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    const std::vector<EdgeMask>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(EdgeMask e) const;

    Hypergraph add_edge(EdgeMask e) const;
    Hypergraph remove_edge(EdgeMask e) const;
    int degree(int v) const;
    std::vector<EdgeMask> complement_candidates() const;
    Hypergraph induced_sub(EdgeMask keep) const;

    EdgeMask vertex_mask() const { return EdgeMask::first_n(n_); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    void check_edge(EdgeMask e) const;

    int n_;
    int r_;
    std::vector<EdgeMask> edges_;
};

// Text format: header "r n m", then m lines of r strictly increasing vertices.
// '#' lines are comments; parsing is strict and errors carry line numbers.
std::string to_hg(const Hypergraph& h, const std::string& comment = "");
Hypergraph parse_hg(std::istream& in, const std::string& source = "<input>");
Hypergraph parse_hg_string(const std::string& text, const std::string& source = "<string>");
Hypergraph load_hg(const std::string& path);
void save_hg(const Hypergraph& h, const std::string& path, const std::string& comment = "");

}  // namespace turan
