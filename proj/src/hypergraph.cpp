#include "turan/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace turan {

EdgeMask mask_from_vertices(const std::vector<int>& vs) {
    EdgeMask m;
    for (int v : vs) m.set(v);
    if (m.count() != static_cast<int>(vs.size())) throw Error("repeated vertex in edge");
    return m;
}

std::vector<EdgeMask> all_r_subsets(int n, int r) {
    std::vector<EdgeMask> out;
    if (r < 0 || r > n) return out;
    if (r == 0) {
        out.push_back(EdgeMask{});
        return out;
    }
    // Colex successor enumeration; colex order on vertex sets equals numeric
    // order on masks.
    std::vector<int> a(r);
    for (int i = 0; i < r; ++i) a[i] = i + 1;
    while (true) {
        EdgeMask m;
        for (int v : a) m.set(v);
        out.push_back(m);
        int i = 0;
        while (i + 1 < r && a[i] + 1 == a[i + 1]) ++i;
        if (i + 1 == r && a[i] == n) break;
        ++a[i];
        for (int j = 0; j < i; ++j) a[j] = j + 1;
    }
    return out;
}

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 0 || n > kMaxVertices) throw Error("vertex count must be in 0.." + std::to_string(kMaxVertices));
    if (r < 2) throw UniformityError("uniformity must be at least 2");
}

Hypergraph::Hypergraph(int n, int r, std::vector<EdgeMask> edges) : Hypergraph(n, r) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        check_edge(edges[i]);
        if (i > 0 && edges[i] == edges[i - 1]) throw DuplicateEdgeError("duplicate edge in edge list");
    }
    edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_vertex_lists(int n, int r, const std::vector<std::vector<int>>& lists) {
    std::vector<EdgeMask> edges;
    edges.reserve(lists.size());
    for (const auto& vs : lists) edges.push_back(mask_from_vertices(vs));
    return Hypergraph(n, r, std::move(edges));
}

void Hypergraph::check_edge(EdgeMask e) const {
    if (e.count() != r_)
        throw UniformityError("edge has " + std::to_string(e.count()) + " vertices, expected " + std::to_string(r_));
    if (!e.subset_of(vertex_mask())) throw Error("edge contains a vertex outside [n]");
}

bool Hypergraph::has_edge(EdgeMask e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph Hypergraph::add_edge(EdgeMask e) const {
    check_edge(e);
    if (has_edge(e)) throw DuplicateEdgeError("edge already present");
    Hypergraph out(n_, r_);
    out.edges_ = edges_;
    out.edges_.insert(std::upper_bound(out.edges_.begin(), out.edges_.end(), e), e);
    return out;
}

Hypergraph Hypergraph::remove_edge(EdgeMask e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw Error("edge not present");
    Hypergraph out(n_, r_);
    out.edges_ = edges_;
    out.edges_.erase(out.edges_.begin() + (it - edges_.begin()));
    return out;
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (EdgeMask e : edges_)
        if (e.test(v)) ++d;
    return d;
}

std::vector<EdgeMask> Hypergraph::complement_candidates() const {
    std::vector<EdgeMask> out;
    for (EdgeMask e : all_r_subsets(n_, r_))
        if (!has_edge(e)) out.push_back(e);
    return out;
}

Hypergraph Hypergraph::induced_sub(EdgeMask keep) const {
    std::vector<int> kept = (keep & vertex_mask()).vertices();
    std::vector<int> relabel(kMaxVertices + 1, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) relabel[kept[i]] = static_cast<int>(i) + 1;
    std::vector<EdgeMask> sub;
    for (EdgeMask e : edges_) {
        if (!e.subset_of(keep)) continue;
        EdgeMask m;
        for (int v = e.next_vertex(); v != 0; v = e.next_vertex(v)) m.set(relabel[v]);
        sub.push_back(m);
    }
    return Hypergraph(static_cast<int>(kept.size()), r_, std::move(sub));
}

std::string to_hg(const Hypergraph& h, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << "\n";
    }
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << "\n";
    for (EdgeMask e : h.edges()) {
        bool first = true;
        for (int v = e.next_vertex(); v != 0; v = e.next_vertex(v)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line_no, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": " + what);
}

bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::istringstream in(line);
    long long x;
    while (in >> x) out.push_back(x);
    std::string trailing;
    if (in.fail() && !in.eof()) return false;
    return true;
}

}  // namespace

Hypergraph parse_hg(std::istream& in, const std::string& source) {
    std::string line;
    int line_no = 0;
    int r = 0, n = 0;
    long long m = 0;
    bool have_header = false;
    std::vector<EdgeMask> edges;
    long long seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::vector<long long> nums;
        if (!parse_ints(line, nums)) parse_fail(source, line_no, "malformed integer token");

        if (!have_header) {
            if (nums.size() != 3) parse_fail(source, line_no, "header must be 'r n m'");
            if (nums[0] < 2) parse_fail(source, line_no, "uniformity r must be at least 2");
            if (nums[1] < 0 || nums[1] > kMaxVertices)
                parse_fail(source, line_no, "vertex count n must be in 0.." + std::to_string(kMaxVertices));
            if (nums[2] < 0) parse_fail(source, line_no, "edge count m must be nonnegative");
            r = static_cast<int>(nums[0]);
            n = static_cast<int>(nums[1]);
            m = nums[2];
            have_header = true;
            continue;
        }

        if (seen == m) parse_fail(source, line_no, "unexpected extra line after " + std::to_string(m) + " edges");
        if (nums.size() != static_cast<std::size_t>(r))
            parse_fail(source, line_no,
                       "edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(r));
        EdgeMask e;
        for (std::size_t i = 0; i < nums.size(); ++i) {
            if (nums[i] < 1 || nums[i] > n)
                parse_fail(source, line_no, "vertex " + std::to_string(nums[i]) + " out of range 1.." + std::to_string(n));
            if (i > 0 && nums[i] <= nums[i - 1]) parse_fail(source, line_no, "vertices must be strictly increasing");
            e.set(static_cast<int>(nums[i]));
        }
        for (EdgeMask prev : edges)
            if (prev == e) parse_fail(source, line_no, "duplicate edge");
        edges.push_back(e);
        ++seen;
    }

    if (!have_header) throw ParseError(source + ": missing header line 'r n m'");
    if (seen != m)
        throw ParseError(source + ": expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph parse_hg_string(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_hg(in, source);
}

Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_hg(in, path);
}

void save_hg(const Hypergraph& h, const std::string& path, const std::string& comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(path + ": cannot open file for writing");
    out << to_hg(h, comment);
    if (!out) throw Error(path + ": write failed");
}

}  // namespace turan
