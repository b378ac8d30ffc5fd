#include "turan/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace turan {

std::string to_string(PathKind k) {
    switch (k) {
        case PathKind::Loose: return "loose";
        case PathKind::Linear: return "linear";
        case PathKind::Berge: return "berge";
        case PathKind::LinearCycle: return "linear-cycle";
    }
    return "?";
}

void PathSpec::validate() const {
    if (length < 1) throw OutOfScopeError("path length must be at least 1");
    if (kind == PathKind::LinearCycle && length < 3)
        throw OutOfScopeError("a linear cycle needs at least 3 edges");
}

ForestSpec ForestSpec::uniform(PathKind kind, const std::vector<long long>& lengths) {
    ForestSpec f;
    for (long long l : lengths) f.parts.push_back({kind, static_cast<int>(l)});
    return f;
}

ForestSpec ForestSpec::matching(long long edges) {
    ForestSpec f;
    for (long long i = 0; i < edges; ++i) f.parts.push_back({PathKind::Linear, 1});
    return f;
}

void ForestSpec::validate() const {
    if (parts.empty()) throw OutOfScopeError("forest needs at least one part");
    for (const PathSpec& p : parts) p.validate();
}

std::vector<int> twin_classes(int n, std::span<const EdgeMask> edges) {
    std::unordered_set<EdgeMask, EdgeMaskHash> edge_set(edges.begin(), edges.end());
    std::vector<std::vector<EdgeMask>> incident(n + 1);
    for (EdgeMask e : edges)
        for (int v = e.next_vertex(); v != 0; v = e.next_vertex(v)) incident[v].push_back(e);

    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    auto swapped = [](EdgeMask e, int from, int to) {
        EdgeMask f = e.minus(EdgeMask::single(from));
        f.set(to);
        return f;
    };
    auto swap_preserves = [&](int u, int v) {
        for (EdgeMask e : incident[u]) {
            if (e.test(v)) continue;
            if (!edge_set.count(swapped(e, u, v))) return false;
        }
        for (EdgeMask e : incident[v]) {
            if (e.test(u)) continue;
            if (!edge_set.count(swapped(e, v, u))) return false;
        }
        return true;
    };

    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (find(u) == find(v)) continue;
            if (swap_preserves(u, v)) parent[find(v)] = find(u);
        }

    std::vector<int> cls(n + 1, -1);
    int next_id = 0;
    std::vector<int> label(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        int root = find(v);
        if (label[root] < 0) label[root] = next_id++;
        cls[v] = label[root];
    }
    cls[0] = next_id;  // number of classes stashed at slot 0
    return cls;
}

namespace {

struct Searcher {
    int n = 0;
    int r = 0;
    std::span<const EdgeMask> edges;
    std::vector<PathSpec> parts;   // search order: descending length
    std::vector<int> origin;       // search slot -> index in the original spec
    std::vector<int> seed_order;   // edge indices by descending degree-sum

    bool forced = false;
    int force_slot = -1;
    int force_pos = -1;  // 0-based edge position within the part
    EdgeMask force_edge{};

    bool memo = false;
    std::vector<int> vclass;
    int num_classes = 0;
    std::unordered_set<std::string> failed;

    std::vector<std::vector<EdgeMask>> part_edges;
    std::vector<std::vector<int>> part_verts;

    void prepare(const ForestSpec& spec, SearchOptions::Memo memo_mode) {
        std::vector<int> idx(spec.parts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return spec.parts[a].length > spec.parts[b].length;
        });
        for (int i : idx) {
            parts.push_back(spec.parts[i]);
            origin.push_back(i);
        }
        part_edges.resize(parts.size());
        part_verts.resize(parts.size());

        std::vector<int> degree(n + 1, 0);
        for (EdgeMask e : edges)
            for (int v = e.next_vertex(); v != 0; v = e.next_vertex(v)) ++degree[v];
        std::vector<long long> weight(edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (int v = edges[i].next_vertex(); v != 0; v = edges[i].next_vertex(v)) weight[i] += degree[v];
        seed_order.resize(edges.size());
        std::iota(seed_order.begin(), seed_order.end(), 0);
        std::stable_sort(seed_order.begin(), seed_order.end(),
                         [&](int a, int b) { return weight[a] > weight[b]; });

        bool chain_only = std::all_of(parts.begin(), parts.end(), [](const PathSpec& p) {
            return p.kind == PathKind::Loose || p.kind == PathKind::Linear;
        });
        switch (memo_mode) {
            case SearchOptions::Memo::Off: memo = false; break;
            case SearchOptions::Memo::On: memo = chain_only && !forced; break;
            case SearchOptions::Memo::Auto:
                memo = chain_only && !forced && (edges.size() >= 32 || n >= 12);
                break;
        }
        if (memo) {
            vclass = twin_classes(n, edges);
            num_classes = vclass[0];
        }
    }

    std::string state_key(std::size_t slot, int placed, EdgeMask forbidden, EdgeMask prev) const {
        std::string key;
        key.reserve(2 + 3 * num_classes);
        key.push_back(static_cast<char>(slot));
        key.push_back(static_cast<char>(placed));
        std::string counts(3 * num_classes, '\0');
        EdgeMask f_only = forbidden.minus(prev);
        EdgeMask e_only = prev.minus(forbidden);
        EdgeMask both = forbidden & prev;
        for (int v = f_only.next_vertex(); v != 0; v = f_only.next_vertex(v)) ++counts[3 * vclass[v]];
        for (int v = e_only.next_vertex(); v != 0; v = e_only.next_vertex(v)) ++counts[3 * vclass[v] + 1];
        for (int v = both.next_vertex(); v != 0; v = both.next_vertex(v)) ++counts[3 * vclass[v] + 2];
        key += counts;
        return key;
    }

    bool search_slot(std::size_t slot, EdgeMask used_other) {
        if (slot == parts.size()) return true;
        // Remaining parts need this many distinct edges avoiding earlier parts.
        int needed = 0;
        for (std::size_t s = slot; s < parts.size(); ++s) needed += parts[s].length;
        int pool = 0;
        for (EdgeMask e : edges)
            if (e.disjoint_from(used_other) && ++pool >= needed) break;
        if (pool < needed) return false;
        const PathSpec& ps = parts[slot];
        if (ps.kind == PathKind::Berge) {
            std::vector<EdgeMask>& pe = part_edges[slot];
            std::vector<int>& pv = part_verts[slot];
            pe.clear();
            pv.clear();
            return berge_edge(slot, 0, used_other, EdgeMask{});
        }
        part_edges[slot].clear();
        return extend(slot, 0, used_other, used_other, EdgeMask{}, EdgeMask{});
    }

    // Chain kinds (loose / linear / linear cycle).  State after `placed` edges:
    // `forbidden` = used_other plus all part edges except the last, `prev` = the
    // last edge, `first` = the part's first edge (cycles close against it).
    bool extend(std::size_t slot, int placed, EdgeMask used_other, EdgeMask forbidden, EdgeMask prev,
                EdgeMask first) {
        const PathSpec& ps = parts[slot];
        if (placed == ps.length) {
            if (ps.kind == PathKind::LinearCycle) {
                EdgeMask part_union = (forbidden | prev).minus(used_other);
                if (part_union.count() != ps.length * (r - 1)) return false;
            }
            return search_slot(slot + 1, forbidden | prev);
        }

        std::string key;
        if (memo) {
            key = state_key(slot, placed, forbidden, prev);
            if (failed.count(key)) return false;
        }

        bool force_here = forced && static_cast<int>(slot) == force_slot && placed == force_pos;
        bool found = false;

        auto try_edge = [&](EdgeMask e) {
            if (placed == 0) {
                if (!e.disjoint_from(forbidden)) return false;
            } else {
                bool closing = ps.kind == PathKind::LinearCycle && placed == ps.length - 1 && ps.length > 2;
                if (closing) {
                    if (intersection_size(e, prev) != 1) return false;
                    if (intersection_size(e, first) != 1) return false;
                    for (std::size_t i = 1; i + 1 < part_edges[slot].size(); ++i)
                        if (e.intersects(part_edges[slot][i])) return false;
                    if (!e.minus(prev).minus(first).disjoint_from(forbidden)) return false;
                    if (!e.minus(prev).minus(first).disjoint_from(used_other)) return false;
                } else {
                    if (!e.disjoint_from(forbidden)) return false;
                    switch (ps.kind) {
                        case PathKind::Loose:
                            if (!e.intersects(prev) || e == prev) return false;
                            break;
                        case PathKind::Linear:
                        case PathKind::LinearCycle:
                            if (intersection_size(e, prev) != 1) return false;
                            break;
                        case PathKind::Berge: return false;  // handled elsewhere
                    }
                }
            }
            part_edges[slot].push_back(e);
            EdgeMask next_first = placed == 0 ? e : first;
            bool ok = extend(slot, placed + 1, used_other, placed == 0 ? forbidden : (forbidden | prev), e,
                             next_first);
            if (!ok) part_edges[slot].pop_back();
            return ok;
        };

        if (force_here) {
            found = try_edge(force_edge);
        } else if (placed == 0) {
            for (int idx : seed_order) {
                if (try_edge(edges[idx])) {
                    found = true;
                    break;
                }
            }
        } else {
            for (EdgeMask e : edges) {
                if (try_edge(e)) {
                    found = true;
                    break;
                }
            }
        }

        if (!found && memo) failed.insert(key);
        return found;
    }

    // Berge part: alternating vertices and edges, all vertices distinct, all
    // edges of the part distinct; the part occupies the union of its edges.
    bool berge_edge(std::size_t slot, int placed, EdgeMask used_other, EdgeMask part_union) {
        const PathSpec& ps = parts[slot];
        std::vector<EdgeMask>& pe = part_edges[slot];
        std::vector<int>& pv = part_verts[slot];

        if (placed == ps.length) return search_slot(slot + 1, used_other | part_union);

        bool force_here = forced && static_cast<int>(slot) == force_slot && placed == force_pos;

        auto try_edge = [&](EdgeMask e) {
            if (!e.disjoint_from(used_other)) return false;
            if (placed > 0 && !e.test(pv.back())) return false;
            for (EdgeMask prev : pe)
                if (prev == e) return false;
            pe.push_back(e);
            bool ok = berge_vertices(slot, placed, used_other, part_union | e, e);
            if (!ok) pe.pop_back();
            return ok;
        };

        if (force_here) return try_edge(force_edge);
        if (placed == 0) {
            for (int idx : seed_order)
                if (try_edge(edges[idx])) return true;
        } else {
            for (EdgeMask e : edges)
                if (try_edge(e)) return true;
        }
        return false;
    }

    bool berge_vertices(std::size_t slot, int placed, EdgeMask used_other, EdgeMask part_union, EdgeMask e) {
        std::vector<int>& pv = part_verts[slot];
        auto is_used = [&](int v) { return std::find(pv.begin(), pv.end(), v) != pv.end(); };

        if (placed == 0) {
            for (int v1 = e.next_vertex(); v1 != 0; v1 = e.next_vertex(v1)) {
                pv.push_back(v1);
                for (int v2 = e.next_vertex(); v2 != 0; v2 = e.next_vertex(v2)) {
                    if (v2 == v1) continue;
                    pv.push_back(v2);
                    if (berge_edge(slot, placed + 1, used_other, part_union)) return true;
                    pv.pop_back();
                }
                pv.pop_back();
            }
            return false;
        }
        for (int v = e.next_vertex(); v != 0; v = e.next_vertex(v)) {
            if (is_used(v)) continue;
            pv.push_back(v);
            if (berge_edge(slot, placed + 1, used_other, part_union)) return true;
            pv.pop_back();
        }
        return false;
    }
};

std::optional<Witness> run_search(int n, int r, std::span<const EdgeMask> edges, const ForestSpec& spec,
                                  const SearchOptions& opts, bool forced, int force_slot, int force_pos,
                                  EdgeMask force_edge) {
    spec.validate();
    Searcher s;
    s.n = n;
    s.r = r;
    s.edges = edges;
    s.forced = forced;
    s.force_slot = force_slot;
    s.force_pos = force_pos;
    s.force_edge = force_edge;
    s.prepare(spec, opts.memo);
    if (!s.search_slot(0, EdgeMask{})) return std::nullopt;

    Witness w;
    w.parts.resize(spec.parts.size());
    for (std::size_t slot = 0; slot < s.parts.size(); ++slot) {
        WitnessPart& p = w.parts[s.origin[slot]];
        p.spec = s.parts[slot];
        p.edges = s.part_edges[slot];
        p.berge_vertices = s.part_verts[slot];
    }
    return w;
}

}  // namespace

std::optional<Witness> contains_forest_in_edges(int n, int r, std::span<const EdgeMask> edges,
                                                const ForestSpec& spec, const SearchOptions& opts) {
    return run_search(n, r, edges, spec, opts, false, -1, -1, EdgeMask{});
}

std::optional<Witness> contains_forest(const Hypergraph& h, const ForestSpec& spec, const SearchOptions& opts) {
    auto w = contains_forest_in_edges(h.vertex_count(), h.uniformity(), h.edges(), spec, opts);
    if (w) {
        std::string why;
        if (!validate_witness(h, spec, *w, &why)) throw std::logic_error("witness failed replay: " + why);
    }
    return w;
}

std::optional<Witness> contains_path(const Hypergraph& h, const PathSpec& spec, const SearchOptions& opts) {
    ForestSpec f;
    f.parts.push_back(spec);
    return contains_forest(h, f, opts);
}

std::optional<Witness> contains_forest_using_edge(int n, int r, std::span<const EdgeMask> edges,
                                                  const ForestSpec& spec, EdgeMask seed) {
    spec.validate();
    if (std::find(edges.begin(), edges.end(), seed) == edges.end())
        throw Error("seed edge is not in the edge list");
    // Search order mirrors the unforced searcher (descending length).
    std::vector<int> idx(spec.parts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return spec.parts[a].length > spec.parts[b].length; });

    SearchOptions opts;
    opts.memo = SearchOptions::Memo::Off;
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
        const PathSpec& ps = spec.parts[idx[slot]];
        // Identical parts are interchangeable; forcing the first of a run suffices.
        if (slot > 0) {
            const PathSpec& before = spec.parts[idx[slot - 1]];
            if (before.kind == ps.kind && before.length == ps.length) continue;
        }
        // Path reversal symmetry: only the first half of the positions; cycles
        // are rotation-symmetric, position 0 suffices.
        int max_pos = ps.kind == PathKind::LinearCycle ? 1 : (ps.length + 1) / 2;
        for (int pos = 0; pos < max_pos; ++pos) {
            auto w = run_search(n, r, edges, spec, opts, true, static_cast<int>(slot), pos, seed);
            if (w) return w;
        }
    }
    return std::nullopt;
}

std::optional<std::pair<EdgeMask, EdgeMask>> find_one_intersecting_pair_avoiding(const Hypergraph& h,
                                                                                 EdgeMask avoid) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].intersects(avoid)) continue;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (es[j].intersects(avoid)) continue;
            if (intersection_size(es[i], es[j]) == 1) return std::make_pair(es[i], es[j]);
        }
    }
    return std::nullopt;
}

bool has_singleton_intersection(const Hypergraph& h) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (intersection_size(es[i], es[j]) == 1) return true;
    return false;
}

namespace {

bool fail(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

EdgeMask union_of(const std::vector<EdgeMask>& edges) {
    EdgeMask u;
    for (EdgeMask e : edges) u = u | e;
    return u;
}

}  // namespace

bool validate_witness(const Hypergraph& h, const ForestSpec& spec, const Witness& w, std::string* reason) {
    if (w.parts.size() != spec.parts.size()) return fail(reason, "part count mismatch");

    std::vector<EdgeMask> all_edges;
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        const WitnessPart& p = w.parts[i];
        const PathSpec& ps = spec.parts[i];
        if (p.spec.kind != ps.kind || p.spec.length != ps.length) return fail(reason, "part spec mismatch");
        int l = ps.length;
        if (static_cast<int>(p.edges.size()) != l) return fail(reason, "part edge count mismatch");
        for (EdgeMask e : p.edges) {
            if (!h.has_edge(e)) return fail(reason, "witness edge not in hypergraph");
            all_edges.push_back(e);
        }

        switch (ps.kind) {
            case PathKind::Loose:
                for (int a = 0; a < l; ++a)
                    for (int b = a + 1; b < l; ++b) {
                        bool want = (b == a + 1);
                        if (p.edges[a].intersects(p.edges[b]) != want)
                            return fail(reason, "loose intersection pattern violated");
                    }
                break;
            case PathKind::Linear:
                for (int a = 0; a < l; ++a)
                    for (int b = a + 1; b < l; ++b) {
                        int want = (b == a + 1) ? 1 : 0;
                        if (intersection_size(p.edges[a], p.edges[b]) != want)
                            return fail(reason, "linear intersection pattern violated");
                    }
                break;
            case PathKind::LinearCycle: {
                if (l < 3) return fail(reason, "cycle too short");
                for (int a = 0; a < l; ++a)
                    for (int b = a + 1; b < l; ++b) {
                        bool consecutive = (b == a + 1) || (a == 0 && b == l - 1);
                        int want = consecutive ? 1 : 0;
                        if (intersection_size(p.edges[a], p.edges[b]) != want)
                            return fail(reason, "cycle intersection pattern violated");
                    }
                if (union_of(p.edges).count() != l * (h.uniformity() - 1))
                    return fail(reason, "cycle vertex count violated");
                break;
            }
            case PathKind::Berge: {
                if (static_cast<int>(p.berge_vertices.size()) != l + 1)
                    return fail(reason, "berge vertex sequence length mismatch");
                std::vector<int> vs = p.berge_vertices;
                std::sort(vs.begin(), vs.end());
                if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
                    return fail(reason, "berge vertices not distinct");
                for (int a = 0; a < l; ++a)
                    if (!p.edges[a].test(p.berge_vertices[a]) || !p.edges[a].test(p.berge_vertices[a + 1]))
                        return fail(reason, "berge edge misses a flanking vertex");
                for (int a = 0; a < l; ++a)
                    for (int b = a + 1; b < l; ++b)
                        if (p.edges[a] == p.edges[b]) return fail(reason, "berge edges not distinct");
                break;
            }
        }
    }

    std::sort(all_edges.begin(), all_edges.end());
    if (std::adjacent_find(all_edges.begin(), all_edges.end()) != all_edges.end())
        return fail(reason, "edges reused across parts");

    for (std::size_t i = 0; i < w.parts.size(); ++i)
        for (std::size_t j = i + 1; j < w.parts.size(); ++j)
            if (union_of(w.parts[i].edges).intersects(union_of(w.parts[j].edges)))
                return fail(reason, "parts are not vertex-disjoint");

    return true;
}

std::string witness_to_json(const Witness& w, int n, int r) {
    auto int_list = [](const std::vector<int>& vs) {
        std::string s = "[";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vs[i]);
        }
        return s + "]";
    };
    std::string out = "{\n  \"n\": " + std::to_string(n) + ",\n  \"r\": " + std::to_string(r) +
                      ",\n  \"parts\": [\n";
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        const WitnessPart& p = w.parts[i];
        out += "    {\"part\": " + std::to_string(i) + ", \"kind\": \"" + to_string(p.spec.kind) +
               "\", \"length\": " + std::to_string(p.spec.length) + ", \"edges\": [";
        for (std::size_t j = 0; j < p.edges.size(); ++j) {
            if (j) out += ",";
            out += int_list(p.edges[j].vertices());
        }
        out += "]";
        if (p.spec.kind == PathKind::Berge) out += ", \"vertices\": " + int_list(p.berge_vertices);
        out += i + 1 < w.parts.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}";
    return out;
}

}  // namespace turan
