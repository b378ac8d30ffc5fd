#include "turan/oracle.hpp"

#include "turan/cache.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <deque>
#include <mutex>
#include <thread>

namespace turan {

std::string to_string(SearchMode m) {
    switch (m) {
        case SearchMode::Auto: return "auto";
        case SearchMode::Exhaustive: return "exhaustive";
        case SearchMode::BranchAndBound: return "bnb";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedSearch {
    int n = 0;
    int r = 0;
    const std::vector<EdgeMask>* candidates = nullptr;
    const ForestSpec* spec = nullptr;  // null in singleton-free mode
    long long seed_value = 0;

    std::atomic<long long> search_best{-1};
    std::mutex mu;
    std::vector<EdgeMask> best_edges;
    bool have_best = false;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::uint64_t node_budget = 0;
    bool has_deadline = false;
    Clock::time_point deadline;

    long long prune_bound() const {
        return std::max(search_best.load(std::memory_order_relaxed), seed_value - 1);
    }

    void check_limits() {
        if (node_budget && nodes.load(std::memory_order_relaxed) >= node_budget)
            stop.store(true, std::memory_order_relaxed);
        if (has_deadline && Clock::now() >= deadline) stop.store(true, std::memory_order_relaxed);
    }
};

struct BnbWorker {
    SharedSearch* sh = nullptr;
    std::vector<EdgeMask> cur{};
    std::uint64_t unflushed = 0;

    void flush() {
        sh->nodes.fetch_add(unflushed, std::memory_order_relaxed);
        unflushed = 0;
    }

    // Budget is checked every 4096 nodes.
    bool tick() {
        if (++unflushed == 4096) {
            flush();
            sh->check_limits();
        }
        return !sh->stop.load(std::memory_order_relaxed);
    }

    bool feasible_with(EdgeMask e) {
        if (!sh->spec) {
            for (EdgeMask f : cur)
                if (intersection_size(e, f) == 1) return false;
            return true;
        }
        cur.push_back(e);
        bool contained = contains_forest_using_edge(sh->n, sh->r, cur, *sh->spec, e).has_value();
        cur.pop_back();
        return !contained;
    }

    void record_current() {
        long long c = static_cast<long long>(cur.size());
        if (c <= sh->search_best.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(sh->mu);
        if (c > sh->search_best.load(std::memory_order_relaxed)) {
            sh->search_best.store(c, std::memory_order_relaxed);
            sh->best_edges = cur;
            sh->have_best = true;
        }
    }

    void dfs(std::size_t idx) {
        if (!tick()) return;
        long long remaining = static_cast<long long>(sh->candidates->size() - idx);
        if (static_cast<long long>(cur.size()) + remaining <= sh->prune_bound()) return;
        if (idx == sh->candidates->size()) return;
        EdgeMask e = (*sh->candidates)[idx];
        if (feasible_with(e)) {
            cur.push_back(e);
            record_current();
            dfs(idx + 1);
            cur.pop_back();
            if (sh->stop.load(std::memory_order_relaxed)) return;
        }
        dfs(idx + 1);
    }
};

struct Frontier {
    std::size_t idx;
    std::vector<EdgeMask> edges;
};

OracleResult run_bnb(int n, int r, const std::vector<EdgeMask>& candidates, const ForestSpec* spec,
                     const OracleOptions& opts, long long seed_value,
                     const std::vector<EdgeMask>& seed_edges) {
    auto t0 = Clock::now();
    SharedSearch sh;
    sh.n = n;
    sh.r = r;
    sh.candidates = &candidates;
    sh.spec = spec;
    sh.seed_value = seed_value;
    sh.node_budget = opts.budget.max_nodes;
    if (opts.budget.max_seconds > 0) {
        sh.has_deadline = true;
        sh.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(opts.budget.max_seconds));
    }

    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        BnbWorker w{&sh};
        w.dfs(0);
        w.flush();
    } else {
        // Expand a task frontier breadth-first, then fan out.
        std::deque<Frontier> frontier;
        frontier.push_back({0, {}});
        BnbWorker expander{&sh};
        std::size_t want = 4 * static_cast<std::size_t>(workers);
        while (!frontier.empty() && frontier.size() < want && frontier.front().idx < candidates.size() &&
               !sh.stop.load(std::memory_order_relaxed)) {
            Frontier f = std::move(frontier.front());
            frontier.pop_front();
            expander.tick();
            long long remaining = static_cast<long long>(candidates.size() - f.idx);
            if (static_cast<long long>(f.edges.size()) + remaining <= sh.prune_bound()) continue;
            expander.cur = f.edges;
            if (expander.feasible_with(candidates[f.idx])) {
                Frontier inc{f.idx + 1, f.edges};
                inc.edges.push_back(candidates[f.idx]);
                expander.cur = inc.edges;
                expander.record_current();
                frontier.push_back(std::move(inc));
            }
            frontier.push_back({f.idx + 1, std::move(f.edges)});
        }
        expander.flush();

        std::vector<Frontier> tasks(frontier.begin(), frontier.end());
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i)
            pool.emplace_back([&] {
                BnbWorker w{&sh};
                while (true) {
                    std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
                    if (t >= tasks.size() || sh.stop.load(std::memory_order_relaxed)) break;
                    w.cur = tasks[t].edges;
                    w.dfs(tasks[t].idx);
                }
                w.flush();
            });
        for (auto& th : pool) th.join();
    }

    bool exhausted = sh.stop.load(std::memory_order_relaxed);
    long long best = sh.search_best.load(std::memory_order_relaxed);
    std::vector<EdgeMask> witness_edges;
    long long value;
    if (sh.have_best && best >= seed_value) {
        value = best;
        witness_edges = sh.best_edges;
    } else {
        value = seed_value;
        witness_edges = seed_edges;
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    return {value,
            Hypergraph(n, r, std::move(witness_edges)),
            sh.nodes.load(),
            SearchMode::BranchAndBound,
            elapsed,
            !exhausted,
            false};
}

OracleResult run_exhaustive(int n, int r, const std::vector<EdgeMask>& candidates, const ForestSpec* spec,
                            const OracleOptions& opts) {
    if (candidates.size() > 24)
        throw InfeasibleError("exhaustive mode is limited to C(n,r) <= 24 candidate edges, here " +
                              std::to_string(candidates.size()));
    auto t0 = Clock::now();
    Clock::time_point deadline;
    bool has_deadline = opts.budget.max_seconds > 0;
    if (has_deadline)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(opts.budget.max_seconds));

    long long best = -1;
    std::vector<EdgeMask> best_edges;
    std::uint64_t tested = 0;
    bool exhausted = false;
    std::vector<EdgeMask> subset;
    const std::uint64_t limit = std::uint64_t{1} << candidates.size();
    for (std::uint64_t x = 0; x < limit; ++x) {
        int pc = std::popcount(x);
        if (pc <= best) continue;
        ++tested;
        if ((tested & 4095) == 0) {
            if (opts.budget.max_nodes && tested >= opts.budget.max_nodes) exhausted = true;
            if (has_deadline && Clock::now() >= deadline) exhausted = true;
            if (exhausted) break;
        }
        subset.clear();
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((x >> i) & 1) subset.push_back(candidates[i]);
        bool ok;
        if (spec)
            ok = !contains_forest_in_edges(n, r, subset, *spec).has_value();
        else {
            ok = true;
            for (std::size_t i = 0; i < subset.size() && ok; ++i)
                for (std::size_t j = i + 1; j < subset.size(); ++j)
                    if (intersection_size(subset[i], subset[j]) == 1) {
                        ok = false;
                        break;
                    }
        }
        if (ok) {
            best = pc;
            best_edges = subset;
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    return {best < 0 ? 0 : best,
            Hypergraph(n, r, std::move(best_edges)),
            tested,
            SearchMode::Exhaustive,
            elapsed,
            !exhausted,
            false};
}

OracleResult run_search(int n, int r, const ForestSpec* spec, const OracleOptions& opts) {
    if (n < 0 || n > kMaxVertices) throw Error("n out of range");
    if (r < 2) throw UniformityError("uniformity must be at least 2");

    std::vector<EdgeMask> candidates = all_r_subsets(n, r);
    SearchMode mode = opts.mode;
    if (mode == SearchMode::Auto)
        mode = candidates.size() <= 20 ? SearchMode::Exhaustive : SearchMode::BranchAndBound;

    if (mode == SearchMode::Exhaustive) return run_exhaustive(n, r, candidates, spec, opts);

    if ((r == 3 && n > 16) || candidates.size() > 1200)
        std::fprintf(stderr, "warning: n=%d, r=%d (%zu candidate edges) is beyond the recommended desk scale\n",
                     n, r, candidates.size());

    long long seed_value = 0;
    std::vector<EdgeMask> seed_edges;
    if (opts.seed) {
        bool usable = opts.seed->vertex_count() == n && opts.seed->uniformity() == r;
        if (usable && spec) usable = !contains_forest(*opts.seed, *spec).has_value();
        if (usable && !spec) usable = !has_singleton_intersection(*opts.seed);
        if (usable) {
            seed_value = static_cast<long long>(opts.seed->edge_count());
            seed_edges = opts.seed->edges();
        }
    }
    return run_bnb(n, r, candidates, spec, opts, seed_value, seed_edges);
}

}  // namespace

OracleResult turan_exact(int n, int r, const ForestSpec& spec, const OracleOptions& opts) {
    spec.validate();
    return run_search(n, r, &spec, opts);
}

OracleResult singleton_free_max(int n, int r, const OracleOptions& opts) {
    return run_search(n, r, nullptr, opts);
}

OracleResult solve_problem(const Problem& problem, int n, OracleOptions opts, ResultCache* cache) {
    problem.validate();
    std::string key = problem.cache_key("turan", n);
    if (cache) {
        if (auto hit = cache->lookup(key)) return *hit;
    }
    if (!opts.seed && problem.has_construction()) opts.seed = problem.construction(n);
    OracleResult res = turan_exact(n, problem.r, problem.forest(), opts);
    if (cache)
        cache->store(key, "turan", to_string(problem.kind), problem.pattern_string(), n, problem.r, res);
    return res;
}

OracleResult solve_singleton_free(int n, int r, OracleOptions opts, ResultCache* cache) {
    std::string key = "singleton-free||r=" + std::to_string(r) + "||n=" + std::to_string(n);
    if (cache) {
        if (auto hit = cache->lookup(key)) return *hit;
    }
    if (!opts.seed && n >= r + 1 && r >= 3) {
        // Feasible floor: the larger of all r-sets through a fixed (r-1)-set
        // and the complete r-graph on r+1 vertices.
        std::vector<EdgeMask> edges;
        if (n - r + 1 >= r + 1) {
            EdgeMask fixed = EdgeMask::first_n(r - 1);
            for (int v = r; v <= n; ++v) {
                EdgeMask e = fixed;
                e.set(v);
                edges.push_back(e);
            }
        } else {
            edges = all_r_subsets(r + 1, r);
        }
        opts.seed = Hypergraph(n, r, std::move(edges));
    }
    OracleResult res = singleton_free_max(n, r, opts);
    if (cache) cache->store(key, "singleton-free", "singleton-free", "", n, r, res);
    return res;
}

VerifyReport verify_threshold(const Problem& problem, int n_lo, int n_hi, const OracleOptions& opts,
                              ResultCache* cache) {
    problem.validate();
    if (!problem.has_formula()) throw OutOfScopeError("no closed form to verify for this pattern kind");
    if (n_lo > n_hi) throw OutOfScopeError("empty n range");

    VerifyReport report;
    report.all_exact = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        OracleResult res = solve_problem(problem, n, opts, cache);
        FormulaResult f = problem.formula(n);
        std::optional<long long> construction;
        if (problem.has_construction()) {
            if (auto g = problem.construction(n)) construction = static_cast<long long>(g->edge_count());
        }
        bool agree = res.exact && BigInt(res.value) == f.value &&
                     (!construction || BigInt(*construction) == f.value);
        report.all_exact = report.all_exact && res.exact;
        report.rows.push_back({n, res.value, res.exact, res.mode_used, res.nodes_explored, f.value,
                               construction, agree});
    }
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (!it->agree) break;
        report.threshold = it->n;
    }
    return report;
}

}  // namespace turan
