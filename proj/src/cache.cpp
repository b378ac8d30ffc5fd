#include "turan/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace turan {

using nlohmann::json;

std::string ResultCache::default_path() {
    if (const char* env = std::getenv("TURAN_CACHE"); env && *env) return env;
    return "turan_cache.jsonl";
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (!j.value("exact", false)) continue;  // only exact results are served back
            Entry e;
            e.value = j.at("value").get<long long>();
            e.exact = true;
            e.nodes = j.value("nodes", std::uint64_t{0});
            e.elapsed = j.value("elapsed_sec", 0.0);
            e.mode = j.value("mode", "bnb");
            e.n = j.at("n").get<int>();
            e.r = j.at("r").get<int>();
            e.witness = j.value("witness", std::vector<std::vector<int>>{});
            entries_[j.at("key").get<std::string>()] = std::move(e);
        } catch (const std::exception& ex) {
            std::fprintf(stderr, "warning: %s:%d: skipping unreadable cache line (%s)\n", path_.c_str(),
                         line_no, ex.what());
        }
    }
}

std::optional<OracleResult> ResultCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    const Entry& e = it->second;
    std::vector<EdgeMask> edges;
    for (const auto& vs : e.witness) edges.push_back(mask_from_vertices(vs));
    SearchMode mode = e.mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::BranchAndBound;
    return OracleResult{e.value, Hypergraph(e.n, e.r, std::move(edges)), e.nodes, mode, e.elapsed, true, true};
}

void ResultCache::store(const std::string& key, const std::string& op, const std::string& kind,
                        const std::string& pattern, int n, int r, const OracleResult& result) {
    json j;
    j["key"] = key;
    j["tool_version"] = kToolVersion;
    j["op"] = op;
    j["kind"] = kind;
    j["pattern"] = pattern;
    j["n"] = n;
    j["r"] = r;
    j["value"] = result.value;
    j["exact"] = result.exact;
    j["nodes"] = result.nodes_explored;
    j["elapsed_sec"] = result.elapsed_seconds;
    j["mode"] = to_string(result.mode_used);
    std::vector<std::vector<int>> witness;
    for (EdgeMask e : result.witness.edges()) witness.push_back(e.vertices());
    j["witness"] = witness;

    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::fprintf(stderr, "warning: cannot append to cache file %s\n", path_.c_str());
        return;
    }
    out << j.dump() << "\n";

    if (result.exact) {
        Entry e;
        e.value = result.value;
        e.exact = true;
        e.nodes = result.nodes_explored;
        e.elapsed = result.elapsed_seconds;
        e.mode = to_string(result.mode_used);
        e.n = n;
        e.r = r;
        e.witness = std::move(witness);
        entries_[key] = std::move(e);
    }
}

}  // namespace turan
