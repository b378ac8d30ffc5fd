#pragma once

#include "turan/oracle.hpp"

#include <optional>
#include <string>
#include <unordered_map>

namespace turan {

// Append-only JSON-lines store of completed oracle queries.  Only exact
// results are served back; every completed query is appended.
class ResultCache {
public:
    explicit ResultCache(std::string path);

    const std::string& path() const { return path_; }

    std::optional<OracleResult> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& op, const std::string& kind,
               const std::string& pattern, int n, int r, const OracleResult& result);

    // TURAN_CACHE environment variable, or "turan_cache.jsonl"; an explicit
    // flag wins over the environment.
    static std::string default_path();

private:
    struct Entry {
        long long value;
        bool exact;
        std::uint64_t nodes;
        double elapsed;
        std::string mode;
        int n;
        int r;
        std::vector<std::vector<int>> witness;
    };

    std::string path_;
    std::unordered_map<std::string, Entry> entries_;
};

}  // namespace turan
