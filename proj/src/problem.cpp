#include "turan/problem.hpp"

#include <algorithm>
#include <sstream>

namespace turan {

std::string to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::Loose: return "loose";
        case ProblemKind::Linear: return "linear";
        case ProblemKind::Berge: return "berge";
        case ProblemKind::Matching: return "matching";
        case ProblemKind::Graph: return "graph";
        case ProblemKind::LinearCycle: return "lcycle";
    }
    return "?";
}

std::optional<ProblemKind> problem_kind_from_string(const std::string& s) {
    if (s == "loose") return ProblemKind::Loose;
    if (s == "linear") return ProblemKind::Linear;
    if (s == "berge") return ProblemKind::Berge;
    if (s == "matching") return ProblemKind::Matching;
    if (s == "graph") return ProblemKind::Graph;
    if (s == "lcycle") return ProblemKind::LinearCycle;
    return std::nullopt;
}

void Problem::validate() const {
    if (r < 2) throw OutOfScopeError("uniformity r must be at least 2");
    switch (kind) {
        case ProblemKind::Matching:
            if (s < 0) throw OutOfScopeError("matching parameter s must be nonnegative");
            if (!lengths.empty()) throw OutOfScopeError("matching patterns take --s, not --lengths");
            break;
        case ProblemKind::Graph:
            if (r != 2) throw OutOfScopeError("graph paths require r = 2");
            if (lengths.empty()) throw OutOfScopeError("at least one path is required");
            for (long long l : lengths)
                if (l < 2) throw OutOfScopeError("graph paths are measured in vertices and need >= 2");
            break;
        case ProblemKind::LinearCycle:
            if (lengths.size() != 1) throw OutOfScopeError("a linear cycle takes exactly one length");
            if (lengths[0] < 3) throw OutOfScopeError("a linear cycle needs at least 3 edges");
            break;
        default:
            if (lengths.empty()) throw OutOfScopeError("at least one path length is required");
            for (long long l : lengths)
                if (l < 1) throw OutOfScopeError("path lengths must be at least 1");
            break;
    }
}

ForestSpec Problem::forest() const {
    validate();
    switch (kind) {
        case ProblemKind::Loose: return ForestSpec::uniform(PathKind::Loose, lengths);
        case ProblemKind::Linear: return ForestSpec::uniform(PathKind::Linear, lengths);
        case ProblemKind::Berge: return ForestSpec::uniform(PathKind::Berge, lengths);
        case ProblemKind::Matching: return ForestSpec::matching(s + 1);
        case ProblemKind::LinearCycle: return ForestSpec::single(PathKind::LinearCycle, static_cast<int>(lengths[0]));
        case ProblemKind::Graph: {
            // A graph path on l vertices is a linear path on l-1 edges.
            std::vector<long long> edges_counts;
            for (long long l : lengths) edges_counts.push_back(l - 1);
            return ForestSpec::uniform(PathKind::Linear, edges_counts);
        }
    }
    throw Error("unreachable");
}

bool Problem::has_formula() const { return kind != ProblemKind::Berge; }

FormulaResult Problem::formula(long long n) const {
    validate();
    switch (kind) {
        case ProblemKind::Loose: return ex_loose_forest(n, r, lengths);
        case ProblemKind::Linear: return ex_linear_forest(n, r, lengths);
        case ProblemKind::Matching: return ex_matching_conjecture(n, r, s);
        case ProblemKind::Graph: return ex_graph_path_forest(n, lengths);
        case ProblemKind::LinearCycle: return ex_linear_cycle(n, r, lengths[0]);
        case ProblemKind::Berge: throw OutOfScopeError("no closed form is provided for berge paths");
    }
    throw Error("unreachable");
}

bool Problem::has_construction() const {
    if (kind == ProblemKind::Matching) return true;
    // Star-cover constructions exist for the hypergraph theorems only.
    return r >= 3 && (kind == ProblemKind::Loose || kind == ProblemKind::Linear ||
                      kind == ProblemKind::LinearCycle);
}

std::optional<Hypergraph> Problem::construction(int n) const {
    validate();
    if (!has_construction()) return std::nullopt;
    try {
        switch (kind) {
            case ProblemKind::Loose: return loose_extremal(n, r, lengths);
            case ProblemKind::Linear: return linear_extremal(n, r, lengths);
            case ProblemKind::LinearCycle: return linear_extremal(n, r, lengths);
            case ProblemKind::Matching: {
                MatchingCandidates c = matching_candidates(n, r, s);
                // Star cover is the eventual extremal graph; prefer it on ties.
                if (c.clique.edge_count() > c.star.edge_count()) return c.clique;
                return c.star;
            }
            default: return std::nullopt;
        }
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

std::string Problem::pattern_string() const {
    if (kind == ProblemKind::Matching) return "s=" + std::to_string(s);
    std::ostringstream out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out << ',';
        out << lengths[i];
    }
    return out.str();
}

std::string Problem::cache_key(const std::string& op, int n) const {
    return op + "|" + to_string(kind) + "|r=" + std::to_string(r) + "|" + pattern_string() +
           "|n=" + std::to_string(n);
}

}  // namespace turan
