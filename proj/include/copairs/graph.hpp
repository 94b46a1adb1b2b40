#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copairs {

enum class EdgeMode {
    kAllCoprime,     // every edge must satisfy gcd(a_i, a_j) == 1
    kAllNonCoprime,  // every edge must satisfy gcd(a_i, a_j) != 1
};

inline std::string to_string(EdgeMode mode) {
    return mode == EdgeMode::kAllCoprime ? "coprime" : "non-coprime";
}

// A gcd-constraint pattern on k-tuples: vertices 1..k, undirected edges,
// one mode applying to every edge. Mixed per-edge labels are not
// representable by design.
class ConstraintGraph {
public:
    using Edge = std::pair<int, int>;  // normalized: first < second

    ConstraintGraph(int arity, std::vector<Edge> edges, EdgeMode mode)
        : arity_(arity), mode_(mode) {
        if (arity < 2) throw std::invalid_argument("graph arity must be at least 2");
        for (auto& [a, b] : edges) {
            if (a == b) throw std::invalid_argument("self-loop edge " + std::to_string(a) + "-" + std::to_string(b));
            if (a > b) std::swap(a, b);
            if (a < 1 || b > arity)
                throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                            " outside vertex range 1.." + std::to_string(arity));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge in constraint graph");
        edges_ = std::move(edges);
    }

    int arity() const { return arity_; }
    EdgeMode mode() const { return mode_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Does the tuple (1-based positions mapped to values[0..arity-1])
    // satisfy every edge constraint?
    bool satisfied_by(std::span<const std::uint64_t> values) const {
        for (const auto& [a, b] : edges_) {
            const bool coprime = std::gcd(values[static_cast<std::size_t>(a - 1)],
                                          values[static_cast<std::size_t>(b - 1)]) == 1;
            if (coprime != (mode_ == EdgeMode::kAllCoprime)) return false;
        }
        return true;
    }

    // Relabel vertices: perm[i] is the new label of vertex i+1 (a
    // permutation of 1..arity). Counting is invariant under this.
    ConstraintGraph relabeled(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != arity_)
            throw std::invalid_argument("permutation size must equal arity");
        std::vector<Edge> edges;
        edges.reserve(edges_.size());
        for (const auto& [a, b] : edges_)
            edges.emplace_back(perm[static_cast<std::size_t>(a - 1)],
                               perm[static_cast<std::size_t>(b - 1)]);
        return {arity_, std::move(edges), mode_};
    }

    static ConstraintGraph complete(int arity, EdgeMode mode) {
        std::vector<Edge> edges;
        for (int i = 1; i <= arity; ++i)
            for (int j = i + 1; j <= arity; ++j) edges.emplace_back(i, j);
        return {arity, std::move(edges), mode};
    }

    // Star rooted at vertex 1: edges 1-2, 1-3, ..., 1-arity.
    static ConstraintGraph star(int arity, EdgeMode mode) {
        std::vector<Edge> edges;
        for (int j = 2; j <= arity; ++j) edges.emplace_back(1, j);
        return {arity, std::move(edges), mode};
    }

    static ConstraintGraph path(int arity, EdgeMode mode) {
        std::vector<Edge> edges;
        for (int j = 2; j <= arity; ++j) edges.emplace_back(j - 1, j);
        return {arity, std::move(edges), mode};
    }

private:
    int arity_;
    EdgeMode mode_;
    std::vector<Edge> edges_;
};

// Parses the CLI mini-syntax "1-2,2-3,3-4" into an edge list.
inline std::vector<ConstraintGraph::Edge> parse_edge_list(const std::string& text) {
    std::vector<ConstraintGraph::Edge> edges;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 >= item.size())
            throw std::invalid_argument("malformed edge '" + item + "' (expected i-j)");
        int a = 0, b = 0;
        try {
            std::size_t used = 0;
            a = std::stoi(item.substr(0, dash), &used);
            if (used != dash) throw std::invalid_argument(item);
            b = std::stoi(item.substr(dash + 1), &used);
            if (used != item.size() - dash - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed edge '" + item + "' (expected i-j)");
        }
        edges.emplace_back(a, b);
        pos = comma + 1;
    }
    if (edges.empty()) throw std::invalid_argument("empty edge list");
    return edges;
}

}  // namespace copairs
