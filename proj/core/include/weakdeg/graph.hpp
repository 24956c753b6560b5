#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakdeg {

using VertexId = int;

/// Simple undirected graph with stable vertex identifiers.
/// Deleting a vertex never renames the others, so removal schemes stay
/// meaningful across subgraph splits.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    void remove_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Sorted, no duplicates.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<VertexId> vertices() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;  // u < v

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const;
    bool empty() const { return adj_.empty(); }

    Graph induced(const std::set<VertexId>& keep) const;
    Graph minus(const std::set<VertexId>& drop) const;
    /// Copy with the given edges removed (vertices kept).
    Graph without_edges(const std::vector<std::pair<VertexId, VertexId>>& drop) const;

    bool is_connected() const;
    std::vector<std::set<VertexId>> components() const;
    std::vector<VertexId> cut_vertices() const;
    int max_degree() const;
    /// Length of the shortest cycle, or -1 for a forest.
    int girth() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    // neighbor vectors kept sorted; map keys give deterministic vertex order
    std::map<VertexId, std::vector<VertexId>> adj_;
};

/// Builds a graph from an edge list, adding endpoints as needed.
Graph graph_from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                       const std::vector<VertexId>& isolated = {});

/// Per-vertex integer budget paired with a graph; the domain must match the
/// vertex set exactly.
class Potential {
public:
    Potential() = default;
    explicit Potential(std::map<VertexId, int> values) : values_(std::move(values)) {}

    static Potential constant(const Graph& g, int value);

    int get(VertexId v) const;
    void set(VertexId v, int value) { values_[v] = value; }
    void erase(VertexId v) { values_.erase(v); }
    bool has(VertexId v) const { return values_.count(v) != 0; }

    const std::map<VertexId, int>& values() const { return values_; }
    bool domain_matches(const Graph& g) const;
    bool all_nonnegative() const;

    /// Restriction to a vertex subset.
    Potential restrict(const std::set<VertexId>& keep) const;

    bool operator==(const Potential& other) const { return values_ == other.values_; }

private:
    std::map<VertexId, int> values_;
};

}  // namespace weakdeg
