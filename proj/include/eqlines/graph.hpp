#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqlines {

// Sorted, duplicate-free vertex indices into an associated Graph.
using VertexSet = std::vector<int>;

// Finite simple graph on vertices 0..n-1, immutable after construction.
// Stored as sorted adjacency lists so that structural queries scale to
// tens of thousands of vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

    // Named constructions used throughout the tests and the search module.
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    // Spider tree: one center with legs of the given lengths.
    static Graph spider(const std::vector<int>& legs);
    static Graph disjoint_union(const std::vector<Graph>& parts);
    // Graph on n <= 11 vertices from an upper-triangle edge bitmask,
    // bit index of pair (i,j), i<j, in lexicographic (i,j) order.
    static Graph from_edge_mask(int n, std::uint64_t mask);
    std::uint64_t edge_mask() const;

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

enum class Pattern { T1112, T222, P3, CYCLE_LE_5 };

int max_degree(const Graph& g);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
// |E| - |V| + 1; throws std::invalid_argument when g is disconnected.
long long cyclomatic_number(const Graph& g);
// Deterministic subgraph detector for the four fixed patterns. Returns the
// vertex set of the first witness in a fixed scan order, none if absent.
std::optional<VertexSet> find_subgraph(const Graph& g, Pattern pattern);
// s plus the smallest-index vertex outside s adjacent to s; throws when no
// such vertex exists.
VertexSet extend_by_attached_vertex(const Graph& g, const VertexSet& s);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
VertexSet complement_set(const Graph& g, const VertexSet& s);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace eqlines
