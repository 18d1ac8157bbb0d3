#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vertexset.hpp"

namespace wlp {

// Simple undirected graph on vertices 0..n-1, adjacency as bit rows.
// Immutable after construction; all derived objects (induced subgraphs,
// level bases, matrices) identify vertices by index into the original graph.
class Graph {
public:
    Graph() = default;
    // Adjacency must already be symmetric and loop-free; validated.
    Graph(int n, std::vector<VertexSet> adj, std::string name = {},
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet neighbors(int v) const { return adj_[v]; }          // N(v)
    VertexSet closed_neighborhood(int v) const;                   // N[v]
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    const std::string& name() const { return name_; }
    // Display name of vertex v ("x_3", "y_1"); falls back to "v3".
    std::string label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::string name_;
    std::vector<std::string> labels_;
};

// Graph families. Vertex labels follow the x_i / y_j convention: cycle
// vertices x_1..x_m, tail vertices y_1..y_n, bridge {x_m, y_1}.
Graph path(int n);                // P_n, n >= 1
Graph cycle(int m);               // C_m, m >= 3
Graph tadpole(int m, int n);      // T_{m,n}; tadpole(m,0) == cycle(m)
Graph pan(int m);                 // Pan_m == T_{m,1}
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     std::string name = {});

// Edge-list text format: first line "n <count>", then one edge per line as
// two 0-based integers; lines starting with '#' ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Induced subgraph on the vertices of `keep`, relabeled to 0..k-1 in
// increasing original order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

struct NeighborhoodDeletion {
    Graph graph;          // induced subgraph on V \ N[v]
    VertexSet survivors;  // mask into the original graph
};
NeighborhoodDeletion delete_closed_neighborhood(const Graph& g, int v);

bool is_independent(const Graph& g, VertexSet s);

} // namespace wlp
