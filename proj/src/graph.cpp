#include "graph.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wlp {

Graph::Graph(int n, std::vector<VertexSet> adj, std::string name,
             std::vector<std::string> labels)
    : n_(n), adj_(std::move(adj)), name_(std::move(name)),
      labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > VertexSet::kMaxVertices)
        throw std::invalid_argument("graphs larger than 128 vertices are not supported");
    if (static_cast<int>(adj_.size()) != n)
        throw std::invalid_argument("adjacency size mismatch");
    VertexSet valid = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
        if (!adj_[v].is_subset_of(valid))
            throw std::invalid_argument("vertex out of range");
        if (adj_[v].test(v))
            throw std::invalid_argument("loops not allowed");
        for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u))
            if (!adj_[u].test(v))
                throw std::invalid_argument("adjacency not symmetric");
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count mismatch");
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

VertexSet Graph::closed_neighborhood(int v) const {
    return adj_[v] | VertexSet::single(v);
}

std::string Graph::label(int v) const {
    if (v >= 0 && v < static_cast<int>(labels_.size())) return labels_[v];
    return "v" + std::to_string(v);
}

namespace {

std::vector<std::string> x_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back("x_" + std::to_string(i));
    return out;
}

} // namespace

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<VertexSet> adj(n);
    for (int i = 0; i + 1 < n; ++i) {
        adj[i].set(i + 1);
        adj[i + 1].set(i);
    }
    return Graph(n, std::move(adj), "P_" + std::to_string(n), x_labels(n));
}

Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle requires m >= 3");
    std::vector<VertexSet> adj(m);
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        adj[i].set(j);
        adj[j].set(i);
    }
    return Graph(m, std::move(adj), "C_" + std::to_string(m), x_labels(m));
}

Graph tadpole(int m, int n) {
    if (m < 3) throw std::invalid_argument("tadpole requires m >= 3");
    if (n < 0) throw std::invalid_argument("tadpole requires n >= 0");
    if (n == 0) return cycle(m);
    std::vector<VertexSet> adj(m + n);
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        adj[i].set(j);
        adj[j].set(i);
    }
    adj[m - 1].set(m);  // bridge {x_m, y_1}
    adj[m].set(m - 1);
    for (int i = m; i + 1 < m + n; ++i) {
        adj[i].set(i + 1);
        adj[i + 1].set(i);
    }
    std::vector<std::string> labels = x_labels(m);
    for (int i = 1; i <= n; ++i) labels.push_back("y_" + std::to_string(i));
    std::string name = n == 1 ? "Pan_" + std::to_string(m)
                              : "T_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    return Graph(m + n, std::move(adj), std::move(name), std::move(labels));
}

Graph pan(int m) { return tadpole(m, 1); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<VertexSet> adj(n1 + n2);
    for (int v = 0; v < n1; ++v) adj[v] = g1.neighbors(v);
    for (int v = 0; v < n2; ++v) {
        VertexSet row = g2.neighbors(v);
        for (int u = row.first(); u >= 0; u = row.next(u))
            adj[n1 + v].set(n1 + u);
    }
    std::vector<std::string> labels;
    labels.reserve(n1 + n2);
    for (int v = 0; v < n1; ++v) labels.push_back(g1.label(v));
    for (int v = 0; v < n2; ++v) labels.push_back(g2.label(v) + "'");
    std::string name = g1.name().empty() || g2.name().empty()
                           ? std::string()
                           : g1.name() + " u " + g2.name();
    return Graph(n1 + n2, std::move(adj), std::move(name), std::move(labels));
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     std::string name) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<VertexSet> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex out of range");
        if (u == v) throw std::invalid_argument("loops not allowed");
        adj[u].set(v);
        adj[v].set(u);
    }
    if (name.empty()) name = "G" + std::to_string(n);
    return Graph(n, std::move(adj), std::move(name));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 0)
                throw std::invalid_argument("edge list must start with 'n <count>'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("malformed edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list must start with 'n <count>'");
    return from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> newindex(g.vertex_count(), -1);
    int k = 0;
    for (int v = keep.first(); v >= 0; v = keep.next(v)) newindex[v] = k++;
    std::vector<VertexSet> adj(k);
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int v = keep.first(); v >= 0; v = keep.next(v)) {
        VertexSet row = g.neighbors(v) & keep;
        for (int u = row.first(); u >= 0; u = row.next(u))
            adj[newindex[v]].set(newindex[u]);
        labels.push_back(g.label(v));
    }
    return Graph(k, std::move(adj), "", std::move(labels));
}

NeighborhoodDeletion delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    VertexSet survivors = g.vertices().minus(g.closed_neighborhood(v));
    return {induced_subgraph(g, survivors), survivors};
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

} // namespace wlp
