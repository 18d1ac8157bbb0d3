#pragma once

#include <vector>

#include "graph.hpp"
#include "sparse.hpp"
#include "upoly.hpp"

namespace wlp {

// Basis of the degree-k graded piece of A(G) = k[x_1..x_n]/(squares + edge
// ideal): the squarefree monomials supported on independent sets of size k,
// sorted ascending by bit-mask value so matrices are reproducible.
struct LevelBasis {
    int degree = 0;
    std::vector<VertexSet> sets;

    int size() const { return static_cast<int>(sets.size()); }
};

LevelBasis level_basis(const Graph& g, int k);

// Hilbert function h_0..h_D of A(G); equals the independence polynomial
// coefficient sequence, with D = alpha(G) the socle degree.
struct HilbertData {
    std::vector<BigInt> h;
    int socle_degree = 0;
};

HilbertData hilbert_data(const Graph& g);

// The multiplication map by ell = x_1 + ... + x_n from degree j to degree
// j+1, as a 0/1 matrix over the two bases: entry (r, c) present iff the
// row's set is the column's set plus one vertex.
struct LevelMap {
    int j = 0;
    SparseIntMatrix matrix;  // rows = h_{j+1}, cols = h_j
};

// Requires 0 <= j < socle degree; throws std::invalid_argument otherwise.
LevelMap level_map(const Graph& g, int j);

// Same map given already-enumerated bases for degrees j and j+1; avoids
// re-enumerating shared bases when walking all degrees of one graph.
LevelMap level_map_from_bases(const Graph& g, const LevelBasis& source,
                              const LevelBasis& target);

} // namespace wlp
