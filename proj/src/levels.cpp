#include "levels.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "indpoly.hpp"

namespace wlp {

namespace {

void extend(const Graph& g, int next, VertexSet chosen, VertexSet blocked,
            int remaining, std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.push_back(chosen);
        return;
    }
    int n = g.vertex_count();
    // Not enough vertices left to finish the set: prune.
    for (int v = next; v + remaining <= n; ++v) {
        if (blocked.test(v)) continue;
        VertexSet c = chosen;
        c.set(v);
        extend(g, v + 1, c, blocked | g.neighbors(v), remaining - 1, out);
    }
}

} // namespace

LevelBasis level_basis(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative degree");
    LevelBasis basis;
    basis.degree = k;
    extend(g, 0, VertexSet{}, VertexSet{}, k, basis.sets);
    std::sort(basis.sets.begin(), basis.sets.end());
    return basis;
}

HilbertData hilbert_data(const Graph& g) {
    UPoly p = independence_polynomial(g);
    HilbertData data;
    data.h = p.coeffs();
    data.socle_degree = p.degree();
    return data;
}

LevelMap level_map_from_bases(const Graph& g, const LevelBasis& source,
                              const LevelBasis& target) {
    if (target.degree != source.degree + 1)
        throw std::invalid_argument("bases must be at adjacent degrees");
    std::unordered_map<VertexSet, int, VertexSetHash> row_of;
    row_of.reserve(target.sets.size());
    for (size_t r = 0; r < target.sets.size(); ++r)
        row_of.emplace(target.sets[r], static_cast<int>(r));

    std::vector<MatrixEntry> entries;
    entries.reserve(target.sets.size() * (source.degree + 1));
    for (size_t c = 0; c < source.sets.size(); ++c) {
        const VertexSet& s = source.sets[c];
        std::vector<int> rows;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (s.test(v) || s.intersects(g.neighbors(v))) continue;
            VertexSet t = s;
            t.set(v);
            auto it = row_of.find(t);
            if (it == row_of.end())
                throw std::logic_error("extension missing from target basis");
            rows.push_back(it->second);
        }
        std::sort(rows.begin(), rows.end());
        for (int r : rows)
            entries.push_back({r, static_cast<int>(c), 1});
    }
    return {source.degree,
            SparseIntMatrix(target.size(), source.size(), std::move(entries))};
}

LevelMap level_map(const Graph& g, int j) {
    if (j < 0) throw std::invalid_argument("negative degree");
    LevelBasis source = level_basis(g, j);
    LevelBasis target = level_basis(g, j + 1);
    if (source.sets.empty() || target.sets.empty())
        throw std::invalid_argument("beyond socle degree");
    return level_map_from_bases(g, source, target);
}

} // namespace wlp
