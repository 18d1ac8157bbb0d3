#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

namespace wlp {

// Set of vertex indices over 0..127, stored in two machine words.
// Doubles as the memoization key for induced subgraphs: a subgraph of a
// fixed base graph is identified by the mask of its surviving vertices.
class VertexSet {
public:
    static constexpr int kMaxVertices = 128;

    constexpr VertexSet() : words_{0, 0} {}

    static VertexSet range(int n) {
        VertexSet s;
        if (n <= 0) return s;
        if (n >= 64) {
            s.words_[0] = ~0ULL;
            s.words_[1] = (n >= 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else {
            s.words_[0] = (1ULL << n) - 1;
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }
    bool empty() const { return words_[0] == 0 && words_[1] == 0; }

    VertexSet operator|(VertexSet o) const {
        return VertexSet{words_[0] | o.words_[0], words_[1] | o.words_[1]};
    }
    VertexSet operator&(VertexSet o) const {
        return VertexSet{words_[0] & o.words_[0], words_[1] & o.words_[1]};
    }
    // this \ o
    VertexSet minus(VertexSet o) const {
        return VertexSet{words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
    }
    VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
    VertexSet& operator&=(VertexSet o) { return *this = *this & o; }

    bool intersects(VertexSet o) const { return !(*this & o).empty(); }
    bool is_subset_of(VertexSet o) const { return minus(o).empty(); }

    // Lowest set index, or -1 when empty.
    int first() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }
    // Lowest set index > v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        uint64_t w = words_[v >> 6] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        if (v < 64 && words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    bool operator==(const VertexSet&) const = default;

    // Numeric order of the underlying 128-bit mask; fixes basis order.
    bool operator<(VertexSet o) const {
        if (words_[1] != o.words_[1]) return words_[1] < o.words_[1];
        return words_[0] < o.words_[0];
    }

    uint64_t word(int i) const { return words_[i]; }

    size_t hash() const {
        uint64_t h = words_[0] * 0x9e3779b97f4a7c15ULL;
        h ^= words_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }

private:
    constexpr VertexSet(uint64_t w0, uint64_t w1) : words_{w0, w1} {}
    std::array<uint64_t, 2> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace wlp
