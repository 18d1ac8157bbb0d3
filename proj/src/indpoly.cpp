#include "indpoly.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace wlp {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

UPoly one_plus_t_power(int k) {
    std::vector<BigInt> coeffs(k + 1);
    for (int i = 0; i <= k; ++i)
        mpz_bin_uiui(coeffs[i].get_mpz_t(), k, i);
    return UPoly(std::move(coeffs));
}

class IndPolyEngine {
public:
    IndPolyEngine(const Graph& g, BranchRule rule, uint64_t seed)
        : g_(g), rule_(rule), rng_(seed) {}

    UPoly run() { return eval(g_.vertices()); }

private:
    UPoly eval(VertexSet mask) {
        if (mask.empty()) return UPoly::one();
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        UPoly result = compute(mask);
        memo_.emplace(mask, result);
        return result;
    }

    UPoly compute(VertexSet mask) {
        // Isolated vertices contribute a factor (1+t) each.
        VertexSet isolated;
        for (int v = mask.first(); v >= 0; v = mask.next(v))
            if ((g_.neighbors(v) & mask).empty())
                isolated.set(v);
        if (!isolated.empty()) {
            VertexSet rest = mask.minus(isolated);
            UPoly factor = one_plus_t_power(isolated.count());
            return rest.empty() ? factor : eval(rest) * factor;
        }

        // Product rule across connected components.
        VertexSet comp = component_of(mask.first(), mask);
        if (comp != mask) return eval(comp) * eval(mask.minus(comp));

        int u = pick_branch_vertex(mask);
        UPoly without_u = eval(mask.minus(VertexSet::single(u)));
        UPoly without_nbhd = eval(mask.minus(g_.closed_neighborhood(u)));
        return without_u + without_nbhd.shifted(1);
    }

    VertexSet component_of(int start, VertexSet mask) const {
        VertexSet comp = VertexSet::single(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                next |= g_.neighbors(v) & mask;
            frontier = next.minus(comp);
            comp |= frontier;
        }
        return comp;
    }

    int pick_branch_vertex(VertexSet mask) {
        if (rule_ == BranchRule::Seeded) {
            int k = static_cast<int>(splitmix64(rng_) % mask.count());
            int v = mask.first();
            while (k-- > 0) v = mask.next(v);
            return v;
        }
        int best = -1, best_deg = -1;
        for (int v = mask.first(); v >= 0; v = mask.next(v)) {
            int deg = (g_.neighbors(v) & mask).count();
            if (deg > best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        return best;
    }

    const Graph& g_;
    BranchRule rule_;
    uint64_t rng_;
    std::unordered_map<VertexSet, UPoly, VertexSetHash> memo_;
};

} // namespace

UPoly independence_polynomial(const Graph& g, BranchRule rule, uint64_t seed) {
    return IndPolyEngine(g, rule, seed).run();
}

UPoly brute_force_independence_polynomial(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25)
        throw std::invalid_argument("brute force capped at 25 vertices");
    std::vector<uint32_t> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = static_cast<uint32_t>(g.neighbors(v).word(0));
    uint64_t total = 1ULL << n;
    std::vector<uint8_t> indep(total, 0);
    std::vector<BigInt> counts(n + 1);
    indep[0] = 1;
    counts[0] = 1;
    for (uint64_t s = 1; s < total; ++s) {
        int low = std::countr_zero(s);
        uint64_t rest = s & (s - 1);
        if (indep[rest] && (adj[low] & rest) == 0) {
            indep[s] = 1;
            counts[std::popcount(s)] += 1;
        }
    }
    return UPoly(std::move(counts));
}

namespace {

// Mode tables for P_n, C_n, Pan_n computed on demand via the engine.
class ModeTable {
public:
    int lambda(int n) { return get(lambda_, n, [](int k) { return path(k); }); }
    int rho(int n) { return get(rho_, n, [](int k) { return cycle(k); }); }
    int zeta(int n) { return get(zeta_, n, [](int k) { return pan(k); }); }

private:
    template <typename MakeGraph>
    int get(std::unordered_map<int, int>& table, int n, MakeGraph make) {
        if (auto it = table.find(n); it != table.end()) return it->second;
        ModeReport r = mode_analysis(independence_polynomial(make(n)));
        if (!r.unimodal) throw std::logic_error("family polynomial not unimodal");
        table.emplace(n, *r.mode);
        return *r.mode;
    }

    std::unordered_map<int, int> lambda_, rho_, zeta_;
};

int tadpole_mode(int m, int n) {
    ModeReport r = mode_analysis(independence_polynomial(tadpole(m, n)));
    if (!r.unimodal) throw std::logic_error("tadpole polynomial not unimodal");
    return *r.mode;
}

} // namespace

std::vector<IdentityCheck> verify_decompositions(int m_lo, int m_hi,
                                                 int n_lo, int n_hi) {
    if (m_lo < 3) throw std::invalid_argument("m_lo must be >= 3");
    if (n_lo < 1) throw std::invalid_argument("n_lo must be >= 1");
    std::vector<IdentityCheck> out;
    UPoly t({0, 1});
    for (int m = m_lo; m <= m_hi; ++m) {
        UPoly pan_m = independence_polynomial(pan(m));
        UPoly cyc_m = independence_polynomial(cycle(m));
        out.push_back({"I(T_{m,2}) = I(Pan_m) + t*I(C_m)", m,
                       independence_polynomial(tadpole(m, 2)) ==
                           pan_m + t * cyc_m});
        out.push_back({"I(T_{m,3}) = (1+t)*I(Pan_m) + t*I(C_m)", m,
                       independence_polynomial(tadpole(m, 3)) ==
                           UPoly({1, 1}) * pan_m + t * cyc_m});
    }
    for (int n = n_lo; n <= n_hi; ++n) {
        UPoly t4n = independence_polynomial(tadpole(4, n));
        UPoly cyc = independence_polynomial(cycle(n + 3));
        out.push_back({"I(T_{4,n}) = I(C_{n+3}) + t*I(P_{n+2})", n,
                       t4n == cyc + t * independence_polynomial(path(n + 2))});
        out.push_back({"I(T_{5,n}) = I(T_{4,n}) + t*I(C_{n+3})", n,
                       independence_polynomial(tadpole(5, n)) == t4n + t * cyc});
    }
    return out;
}

std::vector<InequalityCheck> verify_mode_inequalities(int lo, int hi) {
    std::vector<InequalityCheck> out;
    ModeTable mt;
    auto in = [](int x, std::initializer_list<int> set) {
        for (int s : set)
            if (x == s) return true;
        return false;
    };
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        out.push_back({"lambda_{n+1} >= lambda_n", n,
                       mt.lambda(n + 1) >= mt.lambda(n)});
        out.push_back({"lambda_{n+3}-1 <= lambda_n <= lambda_{n+4}-1", n,
                       mt.lambda(n + 3) - 1 <= mt.lambda(n) &&
                           mt.lambda(n) <= mt.lambda(n + 4) - 1});
    }
    for (int n = std::max(lo, 5); n <= hi; ++n) {
        out.push_back({"lambda_{n-1} <= rho_n <= lambda_{n-4}+1 <= lambda_n", n,
                       mt.lambda(n - 1) <= mt.rho(n) &&
                           mt.rho(n) <= mt.lambda(n - 4) + 1 &&
                           mt.lambda(n - 4) + 1 <= mt.lambda(n)});
        out.push_back({"rho_n <= lambda_n <= zeta_n <= rho_n+1 <= lambda_n+1",
                       n,
                       mt.rho(n) <= mt.lambda(n) && mt.lambda(n) <= mt.zeta(n) &&
                           mt.zeta(n) <= mt.rho(n) + 1 &&
                           mt.rho(n) + 1 <= mt.lambda(n) + 1});
        out.push_back({"mode I(T_{m,2}) in {rho_m, rho_m+1}", n,
                       in(tadpole_mode(n, 2), {mt.rho(n), mt.rho(n) + 1})});
        out.push_back({"mode I(T_{m,3}) in {rho_m, rho_m+1, rho_m+2}", n,
                       in(tadpole_mode(n, 3),
                          {mt.rho(n), mt.rho(n) + 1, mt.rho(n) + 2})});
        out.push_back(
            {"mode I(T_{4,n}) in {lambda_{n+2}, lambda_{n+2}+1}", n,
             in(tadpole_mode(4, n), {mt.lambda(n + 2), mt.lambda(n + 2) + 1})});
        out.push_back({"mode I(T_{5,n}) in {lambda_{n+2}, lambda_{n+2}+1, "
                       "lambda_{n+2}+2}",
                       n,
                       in(tadpole_mode(5, n),
                          {mt.lambda(n + 2), mt.lambda(n + 2) + 1,
                           mt.lambda(n + 2) + 2})});
    }
    return out;
}

} // namespace wlp
