#include "chorded/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace chorded {

namespace {

// Exhaustive minimal-string search on one connected component (local
// adjacency as bitmasks). Bits are revealed column-major: placing
// position p appends the adjacency of the placed vertex to positions
// 0..p-1. Branches whose partial string exceeds the best are cut.
struct ComponentCanon {
    int c;
    std::vector<std::uint32_t> adj;  // local adjacency masks
    std::vector<std::uint8_t> best, cur;
    std::vector<int> best_perm, pos;  // pos[i] = local vertex at position i
    std::uint32_t used = 0;

    explicit ComponentCanon(const Graph& g, const std::vector<int>& verts)
        : c(static_cast<int>(verts.size())), adj(c, 0) {
        if (c > 24)
            throw std::domain_error("canonical_form: component larger than 24 vertices");
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j && g.has_edge(verts[i], verts[j]))
                    adj[i] |= std::uint32_t{1} << j;
        int nbits = c * (c - 1) / 2;
        best.assign(nbits, 0);
        cur.assign(nbits, 0);
        best_perm.resize(c);
        pos.resize(c);
        // Seed best with the identity ordering.
        int idx = 0;
        for (int p = 0; p < c; ++p) {
            for (int q = 0; q < p; ++q) best[idx++] = (adj[p] >> q) & 1;
            best_perm[p] = p;
        }
        search(0, 0, true);
    }

    void search(int p, int bit_idx, bool tight) {
        if (p == c) {
            // The tight flag may be stale once a descendant has improved
            // best, so compare explicitly before accepting.
            if (!tight && cur < best) {
                best = cur;
                for (int i = 0; i < c; ++i) best_perm[i] = pos[i];
            }
            return;
        }
        std::uint32_t tried = 0;
        for (int v = 0; v < c; ++v) {
            if (used & (std::uint32_t{1} << v)) continue;
            // Twin collapse: if an already-tried candidate u is
            // interchangeable with v (equal neighborhoods outside {u,v}),
            // the subtree under v repeats the one under u.
            {
                std::uint32_t mv = adj[v] & ~(std::uint32_t{1} << v);
                bool dup = false;
                for (int u = 0; u < v && !dup; ++u) {
                    if (!(tried & (std::uint32_t{1} << u))) continue;
                    std::uint32_t mask = ~((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
                    dup = (adj[u] & mask) == (mv & mask);
                }
                if (dup) continue;
                tried |= std::uint32_t{1} << v;
            }
            bool t = tight;
            int idx = bit_idx;
            bool prune = false;
            for (int q = 0; q < p; ++q, ++idx) {
                std::uint8_t b = (adj[v] >> pos[q]) & 1;
                if (t) {
                    if (b > best[idx]) {
                        prune = true;
                        break;
                    }
                    if (b < best[idx]) t = false;
                }
                cur[idx] = b;
            }
            if (prune) continue;
            pos[p] = v;
            used |= std::uint32_t{1} << v;
            search(p + 1, bit_idx + p, t);
            used &= ~(std::uint32_t{1} << v);
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    auto comps = g.components();
    struct Done {
        std::vector<std::uint8_t> bits;
        std::vector<int> order;  // original labels in canonical position order
    };
    std::vector<Done> done;
    done.reserve(comps.size());
    for (const auto& comp : comps) {
        ComponentCanon cc(g, comp);
        Done d;
        d.bits = std::move(cc.best);
        // best_perm maps position -> local vertex; translate to originals.
        d.order.resize(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) d.order[i] = comp[cc.best_perm[i]];
        done.push_back(std::move(d));
    }
    std::sort(done.begin(), done.end(), [](const Done& a, const Done& b) {
        if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
        return a.bits < b.bits;
    });
    std::vector<int> perm(g.order());
    int next = 0;
    for (const auto& d : done)
        for (int orig : d.order) perm[orig] = next++;
    return perm;
}

Graph canonical_copy(const Graph& g) { return g.permuted(canonical_labeling(g)); }

std::string graph_bytes(const Graph& c) {
    int n = c.order();
    std::string out;
    out.push_back(static_cast<char>(n & 0xff));
    out.push_back(static_cast<char>((n >> 8) & 0xff));
    std::uint8_t acc = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | (c.has_edge(i, j) ? 1 : 0));
            if (++nb == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>(acc << (8 - nb)));
    return out;
}

std::string canonical_form(const Graph& g) { return graph_bytes(canonical_copy(g)); }

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace chorded
