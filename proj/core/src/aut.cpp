#include <propeller/aut.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace propeller {

AdjBits AdjBits::from(const LabeledGraph& g) {
    AdjBits a;
    a.nv = g.vertex_count();
    a.words = (a.nv + 63) / 64;
    a.bits.assign(std::size_t(a.nv) * a.words, 0);
    for (int u = 0; u < a.nv; ++u)
        for (int v : g.adj[u])
            a.bits[std::size_t(u) * a.words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    return a;
}

namespace {

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// backtracking search for isomorphisms g -> h extending a seed
struct SearchEngine {
    const LabeledGraph& g;
    const LabeledGraph& h;
    AdjBits hb;
    int nv, words;

    std::vector<int> order;    // g-vertices in assignment order
    std::vector<int> anchor;   // earlier-placed g-neighbor of order[t], or -1
    std::vector<int> map;      // g -> h, -1 while unassigned
    std::vector<std::uint64_t> mapped_g, used_h;
    std::size_t visited = 0;
    std::size_t limit = SIZE_MAX;
    const std::function<bool(const Permutation&)>* sink = nullptr;
    bool stopped = false;

    SearchEngine(const LabeledGraph& g_, const LabeledGraph& h_) : g(g_), h(h_) {
        nv = g.vertex_count();
        hb = AdjBits::from(h);
        words = hb.words;
        map.assign(nv, -1);
        mapped_g.assign(words, 0);
        used_h.assign(words, 0);
    }

    bool seed_ok(const std::vector<std::pair<int, int>>& seed) {
        if (g.vertex_count() != h.vertex_count()) return false;
        for (auto [v, w] : seed) {
            if (v < 0 || v >= nv || w < 0 || w >= nv) throw std::out_of_range("seed vertex id");
            if (map[v] == w) continue;      // repeated pair
            if (map[v] != -1) return false;  // contradictory seed
            if ((used_h[w >> 6] >> (w & 63)) & 1) return false;
            if (g.adj[v].size() != h.adj[w].size()) return false;
            // adjacency among the seed must match both ways
            for (int x = 0; x < nv; ++x)
                if (map[x] != -1 && g.has_edge(v, x) != hb.test(w, map[x])) return false;
            assign(v, w);
        }
        return true;
    }

    void assign(int v, int w) {
        map[v] = w;
        mapped_g[v >> 6] |= std::uint64_t(1) << (v & 63);
        used_h[w >> 6] |= std::uint64_t(1) << (w & 63);
    }
    void unassign(int v, int w) {
        map[v] = -1;
        mapped_g[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        used_h[w >> 6] &= ~(std::uint64_t(1) << (w & 63));
    }

    void build_order() {
        std::vector<char> seen(nv, 0);
        std::queue<int> q;
        for (int v = 0; v < nv; ++v)
            if (map[v] != -1) {
                seen[v] = 1;
                q.push(v);
            }
        auto drain = [&] {
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int x : g.adj[u])
                    if (!seen[x]) {
                        seen[x] = 1;
                        order.push_back(x);
                        anchor.push_back(u);
                        q.push(x);
                    }
            }
        };
        drain();
        for (int v = 0; v < nv; ++v)
            if (!seen[v]) {
                seen[v] = 1;
                order.push_back(v);
                anchor.push_back(-1);
                q.push(v);
                drain();
            }
    }

    bool feasible(int v, int w) const {
        if ((used_h[w >> 6] >> (w & 63)) & 1) return false;
        if (g.adj[v].size() != h.adj[w].size()) return false;
        int placed = 0;
        for (int x : g.adj[v])
            if (map[x] != -1) {
                if (!hb.test(w, map[x])) return false;
                ++placed;
            }
        // every already-used neighbor of w must be accounted for
        if (popcount_and(hb.row(w), used_h.data(), words) != placed) return false;
        return true;
    }

    void dfs(std::size_t t) {
        if (stopped) return;
        if (t == order.size()) {
            ++visited;
            Permutation p;
            p.img = map;
            if (!(*sink)(p) || visited >= limit) stopped = true;
            return;
        }
        int v = order[t];
        if (anchor[t] != -1) {
            for (int w : h.adj[map[anchor[t]]]) {
                if (!feasible(v, w)) continue;
                assign(v, w);
                dfs(t + 1);
                unassign(v, w);
                if (stopped) return;
            }
        } else {
            for (int w = 0; w < nv; ++w) {
                if (!feasible(v, w)) continue;
                assign(v, w);
                dfs(t + 1);
                unassign(v, w);
                if (stopped) return;
            }
        }
    }

    std::size_t run(const std::vector<std::pair<int, int>>& seed,
                    const std::function<bool(const Permutation&)>& fn, std::size_t lim) {
        limit = lim;
        sink = &fn;
        if (!seed_ok(seed)) return 0;
        build_order();
        dfs(0);
        return visited;
    }
};

}  // namespace

std::optional<Permutation> find_isomorphism_extending(
    const LabeledGraph& g, const LabeledGraph& h, const std::vector<std::pair<int, int>>& seed) {
    SearchEngine eng(g, h);
    std::optional<Permutation> out;
    eng.run(
        seed,
        [&](const Permutation& p) {
            out = p;
            return false;
        },
        1);
    return out;
}

std::optional<Permutation> find_automorphism_extending(
    const LabeledGraph& g, const std::vector<std::pair<int, int>>& seed) {
    return find_isomorphism_extending(g, g, seed);
}

std::size_t for_each_automorphism_extending(const LabeledGraph& g,
                                            const std::vector<std::pair<int, int>>& seed,
                                            const std::function<bool(const Permutation&)>& fn,
                                            std::size_t limit) {
    SearchEngine eng(g, g);
    return eng.run(seed, fn, limit);
}

std::vector<Permutation> all_automorphisms_naive(const LabeledGraph& g, std::size_t limit) {
    const int nv = g.vertex_count();
    std::vector<Permutation> out;
    std::vector<int> img(nv, -1);
    std::vector<char> used(nv, 0);

    // id-order backtracking; correctness by pairwise edge comparison only
    auto rec = [&](auto&& self, int v) -> bool {
        if (std::size_t(out.size()) >= limit) return false;
        if (v == nv) {
            Permutation p;
            p.img = img;
            out.push_back(p);
            return out.size() < limit;
        }
        for (int w = 0; w < nv; ++w) {
            if (used[w]) continue;
            if (g.adj[v].size() != g.adj[w].size()) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(img[u], w)) ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            if (!self(self, v + 1)) {
                img[v] = -1;
                used[w] = 0;
                return false;
            }
            img[v] = -1;
            used[w] = 0;
        }
        return true;
    };
    rec(rec, 0);
    return out;
}

// ---- full group via base and orbit ----

AutGroup aut_group(const LabeledGraph& g) {
    const int nv = g.vertex_count();
    AutGroup out;
    out.order = 1;
    std::vector<std::pair<int, int>> fixed;

    for (int v = 0; v < nv; ++v) {
        int orbit = 0;
        for (int w = 0; w < nv; ++w) {
            auto seed = fixed;
            seed.emplace_back(v, w);
            if (auto phi = find_automorphism_extending(g, seed)) {
                ++orbit;
                if (!is_identity(*phi) &&
                    std::find(out.generators.begin(), out.generators.end(), *phi) ==
                        out.generators.end())
                    out.generators.push_back(*phi);
            }
        }
        out.order *= orbit;
        fixed.emplace_back(v, v);
        // once the pointwise stabilizer is trivial the remaining orbits are singletons
        std::size_t completions = for_each_automorphism_extending(
            g, fixed, [](const Permutation&) { return true; }, 2);
        if (completions == 1) break;
    }
    out.vertex_orbits = vertex_orbits_under(nv, out.generators);
    return out;
}

std::vector<std::vector<int>> vertex_orbits_under(int nv, const std::vector<Permutation>& gens) {
    std::vector<int> comp(nv, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < nv; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> orbit{s};
        comp[s] = int(orbits.size());
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const Permutation& p : gens) {
                int t = p(orbit[head]);
                if (comp[t] == -1) {
                    comp[t] = comp[s];
                    orbit.push_back(t);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

namespace {

// generic orbit count over a set of items closed under the generators
template <class Item, class Apply>
int orbit_count(const std::vector<Item>& items, const std::vector<Permutation>& gens,
                Apply apply) {
    std::map<Item, int> index;
    for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = int(i);
    std::vector<int> comp(items.size(), -1);
    int classes = 0;
    for (std::size_t s = 0; s < items.size(); ++s) {
        if (comp[s] != -1) continue;
        ++classes;
        std::vector<int> stack{int(s)};
        comp[s] = classes;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const Permutation& p : gens) {
                Item moved = apply(items[cur], p);
                int t = index.at(moved);
                if (comp[t] == -1) {
                    comp[t] = classes;
                    stack.push_back(t);
                }
            }
        }
    }
    return classes;
}

}  // namespace

int edge_orbit_count(const LabeledGraph& g, const std::vector<Permutation>& gens) {
    std::vector<std::pair<int, int>> edges = g.edges();
    return orbit_count(edges, gens, [](std::pair<int, int> e, const Permutation& p) {
        int a = p(e.first), b = p(e.second);
        return std::make_pair(std::min(a, b), std::max(a, b));
    });
}

int arc_orbit_count(const LabeledGraph& g, const std::vector<Permutation>& gens) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return orbit_count(arcs, gens, [](std::pair<int, int> a, const Permutation& p) {
        return std::make_pair(p(a.first), p(a.second));
    });
}

bool is_vertex_transitive(const LabeledGraph& g) {
    return aut_group(g).vertex_orbits.size() == 1;
}

bool is_arc_transitive(const LabeledGraph& g) {
    return arc_orbit_count(g, aut_group(g).generators) == 1;
}

bool is_edge_transitive_oracle(const LabeledGraph& g) {
    return edge_orbit_count(g, aut_group(g).generators) == 1;
}

std::optional<Permutation> wing_to_flat_automorphism(const LabeledGraph& g, int n) {
    return find_automorphism_extending(
        g, {{vid(VertexClass::A, 0, n), vid(VertexClass::A, 0, n)},
            {vid(VertexClass::A, 1, n), vid(VertexClass::B, 0, n)}});
}

bool is_edge_transitive(const LabeledGraph& g, const PropellerParams& p) {
    return wing_to_flat_automorphism(g, p.n).has_value();
}

bool is_edge_transitive(const PropellerParams& p) {
    LabeledGraph g = build_propeller(p, false);
    return is_edge_transitive(g, p);
}

// ---- isomorphism ----

namespace {

std::vector<int> triangle_signature(const LabeledGraph& g) {
    const int nv = g.vertex_count();
    std::vector<int> t(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (std::size_t i = 0; i < g.adj[v].size(); ++i)
            for (std::size_t j = i + 1; j < g.adj[v].size(); ++j)
                if (g.has_edge(g.adj[v][i], g.adj[v][j])) ++t[v];
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<std::size_t> degree_signature(const LabeledGraph& g) {
    std::vector<std::size_t> d;
    d.reserve(g.adj.size());
    for (const auto& row : g.adj) d.push_back(row.size());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (degree_signature(g) != degree_signature(h)) return std::nullopt;
    if (triangle_signature(g) != triangle_signature(h)) return std::nullopt;
    return find_isomorphism_extending(g, h, {});
}

bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace propeller
