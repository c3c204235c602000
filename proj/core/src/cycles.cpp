#include <propeller/cycles.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <stdexcept>

namespace propeller {

// ---- girth ----

int girth(const LabeledGraph& g) {
    const int nv = g.vertex_count();
    int best = INT_MAX;
    std::vector<int> dist(nv), par(nv);
    std::vector<int> queue_buf;
    queue_buf.reserve(nv);
    for (int root = 0; root < nv; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue_buf.clear();
        queue_buf.push_back(root);
        dist[root] = 0;
        par[root] = -1;
        for (std::size_t head = 0; head < queue_buf.size(); ++head) {
            const int x = queue_buf[head];
            if (2 * dist[x] >= best) break;  // deeper levels cannot improve
            for (int y : g.adj[x]) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    queue_buf.push_back(y);
                } else if (y != par[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best == INT_MAX ? -1 : best;
}

namespace {

// shortest cycle through the edge {a, b}: 1 + shortest a-b path avoiding it
int shortest_cycle_through_edge(const LabeledGraph& g, int a, int b) {
    const int nv = g.vertex_count();
    std::vector<int> dist(nv, -1);
    std::vector<int> queue_buf;
    queue_buf.reserve(nv);
    dist[a] = 0;
    queue_buf.push_back(a);
    for (std::size_t head = 0; head < queue_buf.size(); ++head) {
        const int x = queue_buf[head];
        for (int y : g.adj[x]) {
            if (x == a && y == b) continue;
            if (dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            if (y == b) return dist[y] + 1;
            queue_buf.push_back(y);
        }
    }
    return INT_MAX;
}

}  // namespace

int propeller_girth(const LabeledGraph& g, const PropellerParams& p) {
    int best = INT_MAX;
    for (EdgeKind kind : all_edge_kinds) {
        auto [u, v] = representative_edge(kind, p);
        best = std::min(best, shortest_cycle_through_edge(g, u, v));
    }
    return best == INT_MAX ? -1 : best;
}

// ---- cycle counting ----

namespace {

// simple paths from -> to with exactly `edges` edges whose interior avoids
// `blocked` vertices (and never touches `to` early); calls out on completion
template <typename Fn>
void walk_paths(const LabeledGraph& g, int from, int to, int edges, std::vector<char>& blocked,
                std::vector<int>& path, Fn&& out) {
    std::function<void(int, int)> rec = [&](int x, int used) {
        for (int y : g.adj[x]) {
            if (y == to) {
                if (used + 1 == edges) out(path);
                continue;
            }
            if (used + 1 >= edges) continue;
            if (blocked[y]) continue;
            blocked[y] = 1;
            path.push_back(y);
            rec(y, used + 1);
            path.pop_back();
            blocked[y] = 0;
        }
    };
    rec(from, 0);
}

}  // namespace

long long count_cycles_through_edge(const LabeledGraph& g, int u, int v, int k) {
    if (k < 3) return 0;
    std::vector<char> blocked(g.vertex_count(), 0);
    blocked[u] = blocked[v] = 1;
    std::vector<int> path;
    long long count = 0;
    walk_paths(g, v, u, k - 1, blocked, path, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<std::vector<int>> cycles_through_edge(const LabeledGraph& g, int u, int v, int k) {
    std::vector<std::vector<int>> out;
    if (k < 3) return out;
    std::vector<char> blocked(g.vertex_count(), 0);
    blocked[u] = blocked[v] = 1;
    std::vector<int> path;
    walk_paths(g, v, u, k - 1, blocked, path, [&](const std::vector<int>& interior) {
        std::vector<int> cycle;
        cycle.reserve(k);
        cycle.push_back(u);
        cycle.push_back(v);
        cycle.insert(cycle.end(), interior.begin(), interior.end());
        out.push_back(std::move(cycle));
    });
    return out;
}

long long count_cycles_through_path(const LabeledGraph& g, const std::vector<int>& path, int k) {
    const int m = int(path.size()) - 1;
    if (m < 1 || k < 3 || m > k) throw std::invalid_argument("count_cycles_through_path: bad path");
    if (m == k) return 0;  // a path of k edges cannot sit inside a k-cycle
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int x : path) blocked[x] = 1;
    std::vector<int> interior;
    long long count = 0;
    walk_paths(g, path.back(), path.front(), k - m, blocked, interior,
               [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    std::vector<int> best, cand(k);
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> seq = cycle;
        if (rev) std::reverse(seq.begin(), seq.end());
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t i = 0; i < k; ++i) cand[i] = seq[(s + i) % k];
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

CycleProfile profile(const LabeledGraph& g, const std::vector<int>& cycle) {
    CycleProfile counts{};
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto kind = g.kind_of(cycle[i], cycle[(i + 1) % k]);
        if (!kind) throw std::invalid_argument("profile: cycle uses an unlabeled edge");
        for (std::size_t j = 0; j < all_edge_kinds.size(); ++j)
            if (all_edge_kinds[j] == *kind) ++counts[j];
    }
    return counts;
}

ArcType arc_type(const LabeledGraph& g, int u, int v, int k) {
    ArcType t;
    std::size_t si = 0, pi = 0;
    for (int w : g.adj[v])
        if (w != u) t.successors[si++] = int(count_cycles_through_path(g, {u, v, w}, k));
    for (int x : g.adj[u])
        if (x != v) t.predecessors[pi++] = int(count_cycles_through_path(g, {x, u, v}, k));
    if (si != 3 || pi != 3) throw std::invalid_argument("arc_type: expects a 4-regular graph");
    std::sort(t.successors.begin(), t.successors.end());
    std::sort(t.predecessors.begin(), t.predecessors.end());
    return t;
}

std::pair<int, int> representative_edge(EdgeKind kind, const PropellerParams& p) {
    const int n = p.n;
    switch (kind) {
        case EdgeKind::AWing: return {vid(VertexClass::A, 0, n), vid(VertexClass::A, 1, n)};
        case EdgeKind::AFlat: return {vid(VertexClass::A, 0, n), vid(VertexClass::B, 0, n)};
        case EdgeKind::ABlade: return {vid(VertexClass::B, 0, n), vid(VertexClass::A, p.b, n)};
        case EdgeKind::CBlade: return {vid(VertexClass::B, 0, n), vid(VertexClass::C, p.c, n)};
        case EdgeKind::CFlat: return {vid(VertexClass::C, 0, n), vid(VertexClass::B, 0, n)};
        case EdgeKind::CWing: return {vid(VertexClass::C, 0, n), vid(VertexClass::C, p.d, n)};
    }
    throw std::logic_error("representative_edge: bad kind");
}

std::array<long long, 6> per_edge_cycle_counts(const LabeledGraph& g, const PropellerParams& p,
                                               int k) {
    std::array<long long, 6> counts{};
    for (std::size_t j = 0; j < all_edge_kinds.size(); ++j) {
        auto [u, v] = representative_edge(all_edge_kinds[j], p);
        counts[j] = count_cycles_through_edge(g, u, v, k);
    }
    return counts;
}

// ---- the hexagon ledger ----

namespace {

SymVertex Av(Affine e) { return {VertexClass::A, e}; }
SymVertex Bv(Affine e) { return {VertexClass::B, e}; }
SymVertex Cv(Affine e) { return {VertexClass::C, e}; }

std::vector<RelationRow> build_relation_rows() {
    using lit::b;
    using lit::c;
    using lit::d;
    std::vector<RelationRow> rows;
    rows.reserve(48);
    auto add = [&](int id, std::optional<Affine> rel, std::array<int, 6> cols,
                   std::array<SymVertex, 6> rep) {
        rows.push_back({id, std::move(rel), cols, std::move(rep)});
    };

    // the two unconditional hexagons: one around each hub
    add(1, std::nullopt, {2, 2, 2, 0, 0, 0},
        {Av(0), Av(1), Bv(1), Av(1 + b), Av(b), Bv(0)});
    add(2, std::nullopt, {0, 0, 0, 2, 2, 2},
        {Cv(0), Cv(d), Bv(d), Cv(c + d), Cv(c), Bv(0)});

    // wing-heavy shapes
    add(3, Affine(6), {1, 0, 0, 0, 0, 0}, {Av(0), Av(1), Av(2), Av(3), Av(4), Av(5)});
    add(4, b + 4, {4, 1, 1, 0, 0, 0}, {Av(0), Av(1), Av(2), Av(3), Av(4), Bv(4)});
    add(5, b - 4, {4, 1, 1, 0, 0, 0}, {Av(0), Av(1), Av(2), Av(3), Av(4), Bv(0)});
    add(6, 2 * b + 2, {3, 3, 3, 0, 0, 0}, {Av(0), Bv(0), Av(b), Bv(b), Av(2 * b), Av(-1)});
    add(7, 2 * b - 2, {3, 3, 3, 0, 0, 0}, {Av(0), Bv(0), Av(b), Bv(b), Av(2 * b), Av(1)});

    // hexagons crossing both hubs through the flats
    add(8, d + 1, {4, 4, 4, 4, 4, 4}, {Av(0), Av(1), Bv(1), Cv(1), Cv(1 + d), Bv(1 + d)});
    add(9, d - 1, {4, 4, 4, 4, 4, 4}, {Av(0), Av(1), Bv(1), Cv(1), Cv(1 - d), Bv(1 - d)});
    add(10, 1 + b + d, {2, 2, 2, 2, 2, 2}, {Av(0), Av(1), Bv(1), Cv(1), Cv(1 + d), Bv(1 + d)});
    add(11, 1 + b - d, {2, 2, 2, 2, 2, 2}, {Av(0), Av(1), Bv(1), Cv(1), Cv(1 - d), Bv(1 - d)});
    add(12, 1 - b + d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b), Cv(1 - b + d), Bv(1 - b + d)});
    add(13, 1 - b - d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b), Cv(1 - b - d), Bv(1 - b - d)});
    add(14, 1 + c + d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1), Cv(1 + c), Cv(1 + c + d), Bv(1 + c + d)});
    add(15, 1 + c - d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1), Cv(1 + c), Cv(1 + c - d), Bv(1 + c - d)});
    add(16, 1 - c + d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1), Cv(1), Cv(1 + d), Bv(1 + d - c)});
    add(17, 1 - c - d, {2, 2, 2, 2, 2, 2},
        {Av(0), Av(1), Bv(1), Cv(1), Cv(1 - d), Bv(1 - d - c)});
    add(18, 1 + b + c + d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1), Cv(1 + c), Cv(1 + c + d), Bv(1 + c + d)});
    add(19, 1 + b + c - d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1), Cv(1 + c), Cv(1 + c - d), Bv(1 + c - d)});
    add(20, 1 + b - c + d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1), Cv(1), Cv(1 + d), Bv(1 + d - c)});
    add(21, 1 - b + c + d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b + c), Cv(1 - b + c + d), Bv(1 - b + c + d)});
    add(22, 1 + b - c - d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1), Cv(1), Cv(1 - d), Bv(1 - d - c)});
    add(23, 1 - b + c - d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b + c), Cv(1 - b + c - d), Bv(1 - b + c - d)});
    add(24, 1 - b - c + d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b), Cv(1 - b + d), Bv(1 - b + d - c)});
    add(25, 1 - b - c - d, {1, 1, 1, 1, 1, 1},
        {Av(0), Av(1), Bv(1 - b), Cv(1 - b), Cv(1 - b - d), Bv(1 - b - d - c)});

    // blade/flat ladders around the A hub
    add(26, 3 * b, {0, 1, 1, 0, 0, 0}, {Av(0), Bv(0), Av(b), Bv(b), Av(2 * b), Bv(2 * b)});
    add(27, 3 * c, {0, 0, 0, 1, 1, 0}, {Cv(0), Bv(0), Cv(c), Bv(c), Cv(2 * c), Bv(2 * c)});
    add(28, 2 * b + c, {0, 2, 2, 1, 1, 0},
        {Bv(0), Av(b), Bv(b), Av(2 * b), Bv(2 * b), Cv(2 * b + c)});
    add(29, 2 * b - c, {0, 2, 2, 1, 1, 0},
        {Bv(0), Av(b), Bv(b), Av(2 * b), Bv(2 * b), Cv(2 * b)});
    add(30, b - 2 * c, {0, 1, 1, 2, 2, 0},
        {Bv(0), Av(b), Bv(b), Cv(b), Bv(b - c), Cv(b - c)});
    add(31, b + 2 * c, {0, 1, 1, 2, 2, 0},
        {Bv(0), Av(b), Bv(b), Cv(b + c), Bv(b + c), Cv(b + 2 * c)});
    add(32, b + 2 * d, {0, 2, 2, 2, 2, 4},
        {Bv(0), Av(b), Bv(b), Cv(b), Cv(b + d), Cv(b + 2 * d)});
    add(33, b - 2 * d, {0, 2, 2, 2, 2, 4},
        {Bv(0), Av(b), Bv(b), Cv(b), Cv(b - d), Cv(b - 2 * d)});
    add(34, c + 2, {4, 2, 2, 2, 2, 0}, {Cv(0), Bv(0), Av(0), Av(1), Av(2), Bv(2)});
    add(35, c - 2, {4, 2, 2, 2, 2, 0}, {Cv(2), Bv(2), Av(2), Av(1), Av(0), Bv(0)});
    add(36, b + c + 2 * d, {0, 1, 1, 1, 1, 2},
        {Bv(0), Av(b), Bv(b), Cv(b + c), Cv(b + c + d), Cv(b + c + 2 * d)});
    add(37, b + c - 2 * d, {0, 1, 1, 1, 1, 2},
        {Bv(0), Av(b), Bv(b), Cv(b + c), Cv(b + c - d), Cv(b + c - 2 * d)});
    add(38, b - c + 2 * d, {0, 1, 1, 1, 1, 2},
        {Bv(0), Av(b), Bv(b), Cv(b), Cv(b + d), Cv(b + 2 * d)});
    add(39, b - c - 2 * d, {0, 1, 1, 1, 1, 2},
        {Bv(0), Av(b), Bv(b), Cv(b), Cv(b - d), Cv(b - 2 * d)});
    add(40, 2 + b + c, {2, 1, 1, 1, 1, 0},
        {Bv(0), Av(b), Av(b + 1), Av(b + 2), Bv(b + 2), Cv(b + 2 + c)});
    add(41, 2 + b - c, {2, 1, 1, 1, 1, 0},
        {Bv(0), Av(b), Av(b + 1), Av(b + 2), Bv(b + 2), Cv(b + 2)});
    add(42, 2 - b + c, {2, 1, 1, 1, 1, 0},
        {Bv(0), Av(b), Av(b - 1), Av(b - 2), Bv(b - 2), Cv(b - 2)});
    add(43, 2 - b - c, {2, 1, 1, 1, 1, 0},
        {Bv(0), Av(b), Av(b - 1), Av(b - 2), Bv(b - 2), Cv(b - 2 + c)});

    // C-hub ladders and wing runs
    add(44, 2 * c - 2 * d, {0, 0, 0, 3, 3, 3},
        {Cv(0), Bv(0), Cv(c), Bv(c), Cv(2 * c), Cv(2 * c - d)});
    add(45, 2 * c + 2 * d, {0, 0, 0, 3, 3, 3},
        {Cv(0), Bv(0), Cv(c), Bv(c), Cv(2 * c), Cv(2 * c + d)});
    add(46, c - 4 * d, {0, 0, 0, 1, 1, 4},
        {Cv(0), Cv(d), Cv(2 * d), Cv(3 * d), Cv(4 * d), Bv(0)});
    add(47, c + 4 * d, {0, 0, 0, 1, 1, 4},
        {Cv(0), Cv(-d), Cv(-2 * d), Cv(-3 * d), Cv(-4 * d), Bv(0)});
    add(48, 6 * d, {0, 0, 0, 0, 0, 1},
        {Cv(0), Cv(d), Cv(2 * d), Cv(3 * d), Cv(4 * d), Cv(5 * d)});

    return rows;
}

}  // namespace

const std::vector<RelationRow>& relation_rows() {
    static const std::vector<RelationRow> rows = build_relation_rows();
    return rows;
}

bool relation_active(const RelationRow& row, const PropellerParams& p) {
    if (!row.relation) return true;
    return md(row.relation->eval(p, 0, 0), p.n) == 0;
}

std::vector<int> active_relations(const PropellerParams& p) {
    std::vector<int> ids;
    for (const RelationRow& row : relation_rows())
        if (relation_active(row, p)) ids.push_back(row.id);
    return ids;
}

std::array<long long, 6> predicted_per_edge_n6(const PropellerParams& p) {
    std::array<long long, 6> total{};
    for (const RelationRow& row : relation_rows()) {
        if (!relation_active(row, p)) continue;
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += row.per_edge[j];
    }
    return total;
}

std::vector<int> relation_cycle(const RelationRow& row, const PropellerParams& p) {
    std::vector<int> cycle;
    cycle.reserve(6);
    for (const SymVertex& v : row.rep) cycle.push_back(vid(v.cls, v.idx.eval(p, 0, 0), p.n));
    return cycle;
}

bool genuine_cycle(const LabeledGraph& g, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (cycle[i] == cycle[j]) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    return true;
}

}  // namespace propeller
