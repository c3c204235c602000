#include "propeller/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace propeller {

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::A: return "A";
        case VertexClass::B: return "B";
        case VertexClass::C: return "C";
    }
    return "?";
}

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::AWing: return "AWing";
        case EdgeKind::AFlat: return "AFlat";
        case EdgeKind::ABlade: return "ABlade";
        case EdgeKind::CBlade: return "CBlade";
        case EdgeKind::CFlat: return "CFlat";
        case EdgeKind::CWing: return "CWing";
    }
    return "?";
}

bool PropellerParams::valid() const {
    if (n < 3) return false;
    if (b <= 0 || b >= n) return false;
    if (c <= 0 || c >= n) return false;
    if (d <= 0 || d >= n) return false;
    if (2 * d == n) return false;
    return true;
}

void PropellerParams::validate() const {
    if (n < 3) throw InvalidParams("propeller needs n >= 3, got n=" + std::to_string(n));
    auto in_range = [&](int v, const char* name) {
        if (v <= 0 || v >= n)
            throw InvalidParams(std::string(name) + "=" + std::to_string(v) + " out of range (0," +
                                std::to_string(n) + ")");
    };
    in_range(b, "b");
    in_range(c, "c");
    in_range(d, "d");
    if (2 * d == n) throw InvalidParams("d = n/2 collapses the C wings (d=" + std::to_string(d) + ")");
}

std::string to_string(const PropellerParams& p) {
    return "Pr_" + std::to_string(p.n) + "(" + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
           std::to_string(p.d) + ")";
}

std::size_t LabeledGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& nb : adj) deg += nb.size();
    return deg / 2;
}

bool LabeledGraph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<EdgeKind> LabeledGraph::kind_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = kinds.find({u, v});
    if (it == kinds.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already sorted: u ascending, adj[u] sorted
}

namespace {

struct EdgeAccum {
    int nverts;
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj;

    explicit EdgeAccum(int nv) : nverts(nv), adj(nv) {}

    // returns false on loop or duplicate
    bool add(int u, int v) {
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) return false;
        adj[u].push_back(v);
        adj[v].push_back(u);
        return true;
    }

    void finish(LabeledGraph& g) {
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        g.adj = std::move(adj);
    }
};

bool connected(const std::vector<std::vector<int>>& adj) {
    if (adj.empty()) return true;
    std::vector<char> vis(adj.size(), 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == adj.size();
}

void set_abc_names(LabeledGraph& g, int n) {
    g.names.resize(3 * n);
    g.labels.resize(3 * n);
    for (int cls = 0; cls < 3; ++cls) {
        auto vc = VertexClass(cls);
        for (int i = 0; i < n; ++i) {
            g.names[cls * n + i] = std::string(to_string(vc)) + std::to_string(i);
            g.labels[cls * n + i] = {vc, i};
        }
    }
}

void add_kind(LabeledGraph& g, int u, int v, EdgeKind k) {
    if (u > v) std::swap(u, v);
    g.kinds[{u, v}] = k;
}

}  // namespace

LabeledGraph build_propeller(const PropellerParams& p, bool with_kinds) {
    p.validate();
    const int n = p.n;
    LabeledGraph g;
    g.ring = n;
    auto A = [&](long long i) { return vid(VertexClass::A, i, n); };
    auto B = [&](long long i) { return vid(VertexClass::B, i, n); };
    auto C = [&](long long i) { return vid(VertexClass::C, i, n); };
    // validate() rules out every coincidence among a vertex's four neighbors
    // (b, c, d nonzero mod n, 2d nonzero mod n), so rows can be filled directly
    g.adj.resize(3 * n);
    for (int i = 0; i < n; ++i) {
        auto& ra = g.adj[A(i)];
        ra = {A(i - 1), A(i + 1), B(i), B(i - p.b)};
        auto& rb = g.adj[B(i)];
        rb = {A(i), A(i + p.b), C(i), C(i + p.c)};
        auto& rc = g.adj[C(i)];
        rc = {B(i), B(i - p.c), C(i - p.d), C(i + p.d)};
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        std::sort(rc.begin(), rc.end());
    }
    set_abc_names(g, n);
    if (with_kinds) {
        for (int i = 0; i < n; ++i) {
            add_kind(g, A(i), A(i + 1), EdgeKind::AWing);
            add_kind(g, A(i), B(i), EdgeKind::AFlat);
            add_kind(g, B(i), A(i + p.b), EdgeKind::ABlade);
            add_kind(g, B(i), C(i + p.c), EdgeKind::CBlade);
            add_kind(g, C(i), B(i), EdgeKind::CFlat);
            add_kind(g, C(i), C(i + p.d), EdgeKind::CWing);
        }
    }
    return g;
}

bool is_propeller_edge(const PropellerParams& p, int u, int v) {
    const int n = p.n;
    if (u < 0 || v < 0 || u >= 3 * n || v >= 3 * n || u == v) return false;
    const int cu = u / n, cv = v / n;
    const int i = u % n, j = v % n;
    if (cu > cv) return is_propeller_edge(p, v, u);
    const auto offset_is = [&](int delta) { return md(j - i, n) == md(delta, n); };
    if (cu == 0 && cv == 0) return offset_is(1) || offset_is(-1);           // A wing
    if (cu == 0 && cv == 1) return offset_is(0) || offset_is(-p.b);        // A flat / A blade
    if (cu == 1 && cv == 2) return offset_is(0) || offset_is(p.c);         // C flat / C blade
    if (cu == 2 && cv == 2) return offset_is(p.d) || offset_is(-p.d);      // C wing
    return false;                                                           // A-C or B-B: never
}

LabeledGraph build_generalized_propeller(int n, int a, int b, int c, int d) {
    if (n < 3) throw InvalidParams("generalized propeller needs n >= 3");
    auto nonzero = [&](int v, const char* name) {
        if (v <= 0 || v >= n)
            throw InvalidParams(std::string(name) + "=" + std::to_string(v) + " out of range (0," +
                                std::to_string(n) + ")");
    };
    nonzero(a, "a");
    nonzero(b, "b");
    nonzero(c, "c");
    nonzero(d, "d");
    if (2 * a == n) throw InvalidParams("a = n/2 collapses the A wings");
    if (2 * d == n) throw InvalidParams("d = n/2 collapses the C wings");
    LabeledGraph g;
    g.ring = n;
    EdgeAccum acc(3 * n);
    auto A = [&](long long i) { return vid(VertexClass::A, i, n); };
    auto B = [&](long long i) { return vid(VertexClass::B, i, n); };
    auto C = [&](long long i) { return vid(VertexClass::C, i, n); };
    for (int i = 0; i < n; ++i) {
        bool ok = acc.add(A(i), A(i + a)) && acc.add(A(i), B(i)) && acc.add(B(i), A(i + b)) &&
                  acc.add(B(i), C(i + c)) && acc.add(C(i), B(i)) && acc.add(C(i), C(i + d));
        if (!ok)
            throw InvalidParams("GPr_" + std::to_string(n) + " with (a,b,c,d)=(" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                                ") is not simple 4-regular");
    }
    acc.finish(g);
    for (const auto& nb : g.adj)
        if (nb.size() != 4)
            throw InvalidParams("GPr_" + std::to_string(n) + ": vertex degree != 4 (a=" + std::to_string(a) +
                                ")");
    if (!connected(g.adj))
        throw InvalidParams("GPr_" + std::to_string(n) + " disconnected: gcd(a,b,c,d,n) > 1");
    set_abc_names(g, n);
    for (int i = 0; i < n; ++i) {
        add_kind(g, A(i), A(i + a), EdgeKind::AWing);
        add_kind(g, A(i), B(i), EdgeKind::AFlat);
        add_kind(g, B(i), A(i + b), EdgeKind::ABlade);
        add_kind(g, B(i), C(i + c), EdgeKind::CBlade);
        add_kind(g, C(i), B(i), EdgeKind::CFlat);
        add_kind(g, C(i), C(i + d), EdgeKind::CWing);
    }
    return g;
}

LabeledGraph build_generalized_petersen(int n, int k) {
    if (n < 3) throw InvalidParams("GP needs n >= 3");
    if (k <= 0 || k >= n) throw InvalidParams("GP needs 0 < k < n");
    if (2 * k == n) throw InvalidParams("GP with k = n/2 collapses the inner rim");
    LabeledGraph g;
    g.ring = n;
    g.petersen = {{n, k}};
    EdgeAccum acc(2 * n);
    for (int i = 0; i < n; ++i) {
        bool ok = acc.add(i, md(i + 1, n)) && acc.add(i, n + i) && acc.add(n + i, n + md(i + k, n));
        if (!ok) throw InvalidParams("GP(" + std::to_string(n) + "," + std::to_string(k) + ") degenerate");
    }
    acc.finish(g);
    g.names.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        g.names[i] = "u" + std::to_string(i);
        g.names[n + i] = "v" + std::to_string(i);
    }
    return g;
}

LabeledGraph build_wreath(int n, int k) {
    if (n < 3) throw InvalidParams("wreath needs n >= 3");
    if (k < 1) throw InvalidParams("wreath needs k >= 1");
    LabeledGraph g;
    g.ring = n;
    EdgeAccum acc(n * k);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t)
                if (!acc.add(s * n + i, t * n + md(i + 1, n)))
                    throw InvalidParams("W(" + std::to_string(n) + "," + std::to_string(k) + ") degenerate");
    acc.finish(g);
    g.names.resize(n * k);
    for (int s = 0; s < k; ++s)
        for (int i = 0; i < n; ++i) g.names[s * n + i] = "w" + std::to_string(i) + "_" + std::to_string(s);
    return g;
}

LabeledGraph line_graph(const LabeledGraph& g) {
    std::vector<std::pair<int, int>> ed;
    LabeledGraph out;
    if (g.petersen) {
        // order: outer edges, spokes, inner edges -> propeller serialization
        auto [n, k] = *g.petersen;
        ed.reserve(3 * n);
        for (int i = 0; i < n; ++i) ed.push_back(std::minmax(i, md(i + 1, n)));
        for (int i = 0; i < n; ++i) ed.emplace_back(i, n + i);
        for (int i = 0; i < n; ++i) ed.push_back(std::minmax(n + i, n + md(i + k, n)));
        out.ring = n;
        set_abc_names(out, n);
    } else {
        ed = g.edges();
        out.names.reserve(ed.size());
        for (auto [u, v] : ed) out.names.push_back(g.names[u] + "-" + g.names[v]);
    }
    const int m = int(ed.size());
    out.adj.assign(m, {});
    // bucket edges by endpoint; edges sharing an endpoint become adjacent
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int e = 0; e < m; ++e) {
        at[ed[e].first].push_back(e);
        at[ed[e].second].push_back(e);
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& bucket : at)
        for (std::size_t x = 0; x < bucket.size(); ++x)
            for (std::size_t y = x + 1; y < bucket.size(); ++y) {
                auto key = std::minmax(bucket[x], bucket[y]);
                if (seen.insert({key.first, key.second}).second) {
                    out.adj[key.first].push_back(key.second);
                    out.adj[key.second].push_back(key.first);
                }
            }
    for (auto& nb : out.adj) std::sort(nb.begin(), nb.end());
    return out;
}

PropellerParams quotient_antipodal(const PropellerParams& p) {
    p.validate();
    if (p.n % 2 != 0) throw InvalidParams("antipodal quotient needs even n");
    const int m = p.n / 2;
    if (md(p.b - (m + 1), p.n) != 0 || md(p.c - (m + p.d), p.n) != 0)
        throw InvalidParams(to_string(p) + " does not have the (2m, m+1, m+d, d) shape");
    PropellerParams q{m, 1, md(p.d, m), md(p.d, m)};
    q.validate();
    return q;
}

LabeledGraph contract_antipodal(const LabeledGraph& g) {
    if (g.labels.empty() || g.ring == 0 || g.ring % 2 != 0)
        throw InvalidParams("contract_antipodal needs an A/B/C-labeled graph with even ring");
    const int n = g.ring, m = n / 2;
    LabeledGraph out;
    out.ring = m;
    EdgeAccum acc(3 * m);
    auto block = [&](int v) {
        const auto& lab = g.labels[v];
        return vid(lab.cls, lab.index % m, m);
    };
    for (auto [u, v] : g.edges()) {
        int bu = block(u), bv = block(v);
        if (bu == bv) throw InvalidParams("antipodal contraction produced a loop");
        acc.add(bu, bv);  // duplicates collapse silently
    }
    acc.finish(out);
    set_abc_names(out, m);
    return out;
}

}  // namespace propeller
