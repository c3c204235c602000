#pragma once
// Ring-indexed 4-regular graphs. The central object is the propeller graph
// Pr_n(b,c,d): vertex classes A (hub ring), B (blades), C (tip ring), with
//   wings   {A_i, A_{i+1}}, {C_i, C_{i+d}}
//   flats   {A_i, B_i},     {C_i, B_i}
//   blades  {B_i, A_{i+b}}, {B_i, C_{i+c}}
// all indices mod n. Vertices are serialized A_0..A_{n-1}, B_0.., C_0.., so
// id(A_i) = i, id(B_i) = n+i, id(C_i) = 2n+i. The same six-family layout is
// reused by the generalized variant (wing step a on the A ring) and by the
// line graphs of generalized Petersen graphs.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace propeller {

struct InvalidParams : std::runtime_error {
    explicit InvalidParams(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- vertex / edge taxonomy ----

enum class VertexClass : uint8_t { A = 0, B = 1, C = 2 };

struct VertexLabel {
    VertexClass cls;
    int index;
};

enum class EdgeKind : uint8_t { AWing = 0, AFlat = 1, ABlade = 2, CBlade = 3, CFlat = 4, CWing = 5 };

constexpr std::array<EdgeKind, 6> all_edge_kinds = {EdgeKind::AWing,  EdgeKind::AFlat, EdgeKind::ABlade,
                                                    EdgeKind::CBlade, EdgeKind::CFlat, EdgeKind::CWing};

const char* to_string(VertexClass c);
const char* to_string(EdgeKind k);

// x mod n into [0, n)
inline int md(long long x, int n) {
    long long r = x % n;
    return int(r < 0 ? r + n : r);
}

// ---- parameters ----

struct PropellerParams {
    int n = 0, b = 0, c = 0, d = 0;

    bool valid() const;
    void validate() const;  // throws InvalidParams with the reason
    friend bool operator==(const PropellerParams&, const PropellerParams&) = default;
    friend auto operator<=>(const PropellerParams&, const PropellerParams&) = default;
};

std::string to_string(const PropellerParams& p);

// ---- graph ----

struct LabeledGraph {
    int ring = 0;  // n for ring-indexed families, 0 for generic graphs
    std::vector<std::vector<int>> adj;  // neighbor lists, each sorted ascending
    std::vector<std::string> names;
    std::vector<VertexLabel> labels;                // empty when vertices carry no A/B/C labels
    std::map<std::pair<int, int>, EdgeKind> kinds;  // keyed (min,max); empty unless propeller-built
    std::optional<std::pair<int, int>> petersen;    // (n, k) when built by build_generalized_petersen

    int vertex_count() const { return int(adj.size()); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    std::optional<EdgeKind> kind_of(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // all (min,max) pairs, sorted
};

// id of X_i in the 3n serialization (i taken mod n)
inline int vid(VertexClass c, long long i, int n) { return int(c) * n + md(i, n); }

// ---- builders ----

// Pr_n(b,c,d). Requires n >= 3, 0 < b,c,d < n, d != n/2. Always simple,
// connected and 4-regular; the builder re-checks that after construction.
// with_kinds=false skips the edge-kind map (cheaper in census loops).
LabeledGraph build_propeller(const PropellerParams& p, bool with_kinds = true);

// Arithmetic membership test: is {u, v} an edge of Pr_n(b,c,d)? Agrees with
// build_propeller(p) without building anything, so sweeps over many (p, edge)
// pairs stay cheap. u and v are vertex ids in the 3n serialization.
bool is_propeller_edge(const PropellerParams& p, int u, int v);

// GPr_n(a,b,c,d): wings {A_i, A_{i+a}} instead of step 1. Requires a,d
// different from 0 and n/2 and b,c nonzero; validated structurally (the
// result must come out simple and 4-regular). May be disconnected.
LabeledGraph build_generalized_propeller(int n, int a, int b, int c, int d);

// GP(n,k): outer ring u_i, spokes, inner rim v_i ~ v_{i+k}. 3-regular.
LabeledGraph build_generalized_petersen(int n, int k);

// W(n,k): vertices Z_n x Z_k, every (i,s) adjacent to every (i+1,t). 2k-regular.
LabeledGraph build_wreath(int n, int k = 2);

// Line graph. For a generalized Petersen input the vertices are ordered
// outer edges, spokes, inner edges (so the result IS a propeller layout:
// L(GP(n,k)) comes out vertex-for-vertex equal to Pr_n(n-1, n-k, k));
// otherwise vertices follow the sorted edge list of the input.
LabeledGraph line_graph(const LabeledGraph& g);

// Parameter form of the antipodal-fibre collapse (case-table row 24 shape):
// (2m, m+1, m+d, d) -> (m, 1, d mod m, d mod m). Throws InvalidParams when
// the input does not have that shape.
PropellerParams quotient_antipodal(const PropellerParams& p);

// Graph-level version: identify X_i with X_{i+m} in every class (m = ring/2).
// Requires an A/B/C-labeled graph with even ring; duplicate quotient edges
// collapse. Loops would throw, but the row-24 shape never produces one.
LabeledGraph contract_antipodal(const LabeledGraph& g);

}  // namespace propeller
