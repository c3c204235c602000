// Short-cycle counting and the 6-cycle accounting table: each congruence on
// (b, c, d) that creates hexagons is recorded with its per-edge contribution
// and a representative cycle shape, so brute-force counts can be checked
// against the predicted totals.
#pragma once

#include <propeller/graph.hpp>
#include <propeller/perm.hpp>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace propeller {

// ---- girth and cycle counting ----

int girth(const LabeledGraph& g);  // -1 for forests

// shortest cycle through any edge of each kind; equals girth(g) because the
// rotation/reflection maps act transitively inside every kind class
int propeller_girth(const LabeledGraph& g, const PropellerParams& p);

// cycles of length k that contain the edge {u, v}, each counted once
long long count_cycles_through_edge(const LabeledGraph& g, int u, int v, int k);
std::vector<std::vector<int>> cycles_through_edge(const LabeledGraph& g, int u, int v, int k);

// cycles of length k that contain the given vertex path consecutively
long long count_cycles_through_path(const LabeledGraph& g, const std::vector<int>& path, int k);

// least representative under rotation and reversal
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

// how many edges of each kind one cycle uses (indexed like all_edge_kinds);
// needs a graph built with kind labels
using CycleProfile = std::array<int, 6>;
CycleProfile profile(const LabeledGraph& g, const std::vector<int>& cycle);

// multisets of k-cycle counts over the arcs extending / entering (u, v)
struct ArcType {
    std::array<int, 3> successors{};
    std::array<int, 3> predecessors{};
    friend bool operator==(const ArcType&, const ArcType&) = default;
};
ArcType arc_type(const LabeledGraph& g, int u, int v, int k = 6);

// one edge per kind: {A_0,A_1}, {A_0,B_0}, {B_0,A_b}, {B_0,C_c}, {C_0,B_0}, {C_0,C_d}
std::pair<int, int> representative_edge(EdgeKind kind, const PropellerParams& p);

// k-cycle count through the representative edge of each kind
std::array<long long, 6> per_edge_cycle_counts(const LabeledGraph& g, const PropellerParams& p,
                                               int k);

// ---- the hexagon ledger ----

struct SymVertex {
    VertexClass cls;
    Affine idx;
};

struct RelationRow {
    int id;                          // 1..48
    std::optional<Affine> relation;  // == 0 (mod n) when present; rows 1, 2 always hold
    std::array<int, 6> per_edge;     // 6-cycles contributed through one edge of each kind
    std::array<SymVertex, 6> rep;    // representative 6-cycle
};

const std::vector<RelationRow>& relation_rows();

bool relation_active(const RelationRow& row, const PropellerParams& p);
std::vector<int> active_relations(const PropellerParams& p);  // ids, ascending

// sum of the active rows' columns; matches brute force on girth >= 5 graphs
std::array<long long, 6> predicted_per_edge_n6(const PropellerParams& p);

// the row's representative instantiated on p
std::vector<int> relation_cycle(const RelationRow& row, const PropellerParams& p);

// all six vertices distinct and consecutively adjacent (wrapping around)
bool genuine_cycle(const LabeledGraph& g, const std::vector<int>& cycle);

}  // namespace propeller
