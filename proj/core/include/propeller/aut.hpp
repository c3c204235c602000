// Automorphism and isomorphism machinery. Two independent routes are kept on
// purpose: a seeded backtracking engine (fast, used everywhere) and a plain
// id-order enumerator (slow, used as an oracle in tests).
#pragma once

#include <propeller/graph.hpp>
#include <propeller/perm.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace propeller {

using BigInt = boost::multiprecision::cpp_int;

// packed adjacency rows, one stripe of uint64 words per vertex
struct AdjBits {
    int nv = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    static AdjBits from(const LabeledGraph& g);
    bool test(int u, int v) const {
        return (bits[std::size_t(u) * words + (v >> 6)] >> (v & 63)) & 1;
    }
    const std::uint64_t* row(int u) const { return bits.data() + std::size_t(u) * words; }
};

// Extends a partial vertex map (seed pairs, g-vertex -> h-vertex) to a full
// isomorphism g -> h. Vertices are assigned in breadth-first order from the
// seed, candidates in ascending id order, so results are deterministic.
std::optional<Permutation> find_isomorphism_extending(
    const LabeledGraph& g, const LabeledGraph& h,
    const std::vector<std::pair<int, int>>& seed);

std::optional<Permutation> find_automorphism_extending(
    const LabeledGraph& g, const std::vector<std::pair<int, int>>& seed);

// Visits every automorphism extending the seed (deterministic order); stops
// early when fn returns false or `limit` automorphisms have been visited.
// Returns the number visited.
std::size_t for_each_automorphism_extending(
    const LabeledGraph& g, const std::vector<std::pair<int, int>>& seed,
    const std::function<bool(const Permutation&)>& fn,
    std::size_t limit = SIZE_MAX);

// Plain backtracking over vertex ids with pairwise adjacency checks only.
// Deliberately shares no code with the seeded engine.
std::vector<Permutation> all_automorphisms_naive(const LabeledGraph& g,
                                                 std::size_t limit = SIZE_MAX);

// ---- the full group ----

struct AutGroup {
    std::vector<Permutation> generators;   // witnesses from the orbit chain
    BigInt order;
    std::vector<std::vector<int>> vertex_orbits;  // sorted, ordered by least element
};

// base-and-orbit computation: peels off one point stabilizer at a time,
// multiplying orbit sizes; the transversal witnesses generate the group
AutGroup aut_group(const LabeledGraph& g);

// orbit partitions under a generator set
std::vector<std::vector<int>> vertex_orbits_under(int nv, const std::vector<Permutation>& gens);
int edge_orbit_count(const LabeledGraph& g, const std::vector<Permutation>& gens);
int arc_orbit_count(const LabeledGraph& g, const std::vector<Permutation>& gens);

bool is_vertex_transitive(const LabeledGraph& g);
bool is_arc_transitive(const LabeledGraph& g);

// generic single-edge-orbit test through the full group (oracle route)
bool is_edge_transitive_oracle(const LabeledGraph& g);

// the propeller-specific route: one seeded search for an automorphism taking
// the wing (A_0, A_1) onto the spoke (A_0, B_0)
std::optional<Permutation> wing_to_flat_automorphism(const LabeledGraph& g, int n);
bool is_edge_transitive(const LabeledGraph& g, const PropellerParams& p);
bool is_edge_transitive(const PropellerParams& p);

// ---- isomorphism of arbitrary graphs ----

std::optional<Permutation> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h);
bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

}  // namespace propeller
