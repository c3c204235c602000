#include <doctest.h>

#include <propeller/cycles.hpp>
#include <propeller/graph.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace propeller;

namespace {

bool mod_in(long long v, long long t, int n) { return md(v, n) == md(t, n); }

// arithmetic girth-3 and girth-4 predicates, independent of any BFS; each
// term is one vertex-class pattern a short cycle can trace (3d covers the
// C-wing triangle and subsumes the n = 3 A-ring, 4d likewise handles n = 4)
bool has_triangle(const PropellerParams& p) {
    return mod_in(p.b, 1, p.n) || mod_in(p.b, -1, p.n) || mod_in(p.c, p.d, p.n) ||
           mod_in(p.c, -p.d, p.n) || mod_in(3 * p.d, 0, p.n);
}

bool has_square(const PropellerParams& p) {
    return mod_in(p.b, 2, p.n) || mod_in(p.b, -2, p.n) || mod_in(2 * p.b, 0, p.n) ||
           mod_in(p.b, p.c, p.n) || mod_in(p.b, -p.c, p.n) ||
           mod_in(p.c, 2 * p.d, p.n) || mod_in(p.c, -2 * p.d, p.n) ||
           mod_in(2 * p.c, 0, p.n) || mod_in(4 * p.d, 0, p.n);
}

std::array<int, 3> sorted3(std::array<int, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace

TEST_CASE("girth follows the residue conditions") {
    for (int n = 3; n <= 12; ++n)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c)
                for (int d = 1; d < n; ++d) {
                    PropellerParams p{n, b, c, d};
                    if (!p.valid()) continue;
                    LabeledGraph g = build_propeller(p, false);
                    const int gi = girth(g);
                    CHECK(gi == propeller_girth(g, p));
                    if (has_triangle(p))
                        CHECK(gi == 3);
                    else if (has_square(p))
                        CHECK(gi == 4);
                    else
                        // the two unconditional hexagons cap the girth at six
                        CHECK((gi == 5 || gi == 6));
                }
}

TEST_CASE("girth six is attained") {
    for (PropellerParams p : {PropellerParams{20, 4, 2, 3}, PropellerParams{84, 23, 19, 43},
                              PropellerParams{101, 10, 50, 30}}) {
        LabeledGraph g = build_propeller(p, false);
        CHECK(girth(g) == 6);
    }
}

TEST_CASE("the bare pair of unconditional hexagons gives two per edge") {
    PropellerParams p{30, 7, 13, 4};
    LabeledGraph g = build_propeller(p);
    CHECK(active_relations(p) == std::vector<int>{1, 2});
    CHECK(per_edge_cycle_counts(g, p, 6) == std::array<long long, 6>{2, 2, 2, 2, 2, 2});

    // both representatives are genuine hexagons with the expected edge mix
    const auto& rows = relation_rows();
    const std::vector<int> c1 = relation_cycle(rows[0], p);
    const std::vector<int> c2 = relation_cycle(rows[1], p);
    REQUIRE(genuine_cycle(g, c1));
    REQUIRE(genuine_cycle(g, c2));
    CHECK(profile(g, c1) == CycleProfile{2, 2, 2, 0, 0, 0});
    CHECK(profile(g, c2) == CycleProfile{0, 0, 0, 2, 2, 2});

    // at two hexagons per edge the graph distinguishes wings from flats
    auto [a0, a1] = representative_edge(EdgeKind::AWing, p);
    auto [a0f, b0] = representative_edge(EdgeKind::AFlat, p);
    CHECK(a0 == a0f);
    CHECK(sorted3(arc_type(g, a0, a1).successors) == std::array<int, 3>{0, 1, 1});
    CHECK(sorted3(arc_type(g, a0f, b0).successors) == std::array<int, 3>{0, 0, 2});
}

TEST_CASE("a lone extra relation adds exactly its column") {
    PropellerParams p{18, 3, 8, 3};  // only the six-fold C-wing run fires
    CHECK(active_relations(p) == std::vector<int>{1, 2, 48});
    LabeledGraph g = build_propeller(p, false);
    REQUIRE(propeller_girth(g, p) >= 5);
    const auto counts = per_edge_cycle_counts(g, p, 6);
    CHECK(counts == std::array<long long, 6>{2, 2, 2, 2, 2, 3});
    CHECK(counts == predicted_per_edge_n6(p));

    const auto& rows = relation_rows();
    REQUIRE(rows[47].id == 48);
    CHECK(genuine_cycle(g, relation_cycle(rows[47], p)));
}

TEST_CASE("a five-relation pile lifts every edge to five") {
    PropellerParams p{14, 11, 9, 3};
    CHECK(active_relations(p) == std::vector<int>{1, 2, 22, 37, 42});
    LabeledGraph g = build_propeller(p, false);
    REQUIRE(propeller_girth(g, p) >= 5);
    const auto counts = per_edge_cycle_counts(g, p, 6);
    CHECK(counts == std::array<long long, 6>{5, 5, 5, 5, 5, 5});
    CHECK(counts == predicted_per_edge_n6(p));
}

TEST_CASE("halving relations drag the cross relations along") {
    // b = 1 + n/2 with c = d + n/2 forces the two mixed hub crossings too, so
    // this activation pattern can never occur bare; the ledger still balances
    PropellerParams p{30, 16, 19, 4};
    CHECK(active_relations(p) == std::vector<int>{1, 2, 7, 23, 24, 44});
    LabeledGraph g = build_propeller(p, false);
    REQUIRE(propeller_girth(g, p) >= 5);
    const auto counts = per_edge_cycle_counts(g, p, 6);
    CHECK(counts == std::array<long long, 6>{7, 7, 7, 7, 7, 7});
    CHECK(counts == predicted_per_edge_n6(p));
    for (const RelationRow& row : relation_rows())
        if (relation_active(row, p)) CHECK(genuine_cycle(g, relation_cycle(row, p)));
}

TEST_CASE("the seven-per-edge transitive shape has uniform arc structure") {
    PropellerParams p{84, 58, 2, 29};
    LabeledGraph g = build_propeller(p, false);
    REQUIRE(propeller_girth(g, p) >= 5);
    const auto counts = per_edge_cycle_counts(g, p, 6);
    CHECK(counts == std::array<long long, 6>{7, 7, 7, 7, 7, 7});
    CHECK(counts == predicted_per_edge_n6(p));
    for (EdgeKind kind : all_edge_kinds) {
        auto [u, v] = representative_edge(kind, p);
        CHECK(sorted3(arc_type(g, u, v).successors) == std::array<int, 3>{2, 2, 3});
        CHECK(sorted3(arc_type(g, v, u).successors) == std::array<int, 3>{2, 2, 3});
    }
}

TEST_CASE("hexagon ledger accounting holds on random five-girth tuples") {
    std::mt19937 rng(471);
    int checked = 0;
    while (checked < 15) {
        const int n = 20 + int(rng() % 41);
        PropellerParams p{n, 1 + int(rng() % (n - 1)), 1 + int(rng() % (n - 1)),
                          1 + int(rng() % (n - 1))};
        if (!p.valid()) continue;
        LabeledGraph g = build_propeller(p, false);
        if (propeller_girth(g, p) < 5) continue;
        CHECK(per_edge_cycle_counts(g, p, 6) == predicted_per_edge_n6(p));
        ++checked;
    }
}

TEST_CASE("every relation template is a genuine hexagon where it fires") {
    // scan upward for a five-girth witness per relation; a handful only exist
    // below girth five (the n = 6 wing ring), so genuineness is all we ask
    for (const RelationRow& row : relation_rows()) {
        bool witnessed = false;
        for (int n = 6; n <= 40 && !witnessed; ++n)
            for (int b = 1; b < n && !witnessed; ++b)
                for (int c = 1; c < n && !witnessed; ++c)
                    for (int d = 1; d < n && !witnessed; ++d) {
                        PropellerParams p{n, b, c, d};
                        if (!p.valid() || !relation_active(row, p)) continue;
                        LabeledGraph g = build_propeller(p, false);
                        if (genuine_cycle(g, relation_cycle(row, p))) witnessed = true;
                    }
        CHECK_MESSAGE(witnessed, "relation ", row.id);
    }
}

TEST_CASE("canonical form ignores rotation and direction") {
    const std::vector<int> cycle{3, 9, 4, 17, 2, 11};
    const auto canon = canonical_cycle(cycle);
    std::vector<int> rotated{4, 17, 2, 11, 3, 9};
    std::vector<int> reversed{3, 11, 2, 17, 4, 9};
    CHECK(canonical_cycle(rotated) == canon);
    CHECK(canonical_cycle(reversed) == canon);
    CHECK(canon.front() == 2);
}

TEST_CASE("cycle counts through paths refine counts through edges") {
    PropellerParams p{30, 16, 19, 4};
    LabeledGraph g = build_propeller(p, false);
    for (EdgeKind kind : all_edge_kinds) {
        auto [u, v] = representative_edge(kind, p);
        const long long through_edge = count_cycles_through_edge(g, u, v, 6);
        CHECK(count_cycles_through_path(g, {u, v}, 6) == through_edge);
        long long split = 0;
        for (int w : g.adj[v])
            if (w != u) split += count_cycles_through_path(g, {u, v, w}, 6);
        CHECK(split == through_edge);
        CHECK(std::ssize(cycles_through_edge(g, u, v, 6)) == through_edge);
    }
}
