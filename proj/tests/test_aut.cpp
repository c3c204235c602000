#include <doctest.h>

#include <propeller/aut.hpp>
#include <propeller/graph.hpp>

#include <utility>
#include <vector>

using namespace propeller;

namespace {

std::vector<PropellerParams> all_valid(int n) {
    std::vector<PropellerParams> out;
    for (int b = 1; b < n; ++b)
        for (int c = 1; c < n; ++c)
            for (int d = 1; d < n; ++d) {
                PropellerParams p{n, b, c, d};
                if (p.valid()) out.push_back(p);
            }
    return out;
}

} // namespace

TEST_CASE("seeded engine agrees with the naive enumerator") {
    for (int n = 3; n <= 5; ++n) {
        for (const PropellerParams& p : all_valid(n)) {
            LabeledGraph g = build_propeller(p, false);
            const auto naive = all_automorphisms_naive(g);
            AutGroup grp = aut_group(g);
            CHECK(grp.order == BigInt(naive.size()));

            std::size_t seeded = 0;
            for_each_automorphism_extending(g, {}, [&](const Permutation&) {
                ++seeded;
                return true;
            });
            CHECK(seeded == naive.size());
        }
    }
}

TEST_CASE("rotation and reflection force order divisible by 2n") {
    for (PropellerParams p : {PropellerParams{7, 2, 3, 1}, PropellerParams{9, 4, 7, 2},
                              PropellerParams{12, 10, 2, 11}}) {
        AutGroup grp = aut_group(build_propeller(p, false));
        CHECK(grp.order % (2 * p.n) == 0);
    }
}

TEST_CASE("wing-to-flat search matches the full-group oracle") {
    for (int n = 3; n <= 6; ++n) {
        for (const PropellerParams& p : all_valid(n)) {
            LabeledGraph g = build_propeller(p, false);
            const bool seeded = wing_to_flat_automorphism(g, n).has_value();
            CHECK(seeded == is_edge_transitive_oracle(g));
            CHECK(seeded == is_edge_transitive(p));
        }
    }
}

TEST_CASE("wing-to-flat verdicts on known graphs") {
    auto verdict = [](const PropellerParams& p) {
        LabeledGraph g = build_propeller(p, false);
        return wing_to_flat_automorphism(g, p.n).has_value();
    };
    CHECK(verdict({12, 10, 2, 5}));
    CHECK(verdict({10, 2, 2, 1}));
    CHECK_FALSE(verdict({7, 2, 3, 1}));
    CHECK_FALSE(verdict({30, 7, 13, 4}));
}

TEST_CASE("a wing-to-flat witness really is one") {
    PropellerParams p{12, 10, 2, 5};
    LabeledGraph g = build_propeller(p, false);
    auto w = wing_to_flat_automorphism(g, p.n);
    REQUIRE(w.has_value());
    CHECK(is_automorphism(g, *w));
    CHECK(w->img[vid(VertexClass::A, 0, p.n)] == vid(VertexClass::A, 0, p.n));
    CHECK(w->img[vid(VertexClass::A, 1, p.n)] == vid(VertexClass::B, 0, p.n));
}

TEST_CASE("the dense four-ring propeller is the doubled hexagon") {
    LabeledGraph pr = build_propeller({4, 2, 2, 1}, false);
    LabeledGraph w = build_wreath(6, 2);
    auto iso = find_isomorphism(pr, w);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(pr, w, *iso));
    CHECK(is_arc_transitive(pr));
}

TEST_CASE("isomorphism search finds parameter-orbit mates") {
    LabeledGraph g = build_propeller({10, 1, 3, 3}, false);
    LabeledGraph h = build_propeller({10, 1, 7, 7}, false);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(g, h, *iso));
}

TEST_CASE("isomorphism search separates genuinely different graphs") {
    // edge-transitivity is invariant, so these cannot be isomorphic
    LabeledGraph g = build_propeller({12, 10, 2, 5}, false);
    LabeledGraph h = build_propeller({12, 10, 2, 11}, false);
    CHECK_FALSE(are_isomorphic(g, h));

    // triangle counts differ (girth 3 against girth >= 4)
    CHECK_FALSE(are_isomorphic(build_propeller({8, 1, 3, 3}, false),
                               build_propeller({8, 3, 3, 1}, false)));

    // size mismatch short-circuits
    CHECK_FALSE(are_isomorphic(build_propeller({5, 1, 2, 2}, false),
                               build_propeller({6, 2, 3, 2}, false)));
}

TEST_CASE("widened wings can buy arc transitivity") {
    LabeledGraph g = build_generalized_propeller(10, 2, 3, 1, 4);
    CHECK(is_arc_transitive(g));
    // d and 10 - d give equal edge sets, so d <= 4 covers every ten-ring shape
    for (int d : {1, 2, 3, 4}) {
        PropellerParams p{10, 0, 0, d};
        for (int b = 1; b < 10; ++b)
            for (int c = 1; c < 10; ++c) {
                p.b = b;
                p.c = c;
                if (!p.valid()) continue;
                CHECK_FALSE(are_isomorphic(g, build_propeller(p, false)));
            }
    }
}

TEST_CASE("line graph of the Petersen family is vertex and edge transitive") {
    LabeledGraph g = line_graph(build_generalized_petersen(5, 2));
    CHECK(is_vertex_transitive(g));
    CHECK(is_edge_transitive_oracle(g));
}
