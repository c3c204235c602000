#include <doctest.h>

#include <propeller/aut.hpp>
#include <propeller/cycles.hpp>
#include <propeller/families.hpp>
#include <propeller/graph.hpp>

#include <algorithm>
#include <set>

using namespace propeller;

namespace {

std::vector<PropellerParams> sorted_tuples(std::vector<PropellerParams> v) {
    std::sort(v.begin(), v.end(), [](const PropellerParams& x, const PropellerParams& y) {
        return std::tie(x.n, x.b, x.c, x.d) < std::tie(y.n, y.b, y.c, y.d);
    });
    return v;
}

}  // namespace

TEST_CASE("parameter orbit closure") {
    for (PropellerParams p : {PropellerParams{24, 1, 5, 5}, PropellerParams{12, 10, 2, 5},
                              PropellerParams{30, 7, 13, 4}, PropellerParams{10, 6, 2, 3}}) {
        const auto orbit = sorted_tuples(param_orbit(p));
        CHECK(!orbit.empty());
        CHECK(std::find(orbit.begin(), orbit.end(), p) != orbit.end());
        const PropellerParams canon = canonical_tuple(p);
        CHECK(canon == orbit.front());  // lex-least member
        for (const PropellerParams& q : orbit) {
            CHECK(q.valid());
            CHECK(q.n == p.n);
            CHECK(canonical_tuple(q) == canon);  // constant on the orbit
        }
    }
    CHECK(canonical_tuple({12, 10, 2, 5}) == PropellerParams{12, 2, 2, 5});
    CHECK(canonical_tuple({10, 6, 2, 3}) == PropellerParams{10, 4, 2, 3});
    CHECK(canonical_tuple({24, 1, 5, 5}) == PropellerParams{24, 1, 5, 5});
}

TEST_CASE("orbit members name isomorphic graphs") {
    for (PropellerParams p : {PropellerParams{10, 6, 2, 3}, PropellerParams{12, 10, 2, 5}}) {
        LabeledGraph g = build_propeller(p, false);
        for (const PropellerParams& q : param_orbit(p))
            CHECK(are_isomorphic(g, build_propeller(q, false)));
    }
}

TEST_CASE("raw family shapes") {
    // membership by orbit: the raw shape sits on another orbit member
    CHECK(in_family_raw(FamilyTag::F3, {24, 23, 19, 19}));
    CHECK_FALSE(in_family_raw(FamilyTag::F3, {24, 1, 5, 5}));
    CHECK(family_memberships({24, 1, 5, 5}) == std::vector<FamilyTag>{FamilyTag::F3});

    CHECK(in_family_raw(FamilyTag::F4, {10, 1, 7, 7}));
    CHECK_FALSE(in_family_raw(FamilyTag::F4, {10, 1, 3, 3}));
    CHECK(family_memberships({10, 1, 3, 3}) == std::vector<FamilyTag>{FamilyTag::F4});

    // the one-and-a-half family sits inside the first
    for (const PropellerParams& p : family_samples(FamilyTag::F1Star, 200))
        CHECK(in_family_raw(FamilyTag::F1, p));
}

TEST_CASE("family sample censuses up to n = 200") {
    CHECK(family_samples(FamilyTag::F1, 200).size() == 456);
    CHECK(family_samples(FamilyTag::F1Star, 200).size() == 28);
    CHECK(family_samples(FamilyTag::F2, 200).size() == 32);
    CHECK(family_samples(FamilyTag::F3, 200).size() == 51);
    CHECK(family_samples(FamilyTag::F4, 200).size() == 5);

    std::set<int> f2_rings;
    for (const PropellerParams& p : family_samples(FamilyTag::F2, 200)) f2_rings.insert(p.n);
    CHECK(f2_rings == std::set<int>{10, 26, 34, 50, 58, 74, 82, 106, 122, 130, 146, 170, 178,
                                    194});

    CHECK(family_samples(FamilyTag::F3, 24) ==
          std::vector<PropellerParams>{{4, 3, 3, 3},
                                       {8, 3, 7, 3},
                                       {8, 7, 3, 3},
                                       {12, 11, 7, 7},
                                       {20, 7, 3, 11},
                                       {24, 11, 7, 19},
                                       {24, 23, 19, 19}});

    // the pentagonal family is finite
    CHECK(family_samples(FamilyTag::F4, 200) ==
          std::vector<PropellerParams>{
              {5, 1, 2, 2}, {10, 1, 2, 2}, {10, 1, 7, 7}, {10, 6, 2, 7}, {10, 6, 7, 2}});

    CHECK(family_samples(FamilyTag::F1Star, 30) ==
          std::vector<PropellerParams>{{6, 4, 2, 5}, {12, 10, 2, 5}, {24, 10, 2, 5},
                                       {24, 10, 2, 17}, {30, 22, 2, 11}});

    // cap cuts the listing short
    CHECK(family_samples(FamilyTag::F1, 200, 10).size() == 10);
}

TEST_CASE("order-4 hub swap residue rule") {
    CHECK(rule_r({12, 10, 2, 5}) == 1);   // direct branch: 3d == 3
    CHECK(rule_r({24, 1, 5, 5}) == 3);    // offset branch: 3d == n/2 + 3, r = n/12 + 1
    CHECK_FALSE(rule_r({10, 1, 3, 3}).has_value());
}

TEST_CASE("classify agrees across methods") {
    {
        Classification c = classify({10, 6, 2, 3});
        CHECK(c.families == std::vector<FamilyTag>{FamilyTag::F2, FamilyTag::F4});
        CHECK(c.edge_transitive);
    }
    {
        Classification c = classify({30, 7, 13, 4});
        CHECK(c.families.empty());
        CHECK_FALSE(c.edge_transitive);
    }
    for (PropellerParams p : {PropellerParams{10, 6, 2, 3}, PropellerParams{12, 10, 2, 5},
                              PropellerParams{8, 3, 7, 3}, PropellerParams{7, 2, 3, 1}}) {
        Classification fast = classify(p);
        Classification brute = classify(p, ClassifyMethod::BruteForce);
        CHECK(fast.edge_transitive == brute.edge_transitive);
        CHECK(fast.families == brute.families);
    }
}

TEST_CASE("case table shape") {
    const auto& rows = case_rows();
    REQUIRE(rows.size() == 31);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].id == int(i) + 1);
    CHECK(rows.front().n6 == 3);
    CHECK(rows.back().n6 == 9);
    CHECK(std::is_sorted(rows.begin(), rows.end(),
                         [](const CaseRow& x, const CaseRow& y) { return x.n6 < y.n6; }));
}

TEST_CASE("case arbitration by the hexagon ledger") {
    // two rows share this tuple's literal shape; the per-edge count picks one
    {
        PropellerParams p{80, 41, 3, 43};
        CHECK(match_cases(p) == std::vector<int>{8, 24});
        CHECK(predicted_per_edge_n6(p) == std::array<long long, 6>{7, 7, 7, 7, 7, 7});
        CHECK(match_case(p) == 24);
    }
    // five shapes at once, and the count fits none of them
    {
        PropellerParams p{80, 41, 1, 41};
        CHECK(match_cases(p) == std::vector<int>{4, 5, 8, 17, 24});
        CHECK(predicted_per_edge_n6(p) == std::array<long long, 6>{8, 8, 8, 8, 8, 8});
        CHECK_FALSE(match_case(p).has_value());
    }
    // an edge-transitive tuple whose two simultaneous cross congruences lift
    // the count past its only matching shape
    {
        PropellerParams p{84, 23, 19, 43};
        CHECK(match_cases(p) == std::vector<int>{1});
        CHECK(predicted_per_edge_n6(p) == std::array<long long, 6>{4, 4, 4, 4, 4, 4});
        CHECK_FALSE(match_case(p).has_value());
    }
    // clean single-shape match
    {
        PropellerParams p{88, 35, 31, 67};
        CHECK(match_cases(p) == std::vector<int>{1});
        CHECK(match_case(p) == 1);
    }
    // no congruence beyond the two standing ones: no shape at all
    {
        PropellerParams p{30, 7, 13, 4};
        CHECK(match_cases(p).empty());
        CHECK_FALSE(match_case(p).has_value());
    }
}

TEST_CASE("case instances: 26 realizable rows") {
    const auto instances = find_case_instances(79, 160);
    CHECK(instances.size() == 26);
    for (int id : {8, 17, 23, 25, 28}) CHECK(instances.count(id) == 0);

    const auto& rows = case_rows();
    for (const auto& [id, p] : instances) {
        CHECK(p.n > 78);
        CHECK(match_case(p) == id);
        const int n6 = rows[std::size_t(id) - 1].n6;
        const auto pred = predicted_per_edge_n6(p);
        for (long long v : pred) CHECK(v == n6);
    }

    // brute hexagon counts on two of them, one plain and one transitive
    {
        const PropellerParams& p = instances.at(24);
        LabeledGraph g = build_propeller(p, false);
        CHECK(propeller_girth(g, p) >= 5);
        const auto counts = per_edge_cycle_counts(g, p, 6);
        for (long long v : counts) CHECK(v == 7);
    }
    {
        const PropellerParams& p = instances.at(16);
        LabeledGraph g = build_propeller(p, false);
        const auto counts = per_edge_cycle_counts(g, p, 6);
        for (long long v : counts) CHECK(v == 6);
        CHECK(wing_to_flat_automorphism(g, p.n).has_value());
        CHECK(!family_memberships(p).empty());
    }
}

TEST_CASE("single-row instance search matches the sweep") {
    auto one = find_case_instance(24, 79, 160);
    REQUIRE(one.has_value());
    CHECK(match_case(*one) == 24);
    CHECK_FALSE(find_case_instance(28, 79, 120).has_value());
}
