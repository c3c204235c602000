// Parameter-space symmetries, the four edge-transitive families, and the
// case table that sorts girth >= 5 propellers by their per-edge 6-cycle count.
#pragma once

#include <propeller/graph.hpp>
#include <propeller/perm.hpp>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace propeller {

// ---- parameter orbit ----

// closure of (b, c, d) under negating any slot and, when gcd(d, n) = 1,
// swapping the hubs via (b, c, d) -> (c/d, b/d, 1/d); every member names an
// isomorphic graph
std::vector<PropellerParams> param_orbit(const PropellerParams& p);
PropellerParams canonical_tuple(const PropellerParams& p);  // lex-least member

// ---- families ----

enum class FamilyTag { F1, F1Star, F2, F3, F4 };
std::string to_string(FamilyTag f);

// the shape test on the tuple as given, no orbit closure
bool in_family_raw(FamilyTag f, const PropellerParams& p);

// tags whose raw shape appears somewhere in the parameter orbit, ascending
std::vector<FamilyTag> family_memberships(const PropellerParams& p);

// raw-shape members with n <= max_n, ascending by (n, b, c, d)
std::vector<PropellerParams> family_samples(FamilyTag f, int max_n,
                                            std::size_t cap = ~std::size_t(0));

// residue selector for the order-4 hub swap on its family; see perm.hpp
std::optional<long long> rule_r(const PropellerParams& p);

// ---- classification ----

struct ClassificationInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ClassifyMethod {
    ParameterOrbit,        // families by orbit shape, transitivity by seeded search
    IsomorphismFallback,   // additionally hunt an isomorphic family shape at the same n
    BruteForce,            // transitivity from the full automorphism group
};

struct Classification {
    std::vector<FamilyTag> families;
    bool edge_transitive = false;
    ClassifyMethod method = ClassifyMethod::ParameterOrbit;
};

// throws ClassificationInconsistency when the family list and the
// edge-transitivity verdict disagree
Classification classify(const PropellerParams& p,
                        ClassifyMethod method = ClassifyMethod::ParameterOrbit);

// ---- the case table ----

// A row fixes some of (b, c, d) by residue expressions, imposes extra
// congruences, and states the per-edge 6-cycle count shared by every edge.
struct CaseRow {
    int id;   // 1..31
    int n6;   // 6-cycles through each edge
    std::array<std::optional<Affine>, 3> slots;  // bound values for (b, c, d)
    std::vector<Affine> constraints;             // == 0 (mod n)
};

const std::vector<CaseRow>& case_rows();

// matches the tuple as given or with d negated
bool case_matches(const CaseRow& row, const PropellerParams& p);
std::vector<int> match_cases(const PropellerParams& p);  // ids, ascending

// The row the tuple genuinely belongs to.  Shapes of several rows can overlap
// on one tuple, so the hexagon ledger arbitrates: the match must also predict
// the row's uniform per-edge count.  nullopt when the predicted counts are
// not uniform (then no edge-transitive graph can have these parameters).
// Meaningful for girth >= 5, where the ledger is exact.
std::optional<int> match_case(const PropellerParams& p);

// Enumerate the valid tuples at ring size n whose residues satisfy the row's
// slot expressions and side constraints (shape match only; no girth or ledger
// screening).  visit returns false to stop the scan early.
void scan_case_candidates(const CaseRow& row, int n,
                          const std::function<bool(const PropellerParams&)>& visit);

// rows whose members can be edge-transitive
inline constexpr std::array<int, 4> transitive_case_ids{1, 5, 16, 26};

// First girth >= 5 instance per row with n in [min_n, max_n] whose ledger
// content is exactly the row's; the transitive_case_ids rows are additionally
// required to carry a family so their edge-transitive members are the ones
// found.  Rows with no instance in range are absent from the map.
std::map<int, PropellerParams> find_case_instances(int min_n = 79, int max_n = 160);
std::optional<PropellerParams> find_case_instance(int row_id, int min_n = 79, int max_n = 160);

}  // namespace propeller
