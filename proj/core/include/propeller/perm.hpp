#pragma once
// Permutations of the 3n propeller vertices, and the residue-schema tables
// that define the named maps rho, mu, sigma1..sigma4, sigma1*, alpha,
// beta1..beta4, gamma1..gamma6, delta.
//
// A schema with modulus k and multiplier w sends X_i (for i == j mod k) to
// Target_{w*(i-j) + e(j)}, where the per-cell offset e and the multiplier w
// are affine expressions in (1, b, c, d) and the schema's free symbol (z or
// r). Composition is left-to-right throughout: x.(pq) = (x.p).q.

#include <optional>
#include <string>
#include <vector>

#include "propeller/graph.hpp"

namespace propeller {

struct ConstraintError : InvalidParams {
    explicit ConstraintError(const std::string& msg) : InvalidParams(msg) {}
};

// thrown by instantiate() when a schema's map is not a bijection; carries the
// least vertex id without a preimage
struct NotBijective : std::runtime_error {
    int missing_vertex;
    NotBijective(const std::string& msg, int missing) : std::runtime_error(msg), missing_vertex(missing) {}
};

// ---- permutations ----

struct Permutation {
    std::vector<int> img;

    int size() const { return int(img.size()); }
    int operator()(int v) const { return img[v]; }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_perm(int n);
bool is_identity(const Permutation& p);
Permutation compose(const Permutation& p, const Permutation& q);  // apply p, then q
Permutation inverse(const Permutation& p);
std::string cycle_notation(const Permutation& p, const std::vector<std::string>& names);

// does p map every edge of g to an edge (p a bijection on g's vertices)?
bool is_automorphism(const LabeledGraph& g, const Permutation& p);

// p maps g onto h edge for edge (vertex and edge counts must agree)
bool is_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const Permutation& p);

// ---- affine cell expressions ----

struct Affine {
    long long k1 = 0, kb = 0, kc = 0, kd = 0, kz = 0, kr = 0;

    constexpr Affine() = default;
    constexpr Affine(long long v) : k1(v) {}
    constexpr Affine(long long a1, long long ab, long long ac, long long ad, long long az, long long ar)
        : k1(a1), kb(ab), kc(ac), kd(ad), kz(az), kr(ar) {}

    long long eval(const PropellerParams& p, long long z = 0, long long r = 0) const {
        return k1 + kb * p.b + kc * p.c + kd * p.d + kz * z + kr * r;
    }
    bool uses_z() const { return kz != 0; }
    bool uses_r() const { return kr != 0; }
    friend constexpr Affine operator+(Affine x, Affine y) {
        return {x.k1 + y.k1, x.kb + y.kb, x.kc + y.kc, x.kd + y.kd, x.kz + y.kz, x.kr + y.kr};
    }
    friend constexpr Affine operator-(Affine x, Affine y) {
        return {x.k1 - y.k1, x.kb - y.kb, x.kc - y.kc, x.kd - y.kd, x.kz - y.kz, x.kr - y.kr};
    }
    friend constexpr Affine operator-(Affine x) { return {-x.k1, -x.kb, -x.kc, -x.kd, -x.kz, -x.kr}; }
    friend constexpr Affine operator*(long long s, Affine x) {
        return {s * x.k1, s * x.kb, s * x.kc, s * x.kd, s * x.kz, s * x.kr};
    }
};

namespace lit {
inline constexpr Affine b{0, 1, 0, 0, 0, 0};
inline constexpr Affine c{0, 0, 1, 0, 0, 0};
inline constexpr Affine d{0, 0, 0, 1, 0, 0};
inline constexpr Affine z{0, 0, 0, 0, 1, 0};
inline constexpr Affine r{0, 0, 0, 0, 0, 1};
}  // namespace lit

// ---- schemas ----

enum class SchemaName {
    Rho,
    Mu,
    Sigma1,
    Sigma1Star,
    Sigma2,
    Sigma3,
    Sigma4,
    Alpha,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    Gamma5,
    Gamma6,
    Delta,
};

const char* to_string(SchemaName s);
std::optional<SchemaName> parse_schema_name(const std::string& s);
const std::vector<SchemaName>& all_schema_names();

struct SchemaCell {
    VertexClass target;
    Affine off;  // e(j)
};

// the symbolic table (static data, shared across params)
struct SchemaTable {
    int modulus;   // k
    Affine mult;   // w
    std::vector<SchemaCell> cells[3];  // [class][j], j in [0, modulus)
    std::vector<Affine> constraints;   // each must be == 0 (mod n)
    bool uses_z = false, uses_r = false;
};

const SchemaTable& schema_table(SchemaName name);

// a table bound to parameters and resolved symbols
struct ResidueSchema {
    SchemaName name;
    PropellerParams params;
    int modulus;
    long long z = 0, r = 0;
};

struct FreeSymbols {
    std::optional<long long> z, r;
};

// Validates: parameters, modulus | n, symbol congruences. A missing z is an
// error when the table needs one; a missing r for Sigma1Star resolves via
// sigma1star_rule_r when the parameters admit it.
ResidueSchema schema(SchemaName name, const PropellerParams& p, const FreeSymbols& symbols = {});

// all x in [0,n) with a*x == t (mod n)
std::vector<long long> congruence_solutions(long long a, long long t, long long n);

// all admissible values of the schema's free symbol (z, or r for Sigma1Star);
// empty vector when the schema has none
std::vector<long long> schema_symbol_solutions(SchemaName name, const PropellerParams& p);

// The two-branch selection rule for sigma1*'s symbol: r = 1 when 3d == 3
// (mod n); r = n/12 + 1 when 3d == n/2 + 3 (mod n); nullopt otherwise. The
// second branch needs n/6 even to be meaningful.
std::optional<long long> sigma1star_rule_r(const PropellerParams& p);

// The parameter shape whose graphs admit sigma1* as an automorphism: the
// even-halving shape (b == 2d, c == 2, d^2 == 1 mod n) with 6 | n,
// d == 5 (mod 6), 6d == 6 (mod n), and one of the two rule branches (the
// second additionally needs d == 5 mod 12 and n/6 even).
bool sigma1star_applicable(const PropellerParams& p);

// Builds the vertex map and checks bijectivity; throws NotBijective with the
// least uncovered vertex otherwise (the expected outcome for Beta3, Beta4,
// Gamma3, Gamma5).
Permutation instantiate(const ResidueSchema& s);
Permutation instantiate(SchemaName name, const PropellerParams& p, const FreeSymbols& symbols = {});

// The cell formula applied pointwise, with no bijectivity check. Candidate
// maps that fail that check can still be probed for a concrete broken edge.
std::vector<int> raw_vertex_map(const ResidueSchema& s);

// does every edge land on an edge under an arbitrary vertex map?
bool preserves_edges(const LabeledGraph& g, const std::vector<int>& map);

// ---- identities between schema words ----

struct WordTerm {
    SchemaName name;
    bool inverse = false;
};

// left-to-right product of the named maps (each instantiated on p)
Permutation evaluate_word(const std::vector<WordTerm>& word, const PropellerParams& p,
                          const FreeSymbols& symbols = {});

bool verify_identity(const PropellerParams& p, const std::vector<WordTerm>& lhs,
                     const std::vector<WordTerm>& rhs, const FreeSymbols& symbols = {});

}  // namespace propeller
