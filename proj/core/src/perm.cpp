#include "propeller/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace propeller {

// ---- permutation basics ----

Permutation identity_perm(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool is_identity(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p.img[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation out;
    out.img.resize(p.img.size());
    for (std::size_t i = 0; i < p.img.size(); ++i) out.img[i] = q.img[p.img[i]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out;
    out.img.resize(p.img.size());
    for (std::size_t i = 0; i < p.img.size(); ++i) out.img[p.img[i]] = int(i);
    return out;
}

std::string cycle_notation(const Permutation& p, const std::vector<std::string>& names) {
    std::string out;
    std::vector<char> done(p.size(), 0);
    for (int i = 0; i < p.size(); ++i) {
        if (done[i] || p.img[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = 1;
            if (!first) out += " ";
            out += names[j];
            first = false;
            j = p.img[j];
        }
        out += ")";
    }
    if (out.empty()) out = "()";
    return out;
}

bool is_automorphism(const LabeledGraph& g, const Permutation& p) {
    const int nv = g.vertex_count();
    if (p.size() != nv) return false;
    std::vector<char> hit(nv, 0);
    for (int v : p.img) {
        if (v < 0 || v >= nv || hit[v]) return false;
        hit[v] = 1;
    }
    for (int u = 0; u < nv; ++u)
        for (int v : g.adj[u])
            if (u < v && !g.has_edge(p.img[u], p.img[v])) return false;
    return true;
}

bool is_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const Permutation& p) {
    const int nv = g.vertex_count();
    if (h.vertex_count() != nv || p.size() != nv) return false;
    std::vector<char> hit(nv, 0);
    for (int v : p.img) {
        if (v < 0 || v >= nv || hit[v]) return false;
        hit[v] = 1;
    }
    // edge counts match when every g-edge lands on an h-edge injectively and
    // the degree sums agree, so one direction suffices
    std::size_t eg = 0, eh = 0;
    for (int u = 0; u < nv; ++u) {
        eg += g.adj[u].size();
        eh += h.adj[u].size();
    }
    if (eg != eh) return false;
    for (int u = 0; u < nv; ++u)
        for (int v : g.adj[u])
            if (u < v && !h.has_edge(p.img[u], p.img[v])) return false;
    return true;
}

// ---- schema names ----

const char* to_string(SchemaName s) {
    switch (s) {
        case SchemaName::Rho: return "Rho";
        case SchemaName::Mu: return "Mu";
        case SchemaName::Sigma1: return "Sigma1";
        case SchemaName::Sigma1Star: return "Sigma1Star";
        case SchemaName::Sigma2: return "Sigma2";
        case SchemaName::Sigma3: return "Sigma3";
        case SchemaName::Sigma4: return "Sigma4";
        case SchemaName::Alpha: return "Alpha";
        case SchemaName::Beta1: return "Beta1";
        case SchemaName::Beta2: return "Beta2";
        case SchemaName::Beta3: return "Beta3";
        case SchemaName::Beta4: return "Beta4";
        case SchemaName::Gamma1: return "Gamma1";
        case SchemaName::Gamma2: return "Gamma2";
        case SchemaName::Gamma3: return "Gamma3";
        case SchemaName::Gamma4: return "Gamma4";
        case SchemaName::Gamma5: return "Gamma5";
        case SchemaName::Gamma6: return "Gamma6";
        case SchemaName::Delta: return "Delta";
    }
    return "?";
}

const std::vector<SchemaName>& all_schema_names() {
    static const std::vector<SchemaName> names = {
        SchemaName::Rho,    SchemaName::Mu,     SchemaName::Sigma1, SchemaName::Sigma1Star,
        SchemaName::Sigma2, SchemaName::Sigma3, SchemaName::Sigma4, SchemaName::Alpha,
        SchemaName::Beta1,  SchemaName::Beta2,  SchemaName::Beta3,  SchemaName::Beta4,
        SchemaName::Gamma1, SchemaName::Gamma2, SchemaName::Gamma3, SchemaName::Gamma4,
        SchemaName::Gamma5, SchemaName::Gamma6, SchemaName::Delta,
    };
    return names;
}

std::optional<SchemaName> parse_schema_name(const std::string& s) {
    auto lower = [](std::string x) {
        for (char& ch : x) ch = char(std::tolower(static_cast<unsigned char>(ch)));
        return x;
    };
    const std::string key = lower(s);
    for (SchemaName n : all_schema_names())
        if (key == lower(to_string(n))) return n;
    return std::nullopt;
}

// ---- the tables ----

namespace {

std::map<SchemaName, SchemaTable> build_tables() {
    using namespace lit;
    constexpr auto A = VertexClass::A;
    constexpr auto B = VertexClass::B;
    constexpr auto C = VertexClass::C;
    std::map<SchemaName, SchemaTable> t;

    {  // rho: rotate every fibre one step
        SchemaTable s;
        s.modulus = 1;
        s.mult = 1;
        s.cells[0] = {{A, 1}};
        s.cells[1] = {{B, 1}};
        s.cells[2] = {{C, 1}};
        t[SchemaName::Rho] = s;
    }
    {  // mu: the reflection; swaps flats with blades on both sides
        SchemaTable s;
        s.modulus = 1;
        s.mult = -1;
        s.cells[0] = {{A, 0}};
        s.cells[1] = {{B, -b}};
        s.cells[2] = {{C, -b + c}};
        t[SchemaName::Mu] = s;
    }
    {  // sigma1
        SchemaTable s;
        s.modulus = 2;
        s.mult = d;
        s.cells[0] = {{A, 0}, {B, 0}};
        s.cells[1] = {{A, 1}, {C, 2}};
        s.cells[2] = {{B, 1 - 2 * d}, {C, 2 - d}};
        t[SchemaName::Sigma1] = s;
    }
    {  // sigma2
        SchemaTable s;
        s.modulus = 2;
        s.mult = d;
        s.cells[0] = {{A, 0}, {B, 0}};
        s.cells[1] = {{A, -1}, {C, 0}};
        s.cells[2] = {{B, -1 - 2 * d}, {C, -d}};
        t[SchemaName::Sigma2] = s;
    }
    {  // sigma3
        SchemaTable s;
        s.modulus = 4;
        s.mult = 1;
        s.cells[0] = {{A, 0}, {B, 0}, {C, 0}, {B, 4 - b}};
        s.cells[1] = {{A, 1}, {A, b}, {C, -3 + 2 * b}, {C, 4 - b}};
        s.cells[2] = {{A, 2}, {B, b}, {C, -6 + 4 * b}, {B, 8 - 2 * b}};
        t[SchemaName::Sigma3] = s;
    }
    {  // sigma4
        SchemaTable s;
        s.modulus = 5;
        s.mult = 1;
        s.cells[0] = {{A, 0}, {B, 0}, {C, c}, {C, 3 + b}, {B, 3 + b}};
        s.cells[1] = {{A, 1}, {C, 0}, {B, c}, {C, 3 + b + d}, {A, 3 + b}};
        s.cells[2] = {{B, 1}, {B, -c}, {A, c}, {C, 3 + b + 2 * d}, {A, 2 + b}};
        t[SchemaName::Sigma4] = s;
    }
    {  // sigma1*: fixes A_0 and A_1; multiplier is the free symbol r
        SchemaTable s;
        s.modulus = 6;
        s.mult = r;
        s.uses_r = true;
        s.constraints = {12 * r - 12};
        s.cells[0] = {{A, 0}, {A, 1}, {B, 1}, {C, 3}, {C, 3 + d}, {B, 3 + d}};
        s.cells[1] = {{B, 0}, {A, 2}, {A, 1 + 2 * d}, {B, 3}, {C, 3 + 2 * d}, {C, 5 + d}};
        s.cells[2] = {{C, 0}, {B, 2 - 2 * d}, {A, 2 * d}, {A, 3}, {B, 1 + 2 * d}, {C, 5}};
        t[SchemaName::Sigma1Star] = s;
    }
    {  // alpha
        SchemaTable s;
        s.modulus = 4;
        s.mult = z;
        s.uses_z = true;
        s.constraints = {4 * z - b + c};
        s.cells[0] = {{A, 0}, {B, 0}, {C, 0}, {B, -c}};
        s.cells[1] = {{A, 1}, {A, b}, {C, 1 + b + c}, {C, -c}};
        s.cells[2] = {{A, 2}, {B, b}, {C, 2 + 2 * b + 2 * c}, {B, -2 * c}};
        t[SchemaName::Alpha] = s;
    }
    {  // beta1..beta4 share the A row
        const std::vector<SchemaCell> beta_a = {{A, 0}, {B, 0}, {C, c}, {B, c}};
        SchemaTable s;
        s.modulus = 4;
        s.mult = z;
        s.uses_z = true;
        s.constraints = {4 * z - b - c};
        s.cells[0] = beta_a;
        s.cells[1] = {{A, 1}, {A, b}, {C, 1 + b}, {C, 2 * c}};
        s.cells[2] = {{B, 1 - b}, {A, -1 + b}, {B, 1 + b - c}, {C, -1 + b + c}};
        t[SchemaName::Beta1] = s;
        s.cells[1] = {{A, 1}, {C, 0}, {C, 1 + b}, {A, c}};
        s.cells[2] = {{B, 1}, {C, -1 - b + c}, {B, 1 + b}, {A, -1 + c}};
        t[SchemaName::Beta2] = s;
        s.cells[1] = {{A, -1}, {A, b}, {C, -1 + b}, {C, 2 * c}};
        s.cells[2] = {{B, -1 - b}, {A, 1 + b}, {B, -1 + b - c}, {C, 1 + b + c}};
        t[SchemaName::Beta3] = s;
        s.cells[1] = {{A, -1}, {C, 0}, {C, -1 + b}, {A, c}};
        s.cells[2] = {{B, -1}, {C, 1 - b + c}, {B, -1 + b}, {A, 1 + c}};
        t[SchemaName::Beta4] = s;
    }
    {  // gamma1, gamma5 (6z == 3+3d); gamma3, gamma6 (6z == -3+3d)
        SchemaTable s;
        s.modulus = 6;
        s.mult = z;
        s.uses_z = true;
        s.constraints = {6 * z - 3 - 3 * d};
        s.cells[0] = {{A, 0}, {B, 0}, {C, 2}, {C, 2 + d}, {B, 2 + d}, {A, 2 + 3 * d}};
        s.cells[1] = {{A, 1}, {A, 2 * d}, {B, 2}, {C, 2 + 2 * d}, {C, 4 + d}, {B, 2 + 3 * d}};
        s.cells[2] = {{B, 1 - 2 * d}, {A, -1 + 2 * d}, {A, 2}, {B, 2 * d}, {C, 4}, {C, 2 + 3 * d}};
        t[SchemaName::Gamma1] = s;
        s.cells[1] = {{B, -2 * d}, {C, 0}, {C, 2 - d}, {B, d}, {A, 2 + d}, {A, 1 + 3 * d}};
        s.cells[2] = {{A, -2 * d}, {B, -2}, {C, 2 - 2 * d}, {C, d}, {B, 2 - d}, {A, 3 * d}};
        t[SchemaName::Gamma5] = s;
        s.constraints = {6 * z + 3 - 3 * d};
        s.cells[0] = {{A, 0}, {B, 0}, {C, 0}, {C, d}, {B, -2 + d}, {A, -2 + 3 * d}};
        s.cells[1] = {{A, -1}, {A, 2 * d}, {B, -2}, {C, 2 * d}, {C, -2 + d}, {B, -2 + 3 * d}};
        s.cells[2] = {{B, -1 - 2 * d}, {A, 1 + 2 * d}, {A, -2}, {B, 2 * d}, {C, -2}, {C, 3 * d}};
        t[SchemaName::Gamma3] = s;
        s.cells[1] = {{B, -2 * d}, {C, 2}, {C, -d}, {B, d}, {A, -2 + d}, {A, -1 + 3 * d}};
        s.cells[2] = {{A, -2 * d}, {B, 2}, {C, -2 * d}, {C, 2 + d}, {B, -2 - d}, {A, 3 * d}};
        t[SchemaName::Gamma6] = s;
    }
    {  // delta: the multiplier-1 form admitted alongside sigma1* when 3d == 3
        SchemaTable s;
        s.modulus = 6;
        s.mult = 1;
        s.cells[0] = {{A, 0}, {B, 0}, {C, 2}, {C, 2 + d}, {B, 2 + d}, {A, 5}};
        s.cells[1] = {{A, 1}, {A, 2 * d}, {B, 2}, {C, 2 + 2 * d}, {C, 4 + d}, {B, 5}};
        s.cells[2] = {{B, 1 - 2 * d}, {A, -1 + 2 * d}, {A, 2}, {B, 2 * d}, {C, 4}, {C, 5}};
        t[SchemaName::Delta] = s;
    }
    return t;
}

std::string vertex_name(int v, int n) {
    static const char* cls[3] = {"A", "B", "C"};
    return std::string(cls[v / n]) + std::to_string(v % n);
}

long long modinv(long long a, long long n) {
    long long t = 0, newt = 1, r0 = n, newr = a % n;
    while (newr != 0) {
        long long q = r0 / newr;
        t -= q * newt;
        std::swap(t, newt);
        r0 -= q * newr;
        std::swap(r0, newr);
    }
    return ((t % n) + n) % n;
}

}  // namespace

const SchemaTable& schema_table(SchemaName name) {
    static const std::map<SchemaName, SchemaTable> tables = build_tables();
    // gamma2 and gamma4 reduce to sigma1 and sigma2 cell-for-cell
    if (name == SchemaName::Gamma2) name = SchemaName::Sigma1;
    if (name == SchemaName::Gamma4) name = SchemaName::Sigma2;
    return tables.at(name);
}

std::vector<long long> congruence_solutions(long long a, long long t, long long n) {
    a = ((a % n) + n) % n;
    t = ((t % n) + n) % n;
    if (a == 0) {
        if (t != 0) return {};
        std::vector<long long> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    long long g = std::gcd(a, n);
    if (t % g != 0) return {};
    long long n1 = n / g;
    long long x0 = (t / g) % n1 * modinv(a / g, n1) % n1;
    std::vector<long long> out;
    out.reserve(std::size_t(g));
    for (long long k = 0; k < g; ++k) out.push_back(x0 + k * n1);
    return out;
}

std::vector<long long> schema_symbol_solutions(SchemaName name, const PropellerParams& p) {
    const SchemaTable& t = schema_table(name);
    for (const Affine& cst : t.constraints) {
        long long coeff = t.uses_z ? cst.kz : cst.kr;
        if (coeff == 0) continue;
        long long rest = cst.eval(p, 0, 0);
        return congruence_solutions(coeff, -rest, p.n);
    }
    return {};
}

std::optional<long long> sigma1star_rule_r(const PropellerParams& p) {
    if (p.n % 6 != 0) return std::nullopt;
    const int n = p.n, m = n / 6;
    if (md(3LL * p.d - 3, n) == 0) return 1;
    if (md(3LL * p.d - (3LL * m + 3), n) == 0) {
        if (m % 2 != 0) return std::nullopt;  // this branch needs n/6 even
        return m / 2 + 1;
    }
    return std::nullopt;
}

bool sigma1star_applicable(const PropellerParams& p) {
    const int n = p.n;
    if (n % 6 != 0) return false;
    if (p.d % 6 != 5) return false;
    if (md(6LL * p.d - 6, n) != 0) return false;
    // the even-halving shape: b == 2d, c == 2, d^2 == 1
    if (md(p.b - 2LL * p.d, n) != 0 || md(p.c - 2, n) != 0) return false;
    if (md(1LL * p.d * p.d - 1, n) != 0) return false;
    const int m = n / 6;
    if (md(3LL * p.d - 3, n) == 0) return true;
    if (md(3LL * p.d - (3LL * m + 3), n) == 0) return m % 2 == 0 && p.d % 12 == 5;
    return false;
}

ResidueSchema schema(SchemaName name, const PropellerParams& p, const FreeSymbols& symbols) {
    p.validate();
    const SchemaTable& t = schema_table(name);
    if (p.n % t.modulus != 0)
        throw ConstraintError(std::string(to_string(name)) + " needs " + std::to_string(t.modulus) +
                              " | n, got n=" + std::to_string(p.n));
    ResidueSchema s{name, p, t.modulus, 0, 0};
    if (t.uses_z) {
        if (!symbols.z) throw ConstraintError(std::string(to_string(name)) + " needs a z value");
        s.z = md(*symbols.z, p.n);
    }
    if (t.uses_r) {
        if (symbols.r) {
            s.r = md(*symbols.r, p.n);
        } else if (auto rr = sigma1star_rule_r(p)) {
            s.r = *rr;
        } else {
            throw ConstraintError("Sigma1Star needs an r value (no rule branch applies to " + to_string(p) +
                                  ")");
        }
        // a tuple that genuinely admits sigma1* pins r to the rule value
        if (sigma1star_applicable(p)) {
            auto rr = sigma1star_rule_r(p);
            if (rr && s.r != *rr)
                throw ConstraintError("r=" + std::to_string(s.r) + " contradicts the selection rule (r=" +
                                      std::to_string(*rr) + ") on " + to_string(p));
        }
    }
    for (const Affine& cst : t.constraints)
        if (md(cst.eval(p, s.z, s.r), p.n) != 0)
            throw ConstraintError(std::string(to_string(name)) + ": symbol congruence fails on " +
                                  to_string(p));
    return s;
}

std::vector<int> raw_vertex_map(const ResidueSchema& s) {
    const SchemaTable& t = schema_table(s.name);
    const int n = s.params.n;
    const long long w = t.mult.eval(s.params, s.z, s.r);
    std::vector<int> img(3 * n, -1);
    for (int cls = 0; cls < 3; ++cls)
        for (int i = 0; i < n; ++i) {
            const int j = i % t.modulus;
            const SchemaCell& cell = t.cells[cls][j];
            long long idx = w * (i - j) + cell.off.eval(s.params, s.z, s.r);
            img[cls * n + i] = vid(cell.target, idx, n);
        }
    return img;
}

bool preserves_edges(const LabeledGraph& g, const std::vector<int>& map) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.adj[u]) {
            if (u > v) continue;
            if (map[u] == map[v] || !g.has_edge(map[u], map[v])) return false;
        }
    return true;
}

Permutation instantiate(const ResidueSchema& s) {
    const int n = s.params.n;
    Permutation p;
    p.img = raw_vertex_map(s);
    std::vector<int> hits(3 * n, 0);
    for (int v : p.img) hits[v]++;
    for (int v = 0; v < 3 * n; ++v)
        if (hits[v] == 0)
            throw NotBijective(std::string(to_string(s.name)) + " on " + to_string(s.params) +
                                   " is not a bijection; least vertex without preimage: " +
                                   vertex_name(v, n),
                               v);
    return p;
}

Permutation instantiate(SchemaName name, const PropellerParams& p, const FreeSymbols& symbols) {
    return instantiate(schema(name, p, symbols));
}

Permutation evaluate_word(const std::vector<WordTerm>& word, const PropellerParams& p,
                          const FreeSymbols& symbols) {
    Permutation acc = identity_perm(3 * p.n);
    for (const WordTerm& term : word) {
        Permutation q = instantiate(term.name, p, symbols);
        if (term.inverse) q = inverse(q);
        acc = compose(acc, q);
    }
    return acc;
}

bool verify_identity(const PropellerParams& p, const std::vector<WordTerm>& lhs,
                     const std::vector<WordTerm>& rhs, const FreeSymbols& symbols) {
    return evaluate_word(lhs, p, symbols) == evaluate_word(rhs, p, symbols);
}

}  // namespace propeller
