#include <propeller/census.hpp>

#include <propeller/aut.hpp>
#include <propeller/cycles.hpp>
#include <propeller/perm.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace propeller {

// ---- census ----

namespace {

std::vector<CensusRecord> census_slice(int n, const CensusOptions& opt) {
    std::vector<CensusRecord> out;
    for (int b = 1; b < n; ++b)
        for (int c = 1; c < n; ++c)
            for (int d = 1; d < n; ++d) {
                PropellerParams p{n, b, c, d};
                if (!p.valid()) continue;
                PropellerParams canon = canonical_tuple(p);
                if (opt.dedupe && !(canon == p)) continue;
                LabeledGraph g = build_propeller(p, false);
                const int gi = propeller_girth(g, p);
                if (opt.girth_filter && gi != *opt.girth_filter) continue;
                auto [u, v] = representative_edge(EdgeKind::AWing, p);
                const long long n6 = count_cycles_through_edge(g, u, v, 6);
                const bool et = wing_to_flat_automorphism(g, n).has_value();
                auto fams = family_memberships(p);
                if (et == fams.empty())
                    throw ClassificationInconsistency(
                        to_string(p) + ": edge-transitive=" + (et ? "true" : "false") +
                        " but family list is " + (fams.empty() ? "empty" : "nonempty"));
                out.push_back({p, gi, n6, et, std::move(fams), canon});
            }
    return out;
}

}  // namespace

void census_stream(const CensusOptions& opt,
                   const std::function<void(const CensusRecord&)>& sink) {
    if (opt.min_n < 3 || opt.max_n < opt.min_n) throw InvalidParams("census: bad n range");
    const int slots = opt.max_n - opt.min_n + 1;

    if (opt.jobs <= 1) {
        for (int i = 0; i < slots; ++i)
            for (const CensusRecord& r : census_slice(opt.min_n + i, opt)) sink(r);
        return;
    }

    // Workers fill per-n slices; the calling thread emits them in order.  At
    // most `window` slices sit finished-but-unemitted, so memory stays
    // bounded for large sweeps.
    const int nthreads = std::min(opt.jobs, slots);
    const int window = nthreads + 2;
    std::mutex mu;
    std::condition_variable cv;
    std::map<int, std::vector<CensusRecord>> done;
    int claim_next = 0, emit_next = 0;
    bool failed = false;
    std::exception_ptr error;

    auto work = [&] {
        for (;;) {
            int i;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return failed || claim_next - emit_next < window; });
                if (failed || claim_next >= slots) return;
                i = claim_next++;
            }
            try {
                auto slice = census_slice(opt.min_n + i, opt);
                std::lock_guard<std::mutex> lock(mu);
                done.emplace(i, std::move(slice));
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                failed = true;
                cv.notify_all();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);

    auto fail_and_join = [&](std::exception_ptr e) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = e;
            failed = true;
            cv.notify_all();
        }
        for (auto& th : pool) th.join();
        std::rethrow_exception(error);
    };

    while (emit_next < slots) {
        std::vector<CensusRecord> slice;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return failed || done.count(emit_next) > 0; });
            if (failed) break;
            slice = std::move(done.at(emit_next));
            done.erase(emit_next);
            ++emit_next;
            cv.notify_all();
        }
        try {
            for (const CensusRecord& r : slice) sink(r);
        } catch (...) {
            fail_and_join(std::current_exception());
        }
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::vector<CensusRecord> census(const CensusOptions& opt) {
    std::vector<CensusRecord> out;
    census_stream(opt, [&](const CensusRecord& r) { out.push_back(r); });
    return out;
}

void write_csv_header(std::ostream& os) {
    os << "n,b,c,d,girth,perEdgeN6,edgeTransitive,families,canonicalTuple\n";
}

void write_csv_row(const CensusRecord& r, std::ostream& os) {
    os << r.params.n << ',' << r.params.b << ',' << r.params.c << ',' << r.params.d << ','
       << r.girth << ',' << r.per_edge_n6 << ',' << (r.edge_transitive ? "true" : "false") << ',';
    for (std::size_t i = 0; i < r.families.size(); ++i) {
        if (i) os << '+';
        os << to_string(r.families[i]);
    }
    os << ',' << r.canonical.n << ':' << r.canonical.b << ':' << r.canonical.c << ':'
       << r.canonical.d << '\n';
}

void write_csv(const std::vector<CensusRecord>& records, std::ostream& os) {
    write_csv_header(os);
    for (const CensusRecord& r : records) write_csv_row(r, os);
}

// ---- verification suites ----

bool VerifyReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; });
}

void VerifyReport::add(const std::string& label, bool good, const std::string& detail) {
    lines.push_back({label, good, detail});
}

VerifyReport verify_line_graph_table() {
    VerifyReport rep;
    struct Row {
        int n, k;
        PropellerParams published;
        FamilyTag family;
    };
    const std::vector<Row> table{
        {4, 1, {4, 1, 1, 1}, FamilyTag::F3},   {5, 2, {5, 1, 2, 2}, FamilyTag::F4},
        {8, 3, {8, 1, 3, 3}, FamilyTag::F3},   {10, 2, {10, 1, 2, 2}, FamilyTag::F4},
        {10, 3, {10, 1, 3, 3}, FamilyTag::F4}, {12, 5, {12, 1, 5, 5}, FamilyTag::F3},
        {24, 5, {24, 1, 5, 5}, FamilyTag::F3},
    };
    for (const Row& row : table) {
        const std::string label =
            "L(GP(" + std::to_string(row.n) + "," + std::to_string(row.k) + "))";
        PropellerParams lp{row.n, row.n - 1, row.n - row.k, row.k};
        LabeledGraph gp = build_generalized_petersen(row.n, row.k);
        LabeledGraph lg = line_graph(gp);
        LabeledGraph direct = build_propeller(lp, false);
        if (lg.adj != direct.adj) {
            rep.add(label, false, "line graph differs from " + to_string(lp));
            continue;
        }
        // arcs of the line graph correspond to 2-arcs of the base graph
        long long two_arcs = 0;
        for (const auto& nbrs : gp.adj)
            two_arcs += std::ssize(nbrs) * (std::ssize(nbrs) - 1);
        if (2 * (long long)direct.edge_count() != two_arcs) {
            rep.add(label, false, "arc count does not match the base graph's 2-arc count");
            continue;
        }
        auto orbit = param_orbit(lp);
        const bool in_orbit = std::find(orbit.begin(), orbit.end(), row.published) != orbit.end();
        LabeledGraph pub = build_propeller(row.published, false);
        const bool iso = are_isomorphic(direct, pub);
        const auto fams = family_memberships(row.published);
        const bool has_family = std::find(fams.begin(), fams.end(), row.family) != fams.end();
        const bool et = wing_to_flat_automorphism(pub, row.published.n).has_value();
        const bool good = in_orbit && iso && has_family && et;
        std::string detail = "= " + to_string(row.published) + ", family " + to_string(row.family);
        if (!in_orbit) detail += "; published tuple missing from parameter orbit";
        if (!iso) detail += "; not isomorphic to published tuple";
        if (!has_family) detail += "; family tag missing";
        if (!et) detail += "; wing-to-flat search failed";
        rep.add(label, good, detail);
    }
    return rep;
}

namespace {

// No tuple in the window realizes the row's printed count; say why, with
// evidence.  Either every shape match collapses to girth <= 4, or the
// per-edge counts of the matches never equal the printed value.  Counts come
// from the congruence ledger (exact at girth >= 5) and the first match is
// re-counted by brute hexagon enumeration to ground the ledger.
std::string disprove_case_row(const CaseRow& row, int min_n, int max_n) {
    long long shape_matches = 0;
    int scanned = 0, nonuniform = 0;
    std::map<long long, int> uniform_hist;
    std::optional<PropellerParams> first;
    for (int n = min_n; n <= max_n && scanned < 60; ++n) {
        scan_case_candidates(row, n, [&](const PropellerParams& p) {
            ++shape_matches;
            LabeledGraph g = build_propeller(p, false);
            if (propeller_girth(g, p) < 5) return true;
            ++scanned;
            const auto pred = predicted_per_edge_n6(p);
            const bool uniform = std::all_of(pred.begin(), pred.end(),
                                             [&](long long v) { return v == pred[0]; });
            if (uniform)
                ++uniform_hist[pred[0]];
            else
                ++nonuniform;
            if (!first) first = p;
            return scanned < 60;
        });
    }
    const std::string window = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) + "]";
    if (scanned == 0)
        return "disproven: all " + std::to_string(shape_matches) + " shape matches for " +
               window + " have girth <= 4; the congruences force a short cycle";
    if (uniform_hist.count(row.n6))
        return "inconsistent: a scanned tuple predicts the printed count, but no instance was "
               "accepted";
    LabeledGraph g = build_propeller(*first, false);
    const auto brute = per_edge_cycle_counts(g, *first, 6);
    const auto pred = predicted_per_edge_n6(*first);
    if (brute != pred)
        return "inconsistent: ledger and brute count disagree on " + to_string(*first);
    std::string detail = "disproven: " + std::to_string(scanned) + " girth >= 5 matches (" +
                         window + ") and none has per-edge N6 = " + std::to_string(row.n6) +
                         "; observed";
    for (const auto& [value, times] : uniform_hist)
        detail += " uniform " + std::to_string(value) + " x" + std::to_string(times);
    if (nonuniform > 0) detail += std::string(uniform_hist.empty() ? " " : ", ") + "nonuniform x" +
                                  std::to_string(nonuniform);
    detail += "; brute count on " + to_string(*first) + " confirms the ledger";
    return detail;
}

}  // namespace

VerifyReport verify_case_table(int min_n, int max_n) {
    VerifyReport rep;
    const auto instances = find_case_instances(min_n, max_n);
    for (const CaseRow& row : case_rows()) {
        const std::string label = "case " + std::to_string(row.id);
        auto it = instances.find(row.id);
        if (it == instances.end()) {
            rep.add(label, false, disprove_case_row(row, min_n, max_n));
            continue;
        }
        const PropellerParams& p = it->second;
        LabeledGraph g = build_propeller(p, false);
        const auto counts = per_edge_cycle_counts(g, p, 6);
        const bool uniform =
            std::all_of(counts.begin(), counts.end(), [&](long long c) { return c == row.n6; });
        const bool wants_transitive =
            std::find(transitive_case_ids.begin(), transitive_case_ids.end(), row.id) !=
            transitive_case_ids.end();
        const bool et = wing_to_flat_automorphism(g, p.n).has_value();
        const bool good = uniform && (et == wants_transitive);
        std::string detail = to_string(p) + ": per-edge N6 ";
        detail += uniform ? "= " + std::to_string(row.n6) : "mismatch";
        detail += et ? ", edge-transitive" : ", not edge-transitive";
        if (et != wants_transitive) detail += " (unexpected)";
        rep.add(label, good, detail);
    }
    return rep;
}

namespace {

// canonical forms of the row's representative under the rotation/reflection
// group, as a membership set
std::set<std::vector<int>> representative_orbit(const RelationRow& row, const PropellerParams& p) {
    const std::vector<int> base = relation_cycle(row, p);
    Permutation rho = instantiate(SchemaName::Rho, p);
    Permutation mu = instantiate(SchemaName::Mu, p);
    std::set<std::vector<int>> orbit;
    std::vector<int> cur(base), img(base.size());
    for (int s = 0; s < p.n; ++s) {
        orbit.insert(canonical_cycle(cur));
        for (std::size_t i = 0; i < cur.size(); ++i) img[i] = mu(cur[i]);
        orbit.insert(canonical_cycle(img));
        for (int& v : cur) v = rho(v);
    }
    return orbit;
}

std::array<long long, 6> orbit_per_edge_counts(const LabeledGraph& g, const PropellerParams& p,
                                               const std::set<std::vector<int>>& orbit) {
    std::array<long long, 6> counts{};
    for (std::size_t j = 0; j < all_edge_kinds.size(); ++j) {
        auto [u, v] = representative_edge(all_edge_kinds[j], p);
        for (const auto& cyc : cycles_through_edge(g, u, v, 6))
            if (orbit.count(canonical_cycle(cyc))) ++counts[j];
    }
    return counts;
}

}  // namespace

VerifyReport verify_relation_table(int max_n) {
    VerifyReport rep;
    const auto& rows = relation_rows();

    // one sweep hunts an isolating instance per row: girth >= 5 and no other
    // conditional row active; the sweep cap keeps the scan cheap, rows it
    // misses fall through to the orbit check below
    std::map<int, PropellerParams> isolated;
    const int sweep_cap = std::min(max_n, 48);
    for (int n = 6; n <= sweep_cap && isolated.size() < rows.size(); ++n)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c)
                for (int d = 1; d < n; ++d) {
                    PropellerParams p{n, b, c, d};
                    if (!p.valid()) continue;
                    const auto active = active_relations(p);
                    if (active.size() > 3) continue;
                    const int id = active.size() == 2 ? 1 : active[2];
                    if (isolated.count(id)) continue;
                    LabeledGraph g = build_propeller(p, false);
                    if (propeller_girth(g, p) < 5) continue;
                    isolated.emplace(id, p);
                    if (active.size() == 2) isolated.emplace(2, p);
                }

    for (const RelationRow& row : rows) {
        const std::string label = "relation " + std::to_string(row.id);
        auto it = isolated.find(row.id);
        if (it != isolated.end()) {
            const PropellerParams& p = it->second;
            LabeledGraph g = build_propeller(p, true);
            const bool genuine = genuine_cycle(g, relation_cycle(row, p));
            std::array<long long, 6> expected{};
            for (const RelationRow& r : rows) {
                if (r.id != row.id && r.id != 1 && r.id != 2) continue;
                for (std::size_t j = 0; j < expected.size(); ++j) expected[j] += r.per_edge[j];
            }
            const auto counts = per_edge_cycle_counts(g, p, 6);
            bool match = true;
            for (std::size_t j = 0; j < expected.size(); ++j)
                if (counts[j] != expected[j]) match = false;
            rep.add(label, genuine && match,
                    "isolated at " + to_string(p) + (genuine ? "" : "; representative degenerate") +
                        (match ? "; columns confirmed" : "; column mismatch"));
            continue;
        }
        // no isolating instance (row 3 lives only at n = 6, below girth 5):
        // fall back to counting the representative's own orbit on a witness
        std::optional<PropellerParams> witness;
        for (int n = 6; n <= max_n && !witness; ++n)
            for (int b = 1; b < n && !witness; ++b)
                for (int c = 1; c < n && !witness; ++c)
                    for (int d = 1; d < n && !witness; ++d) {
                        PropellerParams p{n, b, c, d};
                        if (!p.valid() || !relation_active(row, p)) continue;
                        LabeledGraph g = build_propeller(p, false);
                        if (genuine_cycle(g, relation_cycle(row, p))) witness = p;
                    }
        if (!witness) {
            rep.add(label, false, "no witness instance found");
            continue;
        }
        LabeledGraph g = build_propeller(*witness, false);
        const auto orbit = representative_orbit(row, *witness);
        const auto counts = orbit_per_edge_counts(g, *witness, orbit);
        bool match = true;
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j] != row.per_edge[j]) match = false;
        rep.add(label, match,
                "orbit-counted at " + to_string(*witness) +
                    (match ? "; columns confirmed" : "; column mismatch"));
    }
    return rep;
}

VerifyReport verify_identity_suite(const PropellerParams& p) {
    VerifyReport rep;
    const std::string at = " on " + to_string(p);
    Permutation rho = instantiate(SchemaName::Rho, p);
    Permutation mu = instantiate(SchemaName::Mu, p);

    rep.add("mu is an involution" + at, is_identity(compose(mu, mu)));
    rep.add("mu rho mu = rho^-1" + at, compose(compose(mu, rho), mu) == inverse(rho));

    const int a0 = vid(VertexClass::A, 0, p.n), a1 = vid(VertexClass::A, 1, p.n);
    Permutation murho = compose(mu, rho);
    rep.add("mu rho reverses the A0-A1 wing" + at, murho(a0) == a1 && murho(a1) == a0);

    if (sigma1star_applicable(p)) {
        using W = std::vector<WordTerm>;
        const W star_mu{{SchemaName::Sigma1Star}, {SchemaName::Mu}, {SchemaName::Sigma1Star},
                        {SchemaName::Mu}};
        const W star_rho{{SchemaName::Sigma1Star},
                         {SchemaName::Rho},
                         {SchemaName::Sigma1Star},
                         {SchemaName::Rho, true}};
        const W sigma1{{SchemaName::Sigma1}};
        rep.add("hub swap: (s1* mu)^2 = s1" + at, verify_identity(p, star_mu, sigma1));
        rep.add("hub swap: s1* rho s1* rho^-1 = s1" + at, verify_identity(p, star_rho, sigma1));

        LabeledGraph g = build_propeller(p, false);
        Permutation conj =
            evaluate_word({{SchemaName::Rho}, {SchemaName::Sigma1Star}, {SchemaName::Rho, true}}, p);
        const int b0 = vid(VertexClass::B, 0, p.n);
        rep.add("conjugated hub swap sends the wing to the flat" + at,
                is_automorphism(g, conj) && conj(a0) == a0 && conj(a1) == b0);
    } else {
        rep.add("hub swap identities skipped" + at, true, "order-4 map does not apply here");
    }
    return rep;
}

}  // namespace propeller
