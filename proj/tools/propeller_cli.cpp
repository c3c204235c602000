// Command-line front end: construct propeller graphs, print invariants,
// check schema maps, classify transitivity, compare graphs, sweep parameter
// censuses, and run the built-in verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <propeller/aut.hpp>
#include <propeller/census.hpp>
#include <propeller/cycles.hpp>
#include <propeller/families.hpp>
#include <propeller/formats.hpp>
#include <propeller/graph.hpp>
#include <propeller/perm.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

using namespace propeller;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct TupleArgs {
    int n = 0, b = 0, c = 0, d = 0;
    PropellerParams params() const { return {n, b, c, d}; }
};

void add_tuple_options(CLI::App& cmd, TupleArgs& t) {
    cmd.add_option("--n", t.n, "ring size")->required();
    cmd.add_option("--b", t.b, "hub blade step")->required();
    cmd.add_option("--c", t.c, "tip blade step")->required();
    cmd.add_option("--d", t.d, "tip wing step")->required();
}

// returns nullopt and explains on stdout/stderr when the tuple is rejected
std::optional<PropellerParams> checked_params(const TupleArgs& t) {
    PropellerParams p = t.params();
    try {
        p.validate();
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return std::nullopt;
    }
    return p;
}

ordered_json tuple_json(const PropellerParams& p) {
    return ordered_json{{"n", p.n}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

std::string method_name(ClassifyMethod m) {
    switch (m) {
        case ClassifyMethod::ParameterOrbit: return "parameter-orbit";
        case ClassifyMethod::IsomorphismFallback: return "isomorphism-fallback";
        case ClassifyMethod::BruteForce: return "brute-force";
    }
    return "?";
}

int run_gen(const TupleArgs& t, const std::string& format) {
    auto p = checked_params(t);
    if (!p) return kExitUsage;
    LabeledGraph g = build_propeller(*p);
    if (format == "graph6")
        std::cout << to_graph6(g) << "\n";
    else if (format == "dot")
        std::cout << to_dot(g, to_string(*p));
    else
        std::cout << to_json(g) << "\n";
    return 0;
}

int run_invariants(const TupleArgs& t) {
    auto p = checked_params(t);
    if (!p) return kExitUsage;
    LabeledGraph g = build_propeller(*p, false);
    const auto counts = per_edge_cycle_counts(g, *p, 6);
    ordered_json per_edge;
    bool uniform = true;
    for (std::size_t j = 0; j < all_edge_kinds.size(); ++j) {
        per_edge[to_string(all_edge_kinds[j])] = counts[j];
        uniform = uniform && counts[j] == counts[0];
    }
    ordered_json out = tuple_json(*p);
    out["girth"] = propeller_girth(g, *p);
    out["perEdgeN6"] = per_edge;
    out["uniform"] = uniform;
    out["activeRelations"] = active_relations(*p);
    out["canonicalTuple"] = to_string(canonical_tuple(*p));
    out["orbitSize"] = param_orbit(*p).size();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_check_aut(const TupleArgs& t, const std::string& name) {
    auto p = checked_params(t);
    if (!p) return kExitUsage;
    auto schema_name = parse_schema_name(name);
    if (!schema_name) {
        std::cerr << "unknown map name: " << name << "\n";
        return kExitUsage;
    }
    ordered_json out = tuple_json(*p);
    out["name"] = name;

    FreeSymbols symbols;
    const SchemaTable& table = schema_table(*schema_name);
    if (table.uses_z) {
        auto zs = schema_symbol_solutions(*schema_name, *p);
        if (zs.empty()) {
            out["applicable"] = false;
            out["reason"] = "no admissible free symbol";
            std::cout << out.dump(2) << "\n";
            return kExitVerifyFail;
        }
        symbols.z = zs.front();
        out["z"] = zs.front();
    }

    LabeledGraph g = build_propeller(*p, false);
    try {
        ResidueSchema s = schema(*schema_name, *p, symbols);
        if (table.uses_r) out["r"] = s.r;
        Permutation perm = instantiate(s);
        out["bijective"] = true;
        const bool aut = is_automorphism(g, perm);
        out["automorphism"] = aut;
        out["sendsWingToFlat"] =
            perm(vid(VertexClass::A, 0, p->n)) == vid(VertexClass::A, 0, p->n) &&
            perm(vid(VertexClass::A, 1, p->n)) == vid(VertexClass::B, 0, p->n);
        std::cout << out.dump(2) << "\n";
        return aut ? 0 : kExitVerifyFail;
    } catch (const NotBijective& e) {
        out["bijective"] = false;
        out["missingVertex"] = e.missing_vertex < g.vertex_count()
                                   ? g.names[std::size_t(e.missing_vertex)]
                                   : std::to_string(e.missing_vertex);
        std::cout << out.dump(2) << "\n";
        return kExitVerifyFail;
    } catch (const InvalidParams& e) {
        out["applicable"] = false;
        out["reason"] = e.what();
        std::cout << out.dump(2) << "\n";
        return kExitVerifyFail;
    }
}

int run_classify(const TupleArgs& t) {
    auto p = checked_params(t);
    if (!p) return kExitUsage;
    Classification c = classify(*p);
    ordered_json out = tuple_json(*p);
    out["edgeTransitive"] = c.edge_transitive;
    ordered_json fams = ordered_json::array();
    for (FamilyTag f : c.families) fams.push_back(to_string(f));
    out["families"] = fams;
    out["method"] = method_name(c.method);
    if (c.edge_transitive) {
        if (auto w = wing_to_flat_automorphism(build_propeller(*p, false), p->n))
            out["witness"] = w->img;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_isomorphic(const TupleArgs& t1, const TupleArgs& t2) {
    auto p = checked_params(t1);
    auto q = checked_params(t2);
    if (!p || !q) return kExitUsage;
    const bool iso = are_isomorphic(build_propeller(*p, false), build_propeller(*q, false));
    ordered_json out;
    out["first"] = tuple_json(*p);
    out["second"] = tuple_json(*q);
    out["isomorphic"] = iso;
    std::cout << out.dump(2) << "\n";
    return iso ? 0 : kExitVerifyFail;
}

struct CensusArgs {
    int min_n = 3;
    int max_n = 30;
    int jobs = 0;
    bool dedupe = false;
    std::optional<int> girth;
    std::string out_path;
};

int run_census(const CensusArgs& args) {
    CensusOptions opt;
    opt.min_n = args.min_n;
    opt.max_n = args.max_n;
    opt.jobs = args.jobs > 0 ? args.jobs : int(std::thread::hardware_concurrency());
    opt.dedupe = args.dedupe;
    opt.girth_filter = args.girth;
    if (opt.min_n < 3 || opt.min_n > opt.max_n) {
        std::cerr << "census needs 3 <= min-n <= max-n\n";
        return kExitUsage;
    }
    const bool to_stdout = args.out_path.empty();
    std::ofstream file;
    if (!to_stdout) {
        file.open(args.out_path);
        if (!file) {
            std::cerr << "cannot open " << args.out_path << " for writing\n";
            return kExitVerifyFail;
        }
    }
    std::ostream& os = to_stdout ? std::cout : file;

    // rows are written as they arrive so a long sweep never sits in memory
    std::map<int, long long> by_girth;
    std::map<std::string, long long> by_family;
    long long total = 0, transitive = 0;
    write_csv_header(os);
    census_stream(opt, [&](const CensusRecord& r) {
        write_csv_row(r, os);
        ++total;
        ++by_girth[r.girth];
        if (r.edge_transitive) ++transitive;
        for (FamilyTag f : r.families) ++by_family[to_string(f)];
    });

    // the summary goes to stderr when the CSV occupies stdout
    std::ostream& sum = to_stdout ? std::cerr : std::cout;
    sum << "records: " << total << " (n " << opt.min_n << ".." << opt.max_n;
    if (opt.dedupe) sum << ", deduplicated";
    if (opt.girth_filter) sum << ", girth " << *opt.girth_filter;
    sum << ")\n";
    sum << "edge-transitive: " << transitive << "\n";
    sum << "by girth:";
    for (const auto& [g, count] : by_girth) sum << "  " << g << ": " << count;
    sum << "\nby family:";
    if (by_family.empty()) sum << "  none";
    for (const auto& [f, count] : by_family) sum << "  " << f << ": " << count;
    sum << "\n";
    return 0;
}

struct VerifyArgs {
    std::string table;
    std::optional<int> min_n, max_n;
};

int print_report(const VerifyReport& rep) {
    for (const auto& line : rep.lines) {
        std::cout << (line.ok ? "PASS" : "FAIL") << "  " << line.label;
        if (!line.detail.empty()) std::cout << ": " << line.detail;
        std::cout << "\n";
    }
    std::cout << (rep.ok() ? "all checks passed" : "some checks FAILED") << "\n";
    return rep.ok() ? 0 : kExitVerifyFail;
}

int run_verify(const VerifyArgs& args) {
    if (args.table == "1") return print_report(verify_line_graph_table());
    if (args.table == "2")
        return print_report(verify_case_table(args.min_n.value_or(79), args.max_n.value_or(160)));
    if (args.table == "relations")
        return print_report(verify_relation_table(args.max_n.value_or(160)));
    // identities: the order-4 family, its smallest relatives, and the
    // instance where the order-4 map is refused
    VerifyReport all;
    std::vector<PropellerParams> instances = family_samples(FamilyTag::F1Star, args.max_n.value_or(200));
    instances.push_back({12, 10, 2, 11});
    for (const PropellerParams& p : instances)
        for (auto& line : verify_identity_suite(p).lines) all.lines.push_back(std::move(line));
    return print_report(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"propeller graphs: construction, invariants, transitivity, census"};
    app.require_subcommand(1);
    int rc = 0;

    TupleArgs tuple;
    std::string format = "graph6";
    auto* gen = app.add_subcommand("gen", "construct one graph and print it");
    add_tuple_options(*gen, tuple);
    gen->add_option("--format", format, "graph6, dot, or json")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));
    gen->callback([&] { rc = run_gen(tuple, format); });

    auto* inv = app.add_subcommand("invariants", "girth and 6-cycle census of one graph");
    add_tuple_options(*inv, tuple);
    inv->callback([&] { rc = run_invariants(tuple); });

    std::string schema_name;
    auto* chk = app.add_subcommand("check-aut", "instantiate a named map and test it");
    add_tuple_options(*chk, tuple);
    chk->add_option("--name", schema_name, "map name, e.g. sigma1, mu, beta3")->required();
    chk->callback([&] { rc = run_check_aut(tuple, schema_name); });

    auto* cls = app.add_subcommand("classify", "families and edge-transitivity");
    add_tuple_options(*cls, tuple);
    cls->callback([&] { rc = run_classify(tuple); });

    TupleArgs tuple2;
    auto* iso = app.add_subcommand("isomorphic", "compare two parameter tuples");
    add_tuple_options(*iso, tuple);
    iso->add_option("--n2", tuple2.n, "second ring size")->required();
    iso->add_option("--b2", tuple2.b, "second hub blade step")->required();
    iso->add_option("--c2", tuple2.c, "second tip blade step")->required();
    iso->add_option("--d2", tuple2.d, "second tip wing step")->required();
    iso->callback([&] { rc = run_isomorphic(tuple, tuple2); });

    CensusArgs census_args;
    auto* cen = app.add_subcommand("census", "sweep all tuples, write CSV");
    cen->add_option("--min-n", census_args.min_n, "smallest ring size (default 3)");
    cen->add_option("--max-n", census_args.max_n, "largest ring size (default 30)");
    cen->add_option("--jobs", census_args.jobs, "worker threads (default: hardware)");
    cen->add_flag("--dedupe", census_args.dedupe, "keep lex-least orbit representatives only");
    cen->add_option("--girth", census_args.girth, "keep only this girth");
    cen->add_option("--out", census_args.out_path, "CSV path (default: stdout)");
    cen->callback([&] { rc = run_census(census_args); });

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "re-derive a published table");
    ver->add_option("--table", verify_args.table, "1, 2, relations, or identities")
        ->required()
        ->check(CLI::IsMember({"1", "2", "relations", "identities"}));
    ver->add_option("--min-n", verify_args.min_n, "window start (table 2)");
    ver->add_option("--max-n", verify_args.max_n, "window end (tables 2, relations, identities)");
    ver->callback([&] { rc = run_verify(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return rc;
}
