// srbetti: graded Betti numbers of squarefree monomial ideals, coning
// families, squarefree lex constructions, and Betti-diagram posets.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srbetti/srbetti.hpp"

using namespace srbetti;

namespace {

// ---------------------------------------------------------------- parsing --

std::vector<long long> parse_csv_longs(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InvalidParameter("empty entry in list '" + s + "'");
        out.push_back(std::stoll(tok));
    }
    return out;
}

std::vector<ConeIndex> parse_cone_list(const std::string& s) {
    std::vector<ConeIndex> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(ConeIndex::parse(tok));
    return out;
}

// "x1*x2*x5" -> {1,2,5}; 1-based indices, no exponents
std::vector<int> parse_monomial(const std::string& mono) {
    std::vector<int> vars;
    std::stringstream ss(mono);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.size() < 2 || tok[0] != 'x' || tok.find('^') != std::string::npos)
            throw InvalidParameter("bad monomial factor '" + tok + "'; expected x<index> with no exponent");
        vars.push_back(std::stoi(tok.substr(1)));
    }
    if (vars.empty()) throw InvalidParameter("empty monomial");
    return vars;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open '" + path + "'");
    return json::parse(in);
}

std::string monomial_string(VertexSet s) {
    std::string out;
    for (int v : vertices_of(s)) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
    }
    return out.empty() ? "1" : out;
}

// Shared complex/ideal input block.
struct ComplexInput {
    int n = 0;
    std::string facets_arg, gens_arg, complex_file, ideal_file;

    void attach(CLI::App* cmd, bool required = true) {
        cmd->add_option("--n", n, "ambient vertex/variable count (with --facets or --gens)");
        auto* group = cmd->add_option_group("input", "complex or ideal source");
        group->add_option("--facets", facets_arg, "facet list as JSON, e.g. '[[1,4],[2,3]]'");
        group->add_option("--gens", gens_arg,
                          "generators as JSON '[[1,2],[1,3]]' or monomials 'x1*x2,x1*x3'");
        group->add_option("--complex", complex_file, "complex JSON file {\"n\":...,\"facets\":[...]}");
        group->add_option("--ideal", ideal_file, "ideal JSON file {\"n\":...,\"gens\":[...]}");
        group->require_option(required ? 1 : 0, 1);
    }

    SimplicialComplex resolve() const {
        if (!complex_file.empty()) return complex_from_json(load_json_file(complex_file));
        if (!ideal_file.empty()) return complex_of_ideal(ideal_from_json(load_json_file(ideal_file)));
        if (!facets_arg.empty()) {
            if (n <= 0) throw InvalidParameter("--facets needs --n");
            return complex_from_json(json{{"n", n}, {"facets", json::parse(facets_arg)}});
        }
        if (!gens_arg.empty()) {
            if (n <= 0) throw InvalidParameter("--gens needs --n");
            std::vector<VertexSet> gens;
            if (gens_arg.front() == '[') {
                for (const auto& g : json::parse(gens_arg))
                    gens.push_back(make_vertex_set(g.get<std::vector<int>>(), n));
            } else {
                std::stringstream ss(gens_arg);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    gens.push_back(make_vertex_set(parse_monomial(tok), n));
            }
            return complex_of_ideal(make_ideal(n, gens));
        }
        throw InvalidParameter("no complex given; use --facets, --gens, --complex or --ideal");
    }
};

void print_complex_text(const SimplicialComplex& c) {
    std::printf("n = %d\n", c.n);
    std::string facets;
    for (VertexSet s : facets_of(c)) {
        if (!facets.empty()) facets += " ";
        facets += to_string(s);
    }
    std::printf("facets: %s\n", facets.c_str());
    std::printf("f-vector: %s\n", f_vector(c).to_string().c_str());
}

void print_ideal_text(const SquarefreeIdeal& ideal) {
    std::string gens;
    for (VertexSet g : ideal.gens) {
        if (!gens.empty()) gens += ", ";
        gens += monomial_string(g);
    }
    std::printf("ideal: (%s)\n", ideal.is_zero() ? "0" : gens.c_str());
}

// ------------------------------------------------------------ verify data --

SquarefreeIdeal builtin_ideal_I() {
    return make_ideal(6, {make_vertex_set({1, 2}, 6), make_vertex_set({1, 3}, 6),
                          make_vertex_set({2, 3}, 6), make_vertex_set({3, 4}, 6),
                          make_vertex_set({3, 5}, 6), make_vertex_set({3, 6}, 6),
                          make_vertex_set({4, 5}, 6)});
}

SquarefreeIdeal builtin_ideal_J() {
    return make_ideal(6, {make_vertex_set({1, 2}, 6), make_vertex_set({1, 4}, 6),
                          make_vertex_set({2, 3}, 6), make_vertex_set({2, 5}, 6),
                          make_vertex_set({3, 4}, 6), make_vertex_set({4, 5}, 6),
                          make_vertex_set({4, 6}, 6), make_vertex_set({1, 3, 5, 6}, 6)});
}

BettiDiagram builtin_table_I() {
    BettiDiagram b;
    b.n = 6;
    b.p = 101;
    b.add(0, 0, 1);
    b.add(1, 2, 7);
    b.add(2, 3, 12);
    b.add(3, 4, 10);
    b.add(4, 5, 5);
    b.add(5, 6, 1);
    b.add(2, 4, 1);
    b.add(3, 5, 1);
    return b;
}

BettiDiagram builtin_table_J() {
    BettiDiagram b;
    b.n = 6;
    b.p = 101;
    b.add(0, 0, 1);
    b.add(1, 2, 7);
    b.add(2, 3, 12);
    b.add(3, 4, 8);
    b.add(4, 5, 2);
    b.add(1, 4, 1);
    b.add(2, 5, 2);
    b.add(3, 6, 1);
    return b;
}

int check_line(const char* label, bool ok) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", label);
    return ok ? 0 : 1;
}

// ------------------------------------------------------------ subcommands --

struct CommonOpts {
    std::uint32_t characteristic = 101;
    std::string format = "text";
    int threads = 0;
};

void attach_common(CLI::App* cmd, CommonOpts& opts, bool with_char = true) {
    if (with_char) cmd->add_option("--char", opts.characteristic, "field characteristic (default 101)");
    cmd->add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
}

int run_betti(const ComplexInput& input, const CommonOpts& opts, std::optional<int> degree_cap) {
    SimplicialComplex c = input.resolve();
    HochsterOptions hopts;
    hopts.degree_cap = degree_cap;
    hopts.threads = opts.threads;
    BettiDiagram b = betti_via_hochster(c, opts.characteristic, hopts);
    if (opts.format == "json")
        std::printf("%s\n", to_json(b).dump().c_str());
    else
        std::printf("%s", render_macaulay2(b).c_str());
    return 0;
}

int run_cone(const ComplexInput& input, const CommonOpts& opts, const std::string& ms_arg,
             bool with_betti) {
    SimplicialComplex c = cone_seq(input.resolve(), parse_cone_list(ms_arg));
    if (opts.format == "json") {
        json out = to_json(c);
        out["fvector"] = f_vector(c).entries;
        if (with_betti) out["betti"] = to_json(betti_via_hochster(c, opts.characteristic));
        std::printf("%s\n", out.dump().c_str());
    } else {
        print_complex_text(c);
        print_ideal_text(minimal_nonfaces(c));
        if (with_betti) std::printf("%s", render_macaulay2(betti_via_hochster(c, opts.characteristic)).c_str());
    }
    return 0;
}

int run_family(const std::string& fvector_arg, const std::string& pre_cones, const std::string& j_arg,
               int depth, bool verify_distinct, const CommonOpts& opts) {
    FVector f(parse_csv_longs(fvector_arg));
    f.require_well_formed();
    if (!pre_cones.empty()) f = fvector_cone_seq(f, parse_cone_list(pre_cones));
    ConeTree tree = cone_tree(f, ConeIndex::parse(j_arg), depth);
    if (opts.format == "json")
        std::printf("%s\n", to_json(tree).dump().c_str());
    else {
        std::printf("root: %s\n", f.to_string().c_str());
        for (const auto& [key, fv] : tree.nodes)
            if (!key.empty()) std::printf("%s: %s\n", key.c_str(), fv.to_string().c_str());
    }
    if (verify_distinct) {
        if (tree.all_distinct()) {
            std::printf("distinct: yes (%zu nodes, %zu leaves)\n", tree.nodes.size(),
                        tree.leaves().size());
        } else {
            std::printf("distinct: NO, %zu collision(s)\n", tree.collisions.size());
            for (const auto& [a, b] : tree.collisions)
                std::printf("collision: '%s' == '%s'\n", a.c_str(), b.c_str());
            return 1;
        }
    }
    return 0;
}

int run_lex(const std::string& fvector_arg, const CommonOpts& opts, bool with_betti,
            bool single_degree) {
    FVector f(parse_csv_longs(fvector_arg));
    SimplicialComplex lex = squarefree_lex_complex(f); // throws NotAnFVector if unrealizable
    auto degree = lex_generated_in_single_degree(f);
    if (single_degree) {
        if (degree)
            std::printf("single degree: %d\n", *degree);
        else
            std::printf("single degree: no\n");
        return degree ? 0 : 1;
    }
    if (opts.format == "json") {
        json out;
        out["complex"] = to_json(lex);
        out["fvector"] = f.entries;
        if (lex.has_all_singletons()) out["ideal"] = to_json(minimal_nonfaces(lex));
        if (degree) out["single_degree"] = *degree;
        if (with_betti) out["betti"] = to_json(betti_via_hochster(lex, opts.characteristic));
        std::printf("%s\n", out.dump().c_str());
    } else {
        print_complex_text(lex);
        if (lex.has_all_singletons()) print_ideal_text(minimal_nonfaces(lex));
        if (degree) std::printf("generated in single degree %d\n", *degree);
        if (with_betti) std::printf("%s", render_macaulay2(betti_via_hochster(lex, opts.characteristic)).c_str());
    }
    return 0;
}

int run_search(const std::string& fvector_arg, const CommonOpts& opts, bool mod_iso,
               long long max_complexes, const std::string& report) {
    FVector f(parse_csv_longs(fvector_arg));
    PosetOptions popts;
    popts.enumerate.mod_iso = mod_iso;
    popts.enumerate.max_complexes = max_complexes;
    popts.threads = opts.threads;
    BettiPoset poset = build_poset(f.n(), f, opts.characteristic, popts);
    if (opts.format == "json") {
        json out = to_json(poset);
        if (report == "minima") {
            json minima = json::array();
            for (std::size_t i : poset.minimal_indices()) minima.push_back(to_json(poset.diagrams[i]));
            out = json{{"fvector", f.entries}, {"char", poset.p}, {"minima", minima},
                       {"unique_min", has_unique_min(poset)}};
        }
        out["complexes"] = poset.complexes_seen;
        out["truncated"] = poset.truncated;
        std::printf("%s\n", out.dump().c_str());
    } else {
        std::printf("complexes: %lld%s, distinct diagrams: %zu, unique minimum: %s\n",
                    poset.complexes_seen, poset.truncated ? " (truncated)" : "",
                    poset.diagrams.size(), has_unique_min(poset) ? "yes" : "no");
        if (report != "minima")
            for (std::size_t i = 0; i < poset.diagrams.size(); ++i) {
                std::printf("diagram %zu:\n%s", i, render_macaulay2(poset.diagrams[i]).c_str());
            }
        if (report != "poset") {
            std::printf("minimal diagrams:\n");
            for (std::size_t i : poset.minimal_indices())
                std::printf("%s", render_macaulay2(poset.diagrams[i]).c_str());
        }
    }
    return 0;
}

int run_verify_paper_examples(const CommonOpts& opts) {
    int fails = 0;
    BettiDiagram bI = betti_via_hochster(complex_of_ideal(builtin_ideal_I()), opts.characteristic);
    BettiDiagram bJ = betti_via_hochster(complex_of_ideal(builtin_ideal_J()), opts.characteristic);
    fails += check_line("beta_I matches the published table", bI.same_entries(builtin_table_I()));
    fails += check_line("beta_J matches the published table", bJ.same_entries(builtin_table_J()));
    fails += check_line("column sums (1,7,13,11,5,1) and (1,8,14,9,2)",
                        total_betti(bI) == std::vector<long long>{1, 7, 13, 11, 5, 1} &&
                            total_betti(bJ) == std::vector<long long>{1, 8, 14, 9, 2});
    std::vector<long long> dtuple{1, 0, -7, 12, -9, 4, -1};
    fails += check_line("d-tuples both equal (1,0,-7,12,-9,4,-1)",
                        diagonal_sums(bI) == dtuple && diagonal_sums(bJ) == dtuple);
    FVector f = fvector_of({6, 8, 4, 0, 0, 0});
    fails += check_line("Hilbert-series check for both diagrams",
                        hilbert_series_check(bI, f) && hilbert_series_check(bJ, f));
    fails += check_line("pair is incomparable", compare(bI, bJ) == DiagramOrder::Incomparable);
    fails += check_line("diagonal witness j = 6", check_diag_witness({bI, bJ}) == 6);
    fails += check_line("sum = |d| holds for J and fails for I",
                        check_sum_equals_abs_diag(bJ) && !check_sum_equals_abs_diag(bI));
    fails += check_line("family clause (J,I) with k = 3",
                        check_betti_family(bJ, bI) && betti_family_k(bJ, bI) == 3);
    return fails ? 1 : 0;
}

int run_verify_path(int n, const CommonOpts& opts) {
    int fails = 0;
    for (int k = 1; k <= n - 1; ++k) {
        SimplicialComplex path = path_complex(n, k);
        BettiDiagram b = betti_via_hochster(path, opts.characteristic);
        bool linear = true;
        for (const auto& [ij, v] : b.entries)
            if (!((ij.first == 0 && ij.second == 0) || ij.second == ij.first + 1)) linear = false;
        std::string label = "path n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            ": 2-linear and single-sign diagonals";
        fails += check_line(label.c_str(), linear && check_sum_equals_abs_diag(b));
    }
    return fails ? 1 : 0;
}

int run_verify_cycle(int n, const CommonOpts& opts) {
    SimplicialComplex cycle = cycle_complex(n);
    BettiDiagram b = betti_via_hochster(cycle, opts.characteristic);
    bool support_ok = true;
    for (const auto& [ij, v] : b.entries) {
        auto [i, j] = ij;
        bool allowed = (i == 0 && j == 0) || (j == i + 1 && i >= 1 && i <= n - 2) || (i == n - 2 && j == n);
        if (!allowed) support_ok = false;
    }
    int fails = 0;
    std::string label = "cycle n=" + std::to_string(n) + ": support on rows 1 and (n-2,n) only";
    fails += check_line(label.c_str(), support_ok);
    fails += check_line("cycle: single-sign diagonals", check_sum_equals_abs_diag(b));
    return fails ? 1 : 0;
}

int run_verify_witness(const std::vector<std::string>& files) {
    std::vector<BettiDiagram> diagrams;
    for (const auto& f : files) diagrams.push_back(diagram_from_json(load_json_file(f)));
    auto j = check_diag_witness(diagrams);
    if (j)
        std::printf("witness diagonal: %d\n", *j);
    else
        std::printf("witness diagonal: none\n");
    return j ? 0 : 1;
}

int run_verify_lemma33(int samples, std::uint64_t seed, int max_n, const CommonOpts& opts) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < samples; ++trial) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        std::vector<VertexSet> facets;
        int m = static_cast<int>(rng() % static_cast<unsigned>(2 * n + 1));
        for (int i = 0; i < m; ++i) {
            VertexSet f = rng() & full_set(n);
            if (f) facets.push_back(f);
        }
        SimplicialComplex c = from_facets(n, facets);
        BettiDiagram base = betti_via_hochster(c, opts.characteristic);
        for (int j = 0; j <= n; ++j) {
            BettiDiagram coned = betti_via_hochster(cone_j(c, ConeIndex::of(j)), opts.characteristic);
            for (const auto& [ij, v] : coned.entries)
                if (ij.second <= j + 1 && base.at(ij.first, ij.second) != v)
                    return check_line("cone diagonal preservation", false);
            for (const auto& [ij, v] : base.entries)
                if (ij.second <= j + 1 && coned.at(ij.first, ij.second) != v)
                    return check_line("cone diagonal preservation", false);
        }
        if (!betti_via_hochster(cone_inf(c), opts.characteristic).same_entries(base))
            return check_line("full-cone Betti invariance", false);
    }
    check_line("cone diagonal preservation (sampled)", true);
    return 0;
}

int run_verify_cone0(int samples, std::uint64_t seed, int max_n, const CommonOpts& opts) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < samples; ++trial) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        VertexSet facet = rng() & full_set(n);
        SimplicialComplex c = from_facets(n, facet ? std::vector<VertexSet>{facet} : std::vector<VertexSet>{});
        for (int extra = static_cast<int>(rng() % 4); extra > 0; --extra) {
            VertexSet f = rng() & full_set(n);
            if (f) c = from_facets(n, [&] {
                auto fs = facets_of(c);
                fs.push_back(f);
                return fs;
            }());
        }
        BettiDiagram base = betti_via_hochster(c, opts.characteristic);
        BettiDiagram direct = betti_via_hochster(cone_j(c, ConeIndex::of(0)), opts.characteristic);
        BettiDiagram formula;
        formula.n = c.n + 1;
        formula.p = base.p;
        for (const auto& [ij, v] : base.entries)
            if (ij.first == 0) formula.add(0, ij.second, v);
        for (int i = 1; i <= c.n + 1; ++i)
            for (int j = i + 1; j <= c.n + 1; ++j) {
                long long v = base.at(i - 1, j - 1) + base.at(i, j);
                if (j == i + 1) v += binomial(c.n, i);
                formula.add(i, j, v);
            }
        if (!direct.same_entries(formula)) return check_line("0-cone closed formula", false);
    }
    check_line("0-cone closed formula (sampled)", true);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Betti numbers of squarefree monomial ideals via Hochster's formula"};
    app.require_subcommand(1);

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "Betti diagram of a complex or ideal");
    ComplexInput betti_input;
    CommonOpts betti_opts;
    int degree_cap = -1;
    betti_input.attach(betti_cmd);
    attach_common(betti_cmd, betti_opts);
    betti_cmd->add_option("--degree-cap", degree_cap, "compute rows with degree <= cap only");

    // cone
    auto* cone_cmd = app.add_subcommand("cone", "apply a coning sequence to a complex");
    ComplexInput cone_input;
    CommonOpts cone_opts;
    std::string ms_arg;
    bool cone_betti = false;
    cone_input.attach(cone_cmd);
    attach_common(cone_cmd, cone_opts);
    cone_cmd->add_option("--ms", ms_arg, "cone indices, e.g. '0,inf,3'")->required();
    cone_cmd->add_flag("--betti", cone_betti, "also print the Betti diagram");

    // family
    auto* family_cmd = app.add_subcommand("family", "f-vector tree under {j, inf} coning");
    CommonOpts family_opts;
    std::string family_fvector, pre_cones, family_j;
    int family_depth = 0;
    bool verify_distinct = false;
    family_cmd->add_option("--fvector", family_fvector, "starting f-vector, e.g. '6,8,4,0,0,0'")->required();
    family_cmd->add_option("--pre-cones", pre_cones, "cone indices applied before branching");
    family_cmd->add_option("--j", family_j, "finite branch index (the other branch is inf)")->required();
    family_cmd->add_option("--depth", family_depth, "tree depth")->required();
    family_cmd->add_flag("--verify-distinct", verify_distinct, "fail when node f-vectors collide");
    attach_common(family_cmd, family_opts, false);

    // lex
    auto* lex_cmd = app.add_subcommand("lex", "squarefree lex complex and ideal for an f-vector");
    CommonOpts lex_opts;
    std::string lex_fvector;
    bool lex_betti = false, lex_single = false;
    lex_cmd->add_option("--fvector", lex_fvector, "target f-vector")->required();
    lex_cmd->add_flag("--betti", lex_betti, "also print the Betti diagram");
    lex_cmd->add_flag("--single-degree", lex_single, "exit 0 iff generated in a single degree");
    attach_common(lex_cmd, lex_opts);

    // search
    auto* search_cmd = app.add_subcommand("search", "Betti-diagram poset by exhaustive enumeration");
    CommonOpts search_opts;
    std::string search_fvector, report = "all";
    bool mod_iso = false;
    long long max_complexes = -1;
    search_cmd->add_option("--fvector", search_fvector, "target f-vector")->required();
    search_cmd->add_flag("--mod-iso", mod_iso, "one complex per isomorphism class");
    search_cmd->add_option("--max-complexes", max_complexes, "stop after this many complexes");
    search_cmd->add_option("--report", report, "minima, poset or all")
        ->check(CLI::IsMember({"minima", "poset", "all"}));
    attach_common(search_cmd, search_opts);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification runs; exit 1 on failure");
    CommonOpts verify_opts;
    attach_common(verify_cmd, verify_opts);
    verify_cmd->require_subcommand(1);
    auto* v_paper = verify_cmd->add_subcommand("paper-examples", "recompute the published pair end to end");
    auto* v_path = verify_cmd->add_subcommand("path", "path complexes are 2-linear");
    int path_n = 5;
    v_path->add_option("--n", path_n, "vertex count")->required();
    auto* v_cycle = verify_cmd->add_subcommand("cycle", "cycle Betti support");
    int cycle_n = 5;
    v_cycle->add_option("--n", cycle_n, "vertex count")->required();
    auto* v_witness = verify_cmd->add_subcommand("witness", "diagonal witness over diagram files");
    std::vector<std::string> witness_files;
    v_witness->add_option("--diagrams", witness_files, "diagram JSON files")->required()->expected(-2);
    auto* v_lemma33 = verify_cmd->add_subcommand("lemma33", "sampled cone diagonal preservation");
    auto* v_cone0 = verify_cmd->add_subcommand("cone0", "sampled 0-cone closed formula");
    int samples = 50, max_n = 5;
    std::uint64_t seed = 1;
    for (CLI::App* cmd : {v_lemma33, v_cone0}) {
        cmd->add_option("--samples", samples, "number of random complexes");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--max-n", max_n, "largest vertex count sampled");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (betti_cmd->parsed())
            return run_betti(betti_input, betti_opts,
                             degree_cap >= 0 ? std::optional<int>(degree_cap) : std::nullopt);
        if (cone_cmd->parsed()) return run_cone(cone_input, cone_opts, ms_arg, cone_betti);
        if (family_cmd->parsed())
            return run_family(family_fvector, pre_cones, family_j, family_depth, verify_distinct,
                              family_opts);
        if (lex_cmd->parsed()) return run_lex(lex_fvector, lex_opts, lex_betti, lex_single);
        if (search_cmd->parsed())
            return run_search(search_fvector, search_opts, mod_iso, max_complexes, report);
        if (verify_cmd->parsed()) {
            if (v_paper->parsed()) return run_verify_paper_examples(verify_opts);
            if (v_path->parsed()) return run_verify_path(path_n, verify_opts);
            if (v_cycle->parsed()) return run_verify_cycle(cycle_n, verify_opts);
            if (v_witness->parsed()) return run_verify_witness(witness_files);
            if (v_lemma33->parsed()) return run_verify_lemma33(samples, seed, max_n, verify_opts);
            if (v_cone0->parsed()) return run_verify_cone0(samples, seed, max_n, verify_opts);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "error: bad JSON input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
