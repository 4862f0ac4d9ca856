#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>

#include "defcolor/discharging.hpp"
#include "defcolor/errors.hpp"
#include "defcolor/generators.hpp"
#include "defcolor/io.hpp"
#include "defcolor/local_search.hpp"
#include "defcolor/oracle.hpp"
#include "defcolor/reducer.hpp"

namespace {

using namespace defcolor;

// exit-code contract: 0 ok, 2 parse, 3 unsat, 4 precondition, 5 internal
// contradiction (with audit)
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kUnsat = 3;
constexpr int kPrecondition = 4;
constexpr int kContradiction = 5;

unsigned long long node_budget() {
    if (const char* env = std::getenv("DEFCOLOR_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
        std::cerr << "warning: ignoring invalid DEFCOLOR_BUDGET\n";
    }
    return kDefaultNodeBudget;
}

struct GenusArgs {
    std::string file;
};

int run_genus(const GenusArgs& args) {
    const RotationSystem rs = parse_graph(read_file(args.file));
    const int mu = euler_genus(rs);
    const FaceSet faces = trace_faces(rs);
    std::cout << "n=" << rs.vertex_count() << " m=" << rs.graph().edge_count()
              << " f=" << faces.face_count() << " genus=" << mu << "\n";
    std::map<int, int> hist;
    for (const auto& f : faces.faces) ++hist[static_cast<int>(f.size())];
    for (const auto& [size, count] : hist)
        std::cout << "faces of size " << size << ": " << count << "\n";
    return kOk;
}

struct ColourArgs {
    std::string graph_file;
    std::string lists_file;
    int t = 0;
    std::string mode;
    int defect = 1;
    std::string out;
};

void report(const Graph& g, const ListAssignment& lists, const Colouring& c) {
    const DefectReport rep = verify(g, lists, c);
    std::cout << "defect=" << rep.defect << " clustering=" << rep.clustering
              << "\n";
}

int run_colour(const ColourArgs& args) {
    const RotationSystem rs = parse_graph(read_file(args.graph_file));
    const ListsFile lf = parse_lists(read_file(args.lists_file));
    const Graph& g = rs.graph();
    if (lf.lists.size() != g.vertex_count())
        throw InvalidGraph("list assignment does not cover the graph");

    Colouring colouring;
    if (args.mode == "reduce") {
        const SolveResult r = solve_detailed(rs, lf.lists, args.t);
        colouring = r.colouring;
        report(g, lf.lists, colouring);
        std::cout << "dispatch: low_degree=" << r.stats.low_degree
                  << " low_max_degree=" << r.stats.low_max_degree
                  << " adjacent_pair=" << r.stats.adjacent_pair
                  << " tight_triangle=" << r.stats.tight_triangle
                  << " big_even=" << r.stats.big_even
                  << " lovasz_iterations=" << r.stats.lovasz_iterations << "\n";
    } else if (args.mode == "lovasz") {
        const LovaszResult r = lovasz_colour_detailed(g, lf.lists, args.t);
        colouring = r.colouring;
        report(g, lf.lists, colouring);
        std::cout << "iterations=" << r.iterations << "\n";
    } else { // brute
        const OracleResult r =
            list_colourable(g, lf.lists, args.defect, node_budget());
        if (r.status == SearchStatus::Unsat) {
            std::cout << "UNSAT nodes=" << r.nodes << "\n";
            return kUnsat;
        }
        colouring = r.colouring;
        report(g, lf.lists, colouring);
        std::cout << "nodes=" << r.nodes << "\n";
    }
    if (!args.out.empty()) write_file(args.out, serialize_colouring(colouring));
    return kOk;
}

struct VerifyArgs {
    std::string graph_file;
    std::string colouring_file;
    std::string lists_file;
    int defect = -1;
    int clustering = -1;
};

int run_verify(const VerifyArgs& args) {
    const RotationSystem rs = parse_graph(read_file(args.graph_file));
    const Colouring c = parse_colouring(read_file(args.colouring_file));
    DefectReport rep;
    if (!args.lists_file.empty()) {
        const ListsFile lf = parse_lists(read_file(args.lists_file));
        rep = verify(rs.graph(), lf.lists, c);
    } else {
        rep = verify(rs.graph(), c);
    }
    std::cout << "defect=" << rep.defect << " clustering=" << rep.clustering
              << "\n";
    bool ok = true;
    if (args.defect >= 0 && rep.defect > args.defect) {
        ok = false;
        std::cout << "defect bound " << args.defect << " exceeded";
        if (rep.worst_vertex)
            std::cout << ": vertex " << *rep.worst_vertex << " has "
                      << rep.defect << " same-coloured neighbours";
        std::cout << "\n";
    }
    if (args.clustering >= 0 && rep.clustering > args.clustering) {
        ok = false;
        std::cout << "clustering bound " << args.clustering
                  << " exceeded: component {";
        for (size_t i = 0; i < rep.worst_component.size(); ++i)
            std::cout << (i ? "," : "") << rep.worst_component[i];
        std::cout << "}\n";
    }
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? kOk : kFail;
}

struct DischargeArgs {
    std::string graph_file;
    int t = 0;
    bool strict = false;
    std::string json_out;
};

int run_discharge(const DischargeArgs& args) {
    RotationSystem rs = parse_graph(read_file(args.graph_file));
    if (!is_triangulated(rs)) {
        if (args.strict) throw NotTriangulated();
        std::cout << "note: input is not triangulated; auditing its chord-fan "
                     "triangulation\n";
        rs = triangulate(rs);
    }
    const AuditReport rep = audit(rs, args.t);
    std::cout << audit_text(rep);
    if (!args.json_out.empty()) {
        nlohmann::json doc;
        doc["t"] = rep.t;
        doc["n"] = rep.n;
        doc["m"] = rep.m;
        doc["f"] = rep.f;
        doc["genus"] = rep.mu;
        doc["t_in_range"] = rep.t_in_range;
        doc["charge_sum_minus_6n"] = rep.charge_sum_minus_6n;
        doc["euler_side"] = rep.euler_side;
        doc["sums_equal"] = rep.sums_equal;
        std::ostringstream min_charge;
        min_charge << rep.post_min_charge;
        doc["post_min_charge"] = min_charge.str();
        doc["vertices_below_bound"] = rep.vertices_below_bound;
        nlohmann::json props = nlohmann::json::array();
        for (const auto& p : rep.properties)
            props.push_back({{"name", p.name},
                             {"holds", p.holds},
                             {"witness", p.witness}});
        doc["properties"] = std::move(props);
        doc["contradiction"] = {{"lhs", rep.contradiction_lhs},
                                {"rhs", rep.contradiction_rhs},
                                {"holds", rep.contradiction_holds}};
        doc["all_properties_hold"] = rep.all_properties_hold;
        write_file(args.json_out, doc.dump() + "\n");
    }
    return kOk;
}

struct GenArgs {
    std::string kind;
    int n = 0;
    std::string size; // WxH for the toroidal grid
    unsigned long long seed = 0;
    std::string out;
    int lists = 0;
    int palette = 0;
    std::string lists_out;
};

int run_gen(const GenArgs& args) {
    RotationSystem rs;
    if (args.kind == "complete") {
        rs = gen_complete(args.n);
    } else if (args.kind == "k7-torus") {
        rs = gen_k7_torus();
    } else if (args.kind == "planar-triangulation") {
        rs = gen_planar_triangulation(args.n, args.seed);
    } else if (args.kind == "toroidal-grid") {
        int w = 0, h = 0;
        char x = 0;
        std::istringstream is(args.size);
        if (!(is >> w >> x >> h) || x != 'x' || !is.eof())
            throw ParseError("size", "expected WxH, e.g. 6x6");
        rs = gen_toroidal_grid(w, h);
    } else if (args.kind == "icosahedron") {
        rs = gen_icosahedron();
    } else {
        throw ParseError("kind", "unknown generator '" + args.kind + "'");
    }
    write_file(args.out, serialize_graph(rs));
    std::cout << "wrote " << args.out << " (n=" << rs.vertex_count()
              << " m=" << rs.graph().edge_count()
              << " genus=" << euler_genus(rs) << ")\n";
    if (args.lists > 0) {
        if (args.lists_out.empty())
            throw ParseError("lists-out", "required with --lists");
        const int palette = args.palette > 0 ? args.palette : 2 * args.lists;
        const ListAssignment l = gen_random_lists(rs.vertex_count(), args.lists,
                                                  palette, args.seed);
        write_file(args.lists_out, serialize_lists(l, args.lists));
        std::cout << "wrote " << args.lists_out << " (t=" << args.lists
                  << " palette=" << palette << ")\n";
    }
    return kOk;
}

struct ChoosableArgs {
    std::string graph_file;
    int k = 0;
    int defect = 1;
    int palette = 0;
    int jobs = 1;
    bool no_canon = false;
};

int run_choosable(const ChoosableArgs& args) {
    const RotationSystem rs = parse_graph(read_file(args.graph_file));
    ChoosableOptions opt;
    opt.palette_size = args.palette;
    opt.canonicalize = !args.no_canon;
    opt.node_budget = node_budget();
    opt.jobs = args.jobs;
    const ChoosableVerdict verdict =
        choosable(rs.graph(), args.k, args.defect, opt);
    std::cout << "assignments=" << verdict.assignments_tested
              << " nodes=" << verdict.nodes << "\n";
    if (verdict.choosable) {
        std::cout << "choosable: every tested " << args.k
                  << "-list assignment admits defect " << args.defect << "\n";
        return kOk;
    }
    std::cout << "not choosable; counterexample lists:\n";
    for (int v = 0; v < verdict.counterexample->size(); ++v) {
        std::cout << "  " << v << ":";
        for (int c : verdict.counterexample->list(v)) std::cout << " " << c;
        std::cout << "\n";
    }
    return kUnsat;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"defective list colouring of graphs embedded on surfaces"};
    app.require_subcommand(1);

    GenusArgs genus_args;
    auto* genus_cmd = app.add_subcommand(
        "genus", "face count and Euler genus of an embedded graph");
    genus_cmd->add_option("file", genus_args.file, "graph file")->required();

    ColourArgs colour_args;
    auto* colour_cmd =
        app.add_subcommand("colour", "defect-1 list colouring solvers");
    colour_cmd->add_option("file", colour_args.graph_file, "graph file")
        ->required();
    colour_cmd->add_option("--lists", colour_args.lists_file, "list file")
        ->required();
    colour_cmd->add_option("--t", colour_args.t, "list-size parameter")
        ->required();
    colour_cmd
        ->add_option("--mode", colour_args.mode,
                     "reduce (configuration solver), lovasz (local search) or "
                     "brute (exhaustive)")
        ->required()
        ->check(CLI::IsMember({"reduce", "lovasz", "brute"}));
    colour_cmd->add_option("--defect", colour_args.defect,
                           "defect bound for brute mode");
    colour_cmd->add_option("--out", colour_args.out, "write the colouring here");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "check a colouring against bounds");
    verify_cmd->add_option("file", verify_args.graph_file, "graph file")
        ->required();
    verify_cmd
        ->add_option("--colouring", verify_args.colouring_file, "colouring file")
        ->required();
    verify_cmd->add_option("--lists", verify_args.lists_file,
                           "optional list file for membership checks");
    verify_cmd->add_option("--defect", verify_args.defect, "defect bound");
    verify_cmd->add_option("--clustering", verify_args.clustering,
                           "clustering bound");

    DischargeArgs discharge_args;
    auto* discharge_cmd = app.add_subcommand(
        "discharge", "exact charge audit of a triangulated embedding");
    discharge_cmd->add_option("file", discharge_args.graph_file, "graph file")
        ->required();
    discharge_cmd->add_option("--t", discharge_args.t, "list-size parameter")
        ->required();
    discharge_cmd->add_flag("--strict", discharge_args.strict,
                            "fail instead of auto-triangulating");
    discharge_cmd->add_option("--json-out", discharge_args.json_out,
                              "write a machine-readable report");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd
        ->add_option("kind", gen_args.kind,
                     "complete | k7-torus | planar-triangulation | "
                     "toroidal-grid | icosahedron")
        ->required();
    gen_cmd->add_option("--n", gen_args.n, "vertex count where applicable");
    gen_cmd->add_option("--size", gen_args.size, "WxH for toroidal-grid");
    gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
    gen_cmd->add_option("--out", gen_args.out, "graph output file")->required();
    gen_cmd->add_option("--lists", gen_args.lists,
                        "also write a random K-list assignment");
    gen_cmd->add_option("--palette", gen_args.palette,
                        "palette size for --lists (default 2K)");
    gen_cmd->add_option("--lists-out", gen_args.lists_out, "list output file");

    ChoosableArgs choosable_args;
    auto* choosable_cmd = app.add_subcommand(
        "choosable",
        "exhaustive (k,d)-choosability experiment over a finite palette");
    choosable_cmd->add_option("file", choosable_args.graph_file, "graph file")
        ->required();
    choosable_cmd->add_option("--k", choosable_args.k, "list size")->required();
    choosable_cmd->add_option("--defect", choosable_args.defect, "defect bound");
    choosable_cmd->add_option("--palette", choosable_args.palette,
                              "palette size (default k*n, complete)");
    choosable_cmd->add_option("--jobs", choosable_args.jobs, "worker threads");
    choosable_cmd->add_flag("--no-canon", choosable_args.no_canon,
                            "disable colour-relabelling canonicalization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (genus_cmd->parsed()) return run_genus(genus_args);
        if (colour_cmd->parsed()) return run_colour(colour_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (discharge_cmd->parsed()) return run_discharge(discharge_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (choosable_cmd->parsed()) return run_choosable(choosable_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const InternalContradiction& e) {
        std::cerr << "error: " << e.what() << "\n" << e.audit_text;
        return kContradiction;
    } catch (const PreconditionTooSmallT& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        // remaining library errors mark violated command preconditions
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kFail;
}
