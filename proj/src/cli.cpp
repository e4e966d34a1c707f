#include "forceps/cli.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forceps/families.hpp"
#include "forceps/forcing.hpp"
#include "forceps/forts.hpp"
#include "forceps/parallel.hpp"
#include "forceps/solver.hpp"

namespace forceps::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string graph6;
    std::string graph6_file;
    std::string family;
    int ell = 0;
    std::string rule = "psd";
    std::string format = "text";
    int workers = 0;
    int max_n = default_fort_max_n;
};

void add_format_options(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
    cmd->add_option("--workers", c.workers, "Worker threads (default: FORCEPS_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
}

void add_graph_options(CLI::App* cmd, Common& c, bool with_rule)
{
    cmd->add_option("--graph6", c.graph6, "Graph as a graph6 string");
    cmd->add_option("--graph6-file", c.graph6_file, "File whose first graph6 line is the graph");
    cmd->add_option("--family", c.family, "Family spec such as path:5, wheel:6, grid:4:4");
    cmd->add_option("--ell", c.ell, "Number of leaks")->check(CLI::NonNegativeNumber);
    if (with_rule) cmd->add_option("--rule", c.rule, "Color change rule")->check(CLI::IsMember({"psd", "standard"}));
    cmd->add_option("--max-n", c.max_n, "Order guard for fort enumeration")->check(CLI::PositiveNumber);
    add_format_options(cmd, c);
}

Graph load_graph(const Common& c)
{
    const int sources = !c.graph6.empty() + !c.graph6_file.empty() + !c.family.empty();
    if (sources != 1) throw UsageError("give exactly one of --graph6, --graph6-file, --family");
    if (!c.family.empty()) return generate(FamilySpec::parse(c.family));
    if (!c.graph6.empty()) return from_graph6(c.graph6);
    std::ifstream file(c.graph6_file);
    if (!file) throw std::runtime_error("cannot open " + c.graph6_file);
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line != "\r") return from_graph6(line);
    }
    throw std::runtime_error(c.graph6_file + " contains no graph6 line");
}

SolveOptions solve_options(const Common& c)
{
    SolveOptions o;
    o.workers = resolve_workers(c.workers);
    return o;
}

bool jsonl(const Common& c)
{
    return c.format == "jsonl";
}

std::string edge_text(const Edge& e)
{
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

int cmd_number(const Common& c, std::ostream& out)
{
    const Graph g = load_graph(c);
    const SolveResult r = leaky_number(g, c.ell, parse_rule(c.rule), solve_options(c));
    if (jsonl(c)) {
        json j{{"rule", std::string(to_string(r.rule))},
               {"ell", r.ell},
               {"value", r.value},
               {"witness", r.witness.to_vector()},
               {"forced_core", r.forced_core.to_vector()}};
        if (g.order() <= graph6_max_order) j["graph6"] = to_graph6(g);
        out << j.dump() << '\n';
    } else {
        out << r.value << " witness=" << to_string(r.witness) << '\n';
    }
    return exit_ok;
}

int cmd_check(const Common& c, const std::string& blue, std::ostream& out)
{
    const Graph g = load_graph(c);
    const VertexSet b = parse_vertex_list(blue);
    if (!b.is_subset_of(g.vertices())) throw UsageError("--blue lists a vertex outside the graph");
    const LeakyVerdict v = is_ell_leaky_forcing_set(g, b, c.ell, parse_rule(c.rule));
    if (jsonl(c)) {
        json j{{"blue", b.to_vector()}, {"ell", c.ell}, {"rule", c.rule}, {"forcing", v.forcing}};
        if (v.witness_leaks) j["witness_leaks"] = v.witness_leaks->to_vector();
        out << j.dump() << '\n';
    } else {
        out << (v.forcing ? "true" : "false");
        if (v.witness_leaks) out << " leaks=" << to_string(*v.witness_leaks);
        out << '\n';
    }
    return exit_ok;
}

int cmd_closure(const Common& c, const std::string& blue, const std::string& leaks, std::ostream& out)
{
    const Graph g = load_graph(c);
    const ColoringState s{parse_vertex_list(blue), parse_vertex_list(leaks)};
    const ClosureResult r = closure(g, s, parse_rule(c.rule));
    if (jsonl(c)) {
        json forces = json::array();
        for (const auto& [round, f] : r.chronology) {
            forces.push_back({{"round", round}, {"source", f.source}, {"target", f.target}});
        }
        out << json{{"closure", r.blue.to_vector()}, {"complete", r.blue == g.vertices()}, {"chronology", forces}}.dump()
            << '\n';
    } else {
        out << format_chronology(r.chronology) << "closure=" << to_string(r.blue) << '\n';
    }
    return exit_ok;
}

int cmd_forces(const Common& c, const std::string& blue, std::ostream& out)
{
    const Graph g = load_graph(c);
    for (const Force& f : possible_forces(g, parse_vertex_list(blue))) {
        if (jsonl(c)) {
            out << json{{"source", f.source}, {"target", f.target}}.dump() << '\n';
        } else {
            out << f.source << "->" << f.target << '\n';
        }
    }
    return exit_ok;
}

int cmd_forts(const Common& c, std::ostream& out)
{
    const Graph g = load_graph(c);
    const FortFamily forts = minimal_forts(g, c.ell, c.max_n);
    if (jsonl(c)) {
        out << forts_to_jsonl(g, forts);
    } else {
        for (const Fort& f : forts) {
            out << to_string(f.vertices) << " connected=" << (is_connected_fort_standard(g, f) ? "true" : "false")
                << '\n';
        }
    }
    return exit_ok;
}

int cmd_hitting(const Common& c, std::ostream& out, std::ostream& err)
{
    const Graph g = load_graph(c);
    const HittingResult h = hitting_number(g, c.ell, c.max_n);
    const SolveResult r = leaky_number(g, c.ell, Rule::psd, solve_options(c));
    const bool match = h.value == r.value;
    if (jsonl(c)) {
        out << json{{"value", h.value}, {"witness", h.witness.to_vector()}, {"number", r.value}, {"match", match}}.dump()
            << '\n';
    } else {
        out << h.value << " witness=" << to_string(h.witness) << " number=" << r.value
            << " match=" << (match ? "true" : "false") << '\n';
    }
    if (!match) {
        err << "finding: fort hitting number " << h.value << " differs from the leaky psd number " << r.value << '\n';
        return exit_finding;
    }
    return exit_ok;
}

int cmd_scan(const Common& c, const std::string& input, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::vector<Graph> graphs;
    if (input.empty() || input == "-") {
        graphs = read_graph6_stream(in, err);
    } else {
        std::ifstream file(input);
        if (!file) throw std::runtime_error("cannot open " + input);
        graphs = read_graph6_stream(file, err);
    }
    const ScanReport report = edge_deletion_scan(graphs, c.ell, solve_options(c));
    for (const ScanRecord& r : report.records) {
        if (jsonl(c)) {
            out << json{{"graph6", r.graph6},
                        {"edge", {r.edge.first, r.edge.second}},
                        {"value_g", r.value_g},
                        {"value_g_minus_e", r.value_g_minus_e},
                        {"diff", r.diff}}
                       .dump()
                << '\n';
        } else {
            out << r.graph6 << ' ' << edge_text(r.edge) << ' ' << r.value_g << ' ' << r.value_g_minus_e << ' '
                << r.diff << '\n';
        }
    }
    const ScanSummary& s = report.summary;
    err << "graphs: " << s.graphs << "\nrecords: " << s.records << "\ndisconnected inputs: " << s.disconnected_inputs
        << '\n';
    if (s.min_diff) err << "min diff: " << *s.min_diff << "\nmax diff: " << *s.max_diff << '\n';
    err << "diff = 1 cases: " << s.diff_one.size() << '\n';
    for (const auto& [code, e] : s.diff_one) err << "  " << code << ' ' << edge_text(e) << '\n';

    if (c.ell == 1 && s.min_diff && (*s.min_diff < -2 || *s.max_diff > 1)) {
        err << "finding: an edge deletion moved the 1-leaky psd number outside [-2, 1]\n";
        return exit_finding;
    }
    return exit_ok;
}

void print_rows(const std::vector<FamilyRow>& rows, const Common& c, std::ostream& out)
{
    if (jsonl(c)) {
        for (const FamilyRow& r : rows) {
            json j{{"family", r.spec.to_string()},
                   {"ell", r.ell},
                   {"computed", r.computed},
                   {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                   {"match", r.match},
                   {"witness", r.witness.to_vector()}};
            if (!r.note.empty()) j["note"] = r.note;
            out << j.dump() << '\n';
        }
        return;
    }
    std::size_t width = 6;
    for (const FamilyRow& r : rows) width = std::max(width, r.spec.to_string().size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "family" << std::setw(5) << "ell" << std::setw(10)
        << "computed" << std::setw(10) << "expected" << "match\n";
    for (const FamilyRow& r : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.spec.to_string() << std::setw(5) << r.ell
            << std::setw(10) << r.computed << std::setw(10) << (r.expected ? std::to_string(*r.expected) : "-")
            << (r.match ? "yes" : "NO");
        if (!r.note.empty()) out << "  # " << r.note;
        out << '\n';
    }
}

int cmd_families(const Common& c, bool paper_suite, bool extended, const std::vector<std::string>& families,
                 const std::vector<int>& ells, std::ostream& out, std::ostream& err)
{
    std::vector<FamilyJob> jobs;
    if (paper_suite) {
        if (!families.empty()) throw UsageError("--paper-suite and --family are exclusive");
        jobs = paper_suite_jobs(extended);
    } else {
        if (families.empty()) throw UsageError("give --paper-suite or at least one --family");
        if (ells.empty()) throw UsageError("--ells is required with --family");
        for (const std::string& f : families) jobs.push_back({FamilySpec::parse(f), ells});
    }
    const auto rows = family_table(jobs, solve_options(c));
    print_rows(rows, c, out);
    int mismatches = 0;
    for (const FamilyRow& r : rows) mismatches += r.match ? 0 : 1;
    err << "rows: " << rows.size() << ", mismatches: " << mismatches << '\n';
    return mismatches == 0 ? exit_ok : exit_finding;
}

int cmd_audit(const Common& c, std::optional<int> max_ell, std::ostream& out, std::ostream& err)
{
    const Graph g = load_graph(c);
    const int top = max_ell.value_or(g.order());
    if (top > g.order()) throw UsageError("--max-ell exceeds the graph order");
    const AuditReport report = monotonicity_audit(g, top, solve_options(c));
    if (jsonl(c)) {
        out << json{{"psd", report.psd}, {"standard", report.standard}, {"findings", report.findings}}.dump() << '\n';
    } else {
        out << "ell psd standard\n";
        for (int ell = 0; ell <= top; ++ell) {
            out << ell << ' ' << report.psd[ell] << ' ' << report.standard[ell] << '\n';
        }
    }
    for (const std::string& f : report.findings) err << "finding: " << f << '\n';
    return report.findings.empty() ? exit_ok : exit_finding;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact leaky positive semidefinite zero forcing toolkit", "forceps"};
    app.require_subcommand(1);

    Common c;
    std::string blue;
    std::string leaks;
    std::string input;
    bool paper_suite = false;
    bool extended = false;
    std::vector<std::string> families;
    std::vector<int> ells;
    std::optional<int> max_ell;

    auto* number = app.add_subcommand("number", "Exact ell-leaky forcing number with a witness set");
    add_graph_options(number, c, true);

    auto* check = app.add_subcommand("check", "Test whether --blue is an ell-leaky forcing set");
    add_graph_options(check, c, true);
    check->add_option("--blue", blue, "Comma separated blue vertices")->required();

    auto* clos = app.add_subcommand("closure", "Trace the forcing chronology from --blue under --leaks");
    add_graph_options(clos, c, true);
    clos->add_option("--blue", blue, "Comma separated blue vertices")->required();
    clos->add_option("--leaks", leaks, "Comma separated leak vertices");

    auto* forces = app.add_subcommand("forces", "List every possible psd force from --blue");
    add_graph_options(forces, c, false);
    forces->add_option("--blue", blue, "Comma separated blue vertices")->required();

    auto* forts = app.add_subcommand("forts", "Minimal ell-leaky psd forts");
    add_graph_options(forts, c, false);

    auto* hitting = app.add_subcommand("hitting", "Fort hitting number, cross-checked against the forcing number");
    add_graph_options(hitting, c, false);

    auto* scan = app.add_subcommand("scan-edges", "Edge-deletion differences over a graph6 stream");
    scan->add_option("input", input, "graph6 file (default: standard input)");
    int scan_ell = 1;
    scan->add_option("--ell", scan_ell, "Number of leaks (default 1)")->check(CLI::NonNegativeNumber);
    add_format_options(scan, c);

    auto* fam = app.add_subcommand("families", "Computed values against closed forms for graph families");
    fam->add_flag("--paper-suite", paper_suite, "Run the built-in desk-scale family ranges");
    fam->add_flag("--extended", extended, "Add the 4-dimensional hypercube to the suite");
    fam->add_option("--family", families, "Family spec (repeatable)");
    fam->add_option("--ells", ells, "Leak counts")->delimiter(',');
    add_format_options(fam, c);

    auto* audit = app.add_subcommand("audit", "Monotonicity in ell, psd <= standard, and the n-iff-max-degree test");
    add_graph_options(audit, c, false);
    audit->add_option("--max-ell", max_ell, "Largest leak count (default: n)");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_error;
    }

    try {
        if (*number) return cmd_number(c, out);
        if (*check) return cmd_check(c, blue, out);
        if (*clos) return cmd_closure(c, blue, leaks, out);
        if (*forces) return cmd_forces(c, blue, out);
        if (*forts) return cmd_forts(c, out);
        if (*hitting) return cmd_hitting(c, out, err);
        if (*scan) {
            c.ell = scan_ell;
            return cmd_scan(c, input, in, out, err);
        }
        if (*fam) return cmd_families(c, paper_suite, extended, families, ells, out, err);
        if (*audit) return cmd_audit(c, max_ell, out, err);
    } catch (const CertificationError& e) {
        err << "finding: " << e.what() << '\n';
        return exit_finding;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace forceps::cli
