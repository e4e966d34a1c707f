#include <istream>
#include <ostream>
#include <string>

#include "forceps/parallel.hpp"
#include "forceps/solver.hpp"

namespace forceps {

std::vector<Graph> read_graph6_stream(std::istream& in, std::ostream& log)
{
    std::vector<Graph> graphs;
    std::string line;
    std::size_t offset = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const Graph6Error& e) {
            log << "skipping malformed graph6 on line " << line_no << " (stream offset "
                << line_start + e.offset() << "): " << e.what() << '\n';
        } catch (const std::invalid_argument& e) {
            log << "skipping graph6 on line " << line_no << " (stream offset " << line_start << "): " << e.what()
                << '\n';
        }
    }
    return graphs;
}

ScanReport edge_deletion_scan(const std::vector<Graph>& graphs, int ell, const SolveOptions& options)
{
    // Graphs run in parallel; each solve is single-threaded and the memo is shared.
    SolveOptions inner = options;
    inner.workers = 1;
    Solver solver(inner);

    std::vector<std::vector<ScanRecord>> per_graph(graphs.size());
    parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        const std::string code = to_graph6(g);
        const int base = solver.leaky_number(g, ell, Rule::psd).value;
        for (const Edge& e : g.edges()) {
            const int removed = solver.leaky_number(delete_edge(g, e), ell, Rule::psd).value;
            per_graph[i].push_back({code, e, base, removed, base - removed});
        }
    });

    ScanReport report;
    report.summary.graphs = static_cast<int>(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!is_connected(graphs[i])) ++report.summary.disconnected_inputs;
        for (ScanRecord& r : per_graph[i]) {
            auto& s = report.summary;
            s.min_diff = s.min_diff ? std::min(*s.min_diff, r.diff) : r.diff;
            s.max_diff = s.max_diff ? std::max(*s.max_diff, r.diff) : r.diff;
            if (r.diff == 1) s.diff_one.emplace_back(r.graph6, r.edge);
            report.records.push_back(std::move(r));
        }
    }
    report.summary.records = static_cast<int>(report.records.size());
    return report;
}

} // namespace forceps
