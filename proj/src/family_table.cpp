#include <algorithm>
#include <memory>
#include <set>

#include "forceps/parallel.hpp"
#include "forceps/solver.hpp"

namespace forceps {

namespace {

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

/// Trees: one blue vertex without leaks, otherwise exactly the vertices of degree <= ell.
int tree_value(const Graph& tree, int ell)
{
    return ell == 0 ? 1 : tree.vertices_with_degree_at_most(ell).size();
}

std::string note_for(const FamilySpec& spec, int ell)
{
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::grid:
        if (ell == 1 && p[0] >= 4 && p[0] == p[1] + 1) {
            return "closed form ambiguous here (min{n,m} = m but stated as n); computed value decides";
        }
        if (ell == 3 && std::min(p[0], p[1]) >= 3) {
            return "interior vertices have degree 4, so the all-vertices value needs ell >= 4";
        }
        return {};
    case Family::petersen_gp:
        if (ell == 2 && (p[0] == 3 || p[0] >= 7)) return "no closed form; upper bound 2*ceil(n/3) for n >= 7";
        return {};
    default: return {};
    }
}

} // namespace

std::optional<int> closed_form(const FamilySpec& spec, int ell)
{
    spec.validate();
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::path: {
        const int n = p[0];
        if (n < 2) return std::nullopt;
        return ell == 0 ? 1 : ell == 1 ? 2 : n;
    }
    case Family::cycle: return ell <= 1 ? 2 : p[0];
    case Family::complete: {
        const int n = p[0];
        if (n < 2) return std::nullopt;
        return ell <= n - 2 ? n - 1 : n;
    }
    case Family::wheel: {
        const int n = p[0];
        if (ell <= 1) return 3;
        if (ell == 2) return ceil_div(n, 2) + 1;
        if (ell < n) return n;
        return n + 1;
    }
    case Family::complete_bipartite:
    case Family::star: {
        const int m = spec.family == Family::star ? 1 : p[0];
        const int n = spec.family == Family::star ? p[0] : p[1];
        const int lo = std::min(m, n);
        const int hi = std::max(m, n);
        if (ell < lo) return lo;
        if (ell < hi) return hi;
        return m + n;
    }
    case Family::hypercube: {
        const int d = p[0];
        if (d == 0) return 1;
        return ell <= d - 1 ? 1 << (d - 1) : 1 << d;
    }
    case Family::grid: {
        const int n = p[0];
        const int m = p[1];
        const Graph g = generate(spec);
        // All vertices exactly when no vertex has more than ell neighbors.
        if (g.max_degree() <= ell) return n * m;
        if (ell == 1 && n >= 4 && n == m) return n;
        return std::nullopt;
    }
    case Family::petersen_gp: {
        const int n = p[0];
        if (ell <= 1) return n == 3 ? 3 : 4;
        if (ell == 2) return n >= 4 && n <= 6 ? std::optional<int>(4) : std::nullopt;
        return 2 * n;
    }
    case Family::tree_from_pruefer:
    case Family::fig3_spider: return tree_value(generate(spec), ell);
    }
    return std::nullopt;
}

VertexSet gp_two_leak_construction(int n)
{
    if (n < 3) throw std::invalid_argument("GP(n,1) needs n >= 3");
    const int k = ceil_div(n, 3);
    VertexSet out;
    for (int i = 0; i < k; ++i) {
        const int outer = i * n / k;
        out.insert(outer);
        out.insert(n + outer);
    }
    return out;
}

std::vector<FamilyRow> family_table(const std::vector<FamilyJob>& jobs, const SolveOptions& options)
{
    struct Task {
        std::size_t job;
        int ell;
    };
    std::vector<Task> tasks;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        for (int ell : jobs[j].ells) tasks.push_back({j, ell});
    }

    // One memo per family member so values at ell-1 bound the search at ell.
    std::vector<std::unique_ptr<Solver>> solvers;
    std::vector<Graph> graphs;
    SolveOptions inner = options;
    inner.workers = 1;
    for (const FamilyJob& job : jobs) {
        solvers.push_back(std::make_unique<Solver>(inner));
        graphs.push_back(generate(job.spec));
    }

    std::vector<FamilyRow> rows(tasks.size());
    parallel_for(jobs.size(), options.workers, [&](std::size_t j) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].job != j) continue;
            const int ell = tasks[t].ell;
            const SolveResult r = solvers[j]->leaky_number(graphs[j], ell, Rule::psd);
            FamilyRow& row = rows[t];
            row.spec = jobs[j].spec;
            row.ell = ell;
            row.computed = r.value;
            row.witness = r.witness;
            row.expected = closed_form(row.spec, ell);
            row.match = !row.expected || *row.expected == row.computed;
            row.note = note_for(row.spec, ell);
            if (row.spec.family == Family::petersen_gp && ell == 2 && row.spec.params[0] >= 7) {
                const int n = row.spec.params[0];
                const VertexSet construction = gp_two_leak_construction(n);
                const bool ok = leaky_forcing_holds(graphs[j], construction, 2, Rule::psd);
                row.note += "; construction " + to_string(construction) + " of size " +
                            std::to_string(construction.size()) + (ok ? " is" : " is NOT") +
                            " a 2-leaky psd forcing set";
                if (!ok) row.match = false;
            }
        }
    });
    return rows;
}

std::vector<FamilyRow> family_table(const std::vector<FamilySpec>& specs, const std::vector<int>& ells,
                                    const SolveOptions& options)
{
    std::vector<FamilyJob> jobs;
    for (const FamilySpec& s : specs) jobs.push_back({s, ells});
    return family_table(jobs, options);
}

std::vector<FamilyJob> paper_suite_jobs(bool extended)
{
    std::vector<FamilyJob> jobs;
    auto ell_range = [](int hi) {
        std::vector<int> out;
        for (int ell = 0; ell <= hi; ++ell) out.push_back(ell);
        return out;
    };
    auto add = [&](Family f, std::vector<int> params, std::vector<int> ells) {
        jobs.push_back({FamilySpec{f, std::move(params)}, std::move(ells)});
    };

    for (int n = 2; n <= 8; ++n) add(Family::path, {n}, ell_range(n));
    for (int n = 3; n <= 8; ++n) add(Family::cycle, {n}, ell_range(n));
    for (int n = 2; n <= 8; ++n) add(Family::complete, {n}, ell_range(n));
    for (int n = 3; n <= 8; ++n) add(Family::wheel, {n}, ell_range(n + 1));
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; m + n <= 8; ++n) add(Family::complete_bipartite, {m, n}, ell_range(m + n));
    }

    // One labeled representative (first Pruefer sequence) per unlabeled tree.
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> seen;
        for (const auto& seq : all_pruefer_sequences(n)) {
            if (seen.insert(tree_canonical_form(tree_from_pruefer(seq))).second) {
                add(Family::tree_from_pruefer, seq, ell_range(n));
            }
        }
    }
    add(Family::fig3_spider, {}, ell_range(7));

    for (int d = 1; d <= 3; ++d) add(Family::hypercube, {d}, ell_range(1 << d));
    if (extended) add(Family::hypercube, {4}, ell_range(3));
    for (int n = 3; n <= 6; ++n) add(Family::petersen_gp, {n, 1}, ell_range(4));
    add(Family::petersen_gp, {7, 1}, {2});
    for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= std::min(n, 4); ++m) add(Family::grid, {n, m}, ell_range(4));
    }
    return jobs;
}

} // namespace forceps
