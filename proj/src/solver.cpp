#include "forceps/solver.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <limits>
#include <ostream>

#include "forceps/forts.hpp"
#include "forceps/parallel.hpp"

namespace forceps {

namespace {

/// Byte string identifying a labeled graph, used as a memo key.
std::string adjacency_key(const Graph& g)
{
    std::string key;
    key.reserve(8 * g.order() + 1);
    key.push_back(static_cast<char>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto bits = g.neighbors(v).bits();
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((bits >> (8 * b)) & 0xFF));
    }
    return key;
}

using Count = unsigned long long;

Count binomial(int m, int k)
{
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    Count c = 1;
    for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
    return c;
}

/// The k-combination of [0, m) with the given rank in lexicographic order.
std::vector<int> unrank_combination(int m, int k, Count rank)
{
    std::vector<int> out;
    int c = 0;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            const Count block = binomial(m - c - 1, k - pos - 1);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        out.push_back(c++);
    }
    return out;
}

bool next_combination(std::vector<int>& idx, int m)
{
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

constexpr Count chunk_size = 2048;

} // namespace

std::optional<SolveResult> Solver::lookup(const Key& key)
{
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

SolveResult Solver::leaky_number(const Graph& g, int ell, Rule rule)
{
    if (ell < 0) throw std::invalid_argument("leak count must be non-negative");
    ell = std::min(ell, g.order());
    SolveResult total;
    total.rule = rule;
    total.ell = ell;
    for (VertexSet comp : connected_components(g)) {
        std::vector<Vertex> labels;
        const Graph part = induced_subgraph(g, comp, &labels);
        const SolveResult r = solve_connected(part, std::min(ell, part.order()), rule);
        total.value += r.value;
        for (Vertex v : r.witness) total.witness.insert(labels[v]);
        for (Vertex v : r.forced_core) total.forced_core.insert(labels[v]);
        total.stats.nodes += r.stats.nodes;
        total.stats.leak_checks += r.stats.leak_checks;
    }
    return total;
}

SolveResult Solver::solve_connected(const Graph& g, int ell, Rule rule)
{
    const Key key{adjacency_key(g), ell, rule};
    if (auto hit = lookup(key)) return *hit;

    const int n = g.order();
    const VertexSet all = g.vertices();
    SolveResult result;
    result.rule = rule;
    result.ell = ell;
    result.forced_core = g.vertices_with_degree_at_most(ell);

    if (options_.structural_bounds && g.max_degree() <= ell) {
        result.value = n;
        result.witness = all;
    } else {
        const VertexSet core = options_.structural_bounds ? result.forced_core : VertexSet{};
        int lower = core.size();
        if (options_.structural_bounds && rule == Rule::psd && n <= options_.fort_bound_max_n) {
            // Disjoint forts each need their own blue vertex.
            VertexSet used;
            int packed = 0;
            auto forts = minimal_forts(g, ell, n);
            std::stable_sort(forts.begin(), forts.end(),
                             [](const Fort& a, const Fort& b) { return a.vertices.size() < b.vertices.size(); });
            for (const Fort& f : forts) {
                if (!f.vertices.intersects(used)) {
                    used |= f.vertices;
                    ++packed;
                }
            }
            lower = std::max(lower, packed);
        }
        if (options_.chain_bounds && ell > 0) {
            if (auto prev = lookup({std::get<0>(key), ell - 1, rule})) lower = std::max(lower, prev->value);
        }
        if (options_.chain_bounds && rule == Rule::standard) {
            if (auto psd = lookup({std::get<0>(key), ell, Rule::psd})) lower = std::max(lower, psd->value);
        }

        const std::vector<Vertex> pool = (all - core).to_vector();
        const int m = static_cast<int>(pool.size());
        std::atomic<long long> nodes{0};
        std::atomic<long long> checks{0};
        bool found = false;
        for (int k = lower; k <= n && !found; ++k) {
            const int extra = k - core.size();
            const Count total = binomial(m, extra);
            const Count chunks = (total + chunk_size - 1) / chunk_size;
            std::atomic<Count> best{std::numeric_limits<Count>::max()};
            parallel_for(static_cast<std::size_t>(chunks), options_.workers, [&](std::size_t chunk) {
                const Count start = chunk * chunk_size;
                if (start >= best.load()) return;
                const Count stop = std::min(total, start + chunk_size);
                std::vector<int> idx = unrank_combination(m, extra, start);
                std::vector<VertexSet> killers;
                long long local_nodes = 0;
                long long local_checks = 0;
                for (Count rank = start; rank < stop && rank < best.load(); ++rank) {
                    VertexSet candidate = core;
                    for (int i : idx) candidate.insert(pool[i]);
                    ++local_nodes;
                    if (leaky_forcing_holds(g, candidate, ell, rule, &killers, &local_checks)) {
                        Count seen = best.load();
                        while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
                        }
                        break;
                    }
                    next_combination(idx, m);
                }
                nodes += local_nodes;
                checks += local_checks;
            });
            if (best.load() != std::numeric_limits<Count>::max()) {
                found = true;
                result.value = k;
                result.witness = core;
                for (int i : unrank_combination(m, extra, best.load())) result.witness.insert(pool[i]);
            }
        }
        if (!found) throw std::logic_error("no leaky forcing set found; the full vertex set must always work");
        result.stats = {nodes.load(), checks.load()};
    }

    std::lock_guard lock(memo_mutex_);
    memo_.emplace(key, result);
    return result;
}

SolveResult leaky_number(const Graph& g, int ell, Rule rule, const SolveOptions& options)
{
    Solver solver(options);
    return solver.leaky_number(g, ell, rule);
}

ProductBound product_bound_check(const Graph& g, const Graph& h, int ell, const SolveOptions& options)
{
    Solver solver(options);
    const Graph product = cartesian_product(g, h);
    ProductBound out;
    out.lhs = solver.leaky_number(product, ell, Rule::psd).value;
    const int zg = solver.leaky_number(g, ell, Rule::psd).value;
    const int zh = solver.leaky_number(h, ell, Rule::psd).value;
    out.rhs = std::min(h.order() * zg, g.order() * zh);
    out.holds = out.lhs <= out.rhs;
    return out;
}

AuditReport monotonicity_audit(const Graph& g, int max_ell, const SolveOptions& options)
{
    if (max_ell < 0 || max_ell > g.order()) throw std::invalid_argument("max_ell must lie in [0, n]");
    SolveOptions independent = options;
    independent.chain_bounds = false;
    Solver solver(independent);
    AuditReport report;
    const int n = g.order();
    for (int ell = 0; ell <= max_ell; ++ell) {
        const int psd = solver.leaky_number(g, ell, Rule::psd).value;
        const int standard = solver.leaky_number(g, ell, Rule::standard).value;
        report.psd.push_back(psd);
        report.standard.push_back(standard);
        const std::string at = " at ell=" + std::to_string(ell);
        if (ell > 0 && psd < report.psd[ell - 1]) {
            report.findings.push_back("psd value decreased" + at + ": " + std::to_string(report.psd[ell - 1]) +
                                      " -> " + std::to_string(psd));
        }
        if (psd > standard) {
            report.findings.push_back("psd value " + std::to_string(psd) + " exceeds standard value " +
                                      std::to_string(standard) + at);
        }
        if ((psd == n) != (g.max_degree() <= ell)) {
            report.findings.push_back("value = n does not match max degree <= ell" + at);
        }
    }
    return report;
}

} // namespace forceps
