#include "forceps/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace forceps {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr std::array family_names{
    FamilyName{Family::path, "path"},
    FamilyName{Family::cycle, "cycle"},
    FamilyName{Family::complete, "complete"},
    FamilyName{Family::wheel, "wheel"},
    FamilyName{Family::complete_bipartite, "complete_bipartite"},
    FamilyName{Family::star, "star"},
    FamilyName{Family::hypercube, "hypercube"},
    FamilyName{Family::grid, "grid"},
    FamilyName{Family::petersen_gp, "petersen_gp"},
    FamilyName{Family::tree_from_pruefer, "tree_from_pruefer"},
    FamilyName{Family::fig3_spider, "fig3_spider"},
};

std::size_t expected_arity(Family f)
{
    switch (f) {
    case Family::complete_bipartite:
    case Family::grid:
    case Family::petersen_gp: return 2;
    case Family::fig3_spider: return 0;
    default: return 1;
    }
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why)
{
    throw std::invalid_argument("invalid family spec '" + spec.to_string() + "': " + why);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

} // namespace

FamilySpec FamilySpec::parse(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (!text.empty() && text.back() == ':') parts.emplace_back();
    if (parts.empty()) throw std::invalid_argument("empty family spec");

    FamilySpec spec;
    const auto it = std::find_if(family_names.begin(), family_names.end(),
                                 [&](const FamilyName& f) { return parts[0] == f.name; });
    if (it == family_names.end()) throw std::invalid_argument("unknown graph family '" + parts[0] + "'");
    spec.family = it->family;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].empty() && spec.family == Family::tree_from_pruefer && parts.size() == 2) break;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(parts[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != parts[i].size()) {
            throw std::invalid_argument("bad parameter '" + parts[i] + "' in family spec '" + text + "'");
        }
        spec.params.push_back(value);
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const
{
    std::string out;
    for (const auto& f : family_names) {
        if (f.family == family) out = f.name;
    }
    if (family == Family::tree_from_pruefer && params.empty()) return out + ":";
    for (int p : params) out += ":" + std::to_string(p);
    return out;
}

void FamilySpec::validate() const
{
    if (family != Family::tree_from_pruefer && params.size() != expected_arity(family)) {
        bad(*this, "expected " + std::to_string(expected_arity(family)) + " parameter(s)");
    }
    const auto p = [&](std::size_t i) { return params[i]; };
    switch (family) {
    case Family::path:
    case Family::complete:
        if (p(0) < 1 || p(0) > max_vertices) bad(*this, "n must lie in [1, 64]");
        break;
    case Family::cycle:
        if (p(0) < 3 || p(0) > max_vertices) bad(*this, "cycle needs 3 <= n <= 64");
        break;
    case Family::wheel:
        if (p(0) < 3 || p(0) + 1 > max_vertices) bad(*this, "wheel needs 3 <= n <= 63");
        break;
    case Family::complete_bipartite:
        if (p(0) < 1 || p(1) < 1 || p(0) + p(1) > max_vertices) bad(*this, "need m, n >= 1 and m + n <= 64");
        break;
    case Family::star:
        if (p(0) < 1 || p(0) + 1 > max_vertices) bad(*this, "star needs 1 <= n <= 63");
        break;
    case Family::hypercube:
        if (p(0) < 0 || p(0) > 6) bad(*this, "hypercube needs 0 <= d <= 6");
        break;
    case Family::grid:
        if (p(0) < 1 || p(1) < 1 || p(0) * p(1) > max_vertices) bad(*this, "grid needs n, m >= 1 and n*m <= 64");
        break;
    case Family::petersen_gp:
        if (p(1) != 1) bad(*this, "only GP(n,1) is supported");
        if (p(0) < 3 || 2 * p(0) > max_vertices) bad(*this, "GP(n,1) needs 3 <= n <= 32");
        break;
    case Family::tree_from_pruefer: {
        const int n = static_cast<int>(params.size()) + 2;
        if (n > max_vertices) bad(*this, "tree too large");
        for (int x : params) {
            if (x < 0 || x >= n) bad(*this, "Pruefer entries must lie in [0, len+2)");
        }
        break;
    }
    case Family::fig3_spider: break;
    }
}

Graph generate(const FamilySpec& spec)
{
    spec.validate();
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::path: return path_graph(p[0]);
    case Family::cycle: return cycle_graph(p[0]);
    case Family::complete: {
        std::vector<Edge> edges;
        for (int u = 0; u < p[0]; ++u) {
            for (int v = u + 1; v < p[0]; ++v) edges.emplace_back(u, v);
        }
        return Graph(p[0], edges);
    }
    case Family::wheel: {
        const int n = p[0];
        std::vector<Edge> edges = cycle_graph(n).edges();
        for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
        return Graph(n + 1, edges);
    }
    case Family::complete_bipartite: {
        const int m = p[0];
        const int n = p[1];
        std::vector<Edge> edges;
        for (int u = 0; u < m; ++u) {
            for (int v = m; v < m + n; ++v) edges.emplace_back(u, v);
        }
        return Graph(m + n, edges);
    }
    case Family::star: {
        std::vector<Edge> edges;
        for (int v = 1; v <= p[0]; ++v) edges.emplace_back(0, v);
        return Graph(p[0] + 1, edges);
    }
    case Family::hypercube: {
        const int d = p[0];
        const int n = 1 << d;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int bit = 0; bit < d; ++bit) {
                const int v = u ^ (1 << bit);
                if (u < v) edges.emplace_back(u, v);
            }
        }
        return Graph(n, edges);
    }
    case Family::grid: {
        const int n = p[0];
        const int m = p[1];
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                if (j + 1 < m) edges.emplace_back(i * m + j, i * m + j + 1);
                if (i + 1 < n) edges.emplace_back(i * m + j, (i + 1) * m + j);
            }
        }
        return Graph(n * m, edges);
    }
    case Family::petersen_gp: {
        const int n = p[0];
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
            edges.emplace_back(n + i, n + (i + 1) % n);
            edges.emplace_back(i, n + i);
        }
        return Graph(2 * n, edges);
    }
    case Family::tree_from_pruefer: return tree_from_pruefer(p);
    case Family::fig3_spider: return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}});
    }
    throw std::logic_error("unhandled family");
}

Graph tree_from_pruefer(const std::vector<int>& seq)
{
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> remaining(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++remaining[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (remaining[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    for (int x : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--remaining[x] == 1) leaves.push(x);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph(n, edges);
}

std::vector<std::vector<int>> all_pruefer_sequences(int n)
{
    if (n < 2) throw std::invalid_argument("Pruefer sequences need n >= 2");
    std::vector<std::vector<int>> out;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        out.push_back(seq);
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

std::string tree_canonical_form(const Graph& tree)
{
    const int n = tree.order();
    if (n == 0) return "";
    // Strip leaves layer by layer to find the center (one or two vertices).
    std::vector<int> deg(n);
    VertexSet alive = tree.vertices();
    for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);
    while (alive.size() > 2) {
        VertexSet layer;
        for (Vertex v : alive) {
            if (deg[v] <= 1) layer.insert(v);
        }
        for (Vertex v : layer) {
            for (Vertex u : tree.neighbors(v) & alive) --deg[u];
        }
        alive -= layer;
    }
    std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
        std::vector<std::string> kids;
        for (Vertex u : tree.neighbors(v)) {
            if (u != parent) kids.push_back(encode(u, v));
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        return s + ")";
    };
    std::string best;
    for (Vertex c : alive) {
        std::string s = encode(c, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

} // namespace forceps
