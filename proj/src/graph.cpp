#include "forceps/graph.hpp"

#include <algorithm>
#include <sstream>

namespace forceps {

namespace {

void check_order(int n)
{
    if (n < 0 || n > max_vertices) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(max_vertices) + "]");
    }
}

} // namespace

Graph::Graph(int n, const std::vector<Edge>& edges)
{
    check_order(n);
    adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj)
{
    const int n = static_cast<int>(adj.size());
    check_order(n);
    const VertexSet all = VertexSet::range(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!adj[v].is_subset_of(all)) throw std::invalid_argument("neighbor outside vertex range");
        if (adj[v].contains(v)) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        for (Vertex u : adj[v]) {
            if (!adj[u].contains(v)) throw std::invalid_argument("asymmetric adjacency");
        }
    }
    Graph g;
    g.adj_ = std::move(adj);
    return g;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::max_degree() const
{
    int best = 0;
    for (VertexSet s : adj_) best = std::max(best, s.size());
    return best;
}

int Graph::min_degree() const
{
    if (adj_.empty()) return 0;
    int best = max_vertices;
    for (VertexSet s : adj_) best = std::min(best, s.size());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet Graph::vertices_with_degree_at_most(int bound) const
{
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
        if (degree(v) <= bound) out.insert(v);
    }
    return out;
}

Graph from_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);

    const auto header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw Graph6Error("long-form graph6 header (n > 62) is not supported", 0);
    if (header < 63 || header > 125) throw Graph6Error("malformed graph6 header byte", 0);
    const int n = header - 63;

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t char_count = (bit_count + 5) / 6;
    if (text.size() - 1 < char_count) {
        throw Graph6Error("truncated graph6 edge stream: expected " + std::to_string(char_count) +
                              " data bytes, found " + std::to_string(text.size() - 1),
                          text.size());
    }
    if (text.size() - 1 > char_count) {
        throw Graph6Error("trailing bytes after graph6 edge stream", 1 + char_count);
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 character out of range", i);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int value = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((value >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero in a canonical encoding.
    for (; k < char_count * 6; ++k) {
        const int value = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((value >> (5 - k % 6)) & 1) throw Graph6Error("nonzero graph6 padding bit", 1 + k / 6);
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > graph6_max_order) {
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds the short graph6 range (62)");
    }
    std::string out(1, static_cast<char>(63 + n));
    int value = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + value));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int n = g.order();
    const int m = h.order();
    if (n * m > max_vertices) {
        throw std::invalid_argument("product order " + std::to_string(n * m) + " exceeds " +
                                    std::to_string(max_vertices));
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (auto [b, c] : h.edges()) edges.emplace_back(a * m + b, a * m + c);
    }
    for (auto [a, c] : g.edges()) {
        for (Vertex b = 0; b < m; ++b) edges.emplace_back(a * m + b, c * m + b);
    }
    return Graph(n * m, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    return Graph(n + h.order(), edges);
}

Graph delete_edge(const Graph& g, Edge e)
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not in the graph");
    }
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        if (f != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(f);
    }
    return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<Vertex>* original)
{
    keep &= g.vertices();
    std::vector<Vertex> labels = keep.to_vector();
    std::vector<int> relabel(g.order(), -1);
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) relabel[labels[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    }
    Graph out(static_cast<int>(labels.size()), edges);
    if (original) *original = std::move(labels);
    return out;
}

VertexSet component_of(const Graph& g, VertexSet within, Vertex v)
{
    VertexSet comp = VertexSet::singleton(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex x : frontier) next |= g.neighbors(x);
        next = (next & within) - comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    VertexSet rest = within & g.vertices();
    while (!rest.empty()) {
        const VertexSet comp = component_of(g, rest, rest.front());
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() == 0 || component_of(g, g.vertices(), 0) == g.vertices();
}

std::string to_string(VertexSet s)
{
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ']';
    return os.str();
}

VertexSet parse_vertex_list(const std::string& text)
{
    VertexSet out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    Vertex last = -1;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex '" + item + "' in list '" + text + "'");
        }
        if (used != item.size() || v < 0 || v >= max_vertices) {
            throw std::invalid_argument("bad vertex '" + item + "' in list '" + text + "'");
        }
        if (v <= last) throw std::invalid_argument("vertex list must be strictly ascending: " + text);
        last = v;
        out.insert(v);
    }
    return out;
}

} // namespace forceps
