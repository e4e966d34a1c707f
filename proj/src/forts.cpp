#include "forceps/forts.hpp"

#include <algorithm>

#include <json.hpp>

#include "forceps/forcing.hpp"

namespace forceps {

bool is_leaky_psd_fort(const Graph& g, VertexSet fort, int ell)
{
    fort &= g.vertices();
    if (fort.empty()) throw std::invalid_argument("a fort must be nonempty");
    const VertexSet outside = g.vertices() - fort;
    for (VertexSet comp : components_within(g, fort)) {
        int exposed = 0;
        for (Vertex v : outside) {
            if ((g.neighbors(v) & comp).size() == 1 && ++exposed > ell) return false;
        }
    }
    return true;
}

FortFamily minimal_forts(const Graph& g, int ell, int max_n)
{
    const int n = g.order();
    if (n > max_n) {
        throw std::invalid_argument("minimal_forts: order " + std::to_string(n) + " exceeds the enumeration guard " +
                                    std::to_string(max_n));
    }
    if (n > 40) throw std::invalid_argument("minimal_forts: subset enumeration beyond order 40 is infeasible");
    FortFamily found;
    std::vector<VertexSet::word_type> masks;
    for (int k = 1; k <= n; ++k) {
        const std::size_t before = masks.size();
        // Gosper's hack walks the k-subsets of [0, n) in increasing integer order.
        VertexSet::word_type s = (VertexSet::word_type{1} << k) - 1;
        const VertexSet::word_type limit = n == 64 ? 0 : VertexSet::word_type{1} << n;
        while (true) {
            bool dominated = false;
            for (std::size_t i = 0; i < before && !dominated; ++i) dominated = (masks[i] & ~s) == 0;
            if (!dominated && is_leaky_psd_fort(g, VertexSet(s), ell)) masks.push_back(s);
            const VertexSet::word_type c = s & (~s + 1);
            const VertexSet::word_type r = s + c;
            if (r == 0 || (limit != 0 && r >= limit)) break;
            s = (((r ^ s) >> 2) / c) | r;
            if (limit != 0 && s >= limit) break;
        }
    }
    for (auto m : masks) found.push_back({VertexSet(m), ell});
    std::sort(found.begin(), found.end(), [](const Fort& a, const Fort& b) { return lex_less(a.vertices, b.vertices); });
    return found;
}

Fort fort_from_failure(const Graph& g, VertexSet blue, VertexSet leaks)
{
    const VertexSet reached = closure_set(g, blue, leaks, Rule::psd);
    const VertexSet rest = g.vertices() - reached;
    if (rest.empty()) throw std::invalid_argument("fort_from_failure: the closure already covers the graph");
    Fort fort{rest, (leaks & g.vertices()).size()};
    if (!is_leaky_psd_fort(g, fort.vertices, fort.ell)) {
        throw CertificationError("complement of a failed closure " + to_string(rest) + " with leaks " +
                               to_string(leaks) + " is not a " + std::to_string(fort.ell) + "-leaky psd fort");
    }
    return fort;
}

namespace {

class HittingSearch {
public:
    HittingSearch(const std::vector<VertexSet>& family, long long& nodes) : family_(family), nodes_(nodes) {}

    /// Is there a set of at most `budget` vertices from `allowed` that, together
    /// with `chosen`, meets every member of the family?
    bool feasible(VertexSet chosen, VertexSet allowed, int budget)
    {
        ++nodes_;
        std::vector<VertexSet> unhit;
        for (VertexSet s : family_) {
            if (!s.intersects(chosen)) {
                const VertexSet usable = s & allowed;
                if (usable.empty()) return false;
                unhit.push_back(usable);
            }
        }
        if (unhit.empty()) return true;
        if (budget == 0 || packing_bound(unhit) > budget) return false;

        const VertexSet branch = *std::min_element(unhit.begin(), unhit.end(), [](VertexSet a, VertexSet b) {
            return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
        });
        for (Vertex v : branch) {
            if (feasible(chosen | VertexSet::singleton(v), allowed, budget - 1)) return true;
            // Later branches may assume v is out.
            allowed.erase(v);
        }
        return false;
    }

    /// Greedy count of pairwise disjoint sets, smallest first.
    static int packing_bound(std::vector<VertexSet> sets)
    {
        std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
        VertexSet used;
        int count = 0;
        for (VertexSet s : sets) {
            if (!s.intersects(used)) {
                used |= s;
                ++count;
            }
        }
        return count;
    }

private:
    const std::vector<VertexSet>& family_;
    long long& nodes_;
};

} // namespace

HittingResult minimum_hitting_set(const std::vector<VertexSet>& family, int n)
{
    HittingResult result;
    const VertexSet all = VertexSet::range(n);
    HittingSearch search(family, result.nodes);

    int k = HittingSearch::packing_bound(family);
    while (!search.feasible(VertexSet{}, all, k)) {
        if (++k > n) throw std::invalid_argument("set family cannot be hit (contains an empty set)");
    }
    result.value = k;

    // Fix the smallest possible element at each position in turn.
    VertexSet chosen;
    Vertex last = -1;
    for (int slot = 0; slot < k; ++slot) {
        bool placed = false;
        for (Vertex v = last + 1; v < n && !placed; ++v) {
            const VertexSet above = all - VertexSet::range(v + 1);
            if (search.feasible(chosen | VertexSet::singleton(v), above, k - slot - 1)) {
                chosen.insert(v);
                last = v;
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("hitting set reconstruction failed");
    }
    result.witness = chosen;
    return result;
}

HittingResult hitting_number(const Graph& g, int ell, int max_n)
{
    std::vector<VertexSet> family;
    for (const Fort& f : minimal_forts(g, ell, max_n)) family.push_back(f.vertices);
    return minimum_hitting_set(family, g.order());
}

bool is_connected_fort_standard(const Graph& g, const Fort& fort)
{
    return !fort.vertices.empty() && components_within(g, fort.vertices).size() == 1;
}

std::string forts_to_jsonl(const Graph& g, const FortFamily& forts)
{
    std::string out;
    for (const Fort& f : forts) {
        nlohmann::json j;
        j["vertices"] = f.vertices.to_vector();
        j["ell"] = f.ell;
        j["connected"] = is_connected_fort_standard(g, f);
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace forceps
