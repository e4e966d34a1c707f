#include "forceps/forcing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forceps {

namespace {

constexpr std::size_t max_killers = 8;

/// Targets reachable in one round from `blue`, ignoring `barred`.
VertexSet forced_this_round(const Graph& g, VertexSet blue, VertexSet active, Rule r, VertexSet barred,
                            const std::vector<VertexSet>& white_components)
{
    const VertexSet white = g.vertices() - blue;
    VertexSet targets;
    for (Vertex u : active) {
        const VertexSet open = g.neighbors(u) & white;
        if (open.empty()) continue;
        if (open.size() == 1) {
            targets |= open;
            continue;
        }
        if (r == Rule::standard) continue;
        for (VertexSet comp : white_components) {
            const VertexSet inside = open & comp;
            if (inside.size() == 1) targets |= inside;
        }
    }
    return targets - barred;
}

} // namespace

std::string_view to_string(Rule r)
{
    return r == Rule::psd ? "psd" : "standard";
}

Rule parse_rule(std::string_view text)
{
    if (text == "psd") return Rule::psd;
    if (text == "standard") return Rule::standard;
    throw std::invalid_argument("unknown rule '" + std::string(text) + "' (expected psd or standard)");
}

std::string format_chronology(const Chronology& chronology)
{
    std::ostringstream os;
    for (const auto& [round, f] : chronology) os << round << ' ' << f.source << "->" << f.target << '\n';
    return os.str();
}

std::vector<Force> force_candidates(const Graph& g, const ColoringState& s, Rule r)
{
    const VertexSet blue = s.blue & g.vertices();
    const VertexSet white = g.vertices() - blue;
    std::vector<Force> out;
    if (white.empty()) return out;
    const std::vector<VertexSet> comps =
        r == Rule::psd ? components_within(g, white) : std::vector<VertexSet>{white};
    for (Vertex u : blue - s.leaks) {
        const VertexSet open = g.neighbors(u) & white;
        for (VertexSet comp : comps) {
            const VertexSet inside = open & comp;
            if (r == Rule::psd ? inside.size() == 1 : open.size() == 1 && !inside.empty()) {
                out.push_back({u, inside.front()});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClosureResult closure(const Graph& g, const ColoringState& s, Rule r)
{
    ClosureResult result{s.blue & g.vertices(), {}};
    for (int round = 1;; ++round) {
        const auto candidates = force_candidates(g, {result.blue, s.leaks}, r);
        if (candidates.empty()) break;
        VertexSet claimed;
        for (const Force& f : candidates) {
            // Sorted by source, so the first force onto a target has the smallest source.
            if (claimed.contains(f.target)) continue;
            claimed.insert(f.target);
            result.chronology.push_back({round, f});
        }
        result.blue |= claimed;
    }
    return result;
}

VertexSet closure_set(const Graph& g, VertexSet blue, VertexSet leaks, Rule r, VertexSet barred)
{
    const VertexSet all = g.vertices();
    blue &= all;
    VertexSet active = blue - leaks;
    std::vector<VertexSet> comps;
    while (true) {
        const VertexSet white = all - blue;
        if (white.empty()) break;
        // Drop forcers with nothing left to force.
        for (Vertex u : active) {
            if (!g.neighbors(u).intersects(white)) active.erase(u);
        }
        if (active.empty()) break;
        comps.clear();
        if (r == Rule::psd) comps = components_within(g, white);
        const VertexSet gained = forced_this_round(g, blue, active, r, barred, comps);
        if (gained.empty()) break;
        blue |= gained;
        active |= gained - leaks;
    }
    return blue;
}

bool is_forcing_set(const Graph& g, const ColoringState& s, Rule r)
{
    return closure_set(g, s.blue, s.leaks, r) == g.vertices();
}

bool leaky_forcing_holds(const Graph& g, VertexSet blue, int ell, Rule r, std::vector<VertexSet>* killers,
                         long long* closures_run)
{
    if (ell < 0) throw std::invalid_argument("leak count must be non-negative");
    const VertexSet all = g.vertices();
    ell = std::min(ell, g.order());
    blue &= all;
    if (blue == all) return true;

    // A vertex outside B with at most ell neighbors is cut off by leaking them all.
    for (Vertex v : all - blue) {
        if (g.degree(v) <= ell) return false;
    }

    auto fails = [&](VertexSet leaks) {
        if (closures_run) ++*closures_run;
        return closure_set(g, blue, leaks, r) != all;
    };
    auto remember = [&](VertexSet leaks) {
        if (!killers) return;
        auto it = std::find(killers->begin(), killers->end(), leaks);
        if (it != killers->end()) killers->erase(it);
        killers->insert(killers->begin(), leaks);
        if (killers->size() > max_killers) killers->pop_back();
    };

    if (fails(VertexSet{})) {
        remember(VertexSet{});
        return false;
    }
    if (ell == 0) return true;

    if (killers) {
        for (VertexSet k : *killers) {
            if (k.size() <= ell && k.is_subset_of(all) && fails(k)) {
                remember(k);
                return false;
            }
        }
    }

    // Only vertices that still have a neighbor outside B can ever force, so
    // leaks elsewhere change nothing.
    VertexSet useful;
    for (Vertex u : all) {
        if (!g.neighbors(u).is_subset_of(blue)) useful.insert(u);
    }
    const int k = std::min(ell, useful.size());
    VertexSet failing;
    const bool all_pass = for_each_subset_of_size(useful, k, [&](VertexSet leaks) {
        if (fails(leaks)) {
            failing = leaks;
            return false;
        }
        return true;
    });
    if (!all_pass) remember(failing);
    return all_pass;
}

LeakyVerdict is_ell_leaky_forcing_set(const Graph& g, VertexSet blue, int ell, Rule r)
{
    if (ell < 0) throw std::invalid_argument("leak count must be non-negative");
    ell = std::min(ell, g.order());
    if (leaky_forcing_holds(g, blue, ell, r)) return {true, std::nullopt};

    LeakyVerdict verdict;
    for_each_subset_of_size(g.vertices(), ell, [&](VertexSet leaks) {
        if (closure_set(g, blue, leaks, r) != g.vertices()) {
            verdict.witness_leaks = leaks;
            return false;
        }
        return true;
    });
    if (!verdict.witness_leaks) throw std::logic_error("leaky check disagrees with enumeration");
    return verdict;
}

namespace {

/// Sources of possible psd forces onto v, given v is outside B.
VertexSet forcers_of(const Graph& g, VertexSet blue, Vertex v)
{
    const VertexSet reached = closure_set(g, blue, VertexSet{}, Rule::psd, VertexSet::singleton(v));
    const VertexSet comp = component_of(g, g.vertices() - reached, v);
    VertexSet out;
    for (Vertex u : reached) {
        if ((g.neighbors(u) & comp) == VertexSet::singleton(v)) out.insert(u);
    }
    return out;
}

} // namespace

std::vector<Force> possible_forces(const Graph& g, VertexSet blue)
{
    blue &= g.vertices();
    std::vector<Force> out;
    for (Vertex v : g.vertices() - blue) {
        for (Vertex u : forcers_of(g, blue, v)) out.push_back({u, v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

int distinct_forcers(const Graph& g, VertexSet blue, Vertex v)
{
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    if (blue.contains(v)) {
        throw std::invalid_argument("distinct_forcers: vertex " + std::to_string(v) + " is already blue");
    }
    return forcers_of(g, blue & g.vertices(), v).size();
}

bool one_leaky_criterion(const Graph& g, VertexSet blue)
{
    blue &= g.vertices();
    if (closure_set(g, blue, VertexSet{}, Rule::psd) != g.vertices()) return false;
    for (Vertex v : g.vertices() - blue) {
        if (forcers_of(g, blue, v).size() < 2) return false;
    }
    return true;
}

} // namespace forceps
