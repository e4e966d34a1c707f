#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forceps/graph.hpp"

namespace forceps {

/// Color change rule.
///
/// standard: a blue non-leak vertex forces its unique non-blue neighbor.
/// psd: a blue non-leak vertex u forces v when v is the only neighbor of u
/// inside the component of G - blue that contains v.
enum class Rule { standard, psd };

std::string_view to_string(Rule r);
/// Accepts "psd" and "standard".
Rule parse_rule(std::string_view text);

/// Blue vertices plus leaks. A blue leak stays blue but never forces.
struct ColoringState {
    VertexSet blue;
    VertexSet leaks;
};

struct Force {
    Vertex source = 0;
    Vertex target = 0;
    friend auto operator<=>(const Force&, const Force&) = default;
};

struct TimedForce {
    int round = 0;
    Force force;
    friend bool operator==(const TimedForce&, const TimedForce&) = default;
};

/// Forces in the order they were applied, tagged with the round (from 1).
using Chronology = std::vector<TimedForce>;

/// One `round u->v` line per force.
std::string format_chronology(const Chronology& chronology);

struct ClosureResult {
    VertexSet blue;
    Chronology chronology;
};

/// Every force valid in state `s`, sorted by (source, target).
std::vector<Force> force_candidates(const Graph& g, const ColoringState& s, Rule r);

/// Round-wise closure. Each round gathers every valid force, keeps the smallest
/// (source, target) per target and applies them all at once.
ClosureResult closure(const Graph& g, const ColoringState& s, Rule r);

/// Final blue set only. `barred` vertices are never colored, which is how
/// possible_forces probes the maximal state short of a given target.
VertexSet closure_set(const Graph& g, VertexSet blue, VertexSet leaks, Rule r,
                      VertexSet barred = VertexSet{});

bool is_forcing_set(const Graph& g, const ColoringState& s, Rule r);

struct LeakyVerdict {
    bool forcing = false;
    /// Lexicographically first leak placement that stops B (only when !forcing).
    std::optional<VertexSet> witness_leaks;
};

/// B survives every placement of `ell` leaks (ell is clamped to n).
/// Leaks may sit on any vertex, including members of B.
LeakyVerdict is_ell_leaky_forcing_set(const Graph& g, VertexSet blue, int ell, Rule r);

/// Boolean-only variant for search loops.
///
/// Leak placements are tried in an order that tends to fail fast: first any
/// placements recorded in `killers` (which is updated with the failing one),
/// then the rest. `closures_run`, when given, is incremented per closure.
bool leaky_forcing_holds(const Graph& g, VertexSet blue, int ell, Rule r,
                         std::vector<VertexSet>* killers = nullptr, long long* closures_run = nullptr);

/// All forces u->v that occur in some psd chronology starting from B without leaks.
///
/// For each v outside B the closure is taken with v barred; by monotonicity of
/// the psd rule this is the largest state reachable before v turns blue, so
/// u->v is realizable iff it is valid there.
std::vector<Force> possible_forces(const Graph& g, VertexSet blue);

/// Number of distinct u with u->v in possible_forces(g, B).
/// Throws std::invalid_argument when v is in B.
int distinct_forcers(const Graph& g, VertexSet blue, Vertex v);

/// B is a psd forcing set and every v outside B has at least two distinct
/// possible forcers. Equivalent to 1-leaky psd forcing.
bool one_leaky_criterion(const Graph& g, VertexSet blue);

} // namespace forceps
