#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "forceps/graph.hpp"

namespace forceps {

/// A vertex set certified as an ell-leaky psd fort.
struct Fort {
    VertexSet vertices;
    int ell = 0;
    friend bool operator==(const Fort&, const Fort&) = default;
};

/// Inclusion-minimal forts, sorted lexicographically by vertex list.
using FortFamily = std::vector<Fort>;

/// Raised when a computation contradicts a proven property of leaky psd
/// forcing. Callers report it as a finding rather than an ordinary error.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default ceiling on the order accepted by subset enumeration.
inline constexpr int default_fort_max_n = 20;

/// Every component C of G[F] has at most `ell` vertices outside F with exactly
/// one neighbor in C.
///
/// This is the per-component form of the fort condition. An outside vertex
/// with zero or at least two neighbors in C can never force into C, so only the
/// "exactly one" vertices matter, and the adversary can silence at most `ell`
/// of them. With ell = 0 it is the ordinary psd fort. Throws on empty F.
bool is_leaky_psd_fort(const Graph& g, VertexSet fort, int ell);

/// All inclusion-minimal ell-leaky psd forts, found by scanning subsets in
/// order of increasing size and skipping supersets of forts already found.
/// Throws std::invalid_argument when g.order() > max_n.
///
/// Every fort contains a minimal one, so a set meets all forts iff it meets
/// all minimal forts. Each component of a fort is again a fort (vertices in
/// other components have no neighbor in it), hence minimal forts are connected.
FortFamily minimal_forts(const Graph& g, int ell, int max_n = default_fort_max_n);

/// F = V(g) minus the psd closure of B under leaks L, certified as a
/// |L|-leaky psd fort. Throws std::invalid_argument when the closure is
/// already everything, CertificationError when certification fails.
Fort fort_from_failure(const Graph& g, VertexSet blue, VertexSet leaks);

struct HittingResult {
    int value = 0;
    /// Lexicographically first minimum hitting set.
    VertexSet witness;
    long long nodes = 0;
};

/// Minimum hitting set of a set family, by branch and bound. Branches on the
/// smallest unhit set; bounds with a greedy packing of pairwise disjoint unhit sets.
HittingResult minimum_hitting_set(const std::vector<VertexSet>& family, int n);

/// Minimum number of vertices meeting every ell-leaky psd fort.
HittingResult hitting_number(const Graph& g, int ell, int max_n = default_fort_max_n);

/// G[F] is connected; such a psd fort is also an ell-leaky standard fort.
bool is_connected_fort_standard(const Graph& g, const Fort& fort);

/// One JSON object per line: {"vertices":[...],"ell":k,"connected":bool}.
std::string forts_to_jsonl(const Graph& g, const FortFamily& forts);

} // namespace forceps
