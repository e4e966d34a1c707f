#pragma once

#include <string>
#include <vector>

#include "forceps/graph.hpp"

namespace forceps {

enum class Family {
    path,
    cycle,
    complete,
    wheel,
    complete_bipartite,
    star,
    hypercube,
    grid,
    petersen_gp,
    tree_from_pruefer,
    fig3_spider,
};

/// A named graph family plus its parameters.
///
/// Textual form is `name:p1:p2...`, e.g. `path:5`, `complete_bipartite:2:3`,
/// `grid:4:4`, `petersen_gp:7:1`, `tree_from_pruefer:3:3:1` (an empty
/// sequence `tree_from_pruefer:` is K2), `fig3_spider`.
struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
    /// Throws std::invalid_argument when parameters are outside the family's range.
    void validate() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Builds the family member with its documented labeling:
///  - path / cycle: consecutive vertices 0..n-1
///  - wheel n: rim 0..n-1 (a cycle), hub n
///  - complete_bipartite m n: parts {0..m-1} and {m..m+n-1}
///  - star n: K_{1,n} with center 0
///  - hypercube d: binary strings read as integers, adjacent iff they differ in one bit
///  - grid n m: (i, j) -> i*m + j
///  - petersen_gp n 1: outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ n+i
///  - tree_from_pruefer: the labeled tree on len+2 vertices with that Pruefer sequence
///  - fig3_spider: path 0-1-2-3 plus leaves 4, 5, 6 on vertex 3
Graph generate(const FamilySpec& spec);

/// Labeled tree on seq.size()+2 vertices decoded from a Pruefer sequence.
Graph tree_from_pruefer(const std::vector<int>& seq);

/// Every Pruefer sequence of length n-2 (n >= 2), in lexicographic order.
std::vector<std::vector<int>> all_pruefer_sequences(int n);

/// Canonical string of a tree up to isomorphism (center-rooted AHU encoding).
/// Used to pick one representative per isomorphism class of small trees.
std::string tree_canonical_form(const Graph& tree);

} // namespace forceps
