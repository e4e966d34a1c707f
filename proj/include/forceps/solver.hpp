#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "forceps/families.hpp"
#include "forceps/forcing.hpp"
#include "forceps/graph.hpp"

namespace forceps {

struct SolveStats {
    long long nodes = 0;       ///< candidate sets tested
    long long leak_checks = 0; ///< closures run inside leak checks
};

struct SolveResult {
    int value = 0;
    /// Lexicographically first minimum ell-leaky forcing set.
    VertexSet witness;
    /// Vertices of degree <= ell; contained in every ell-leaky forcing set.
    VertexSet forced_core;
    Rule rule = Rule::psd;
    int ell = 0;
    SolveStats stats;
};

struct SolveOptions {
    int workers = 1;
    /// Components up to this order get a fort-packing lower bound (psd only).
    int fort_bound_max_n = 16;
    /// Start from the degree core, shortcut max degree <= ell, use fort packing.
    /// Off means plain enumeration of all subsets by size.
    bool structural_bounds = true;
    /// Reuse memoized values as lower bounds: the value at ell-1, and for the
    /// standard rule the psd value. Audits of those inequalities turn this off.
    bool chain_bounds = true;
};

/// Exact ell-leaky forcing numbers with a per-instance memo.
///
/// Graphs are split into components and each component is solved with the
/// full leak budget, since the adversary may put every leak in one
/// component. A component's value is searched upward from the best lower
/// bound available: the degree-<=ell core, a disjoint fort packing, the
/// memoized value at ell-1, and (for the standard rule) the memoized psd value.
/// Candidate sets are supersets of the core tried in lexicographic order.
///
/// Thread safe; the memo is shared across callers.
class Solver {
public:
    explicit Solver(SolveOptions options = {}) : options_(options) {}

    SolveResult leaky_number(const Graph& g, int ell, Rule rule);

    const SolveOptions& options() const { return options_; }

private:
    using Key = std::tuple<std::string, int, Rule>;

    SolveResult solve_connected(const Graph& g, int ell, Rule rule);
    std::optional<SolveResult> lookup(const Key& key);

    SolveOptions options_;
    std::mutex memo_mutex_;
    std::map<Key, SolveResult> memo_;
};

SolveResult leaky_number(const Graph& g, int ell, Rule rule, const SolveOptions& options = {});

struct ProductBound {
    int lhs = 0;
    int rhs = 0;
    bool holds = false;
};

/// Compares Z(G x H) with min(|H| Z(G), |G| Z(H)) for the psd rule.
ProductBound product_bound_check(const Graph& g, const Graph& h, int ell, const SolveOptions& options = {});

struct AuditReport {
    std::vector<int> psd;      ///< values for ell = 0..max_ell
    std::vector<int> standard; ///< same, standard rule
    /// Human-readable description of each violated property; empty when all hold.
    std::vector<std::string> findings;
};

/// psd and standard values for ell = 0..max_ell, checking that the psd values
/// never decrease, that psd <= standard, and that value = n iff max degree <= ell.
AuditReport monotonicity_audit(const Graph& g, int max_ell, const SolveOptions& options = {});

// ---------------------------------------------------------------------------
// Edge-deletion scan

struct ScanRecord {
    std::string graph6;
    Edge edge;
    int value_g = 0;
    int value_g_minus_e = 0;
    int diff = 0; ///< value_g - value_g_minus_e
};

struct ScanSummary {
    int graphs = 0;
    int records = 0;
    int disconnected_inputs = 0;
    std::optional<int> min_diff;
    std::optional<int> max_diff;
    /// (graph6, edge) pairs with diff == 1, in input order.
    std::vector<std::pair<std::string, Edge>> diff_one;
};

struct ScanReport {
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

/// One record per (G, e) for every edge of every input graph, in input order.
ScanReport edge_deletion_scan(const std::vector<Graph>& graphs, int ell = 1, const SolveOptions& options = {});

/// Reads graph6 lines, skipping blank lines. Malformed lines are skipped and
/// reported on `log` with their line number and byte offset into the stream.
std::vector<Graph> read_graph6_stream(std::istream& in, std::ostream& log);

// ---------------------------------------------------------------------------
// Family tables

struct FamilyRow {
    FamilySpec spec;
    int ell = 0;
    int computed = 0;
    std::optional<int> expected;
    bool match = true;
    VertexSet witness;
    /// Extra remarks, e.g. why a closed form is withheld.
    std::string note;
};

struct FamilyJob {
    FamilySpec spec;
    std::vector<int> ells;
};

/// Closed-form ell-leaky psd value for a family member, where a proven formula
/// covers the case. Empty when only a bound or nothing is known.
std::optional<int> closed_form(const FamilySpec& spec, int ell);

/// The blue set used in the upper-bound construction for GP(n,1) with two
/// leaks: ceil(n/3) outer vertices spread as evenly as possible around the
/// outer cycle, plus their inner partners.
VertexSet gp_two_leak_construction(int n);

std::vector<FamilyRow> family_table(const std::vector<FamilyJob>& jobs, const SolveOptions& options = {});
std::vector<FamilyRow> family_table(const std::vector<FamilySpec>& specs, const std::vector<int>& ells,
                                    const SolveOptions& options = {});

/// Desk-scale ranges for reproducing the family results. `extended` adds Q4.
std::vector<FamilyJob> paper_suite_jobs(bool extended);

} // namespace forceps
