#pragma once

#include "shadowbound/graph.hpp"
#include "shadowbound/set_family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shadowbound {

struct SearchOptions {
    int workers = 1;       // >= 1; the search splits the first ceil(log2 w) edge decisions
    bool pruning = true;   // disable only for soundness cross-checks at tiny n
    bool progress = false; // stream node counts to stderr
};

// Result of an exhaustive minimization.  `witnesses` hold every optimum up to
// isomorphism, in canonical labeling, sorted; minimum = -1 means no instance
// meets the threshold (possible only when threshold > binom2(n-1)).
struct SearchResult {
    long long minimum = -1;
    std::vector<Graph> witness_graphs;
    std::vector<SetFamily> witness_families;
    std::uint64_t nodes_explored = 0;
    double wall_time_s = 0.0;
};

// Minimum edge count over n-vertex graphs (n <= 8) in which every vertex lies
// in at least `threshold` triangles.  DFS over edge slots in colex order;
// pruning: incumbent edge count, unreachable vertex degree
// (ceil binom_inverse(threshold, 2)), and optimistic triangle degree with all
// undecided slots present.  Identical minimum and witness set for any worker
// count.
SearchResult min_edges_graph(int n, long long threshold, const SearchOptions& opt = {});

// Minimum shadow size over 3-uniform families on n vertices (n <= 6) with
// every vertex in at least `threshold` triples.
SearchResult min_shadow_family(int n, long long threshold, const SearchOptions& opt = {});

// True when some vertex of g together with its neighborhood forms a K_{t+1}
// component (an isolated clique of the right size).
bool verify_isolated_clique(const Graph& g, int t);

struct RemarkVerdict {
    bool applicable = false;
    bool holds = false;
    std::string note;
};

// Structure of optimal graphs at integer parameters: every witness is a copy
// of the two-overlapping-cliques graph when r + t < 5n/6, and is
// (n/2 + r - 1)-regular when r + t > 5n/6.  Inapplicable when n/2, t, r are
// not all integers or the parameters sit on the boundary.
RemarkVerdict verify_remark_structure(const SearchResult& result, int n, double t, double r);

// Canonical form helpers (exhaustive relabeling; n <= 8).
std::uint64_t canonical_pair_mask(std::uint64_t edge_mask, int n);
Graph graph_from_pair_mask(std::uint64_t edge_mask, int n);
std::uint64_t pair_mask_of_graph(const Graph& g);

}  // namespace shadowbound
