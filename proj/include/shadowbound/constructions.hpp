#pragma once

#include "shadowbound/bounds.hpp"
#include "shadowbound/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shadowbound {

enum class ConstructionKind {
    G1,              // two overlapping cliques
    G2,              // two cliques joined by a circulant regular bipartite layer
    G2Prime,         // odd-n variant of G2 with one cloned vertex
    DisjointCliques, // n/(t+1) disjoint copies of K_{t+1}
    ExactSmall,      // n - t in {2, 3, 4}: K_n minus an edge / minus a matching /
                     // complement of a triangle-free 2-regular graph
};
const char* construction_name(ConstructionKind k);

struct Certification {
    long long min_triangle_degree = 0;
    long long required = 0;  // ceil binom2(t), exact
    bool ok = false;
};

// Direct check that every vertex of g lies in at least binom2(t) triangles;
// the comparison is exact (integer count vs rational threshold).
Certification certify_triangle_threshold(const Graph& g, double t);

// Two cliques K_{ceil(t)+1} sharing 2*ceil(t) + 2 - n vertices.  Feasible for
// n/2 - 1 <= ceil(t) <= n - 1 (the top end degenerates to K_n).
Graph build_g1(int n, double t);

// Even n: two K_{n/2} plus a ceil(r)-regular circulant bipartite layer, side-A
// vertex i joined to side-B slots i..i+ceil(r)-1 (mod n/2), r = solve_r(n, t).
Graph build_g2(int n, double t);

// Odd n: two K_{(n-1)/2} plus a ceil(r')-regular circulant layer plus a clone
// of side-A vertex 0 (same neighborhood, not adjacent to it).
Graph build_g2_prime(int n, double t);

// Integer t with (t+1) | n.
Graph build_disjoint_cliques(int n, int t);

// Integer t with n - t in {2, 3, 4}.  Outside the ranges where these shapes
// are actually extremal (t > 5 for even n = t + 3, t > 6 for odd, t >= 5 for
// n = t + 4) a warning is recorded, not an error.
Graph build_exact_small_case(int n, int t, std::vector<std::string>* warnings = nullptr);

// Complement of a disjoint union of cycles (each length >= 4, so the union is
// triangle-free 2-regular); alternative extremal shape for t = n - 4.
Graph build_complement_two_regular(const std::vector<int>& cycle_lengths);

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::G1;
    int n = 0;
    double t = 0.0;
    // derived parameters, populated where meaningful
    double r = 0.0;        // G2
    double r_prime = 0.0;  // G2'
    int overlap = -1;      // G1
};

struct BuiltConstruction {
    ConstructionSpec spec;
    Graph graph;
    Certification cert;
    std::vector<std::string> warnings;
};

// Build one construction by kind; throws std::invalid_argument when infeasible.
BuiltConstruction build_construction(ConstructionKind kind, int n, double t);

// The feasible construction with the fewest edges for this (n, t), trying
// disjoint cliques, the exact small cases, G1, and G2/G2'.  Empty when no
// construction applies (in particular when binom2(t) > binom2(n-1), where no
// n-vertex graph can meet the threshold at all).
std::optional<BuiltConstruction> best_construction(int n, double t);

}  // namespace shadowbound
