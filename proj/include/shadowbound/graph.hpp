#pragma once

#include "shadowbound/set_family.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace shadowbound {

// Simple undirected graph on vertices 0..n-1.  Adjacency is a per-vertex
// bitset row, so neighborhood intersections reduce to word AND + popcount.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int min_degree() const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, colex order

    const std::uint64_t* row(int v) const { return bits_.data() + (std::size_t)v * words_; }

    // Number of edges inside N(v), i.e. triangles through v.
    long long neighborhood_edge_count(int v) const;
    long long min_triangle_degree() const;
    long long max_triangle_degree() const;
    std::vector<long long> triangle_degrees() const;

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
    void check_vertex(int v) const;
};

// Graph whose edges are the 2-shadow of a 3-uniform family (same vertex set).
Graph shadow_graph(const SetFamily& f);

// k-uniform family of the vertex sets of k-cliques of g.
SetFamily clique_family(const Graph& g, int k);

Graph complement(const Graph& g);

// graph6 codec (bit-exact): 6-bit groups offset by 63, upper-triangle bits in
// column order (0,1),(0,2),(1,2),(0,3),...  Supports all three size headers.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain text: header line "n", then one "u v" pair per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

// Sniffs edge-list (leading integer line) vs graph6.
Graph read_graph_auto(const std::string& text);

}  // namespace shadowbound
