#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shadowbound {

// A k-uniform set family on labeled vertices 0..n-1.  Edges are kept in
// canonical colex order with no duplicates: one width-n bitmask per edge for
// n <= 64, sorted vertex tuples above that.  Mutation is limited to add_edge;
// all queries see a consistent canonical edge list.
class SetFamily {
public:
    SetFamily() = default;
    SetFamily(int n, int k);

    static SetFamily from_edges(int n, int k, const std::vector<std::vector<int>>& edges);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const;
    bool uses_masks() const { return n_ <= 64; }

    void add_edge(const std::vector<int>& verts);
    bool contains(const std::vector<int>& verts) const;

    std::vector<int> edge(std::size_t i) const;  // ascending vertex labels
    std::vector<std::vector<int>> all_edges() const;

    // n <= 64 only: sorted list of edge bitmasks.
    const std::vector<std::uint64_t>& masks() const;

    bool operator==(const SetFamily& o) const = default;

private:
    int n_ = 0, k_ = 0;
    std::vector<std::uint64_t> mask_edges_;      // sorted ascending (== colex on sets)
    std::vector<std::vector<int>> tuple_edges_;  // colex-sorted
    friend SetFamily shadow(const SetFamily&);
    friend SetFamily link(const SetFamily&, int);
    void insert_mask(std::uint64_t m);
    void insert_tuple(std::vector<int> t);
};

// Family of all (k-1)-subsets contained in some edge.  Requires k >= 2.
SetFamily shadow(const SetFamily& f);

// Link of vertex x: { e \ {x} : x in e in f }, a (k-1)-uniform family.
SetFamily link(const SetFamily& f, int x);

// Number of edges containing x.
long long degree(const SetFamily& f, int x);

// min over vertices 0..n-1 of degree (0 for n = 0).
long long min_degree(const SetFamily& f);

// All k-subsets of {0..n-1}.
SetFamily complete_family(int n, int k);

// Text format: header line "n k", then one edge per line as ascending
// space-separated labels, in canonical order.  Round-trips exactly.
std::string to_text(const SetFamily& f);
SetFamily family_from_text(const std::string& text);

}  // namespace shadowbound
