#include "shadowbound/constructions.hpp"

#include "shadowbound/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowbound {

namespace {

// ceil with a snap for values that are integers up to accumulated float noise;
// without it a mathematically integral t computed as 6 + 1e-15 would get a
// spurious extra clique vertex.
long long ceil_snapped(double x) {
    double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return (long long)r;
    return (long long)std::ceil(x);
}

void add_clique(Graph& g, int lo, int hi) {  // vertices lo..hi inclusive
    for (int v = lo; v <= hi; ++v)
        for (int u = lo; u < v; ++u) g.add_edge(u, v);
}

void certify_or_throw(const Graph& g, double t, const char* who) {
    Certification c = certify_triangle_threshold(g, t);
    if (!c.ok) throw std::logic_error(std::string(who) + ": built graph misses the triangle threshold");
}

}  // namespace

const char* construction_name(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::G1: return "g1";
        case ConstructionKind::G2: return "g2";
        case ConstructionKind::G2Prime: return "g2p";
        case ConstructionKind::DisjointCliques: return "cliques";
        case ConstructionKind::ExactSmall: return "exact-small";
    }
    return "?";
}

Certification certify_triangle_threshold(const Graph& g, double t) {
    Certification c;
    c.required = required_triangle_degree(t);
    c.min_triangle_degree = g.n() > 0 ? g.min_triangle_degree() : 0;
    c.ok = c.min_triangle_degree >= c.required;
    return c;
}

Graph build_g1(int n, double t) {
    if (n < 2) throw std::invalid_argument("build_g1: n must be >= 2");
    long long ct = ceil_snapped(t);
    long long overlap = 2 * ct + 2 - n;
    if (overlap < 0) throw std::invalid_argument("build_g1: t below n/2 - 1, cliques would not cover");
    if (ct > n - 1) throw std::invalid_argument("build_g1: t above n - 1, clique exceeds vertex set");
    Graph g(n);
    add_clique(g, 0, (int)ct);
    add_clique(g, n - (int)ct - 1, n - 1);
    certify_or_throw(g, t, "build_g1");
    return g;
}

Graph build_g2(int n, double t) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_g2: n must be even and >= 2");
    double r = solve_r(n, t);
    long long rc = ceil_snapped(r);
    int m = n / 2;
    if (rc < 1 || rc > m) throw std::invalid_argument("build_g2: infeasible circulant width");
    Graph g(n);
    add_clique(g, 0, m - 1);
    add_clique(g, m, n - 1);
    for (int i = 0; i < m; ++i)
        for (long long j = 0; j < rc; ++j) g.add_edge(i, m + (int)((i + j) % m));
    certify_or_throw(g, t, "build_g2");
    return g;
}

Graph build_g2_prime(int n, double t) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("build_g2_prime: n must be odd and >= 3");
    double rp = solve_r_prime(n, t);
    long long rc = ceil_snapped(rp);
    int m = (n - 1) / 2;
    if (rc < 1 || rc > m) throw std::invalid_argument("build_g2_prime: infeasible circulant width");
    Graph g(n);
    add_clique(g, 0, m - 1);           // side A
    add_clique(g, m, 2 * m - 1);       // side B
    for (int i = 0; i < m; ++i)
        for (long long j = 0; j < rc; ++j) g.add_edge(i, m + (int)((i + j) % m));
    // clone of vertex 0: same neighborhood, not adjacent to 0 itself
    int clone = n - 1;
    for (int v = 1; v < m; ++v) g.add_edge(clone, v);
    for (long long j = 0; j < rc; ++j) g.add_edge(clone, m + (int)(j % m));
    certify_or_throw(g, t, "build_g2_prime");
    return g;
}

Graph build_disjoint_cliques(int n, int t) {
    if (n < 1 || t < 0) throw std::invalid_argument("build_disjoint_cliques: bad parameters");
    if (n % (t + 1) != 0) throw std::invalid_argument("build_disjoint_cliques: (t+1) must divide n");
    Graph g(n);
    for (int base = 0; base < n; base += t + 1) add_clique(g, base, base + t);
    certify_or_throw(g, (double)t, "build_disjoint_cliques");
    return g;
}

Graph build_exact_small_case(int n, int t, std::vector<std::string>* warnings) {
    int gap = n - t;
    if (gap == 2) {
        if (n < 2) throw std::invalid_argument("build_exact_small_case: n too small");
        Graph g(n);
        add_clique(g, 0, n - 1);
        g.remove_edge(0, 1);
        certify_or_throw(g, (double)t, "build_exact_small_case");
        return g;
    }
    if (gap == 3) {
        if (n < 4) throw std::invalid_argument("build_exact_small_case: n too small");
        Graph g(n);
        add_clique(g, 0, n - 1);
        for (int i = 0; i + 1 < n; i += 2) g.remove_edge(i, i + 1);  // odd n leaves n-1 unmatched
        if (warnings) {
            if (n % 2 == 0 && t <= 5)
                warnings->push_back("matching case is extremal only for t > 5 at even n");
            if (n % 2 == 1 && t <= 6)
                warnings->push_back("matching case is extremal only for t > 6 at odd n");
        }
        certify_or_throw(g, (double)t, "build_exact_small_case");
        return g;
    }
    if (gap == 4) {
        if (n < 5) throw std::invalid_argument("build_exact_small_case: need n >= 5 for a triangle-free cycle");
        if (warnings && t < 5)
            warnings->push_back("two-regular complement case is extremal only for t >= 5");
        return build_complement_two_regular({n});
    }
    throw std::invalid_argument("build_exact_small_case: n - t must be 2, 3, or 4");
}

Graph build_complement_two_regular(const std::vector<int>& cycle_lengths) {
    int n = 0;
    for (int len : cycle_lengths) {
        if (len < 4) throw std::invalid_argument("build_complement_two_regular: cycle lengths must be >= 4");
        n += len;
    }
    if (n == 0) throw std::invalid_argument("build_complement_two_regular: no cycles");
    Graph cyc(n);
    int base = 0;
    for (int len : cycle_lengths) {
        for (int i = 0; i < len; ++i) cyc.add_edge(base + i, base + (i + 1) % len);
        base += len;
    }
    Graph g = complement(cyc);
    certify_or_throw(g, (double)(n - 4), "build_complement_two_regular");
    return g;
}

BuiltConstruction build_construction(ConstructionKind kind, int n, double t) {
    BuiltConstruction out;
    out.spec.kind = kind;
    out.spec.n = n;
    out.spec.t = t;
    switch (kind) {
        case ConstructionKind::G1: {
            out.graph = build_g1(n, t);
            out.spec.overlap = (int)(2 * ceil_snapped(t) + 2 - n);
            break;
        }
        case ConstructionKind::G2: {
            out.graph = build_g2(n, t);
            out.spec.r = solve_r(n, t);
            break;
        }
        case ConstructionKind::G2Prime: {
            out.graph = build_g2_prime(n, t);
            out.spec.r_prime = solve_r_prime(n, t);
            break;
        }
        case ConstructionKind::DisjointCliques: {
            long long ti = ceil_snapped(t);
            if ((double)ti != t && std::abs(t - (double)ti) > 1e-9)
                throw std::invalid_argument("build_construction: cliques need integer t");
            out.graph = build_disjoint_cliques(n, (int)ti);
            break;
        }
        case ConstructionKind::ExactSmall: {
            long long ti = ceil_snapped(t);
            if (std::abs(t - (double)ti) > 1e-9)
                throw std::invalid_argument("build_construction: exact-small needs integer t");
            out.graph = build_exact_small_case(n, (int)ti, &out.warnings);
            break;
        }
    }
    out.cert = certify_triangle_threshold(out.graph, t);
    return out;
}

std::optional<BuiltConstruction> best_construction(int n, double t) {
    std::optional<BuiltConstruction> best;
    auto consider = [&](ConstructionKind kind) {
        try {
            BuiltConstruction b = build_construction(kind, n, t);
            if (!b.cert.ok) return;
            if (!best || b.graph.edge_count() < best->graph.edge_count()) best = std::move(b);
        } catch (const std::invalid_argument&) {
            // infeasible for these parameters
        }
    };
    consider(ConstructionKind::DisjointCliques);
    consider(ConstructionKind::ExactSmall);
    consider(ConstructionKind::G1);
    consider(n % 2 == 0 ? ConstructionKind::G2 : ConstructionKind::G2Prime);
    return best;
}

}  // namespace shadowbound
