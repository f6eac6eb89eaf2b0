#include "shadowbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace shadowbound {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_((std::size_t)n * ((n + 63) / 64), 0) {
    if (n < 0) throw std::invalid_argument("Graph: n must be >= 0");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1ull;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    bits_[(std::size_t)u * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[(std::size_t)v * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    bits_[(std::size_t)u * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[(std::size_t)v * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int m = degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

long long Graph::edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

long long Graph::neighborhood_edge_count(int v) const {
    check_vertex(v);
    const std::uint64_t* rv = row(v);
    long long twice = 0;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = rv[w];
        while (bits) {
            int u = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            const std::uint64_t* ru = row(u);
            for (int x = 0; x < words_; ++x) twice += std::popcount(ru[x] & rv[x]);
        }
    }
    return twice / 2;
}

std::vector<long long> Graph::triangle_degrees() const {
    std::vector<long long> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = neighborhood_edge_count(v);
    return out;
}

long long Graph::min_triangle_degree() const {
    if (n_ == 0) return 0;
    long long m = neighborhood_edge_count(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, neighborhood_edge_count(v));
    return m;
}

long long Graph::max_triangle_degree() const {
    if (n_ == 0) return 0;
    long long m = neighborhood_edge_count(0);
    for (int v = 1; v < n_; ++v) m = std::max(m, neighborhood_edge_count(v));
    return m;
}

Graph shadow_graph(const SetFamily& f) {
    if (f.k() != 3) throw std::invalid_argument("shadow_graph: 3-uniform family required");
    Graph g(f.n());
    SetFamily sh = shadow(f);
    for (std::size_t i = 0; i < sh.size(); ++i) {
        auto e = sh.edge(i);
        g.add_edge(e[0], e[1]);
    }
    return g;
}

namespace {

void clique_extend(const Graph& g, std::vector<int>& cur, std::vector<std::uint64_t>& common, int k,
                   SetFamily& out) {
    if ((int)cur.size() == k) {
        out.add_edge(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int v = start; v < g.n(); ++v) {
        if (!cur.empty() && !((common[v >> 6] >> (v & 63)) & 1ull)) continue;
        std::vector<std::uint64_t> next(g.words());
        for (int w = 0; w < g.words(); ++w)
            next[w] = (cur.empty() ? g.row(v)[w] : (common[w] & g.row(v)[w]));
        cur.push_back(v);
        std::swap(common, next);
        clique_extend(g, cur, common, k, out);
        std::swap(common, next);
        cur.pop_back();
    }
}

}  // namespace

SetFamily clique_family(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique_family: k must be >= 1");
    SetFamily out(g.n(), k);
    std::vector<int> cur;
    std::vector<std::uint64_t> common(g.words(), 0);
    clique_extend(g, cur, common, k, out);
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

void append_size(std::string& s, long long n) {
    if (n <= 62) {
        s.push_back((char)(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) s.push_back((char)(((n >> shift) & 63) + 63));
    } else {
        s.push_back(126);
        s.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) s.push_back((char)(((n >> shift) & 63) + 63));
    }
}

long long parse_size(const std::string& s, std::size_t& pos) {
    auto next = [&]() -> long long {
        if (pos >= s.size()) throw std::runtime_error("graph6: truncated size header");
        int c = (unsigned char)s[pos++];
        if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range");
        return c - 63;
    };
    long long a = next();
    if (a < 63) return a;
    long long b = next();
    if (b < 63) {
        long long n = b;
        for (int i = 0; i < 2; ++i) n = (n << 6) | next();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    return n;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string s;
    append_size(s, g.n());
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n(); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) s.push_back((char)((acc << (6 - nbits)) + 63));
    return s;
}

Graph from_graph6(const std::string& input) {
    std::string s = input;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    std::size_t pos = 0;
    long long n = parse_size(s, pos);
    if (n > 100000) throw std::runtime_error("graph6: graph too large for in-memory adjacency");
    Graph g((int)n);
    long long nbits = n * (n - 1) / 2;
    long long need = (nbits + 5) / 6;
    if ((long long)(s.size() - pos) != need) throw std::runtime_error("graph6: wrong body length");
    int acc = 0, avail = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (avail == 0) {
                int c = (unsigned char)s[pos++];
                if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range");
                acc = c - 63;
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) g.add_edge(u, v);
            --avail;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0) throw std::runtime_error("graph6: nonzero padding");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw std::runtime_error("edge list: bad token on line " + std::to_string(lineno));
        if (vals.empty()) continue;
        if (!have_header) {
            if (vals.size() != 1 || vals[0] < 0) throw std::runtime_error("edge list: header must be a vertex count");
            g = Graph((int)vals[0]);
            have_header = true;
            continue;
        }
        if (vals.size() != 2) throw std::runtime_error("edge list: expected \"u v\" on line " + std::to_string(lineno));
        if (vals[0] < 0 || vals[0] >= g.n() || vals[1] < 0 || vals[1] >= g.n() || vals[0] == vals[1])
            throw std::runtime_error("edge list: bad edge on line " + std::to_string(lineno));
        g.add_edge((int)vals[0], (int)vals[1]);
    }
    if (!have_header) throw std::runtime_error("edge list: missing header");
    return g;
}

Graph read_graph_auto(const std::string& text) {
    // An edge list starts with a bare integer line; anything else is graph6.
    std::istringstream is(text);
    std::string first;
    while (std::getline(is, first)) {
        if (!first.empty() && first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream fs(first);
    long long v;
    if (fs >> v) {
        std::string rest;
        if (!(fs >> rest)) return from_edge_list(text);
    }
    // take the first nonempty line as a graph6 record
    std::string trimmed = first;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
    return from_graph6(trimmed);
}

}  // namespace shadowbound
