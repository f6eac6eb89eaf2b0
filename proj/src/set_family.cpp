#include "shadowbound/set_family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace shadowbound {

namespace {

// Colex order on ascending tuples: compare from the largest element down.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

SetFamily::SetFamily(int n, int k) : n_(n), k_(k) {
    if (n < 0) throw std::invalid_argument("SetFamily: n must be >= 0");
    if (k < 1) throw std::invalid_argument("SetFamily: k must be >= 1");
}

SetFamily SetFamily::from_edges(int n, int k, const std::vector<std::vector<int>>& edges) {
    SetFamily f(n, k);
    for (const auto& e : edges) f.add_edge(e);
    return f;
}

std::size_t SetFamily::size() const { return uses_masks() ? mask_edges_.size() : tuple_edges_.size(); }

void SetFamily::insert_mask(std::uint64_t m) {
    auto it = std::lower_bound(mask_edges_.begin(), mask_edges_.end(), m);
    if (it == mask_edges_.end() || *it != m) mask_edges_.insert(it, m);
}

void SetFamily::insert_tuple(std::vector<int> t) {
    auto it = std::lower_bound(tuple_edges_.begin(), tuple_edges_.end(), t, colex_less);
    if (it == tuple_edges_.end() || *it != t) tuple_edges_.insert(it, std::move(t));
}

void SetFamily::add_edge(const std::vector<int>& verts) {
    if ((int)verts.size() != k_) throw std::invalid_argument("add_edge: wrong edge size");
    std::vector<int> s(verts);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n_) throw std::invalid_argument("add_edge: vertex out of range");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("add_edge: repeated vertex");
    }
    if (uses_masks()) {
        std::uint64_t m = 0;
        for (int v : s) m |= 1ull << v;
        insert_mask(m);
    } else {
        insert_tuple(std::move(s));
    }
}

bool SetFamily::contains(const std::vector<int>& verts) const {
    if ((int)verts.size() != k_) return false;
    std::vector<int> s(verts);
    std::sort(s.begin(), s.end());
    if (uses_masks()) {
        std::uint64_t m = 0;
        for (int v : s) {
            if (v < 0 || v >= n_) return false;
            m |= 1ull << v;
        }
        return std::binary_search(mask_edges_.begin(), mask_edges_.end(), m);
    }
    return std::binary_search(tuple_edges_.begin(), tuple_edges_.end(), s, colex_less);
}

std::vector<int> SetFamily::edge(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("SetFamily::edge");
    if (!uses_masks()) return tuple_edges_[i];
    std::vector<int> out;
    std::uint64_t m = mask_edges_[i];
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b);
        m &= m - 1;
    }
    return out;
}

std::vector<std::vector<int>> SetFamily::all_edges() const {
    std::vector<std::vector<int>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(edge(i));
    return out;
}

const std::vector<std::uint64_t>& SetFamily::masks() const {
    if (!uses_masks()) throw std::logic_error("SetFamily::masks: tuple-backed family");
    return mask_edges_;
}

SetFamily shadow(const SetFamily& f) {
    if (f.k() < 2) throw std::invalid_argument("shadow: k must be >= 2");
    SetFamily out(f.n(), f.k() - 1);
    if (f.uses_masks()) {
        for (std::uint64_t m : f.mask_edges_) {
            std::uint64_t rest = m;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                out.insert_mask(m ^ low);
                rest &= rest - 1;
            }
        }
    } else {
        for (const auto& e : f.tuple_edges_) {
            for (std::size_t drop = 0; drop < e.size(); ++drop) {
                std::vector<int> sub;
                sub.reserve(e.size() - 1);
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (i != drop) sub.push_back(e[i]);
                out.insert_tuple(std::move(sub));
            }
        }
    }
    return out;
}

SetFamily link(const SetFamily& f, int x) {
    if (x < 0 || x >= f.n()) throw std::invalid_argument("link: vertex out of range");
    if (f.k() < 2) throw std::invalid_argument("link: k must be >= 2");
    SetFamily out(f.n(), f.k() - 1);
    if (f.uses_masks()) {
        std::uint64_t xb = 1ull << x;
        for (std::uint64_t m : f.mask_edges_)
            if (m & xb) out.insert_mask(m ^ xb);
    } else {
        for (const auto& e : f.tuple_edges_) {
            if (std::binary_search(e.begin(), e.end(), x)) {
                std::vector<int> sub;
                sub.reserve(e.size() - 1);
                for (int v : e)
                    if (v != x) sub.push_back(v);
                out.insert_tuple(std::move(sub));
            }
        }
    }
    return out;
}

long long degree(const SetFamily& f, int x) {
    if (x < 0 || x >= f.n()) throw std::invalid_argument("degree: vertex out of range");
    long long d = 0;
    if (f.uses_masks()) {
        std::uint64_t xb = 1ull << x;
        for (std::uint64_t m : f.masks())
            if (m & xb) ++d;
    } else {
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto e = f.edge(i);
            if (std::binary_search(e.begin(), e.end(), x)) ++d;
        }
    }
    return d;
}

long long min_degree(const SetFamily& f) {
    if (f.n() == 0) return 0;
    std::vector<long long> deg(f.n(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int v : f.edge(i)) ++deg[v];
    long long m = deg[0];
    for (long long d : deg) m = std::min(m, d);
    return m;
}

SetFamily complete_family(int n, int k) {
    SetFamily f(n, k);
    if (k > n) return f;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        f.add_edge(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return f;
}

std::string to_text(const SetFamily& f) {
    std::ostringstream os;
    os << f.n() << " " << f.k() << "\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto e = f.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) os << " ";
            os << e[j];
        }
        os << "\n";
    }
    return os.str();
}

SetFamily family_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, k = -1;
    SetFamily f;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw std::runtime_error("family_from_text: bad token on line " + std::to_string(lineno));
        if (vals.empty()) continue;
        if (!have_header) {
            if (vals.size() != 2) throw std::runtime_error("family_from_text: header must be \"n k\"");
            n = (int)vals[0];
            k = (int)vals[1];
            f = SetFamily(n, k);
            have_header = true;
            continue;
        }
        std::vector<int> e(vals.begin(), vals.end());
        f.add_edge(e);  // validates size and range
    }
    if (!have_header) throw std::runtime_error("family_from_text: missing header");
    return f;
}

}  // namespace shadowbound
