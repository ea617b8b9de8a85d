#include "eqlines/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>

namespace eqlines {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex index out of range");
}

void check_set(const Graph& g, const VertexSet& s) {
    int prev = -1;
    for (int v : s) {
        check_vertex(g, v);
        if (v <= prev) throw std::invalid_argument("vertex set not sorted/unique");
        prev = v;
    }
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (int v = 0; v < n; ++v) edge_count_ += adj_[v].size();
    edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    check_vertex(*this, v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph Graph::spider(const std::vector<int>& legs) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("leg length must be >= 1");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e);
}

Graph Graph::disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> e;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges()) e.emplace_back(n + u, n + v);
        n += g.vertex_count();
    }
    return Graph(n, e);
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (n > 11) throw std::invalid_argument("edge mask limited to n <= 11");
    std::vector<std::pair<int, int>> e;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) e.emplace_back(i, j);
    return Graph(n, e);
}

std::uint64_t Graph::edge_mask() const {
    int n = vertex_count();
    if (n > 11) throw std::invalid_argument("edge mask limited to n <= 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (has_edge(i, j)) mask |= std::uint64_t{1} << bit;
    return mask;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    std::vector<char> mark(g.vertex_count(), 0);
    for (int v : s) {
        mark[v] = 1;
        for (int u : g.neighbors(v)) mark[u] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            out[id].push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = id;
                    queue.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; the minimum over all roots of the shortest
    // cycle seen from a root is the exact girth.
    int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> level(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> queue{root};
        level[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (2 * level[v] + 1 >= best) break;
            for (int u : g.neighbors(v)) {
                if (level[u] < 0) {
                    level[u] = level[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    best = std::min(best, level[u] + level[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

long long cyclomatic_number(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("cyclomatic number requires a connected graph");
    return g.edge_count() - g.vertex_count() + 1;
}

namespace {

std::optional<VertexSet> find_p3(const Graph& g) {
    // Center scan ascending, then the two smallest distinct neighbors.
    for (int c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < 2) continue;
        const auto& nb = g.neighbors(c);
        VertexSet w{nb[0], c, nb[1]};
        std::sort(w.begin(), w.end());
        return w;
    }
    return std::nullopt;
}

std::optional<VertexSet> find_t1112(const Graph& g) {
    // Center c with neighbors {a,b,d,e1} and e1 having a further neighbor e2.
    for (int c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < 4) continue;
        for (int e1 : g.neighbors(c)) {
            for (int e2 : g.neighbors(e1)) {
                if (e2 == c) continue;
                VertexSet stub;
                for (int x : g.neighbors(c)) {
                    if (x == e1 || x == e2) continue;
                    stub.push_back(x);
                    if (stub.size() == 3) break;
                }
                if (stub.size() < 3) continue;
                VertexSet w{c, e1, e2, stub[0], stub[1], stub[2]};
                std::sort(w.begin(), w.end());
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_t222(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        const auto& nb = g.neighbors(c);
        int d = static_cast<int>(nb.size());
        if (d < 3) continue;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    int legs[3] = {nb[i], nb[j], nb[k]};
                    // Extend each leg by one vertex, all seven distinct.
                    VertexSet used{c, legs[0], legs[1], legs[2]};
                    VertexSet tips;
                    auto taken = [&](int v) {
                        return std::find(used.begin(), used.end(), v) != used.end() ||
                               std::find(tips.begin(), tips.end(), v) != tips.end();
                    };
                    std::function<bool(int)> extend = [&](int leg) {
                        if (leg == 3) return true;
                        for (int y : g.neighbors(legs[leg])) {
                            if (taken(y)) continue;
                            tips.push_back(y);
                            if (extend(leg + 1)) return true;
                            tips.pop_back();
                        }
                        return false;
                    };
                    if (!extend(0)) continue;
                    VertexSet w = used;
                    w.insert(w.end(), tips.begin(), tips.end());
                    std::sort(w.begin(), w.end());
                    return w;
                }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_short_cycle(const Graph& g) {
    auto girth_len = girth(g);
    if (!girth_len || *girth_len > 5) return std::nullopt;
    int len = *girth_len;
    // First cycle of girth length in scan order: smallest starting vertex,
    // then lexicographic continuation.
    std::vector<int> walk;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<bool()> dfs = [&]() {
        int depth = static_cast<int>(walk.size());
        int v = walk.back();
        if (depth == len) return g.has_edge(v, walk.front());
        for (int u : g.neighbors(v)) {
            if (used[u] || u < walk.front()) continue;
            // Break the two orientations of the same cycle.
            if (depth == len - 1 && walk.size() > 1 && u < walk[1]) continue;
            used[u] = 1;
            walk.push_back(u);
            if (dfs()) return true;
            walk.pop_back();
            used[u] = 0;
        }
        return false;
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        walk = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (dfs()) {
            VertexSet w = walk;
            std::sort(w.begin(), w.end());
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_subgraph(const Graph& g, Pattern pattern) {
    switch (pattern) {
        case Pattern::P3: return find_p3(g);
        case Pattern::T1112: return find_t1112(g);
        case Pattern::T222: return find_t222(g);
        case Pattern::CYCLE_LE_5: return find_short_cycle(g);
    }
    throw std::logic_error("unknown pattern");
}

VertexSet extend_by_attached_vertex(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (in[u]) continue;
        for (int v : g.neighbors(u))
            if (in[v]) {
                VertexSet out = s;
                out.insert(std::lower_bound(out.begin(), out.end(), u), u);
                return out;
            }
    }
    throw std::invalid_argument("no vertex outside the set is attached to it");
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) index[s[i]] = i;
    std::vector<std::pair<int, int>> e;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (index[u] >= 0 && v < u) e.emplace_back(index[v], index[u]);
    return Graph(static_cast<int>(s.size()), e);
}

VertexSet complement_set(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    VertexSet out;
    auto it = s.begin();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (it != s.end() && *it == v)
            ++it;
        else
            out.push_back(v);
    }
    return out;
}

namespace {

void append_bits(std::string& out, std::vector<char>& bits) {
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v << 1 | bits[i + b];
        out.push_back(static_cast<char>(v + 63));
    }
    bits.clear();
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6 encoder limited to n < 258048");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>((n >> shift & 63) + 63));
    }
    std::vector<char> bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw std::invalid_argument("graph6 sizes >= 258048 unsupported");
        if (text.size() < 4) throw std::invalid_argument("truncated graph6 size header");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            int c = static_cast<unsigned char>(text[pos]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 size char");
            n = n << 6 | c;
        }
    } else {
        n = static_cast<unsigned char>(text[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("bad graph6 size char");
        pos = 1;
    }
    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != nchars)
        throw std::invalid_argument("graph6 payload length mismatch");
    std::vector<std::pair<int, int>> e;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(text[pos + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 payload char");
            if (c >> (5 - bit % 6) & 1) e.emplace_back(i, j);
        }
    // Trailing padding must be zero.
    for (long long b = bit; b < nchars * 6; ++b) {
        int c = static_cast<unsigned char>(text[pos + b / 6]) - 63;
        if (c >> (5 - b % 6) & 1) throw std::invalid_argument("nonzero graph6 padding");
    }
    return Graph(static_cast<int>(n), e);
}

}  // namespace eqlines
