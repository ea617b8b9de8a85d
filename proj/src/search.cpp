#include "eqlines/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eqlines/bounds.hpp"
#include "eqlines/matrix.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

void SearchTask::validate() const {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
    if (dim < 1) throw std::invalid_argument("dim must be positive");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("empty vertex range");
    if (mode == EnumMode::RANDOM_SAMPLE) {
        if (sample_count < 1) throw std::invalid_argument("sample count must be positive");
        if (seed == 0) throw std::invalid_argument("seed required for random sampling");
    } else if (n_max > (mode == EnumMode::CANONICAL_DEDUP ? 9 : 11)) {
        throw std::invalid_argument("enumeration budget exceeded");
    }
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j;
    j["best_n"] = best_n;
    j["exhausted"] = exhausted;
    j["witness"] = witness ? witness->to_json() : nlohmann::json();
    return j;
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Column-major upper-triangle bitstring of the identity labeling; earlier
// bits are more significant, so placements append bits on the right.
std::uint64_t column_mask(const std::vector<std::uint16_t>& adj, const std::vector<int>& perm,
                          int n) {
    std::uint64_t v = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            v = (v << 1) | ((adj[perm[j]] >> perm[i]) & 1u);
    return v;
}

struct Canonicalizer {
    int n;
    int total_bits;
    const std::vector<std::uint16_t>& adj;
    std::uint64_t best;
    std::vector<int> best_perm;
    std::vector<int> perm;
    std::vector<char> used;

    void dfs(int depth, std::uint64_t prefix, int bits) {
        if (depth == n) {
            if (prefix < best) {
                best = prefix;
                best_perm = perm;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t val = prefix;
            for (int i = 0; i < depth; ++i)
                val = (val << 1) | ((adj[v] >> perm[i]) & 1u);
            int nbits = bits + depth;
            // Compare against the same-length prefix of the best complete
            // labeling; a larger prefix can never win.
            if (val > (best >> (total_bits - nbits))) continue;
            used[v] = 1;
            perm[depth] = v;
            dfs(depth + 1, val, nbits);
            used[v] = 0;
        }
    }
};

std::vector<std::uint16_t> adjacency_rows(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint16_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint16_t(1) << u;
    return adj;
}

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    if (n <= 1) return identity;
    auto adj = adjacency_rows(g);
    Canonicalizer c{n, pair_count(n), adj, column_mask(adj, identity, n),
                    identity, std::vector<int>(n), std::vector<char>(n, 0)};
    c.dfs(0, 0, 0);
    return c.best_perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    // perm[p] is the original vertex placed at position p.
    int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
    if (g.vertex_count() > 11) throw std::invalid_argument("canonicalization budget exceeded");
    return relabel(g, canonical_labeling(g)).edge_mask();
}

std::vector<Graph> canonical_graphs(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("canonicalization budget exceeded");
    if (n == 0) return {Graph(0)};
    // Augmentation: every n-vertex class arises from some (n-1)-vertex class
    // by attaching the new vertex to some neighborhood subset.
    std::vector<std::uint64_t> masks;
    for (const Graph& h : canonical_graphs(n - 1)) {
        auto base = h.edges();
        for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
            auto edges = base;
            for (int u = 0; u < n - 1; ++u)
                if (nb & (1u << u)) edges.emplace_back(u, n - 1);
            masks.push_back(canonical_edge_mask(Graph(n, edges)));
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Graph> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(Graph::from_edge_mask(n, m));
    return out;
}

void enumerate_graphs(int n, EnumMode mode, const std::function<bool(const Graph&)>& visit,
                      long sample_count, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    switch (mode) {
        case EnumMode::EXHAUSTIVE_LABELED: {
            if (n > 11) throw std::invalid_argument("enumeration budget exceeded");
            int bits = pair_count(n);
            std::uint64_t count = bits >= 64 ? 0 : (std::uint64_t(1) << bits);
            for (std::uint64_t mask = 0; mask < count; ++mask)
                if (!visit(Graph::from_edge_mask(n, mask))) return;
            return;
        }
        case EnumMode::CANONICAL_DEDUP: {
            for (const Graph& g : canonical_graphs(n))
                if (!visit(g)) return;
            return;
        }
        case EnumMode::RANDOM_SAMPLE: {
            Xorshift64Star rng(seed);
            for (long s = 0; s < sample_count; ++s) {
                std::vector<std::pair<int, int>> edges;
                std::uint64_t word = 0;
                int left = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        if (left == 0) {
                            word = rng.next();
                            left = 64;
                        }
                        if (word & 1) edges.emplace_back(i, j);
                        word >>= 1;
                        --left;
                    }
                if (!visit(Graph(n, edges))) return;
            }
            return;
        }
    }
    throw std::logic_error("unknown enumeration mode");
}

std::vector<Graph> enumerate_graphs(int n, EnumMode mode, long sample_count,
                                    std::uint64_t seed) {
    std::vector<Graph> out;
    enumerate_graphs(n, mode, [&](const Graph& g) {
        out.push_back(g);
        return true;
    }, sample_count, seed);
    return out;
}

namespace {

bool passes_criterion(const Rational& alpha, const Graph& g, long dim) {
    CodeSpec c{alpha, g, std::nullopt};
    auto psd = is_psd(scaled_integer_gram(c));
    return psd.psd && psd.positive_pivots <= dim;
}

}  // namespace

SearchResult max_lines_exact(const SearchTask& task) {
    task.validate();
    SearchResult res;
    res.exhausted = task.mode != EnumMode::RANDOM_SAMPLE;
    for (int n = task.n_max; n >= task.n_min; --n) {
        std::optional<Graph> witness;
        enumerate_graphs(n, task.mode, [&](const Graph& g) {
            if (passes_criterion(task.alpha, g, task.dim)) {
                witness = g;
                return false;
            }
            return true;
        }, task.sample_count, task.seed);
        if (witness) {
            if (n > 1) {
                // The pruning is only sound if deleting a vertex preserves
                // the criterion; assert it on the witness found.
                VertexSet rest(n - 1);
                for (int i = 0; i < n - 1; ++i) rest[i] = i;
                if (!passes_criterion(task.alpha, induced_subgraph(*witness, rest), task.dim))
                    throw std::logic_error("deletion monotonicity violated by witness");
            }
            res.best_n = n;
            res.witness = CodeSpec{task.alpha, *witness,
                                   static_cast<int>(task.dim)};
            return res;
        }
    }
    res.best_n = 0;
    return res;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["cases"] = cases;
    j["counterexamples"] = counterexamples;
    j["seed"] = seed;
    j["failures"] = failures;
    return j;
}

namespace {

void record_failure(SuiteReport& rep, nlohmann::json detail) {
    ++rep.counterexamples;
    if (rep.failures.size() < 5) rep.failures.push_back(std::move(detail));
}

// lambda_1 of every induced subgraph, cached by vertex bitmask.
class Lambda1Cache {
public:
    explicit Lambda1Cache(const Graph& g) : g_(g), cache_(std::size_t(1) << g.vertex_count()) {}

    const AlgebraicNumber& get(std::uint32_t mask) {
        auto& slot = cache_[mask];
        if (!slot) {
            VertexSet s;
            for (int v = 0; v < g_.vertex_count(); ++v)
                if (mask & (1u << v)) s.push_back(v);
            auto a = RationalSymmetricMatrix::adjacency(induced_subgraph(g_, s));
            slot = spectral_summary(a).kth(1);
        }
        return *slot;
    }

private:
    const Graph& g_;
    std::vector<std::optional<AlgebraicNumber>> cache_;
};

void run_edge_disjoint(SuiteReport& rep, const SuiteBudget& budget) {
    for (int n = 2; n <= budget.n_max; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (!is_connected(g)) continue;
            auto adj = adjacency_rows(g);
            const AlgebraicNumber lambda2 =
                spectral_summary(RationalSymmetricMatrix::adjacency(g)).kth(2);
            Lambda1Cache cache(g);
            // Assignments in {out, V1, V2}^n; the min-index rule picks one
            // of each symmetric pair.
            long total = 1;
            for (int i = 0; i < n; ++i) total *= 3;
            for (long code = 0; code < total; ++code) {
                long c = code;
                std::uint32_t m1 = 0, m2 = 0;
                for (int i = 0; i < n; ++i, c /= 3) {
                    int v = c % 3;
                    if (v == 1) m1 |= 1u << i;
                    if (v == 2) m2 |= 1u << i;
                }
                if (!m1 || !m2) continue;
                if ((m1 & -m1) > (m2 & -m2)) continue;
                bool crossing = false;
                for (int v = 0; v < n && !crossing; ++v)
                    if ((m1 >> v) & 1) crossing = (adj[v] & m2) != 0;
                if (crossing) continue;
                ++rep.cases;
                int c1 = AlgebraicNumber::compare(cache.get(m1), lambda2);
                int c2 = AlgebraicNumber::compare(cache.get(m2), lambda2);
                if (!(c1 < 0 || c2 < 0 || (c1 == 0 && c2 == 0)))
                    record_failure(rep, {{"graph6", graph6_encode(g)},
                                         {"mask1", m1},
                                         {"mask2", m2}});
            }
        }
    }
}

void run_multi_tree(SuiteReport& rep, const SuiteBudget& budget) {
    for (int n = 2; n <= budget.n_max; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (!is_connected(g)) continue;
            auto summary = spectral_summary(RationalSymmetricMatrix::adjacency(g));
            for (int k = 2; k <= 3 && k <= n; ++k) {
                // Multiplicity of the k-th largest eigenvalue.
                int cum = 0, mult = 0;
                for (const auto& ev : summary.eigenvalues) {
                    cum += ev.second;
                    if (cum >= k) {
                        mult = ev.second;
                        break;
                    }
                }
                ++rep.cases;
                if (mult > multiplicity_tree_bound(g, k))
                    record_failure(rep, {{"graph6", graph6_encode(g)},
                                         {"k", k},
                                         {"multiplicity", mult}});
            }
        }
    }
}

void run_interlacing(SuiteReport& rep, const SuiteBudget& budget) {
    Xorshift64Star rng(budget.seed);
    int n_max = std::min(budget.n_max, 10);
    for (long s = 0; s < budget.samples; ++s) {
        int n = 2 + static_cast<int>(rng.below(std::uint64_t(n_max - 1)));
        std::uint64_t mask = rng.next() & ((std::uint64_t(1) << pair_count(n)) - 1);
        Graph g = Graph::from_edge_mask(n, mask);
        std::uint32_t sub;
        do {
            sub = static_cast<std::uint32_t>(rng.below(std::uint64_t(1) << n));
        } while (sub == 0 || sub == (1u << n) - 1);
        VertexSet rows;
        for (int v = 0; v < n; ++v)
            if (sub & (1u << v)) rows.push_back(v);
        ++rep.cases;
        if (!interlacing_check(RationalSymmetricMatrix::adjacency(g), rows))
            record_failure(rep, {{"graph6", graph6_encode(g)}, {"rows", rows}});
    }
}

void run_switch_invariance(SuiteReport& rep, const SuiteBudget& budget) {
    Xorshift64Star rng(budget.seed);
    int n_max = std::min(budget.n_max, 12);
    const int dens[] = {3, 5, 7};
    for (long s = 0; s < budget.samples; ++s) {
        int n = 2 + static_cast<int>(rng.below(std::uint64_t(n_max - 1)));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next() & 1) edges.emplace_back(i, j);
        CodeSpec c{Rational(1, dens[rng.below(3)]), Graph(n, edges), std::nullopt};
        VertexSet cut;
        for (int v = 0; v < n; ++v)
            if (rng.next() & 1) cut.push_back(v);
        ++rep.cases;
        // Switching conjugates the Gram matrix by a sign diagonal, so the
        // characteristic polynomial must match coefficient by coefficient.
        auto before = char_poly(scaled_integer_gram(c));
        auto after = char_poly(scaled_integer_gram(switch_code(c, cut)));
        if (!(before == after))
            record_failure(rep, {{"graph6", graph6_encode(c.graph)},
                                 {"alpha", c.alpha.get_str()},
                                 {"cut", cut}});
    }
}

}  // namespace

SuiteReport property_suite(LemmaSuite suite, const SuiteBudget& budget) {
    SuiteReport rep;
    rep.seed = budget.seed;
    switch (suite) {
        case LemmaSuite::EDGE_DISJOINT:
            rep.suite = "edge-disjoint";
            run_edge_disjoint(rep, budget);
            return rep;
        case LemmaSuite::MULTI_TREE:
            rep.suite = "multi-tree";
            run_multi_tree(rep, budget);
            return rep;
        case LemmaSuite::INTERLACING:
            rep.suite = "interlacing";
            run_interlacing(rep, budget);
            return rep;
        case LemmaSuite::SWITCH_INVARIANCE:
            rep.suite = "switch-invariance";
            run_switch_invariance(rep, budget);
            return rep;
    }
    throw std::logic_error("unknown suite");
}

}  // namespace eqlines
