#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

enum class EnumMode { EXHAUSTIVE_LABELED, CANONICAL_DEDUP, RANDOM_SAMPLE };

// xorshift64* generator; seed recorded in every report so runs replay.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

struct SearchTask {
    Rational alpha;
    long dim = 0;
    int n_min = 1;
    int n_max = 1;
    EnumMode mode = EnumMode::EXHAUSTIVE_LABELED;
    long sample_count = 0;       // RANDOM_SAMPLE only
    std::uint64_t seed = 0;      // RANDOM_SAMPLE only

    void validate() const;  // throws std::invalid_argument
};

struct SearchResult {
    int best_n = 0;
    std::optional<CodeSpec> witness;
    bool exhausted = false;

    nlohmann::json to_json() const;
};

// Streams graphs on n vertices to the visitor in a deterministic order;
// stops early when the visitor returns false. EXHAUSTIVE_LABELED walks all
// edge masks lexicographically (n <= 11); CANONICAL_DEDUP yields one
// representative per isomorphism class (n <= 9); RANDOM_SAMPLE draws
// sample_count seeded uniform edge masks.
void enumerate_graphs(int n, EnumMode mode, const std::function<bool(const Graph&)>& visit,
                      long sample_count = 0, std::uint64_t seed = 0);

// Convenience collector for small n.
std::vector<Graph> enumerate_graphs(int n, EnumMode mode, long sample_count = 0,
                                    std::uint64_t seed = 0);

// One representative per isomorphism class; ascending canonical edge mask.
// Computed by vertex augmentation from the (n-1)-vertex classes.
std::vector<Graph> canonical_graphs(int n);

// Minimum upper-triangle edge bitmask over all vertex relabelings (n <= 11;
// backtracking with prefix pruning, feasible well past 9 for sparse use).
std::uint64_t canonical_edge_mask(const Graph& g);

// Largest n in range admitting a graph whose shifted matrix is PSD with
// rank <= dim. Searches decreasing n, first witness wins; asserts the
// deletion-monotonicity the pruning relies on by re-certifying the witness
// minus its last vertex.
SearchResult max_lines_exact(const SearchTask& task);

enum class LemmaSuite { EDGE_DISJOINT, MULTI_TREE, INTERLACING, SWITCH_INVARIANCE };

struct SuiteBudget {
    int n_max = 6;
    long samples = 10000;        // randomized suites
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string suite;
    long cases = 0;
    long counterexamples = 0;
    std::uint64_t seed = 0;
    std::vector<nlohmann::json> failures;  // first few, with witnesses

    nlohmann::json to_json() const;
};

// Replays one spectral invariant over enumerated or sampled instances with
// the exact-spectra engine as oracle; expected zero counterexamples.
SuiteReport property_suite(LemmaSuite suite, const SuiteBudget& budget);

}  // namespace eqlines
