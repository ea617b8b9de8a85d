#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "eqlines/bounds.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectra.hpp"

namespace py = pybind11;
using namespace eqlines;

namespace {

// The python layer works with JSON strings; the wrapper package parses
// them into dicts so the exact rationals stay intact as "p/q" text.

std::string certify_json(const std::string& alpha, const std::string& graph6, int dim) {
    CodeSpec c{parse_rational(alpha), graph6_decode(graph6), dim};
    return psd_rank_certificate(c, dim).to_json().dump();
}

std::string construct_json(long k, long d) {
    auto code = lower_bound_construction(k, d);
    nlohmann::json j;
    j["code"] = code.to_json();
    j["n"] = code.size();
    j["certificate"] = construction_certificate(k, d).to_json();
    return j.dump();
}

std::string pipeline_json(const std::string& alpha, long d) {
    return theorem_pipeline(parse_rational(alpha), d).to_json().dump();
}

std::string spectrum_json(const std::string& graph6) {
    auto summary = spectral_summary(
        RationalSymmetricMatrix::adjacency(graph6_decode(graph6)));
    nlohmann::json j;
    j["n"] = summary.n;
    j["eigenvalues"] = nlohmann::json::array();
    for (const auto& ev : summary.eigenvalues)
        j["eigenvalues"].push_back({{"value", ev.first.to_string()},
                                    {"approx", ev.first.approx()},
                                    {"multiplicity", ev.second}});
    return j.dump();
}

std::string search_json(const std::string& alpha, long dim, int n_max, const std::string& mode,
                        long samples, std::uint64_t seed) {
    SearchTask t;
    t.alpha = parse_rational(alpha);
    t.dim = dim;
    t.n_max = n_max;
    if (mode == "exhaustive") t.mode = EnumMode::EXHAUSTIVE_LABELED;
    else if (mode == "canonical") t.mode = EnumMode::CANONICAL_DEDUP;
    else if (mode == "random") t.mode = EnumMode::RANDOM_SAMPLE;
    else throw std::invalid_argument("unknown mode: " + mode);
    t.sample_count = samples;
    t.seed = seed;
    return max_lines_exact(t).to_json().dump();
}

std::string suite_json(const std::string& name, int n_max, long samples, std::uint64_t seed) {
    SuiteBudget b{n_max, samples, seed};
    LemmaSuite suite;
    if (name == "edge-disjoint") suite = LemmaSuite::EDGE_DISJOINT;
    else if (name == "multi-tree") suite = LemmaSuite::MULTI_TREE;
    else if (name == "interlacing") suite = LemmaSuite::INTERLACING;
    else if (name == "switch-invariance") suite = LemmaSuite::SWITCH_INVARIANCE;
    else throw std::invalid_argument("unknown suite: " + name);
    return property_suite(suite, b).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_eqlines, m) {
    m.doc() = "Exact certification, construction and search for equiangular line systems";

    m.def("certify", &certify_json, py::arg("alpha"), py::arg("graph6"), py::arg("dim"),
          "Certificate JSON for embedding the code in R^dim");
    m.def("construct", &construct_json, py::arg("k"), py::arg("d"),
          "Block construction of floor(k(d-1)/(k-1)) lines plus its certificate");
    m.def("pipeline", &pipeline_json, py::arg("alpha"), py::arg("d"),
          "End-to-end certified theorem chain for alpha in {1/5, 1/3}");
    m.def("spectrum", &spectrum_json, py::arg("graph6"),
          "Exact adjacency spectrum with multiplicities");
    m.def("max_lines", &search_json, py::arg("alpha"), py::arg("dim"), py::arg("n_max"),
          py::arg("mode") = "exhaustive", py::arg("samples") = 10000, py::arg("seed") = 1,
          "Largest certified line count over small graphs");
    m.def("property_suite", &suite_json, py::arg("name"), py::arg("n_max"),
          py::arg("samples") = 1000, py::arg("seed") = 1,
          "Run one spectral property suite; reports counterexample counts");
    m.def("graph6_roundtrip",
          [](const std::string& s) { return graph6_encode(graph6_decode(s)); },
          "Decode and re-encode a graph6 string (format validation)");
}
