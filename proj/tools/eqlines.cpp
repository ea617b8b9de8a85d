#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlines/bounds.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectra.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// Every artifact carries enough metadata to replay the run.
nlohmann::json envelope(std::uint64_t seed = 0) {
    nlohmann::json j;
    j["tool"] = "eqlines";
    j["version"] = kVersion;
    j["arithmetic"] = "exact";
    j["seed"] = seed;
    return j;
}

void write_report(const std::string& path, const nlohmann::json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << j.dump(2) << "\n";
}

int verdict_exit(eqlines::Verdict v) {
    return v == eqlines::Verdict::REFUTED ? 1 : 0;
}

eqlines::CodeSpec load_code(const std::string& code_file, const std::string& graph6,
                            const std::string& alpha) {
    if (!code_file.empty()) {
        std::ifstream is(code_file);
        if (!is) throw std::runtime_error("cannot open code file: " + code_file);
        nlohmann::json j;
        is >> j;
        return eqlines::CodeSpec::from_json(j);
    }
    eqlines::CodeSpec c;
    c.alpha = eqlines::parse_rational(alpha);
    c.graph = eqlines::graph6_decode(graph6);
    return c;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact certification, construction and search for equiangular line systems"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Report path; '-' or empty for stdout")
        ->capture_default_str();

    // certify
    auto* certify = app.add_subcommand("certify", "Check that a code embeds in R^d");
    certify->fallthrough();
    std::string certify_alpha, certify_graph6, certify_code;
    long certify_dim = -1;
    certify->add_option("--alpha", certify_alpha, "Common inner product magnitude, as p/q");
    certify->add_option("--graph6", certify_graph6, "Associated graph in graph6");
    certify->add_option("--code", certify_code, "CodeSpec JSON file (alternative to flags)");
    certify->add_option("--dim", certify_dim, "Ambient dimension")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "Emit the block construction for k, d");
    construct->fallthrough();
    long construct_k = 0, construct_d = 0;
    construct->add_option("--k", construct_k, "Angle parameter, alpha = 1/(2k-1)")->required();
    construct->add_option("--d", construct_d, "Ambient dimension")->required();

    // search
    auto* search = app.add_subcommand("search", "Maximum lines over small graphs");
    search->fallthrough();
    std::string search_alpha, search_mode = "exhaustive";
    long search_dim = 0, search_nmax = 0, search_nmin = 1, search_samples = 10000;
    std::uint64_t search_seed = 1;
    search->add_option("--alpha", search_alpha, "Angle as p/q")->required();
    search->add_option("--dim", search_dim, "Ambient dimension")->required();
    search->add_option("--n-max", search_nmax, "Largest vertex count")->required();
    search->add_option("--n-min", search_nmin, "Smallest vertex count");
    search->add_option("--mode", search_mode, "exhaustive | canonical | random");
    search->add_option("--samples", search_samples, "Random mode: draws per size");
    search->add_option("--seed", search_seed, "Random mode: PRNG seed");

    // lemma
    auto* lemma = app.add_subcommand("lemma", "Run one property suite");
    lemma->fallthrough();
    std::string lemma_name;
    long lemma_nmax = 0, lemma_samples = 10000;
    std::uint64_t lemma_seed = 1;
    lemma->add_option("--name", lemma_name,
                      "edge-disjoint | multi-tree | interlacing | switch-invariance")
        ->required();
    lemma->add_option("--n-max", lemma_nmax, "Largest graph size");
    lemma->add_option("--samples", lemma_samples, "Randomized suites: sample count");
    lemma->add_option("--seed", lemma_seed, "Randomized suites: PRNG seed");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "Certified end-to-end theorem chain");
    pipeline->fallthrough();
    std::string pipeline_alpha;
    long pipeline_d = 0;
    pipeline->add_option("--alpha", pipeline_alpha, "1/5 or 1/3")->required();
    pipeline->add_option("--d", pipeline_d, "Ambient dimension")->required();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Exact adjacency spectrum of a graph");
    spectrum->fallthrough();
    std::string spectrum_graph6;
    spectrum->add_option("--graph6", spectrum_graph6, "Graph in graph6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (certify->parsed()) {
        if (certify_code.empty() && (certify_alpha.empty() || certify_graph6.empty()))
            throw std::runtime_error("need --code or both --alpha and --graph6");
        auto code = load_code(certify_code, certify_graph6, certify_alpha);
        auto cert = eqlines::psd_rank_certificate(code, static_cast<int>(certify_dim));
        nlohmann::json j = envelope();
        j["certificate"] = cert.to_json();
        write_report(out_path, j);
        return verdict_exit(cert.verdict());
    }

    if (construct->parsed()) {
        if (construct_k < 2 || construct_d < 1)
            throw std::runtime_error("need k >= 2 and d >= 1");
        auto code = eqlines::lower_bound_construction(construct_k, construct_d);
        auto cert = eqlines::psd_rank_certificate(code, static_cast<int>(construct_d));
        nlohmann::json j = envelope();
        j["code"] = code.to_json();
        j["n"] = code.size();
        j["certificate"] = cert.to_json();
        write_report(out_path, j);
        return verdict_exit(cert.verdict());
    }

    if (search->parsed()) {
        eqlines::SearchTask task;
        task.alpha = eqlines::parse_rational(search_alpha);
        task.dim = search_dim;
        task.n_min = static_cast<int>(search_nmin);
        task.n_max = static_cast<int>(search_nmax);
        if (search_mode == "exhaustive") task.mode = eqlines::EnumMode::EXHAUSTIVE_LABELED;
        else if (search_mode == "canonical") task.mode = eqlines::EnumMode::CANONICAL_DEDUP;
        else if (search_mode == "random") task.mode = eqlines::EnumMode::RANDOM_SAMPLE;
        else throw std::runtime_error("unknown mode: " + search_mode);
        task.sample_count = search_samples;
        task.seed = search_seed;
        task.validate();
        auto result = eqlines::max_lines_exact(task);
        nlohmann::json j = envelope(task.mode == eqlines::EnumMode::RANDOM_SAMPLE ? task.seed : 0);
        j["result"] = result.to_json();
        write_report(out_path, j);
        return 0;
    }

    if (lemma->parsed()) {
        eqlines::LemmaSuite suite;
        eqlines::SuiteBudget budget;
        budget.samples = lemma_samples;
        budget.seed = lemma_seed;
        if (lemma_name == "edge-disjoint") {
            suite = eqlines::LemmaSuite::EDGE_DISJOINT;
            budget.n_max = lemma_nmax > 0 ? static_cast<int>(lemma_nmax) : 6;
        } else if (lemma_name == "multi-tree") {
            suite = eqlines::LemmaSuite::MULTI_TREE;
            budget.n_max = lemma_nmax > 0 ? static_cast<int>(lemma_nmax) : 7;
        } else if (lemma_name == "interlacing") {
            suite = eqlines::LemmaSuite::INTERLACING;
            budget.n_max = lemma_nmax > 0 ? static_cast<int>(lemma_nmax) : 10;
        } else if (lemma_name == "switch-invariance") {
            suite = eqlines::LemmaSuite::SWITCH_INVARIANCE;
            budget.n_max = lemma_nmax > 0 ? static_cast<int>(lemma_nmax) : 12;
        } else {
            throw std::runtime_error("unknown suite: " + lemma_name);
        }
        auto report = eqlines::property_suite(suite, budget);
        nlohmann::json j = envelope(budget.seed);
        j["report"] = report.to_json();
        write_report(out_path, j);
        return report.counterexamples == 0 ? 0 : 1;
    }

    if (pipeline->parsed()) {
        auto cert = eqlines::theorem_pipeline(eqlines::parse_rational(pipeline_alpha), pipeline_d);
        nlohmann::json j = envelope();
        j["certificate"] = cert.to_json();
        write_report(out_path, j);
        return verdict_exit(cert.verdict());
    }

    if (spectrum->parsed()) {
        auto g = eqlines::graph6_decode(spectrum_graph6);
        auto summary = eqlines::spectral_summary(eqlines::RationalSymmetricMatrix::adjacency(g));
        nlohmann::json j = envelope();
        j["n"] = summary.n;
        j["eigenvalues"] = nlohmann::json::array();
        for (const auto& ev : summary.eigenvalues)
            j["eigenvalues"].push_back({{"value", ev.first.to_string()},
                                        {"approx", ev.first.approx()},
                                        {"multiplicity", ev.second}});
        write_report(out_path, j);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
