// Command-line front end: exact retrieval expectations, frontier sweeps,
// region CSV export, Monte Carlo estimates, and conjecture verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "retrieval/bounds.hpp"
#include "retrieval/code_model.hpp"
#include "retrieval/constructions.hpp"
#include "retrieval/errors.hpp"
#include "retrieval/expectation.hpp"
#include "retrieval/explore.hpp"
#include "retrieval/simulate.hpp"
#include "retrieval/subset_counts.hpp"

namespace {

using namespace retrieval;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitIo = 4;

struct ComputeOptions {
    std::string code_path;
    std::size_t s1 = 0;
    std::string method = "auto";
    bool json = false;
    bool csv = false;
    bool force = false;
    unsigned threads = 0;
};

std::optional<AlphaProfile> closed_alpha_from_tag(const FamilyTag& tag,
                                                  std::size_t k,
                                                  std::size_t s_i, int file) {
    auto param = [&](const char* name) -> std::optional<std::uint64_t> {
        const auto it = tag.params.find(name);
        return it == tag.params.end() ? std::nullopt
                                      : std::optional<std::uint64_t>(it->second);
    };
    if (tag.family == "identity") return alpha_identity(k, s_i);
    if (tag.family == "global_mds") {
        const auto n = param("n");
        if (!n) return std::nullopt;
        return alpha_global_mds(*n, k, s_i);
    }
    if (tag.family == "dedicated") {
        const auto n1 = param("n1"), n2 = param("n2");
        if (!n1 || !n2) return std::nullopt;
        return alpha_local_mds(*n1 + *n2, file == 1 ? *n1 : *n2, s_i);
    }
    return std::nullopt;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

nlohmann::ordered_json pair_json(const Rational& value) {
    nlohmann::ordered_json j;
    j["exact"] = to_fraction_string(value);
    j["decimal"] = to_decimal_string(value);
    return j;
}

nlohmann::ordered_json alpha_json(const AlphaProfile& alpha) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s <= alpha.n; ++s)
        arr.push_back(alpha.at(s).str());
    return arr;
}

int run_compute(const ComputeOptions& opt) {
    const MatrixFile file = read_matrix_file(opt.code_path);
    CodeSpec code(file.matrix, opt.s1);
    const std::size_t n = code.n(), k = code.k();
    const std::size_t s2 = code.partition().s2;

    const std::optional<FamilyTag> tag =
        file.family_tag.empty() ? std::nullopt
                                : parse_family_tag(file.family_tag);
    std::optional<RetrievalPair> closed;
    if (tag) closed = closed_pair_from_tag(*tag, k, opt.s1);

    std::string method = opt.method;
    if (method == "auto") method = closed ? "closed" : "exhaustive";
    if (method == "closed" && !closed)
        throw InputError("no closed form applies to this code file");

    RetrievalPair pair;
    std::optional<AlphaProfile> a1, a2;
    if (method == "closed") {
        pair = *closed;
        a1 = closed_alpha_from_tag(*tag, k, opt.s1, 1);
        a2 = closed_alpha_from_tag(*tag, k, s2, 2);
    } else {
        a1 = alpha_exhaustive(code, 1, kDefaultEnumerationCap, opt.force,
                              opt.threads);
        a2 = alpha_exhaustive(code, 2, kDefaultEnumerationCap, opt.force,
                              opt.threads);
        pair = RetrievalPair{expected_time_from_alpha(*a1),
                             expected_time_from_alpha(*a2)};
    }

    const ColumnClassification cols = classify_columns(code);
    const BoundReport bounds = evaluate_bounds(pair, code);
    const Rational hsum = hyperbolic_sum(pair, opt.s1, s2);
    const bool excluded = std::max(opt.s1, s2) == 1;

    if (opt.csv) {
        std::cout << "e1,e2,e1_exact,e2_exact\n"
                  << to_decimal_string(pair.e1, 12) << ","
                  << to_decimal_string(pair.e2, 12) << ","
                  << to_fraction_string(pair.e1) << ","
                  << to_fraction_string(pair.e2) << "\n";
        return kExitOk;
    }

    if (opt.json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["k"] = k;
        j["q"] = code.field().modulus();
        j["s1"] = opt.s1;
        j["s2"] = s2;
        j["method"] = method;
        j["e1"] = pair_json(pair.e1);
        j["e2"] = pair_json(pair.e2);
        if (a1) j["alpha1"] = alpha_json(*a1);
        if (a2) j["alpha2"] = alpha_json(*a2);
        j["columns"] = {{"pure1", cols.pure1}, {"pure2", cols.pure2},
                        {"mixed", cols.mixed}, {"zero", cols.zero},
                        {"n_f1", cols.n_f1},   {"n_f2", cols.n_f2},
                        {"m_mix", cols.m_mix}};
        j["bounds"] = nlohmann::ordered_json::array();
        for (const BoundEntry& entry : bounds.entries) {
            nlohmann::ordered_json b;
            b["name"] = entry.name;
            b["rhs"] = to_fraction_string(entry.rhs);
            b["slack"] = to_fraction_string(entry.slack);
            b["satisfied"] = entry.satisfied;
            j["bounds"].push_back(std::move(b));
        }
        j["all_bounds_satisfied"] = bounds.all_satisfied;
        j["hyperbolic"] = {{"sum", to_fraction_string(hsum)},
                           {"exceeds_1", hsum > 1},
                           {"excluded_regime", excluded}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "code: n=" << n << " k=" << k
              << " q=" << code.field().modulus() << " s1=" << opt.s1
              << " s2=" << s2 << " (method " << method << ")\n";
    std::cout << "E1 = " << to_fraction_string(pair.e1) << " = "
              << to_decimal_string(pair.e1) << "\n";
    std::cout << "E2 = " << to_fraction_string(pair.e2) << " = "
              << to_decimal_string(pair.e2) << "\n";
    for (int f = 1; f <= 2; ++f) {
        const auto& alpha = f == 1 ? a1 : a2;
        if (!alpha) continue;
        std::cout << "alpha file" << f << " (s=0.." << n << "):";
        for (std::size_t s = 0; s <= n; ++s) std::cout << " " << alpha->at(s);
        std::cout << "\n";
    }
    std::cout << "columns: pure1={" << join_indices(cols.pure1) << "} pure2={"
              << join_indices(cols.pure2) << "} mixed={"
              << join_indices(cols.mixed) << "} zero={"
              << join_indices(cols.zero) << "}  N(F1)=" << cols.n_f1
              << " N(F2)=" << cols.n_f2 << "\n";
    std::cout << "bounds:\n";
    for (const BoundEntry& entry : bounds.entries)
        std::cout << "  " << entry.name << ": rhs "
                  << to_fraction_string(entry.rhs) << ", slack "
                  << to_fraction_string(entry.slack) << " ("
                  << (entry.satisfied ? "ok" : "VIOLATED") << ")\n";
    std::cout << "hyperbolic sum = " << to_fraction_string(hsum) << " = "
              << to_decimal_string(hsum);
    if (hsum > 1)
        std::cout << (excluded ? " exceeds 1 (excluded regime k=" +
                                     std::to_string(k) + ")"
                               : " EXCEEDS 1");
    std::cout << "\n";
    return kExitOk;
}

struct FrontierOptions {
    std::string family;
    std::size_t n = 0, k = 0, s1 = 0;
    bool json = false;
    unsigned threads = 0;
};

int run_frontier(const FrontierOptions& opt) {
    if (opt.s1 < 1 || opt.s1 >= opt.k)
        throw InputError("need 1 <= s1 <= k-1");
    const std::size_t s2 = opt.k - opt.s1;

    std::vector<FrontierPoint> points;
    if (opt.family == "dedicated") {
        points = dedicated_frontier(opt.n, opt.s1, s2);
    } else if (opt.family == "global") {
        points.push_back(FrontierPoint{
            "global_mds",
            RetrievalPair{closed_global_mds_E(opt.n, opt.k, opt.s1),
                          closed_global_mds_E(opt.n, opt.k, s2)},
            false});
        points = pareto_filter(std::move(points));
    } else if (opt.family == "identity") {
        points.push_back(FrontierPoint{
            "identity", RetrievalPair{closed_identity_E(opt.k, opt.s1),
                                      closed_identity_E(opt.k, s2)},
            false});
        points = pareto_filter(std::move(points));
    } else if (opt.family == "hybrid") {
        const CodeSpec code = make_hybrid_cycle(opt.k, opt.s1);
        points.push_back(FrontierPoint{
            "hybrid_cycle",
            expected_pair(code, kDefaultEnumerationCap, false, opt.threads),
            false});
        points = pareto_filter(std::move(points));
    } else {
        throw InputError("unknown family: " + opt.family);
    }

    if (opt.json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["points"] = nlohmann::ordered_json::array();
        for (const FrontierPoint& p : points) {
            nlohmann::ordered_json entry;
            entry["label"] = p.label;
            entry["e1"] = pair_json(p.pair.e1);
            entry["e2"] = pair_json(p.pair.e2);
            entry["pareto"] = p.pareto;
            j["points"].push_back(std::move(entry));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "label,e1,e2,e1_exact,e2_exact,pareto\n";
        for (const FrontierPoint& p : points)
            std::cout << p.label << "," << to_decimal_string(p.pair.e1, 12)
                      << "," << to_decimal_string(p.pair.e2, 12) << ","
                      << to_fraction_string(p.pair.e1) << ","
                      << to_fraction_string(p.pair.e2) << ","
                      << (p.pareto ? "1" : "0") << "\n";
    }
    return kExitOk;
}

struct RegionOptions {
    std::size_t n = 0, k = 0, s1 = 0, grid = 64;
    std::string out_path;
};

int run_region(const RegionOptions& opt) {
    if (opt.s1 < 1 || opt.s1 >= opt.k)
        throw InputError("need 1 <= s1 <= k-1");
    const RegionTable table =
        region_table(opt.n, opt.k, opt.s1, opt.k - opt.s1, opt.grid);
    if (opt.out_path.empty() || opt.out_path == "-") {
        write_region_csv(std::cout, table);
        return kExitOk;
    }
    std::ofstream out(opt.out_path);
    if (!out) {
        std::cerr << "error: cannot open " << opt.out_path << "\n";
        return kExitIo;
    }
    write_region_csv(out, table);
    out.flush();
    if (!out) {
        std::cerr << "error: write failed: " << opt.out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct SimulateOptions {
    std::string code_path;
    std::size_t s1 = 0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

int run_simulate(const SimulateOptions& opt) {
    const MatrixFile file = read_matrix_file(opt.code_path);
    const CodeSpec code(file.matrix, opt.s1);
    const SimEstimate est = simulate(code, opt.trials, opt.seed, opt.threads);
    std::cout << to_json(est) << "\n";
    return kExitOk;
}

struct VerifyOptions {
    std::size_t n = 0, k = 0, s1 = 0;
    std::uint64_t q = 2;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::string inject_path;
    unsigned threads = 0;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<Mat> injected;
    if (!opt.inject_path.empty())
        injected.push_back(read_matrix_file(opt.inject_path).matrix);
    const ConjectureReport report =
        verify_hyperbolic(opt.n, opt.k, opt.s1, opt.q, opt.samples, opt.seed,
                          injected, opt.threads);
    std::cout << to_json(report) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expected retrieval times for two-file linear codes"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand(
        "compute", "Exact (E1, E2) and bound checks for a code file");
    compute->add_option("--code", copt.code_path, "matrix file")->required();
    compute->add_option("--s1", copt.s1, "file-1 dimension")->required();
    compute->add_option("--method", copt.method, "exhaustive|closed|auto")
        ->check(CLI::IsMember({"exhaustive", "closed", "auto"}));
    compute->add_flag("--json", copt.json, "JSON output");
    compute->add_flag("--csv", copt.csv, "CSV output");
    compute->add_flag("--force", copt.force, "enumerate past the size cap");
    compute->add_option("--threads", copt.threads, "worker count (0 = auto)");

    FrontierOptions fopt;
    CLI::App* frontier =
        app.add_subcommand("frontier", "Construction sweep with Pareto flags");
    frontier->add_option("--family", fopt.family,
                         "dedicated|global|identity|hybrid")
        ->required();
    frontier->add_option("--n", fopt.n, "code length");
    frontier->add_option("--k", fopt.k, "code dimension")->required();
    frontier->add_option("--s1", fopt.s1, "file-1 dimension")->required();
    frontier->add_flag("--json", fopt.json, "JSON output");
    frontier->add_option("--threads", fopt.threads, "worker count (0 = auto)");

    RegionOptions ropt;
    CLI::App* region =
        app.add_subcommand("region", "Achievability-region CSV export");
    region->add_option("--n", ropt.n, "code length")->required();
    region->add_option("--k", ropt.k, "code dimension")->required();
    region->add_option("--s1", ropt.s1, "file-1 dimension")->required();
    region->add_option("--grid", ropt.grid, "samples per boundary curve")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    region->add_option("--out", ropt.out_path, "output path ('-' for stdout)");

    SimulateOptions sopt;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Seeded Monte Carlo estimate");
    simulate_cmd->add_option("--code", sopt.code_path, "matrix file")
        ->required();
    simulate_cmd->add_option("--s1", sopt.s1, "file-1 dimension")->required();
    simulate_cmd->add_option("--trials", sopt.trials, "trial count");
    simulate_cmd->add_option("--seed", sopt.seed, "master seed");
    simulate_cmd->add_option("--threads", sopt.threads,
                             "worker count (0 = auto)");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Random-code check of the hyperbolic sum bound");
    verify->add_option("--n", vopt.n, "code length")->required();
    verify->add_option("--k", vopt.k, "code dimension")->required();
    verify->add_option("--s1", vopt.s1, "file-1 dimension")->required();
    verify->add_option("--q", vopt.q, "field size (prime)");
    verify->add_option("--samples", vopt.samples, "random matrices to draw");
    verify->add_option("--seed", vopt.seed, "master seed");
    verify->add_option("--inject", vopt.inject_path,
                       "matrix file evaluated before the random samples");
    verify->add_option("--threads", vopt.threads, "worker count (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (compute->parsed()) return run_compute(copt);
        if (frontier->parsed()) return run_frontier(fopt);
        if (region->parsed()) return run_region(ropt);
        if (simulate_cmd->parsed()) return run_simulate(sopt);
        if (verify->parsed()) return run_verify(vopt);
    } catch (const retrieval::TrialOverflowError& e) {
        std::cerr << "error: " << e.what() << " (trial " << e.trial << ")\n";
        return kExitTooLarge;
    } catch (const retrieval::TooLargeError& e) {
        std::cerr << "error: " << e.what() << " (rerun with --force)\n";
        return kExitTooLarge;
    } catch (const retrieval::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
