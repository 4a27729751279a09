// zsconst: weighted zero-sum constants over Z_n.
//
// Subcommands: compute (C_A(n) / D_A(n) with certificate), construct
// (family lower-bound certificates), verify (claim registry), table
// (values over a range of n), check (re-validate a certificate JSON).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsconst/claims.hpp"
#include "zsconst/constructions.hpp"
#include "zsconst/json_io.hpp"
#include "zsconst/ring.hpp"
#include "zsconst/search.hpp"

#ifndef ZSCONST_DEFAULT_REGISTRY
#define ZSCONST_DEFAULT_REGISTRY "data/claims.reg"
#endif

namespace {

using namespace zsconst;

std::string seq_str(const Sequence& s) {
    std::string t = "(";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (i) t += ",";
        t += std::to_string(s.terms[i]);
    }
    return t + ")";
}

int cmd_compute(int n, const std::string& weights, const std::string& mode_s,
                std::int64_t max_nodes, double time_limit, bool parallel,
                bool json, bool csv) {
    const WeightSpec a = parse_weights(n, weights);
    const Mode mode = mode_s == "D" ? Mode::D : Mode::C;
    SearchBudget budget;
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    budget.time_limit = time_limit;
    budget.parallel_roots = parallel;
    ConstantReport rep = compute_constant(n, a, mode, budget);
    if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else if (csv) {
        std::cout << rep.n << "," << rep.weight.text << "," << to_string(rep.mode) << ","
                  << rep.value << "\n";
    } else {
        std::cout << (mode == Mode::C ? "C" : "D") << "_{" << a.text << "}(" << n << ") "
                  << (rep.status == ReportStatus::Exact ? "= " : ">= ") << rep.value << "\n"
                  << "status:      " << to_string(rep.status) << "\n"
                  << "certificate: " << seq_str(rep.certificate) << "\n"
                  << "nodes:       " << rep.nodes_explored << "\n"
                  << "elapsed:     " << rep.elapsed_ms << " ms\n";
    }
    return rep.status == ReportStatus::Exact ? 0 : 2;
}

int cmd_construct(int n, const std::string& weights, bool json) {
    const WeightSpec a = parse_weights(n, weights);
    if (a.kind != WeightKind::Units && a.kind != WeightKind::UnitPowers)
        throw CLI::ValidationError("--weights", "construct supports units / units^J families only");
    Sequence cert = a.kind == WeightKind::Units
                        ? build_lower_bound_certificate(n, WeightKind::Units)
                        : build_lower_bound_certificate(n, WeightKind::UnitPowers, a.power);
    const bool avoiding = cert.size() > 0 && verify_avoiding(cert, a, Mode::C);
    if (json) {
        nlohmann::json j = to_json(cert, "construction");
        j["weight"] = a.text;
        j["avoiding"] = avoiding;
        j["lower_bound"] = static_cast<int>(cert.size()) + 1;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "certificate: " << seq_str(cert) << "\n"
                  << "length:      " << cert.size() << "\n"
                  << "avoiding:    " << (avoiding ? "true" : "false") << "\n"
                  << "implies:     C_{" << a.text << "}(" << n << ") >= " << cert.size() + 1 << "\n";
    }
    return avoiding ? 0 : 1;
}

int cmd_verify(const std::string& registry_path, const std::string& claim_filter,
               bool only_exhaustive, std::uint64_t seed, bool json) {
    Registry reg = load_registry(registry_path);
    if (!claim_filter.empty()) {
        bool known = false;
        for (const auto& c : reg.claims) known |= c.id.find(claim_filter) != std::string::npos;
        if (!known) {
            std::cerr << "unknown claim id: " << claim_filter << "\n";
            return 1;
        }
    }
    std::vector<ClaimReport> reports;
    for (const Claim& c : reg.claims) {
        if (!claim_filter.empty() && c.id.find(claim_filter) == std::string::npos) continue;
        if (only_exhaustive && c.method != "exhaustive") continue;
        reports.push_back(run_claim(c, seed));
    }
    bool refuted = false;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
        for (const auto& r : reports) refuted |= r.status == ClaimStatus::Refuted;
    } else {
        std::printf("%-18s %-16s %-11s %-16s %s\n", "claim", "kind", "method", "status", "detail");
        for (const auto& r : reports) {
            std::printf("%-18s %-16s %-11s %-16s %s\n", r.claim.id.c_str(), r.claim.kind.c_str(),
                        r.claim.method.c_str(), to_string(r.status).c_str(), r.detail.c_str());
            refuted |= r.status == ClaimStatus::Refuted;
        }
    }
    return refuted ? 1 : 0;
}

int cmd_table(const std::string& range, const std::string& weights, const std::string& mode_s,
              std::int64_t max_nodes, double time_limit, bool csv) {
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--n-range", "expected A..B");
    const int lo = std::stoi(range.substr(0, dots));
    const int hi = std::stoi(range.substr(dots + 2));
    if (lo > hi || lo < 1) throw CLI::ValidationError("--n-range", "empty range");
    const Mode mode = mode_s == "D" ? Mode::D : Mode::C;
    if (csv) std::cout << "n,weight,mode,value\n";
    else std::printf("%-6s %-10s %-4s %-15s %-6s %s\n", "n", "weight", "mode", "status", "value", "ms");
    for (int n = lo; n <= hi; ++n) {
        const WeightSpec a = parse_weights(n, weights);
        SearchBudget budget;
        if (max_nodes > 0) budget.max_nodes = max_nodes;
        budget.time_limit = time_limit;
        ConstantReport rep = compute_constant(n, a, mode, budget);
        if (csv) {
            std::cout << n << "," << a.text << "," << to_string(mode) << "," << rep.value << "\n";
        } else {
            std::printf("%-6d %-10s %-4s %-15s %-6d %lld\n", n, a.text.c_str(),
                        to_string(mode).c_str(), to_string(rep.status).c_str(), rep.value,
                        static_cast<long long>(rep.elapsed_ms));
        }
    }
    return 0;
}

int cmd_check(const std::string& path, const std::string& weights, const std::string& mode_s) {
    nlohmann::json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << "\n";
            return 1;
        }
        in >> j;
    }
    Sequence s = sequence_from_json(j);
    const WeightSpec a = parse_weights(s.n, weights);
    const Mode mode = mode_s == "D" ? Mode::D : Mode::C;
    const bool avoiding = verify_avoiding(s, a, mode);
    std::cout << "sequence " << seq_str(s) << " mod " << s.n << " is "
              << (avoiding ? "" : "NOT ") << "avoiding for " << a.text
              << " in mode " << to_string(mode) << "\n";
    return avoiding ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted zero-sum constants over Z_n"};
    app.require_subcommand(1);

    int n = 0;
    std::string weights = "units", mode = "C", range, claim, registry = ZSCONST_DEFAULT_REGISTRY;
    std::string cert_path = "-";
    std::int64_t max_nodes = 0;
    double time_limit = 0.0;
    std::uint64_t seed = 0x5eed;
    bool parallel = false, json = false, csv = false, only_exhaustive = false;

    auto* compute = app.add_subcommand("compute", "compute C_A(n) or D_A(n)");
    compute->add_option("--n", n, "modulus")->required();
    compute->add_option("--weights", weights, "weight spec (units, units^J, pm1, nonzero, one, set:{a,b,c})");
    compute->add_option("--mode", mode, "C (consecutive) or D (subsets)")->check(CLI::IsMember({"C", "D"}));
    compute->add_option("--max-nodes", max_nodes, "search node budget");
    compute->add_option("--time-limit", time_limit, "time budget in seconds");
    compute->add_flag("--parallel", parallel, "parallelize over root branches");
    compute->add_flag("--json", json, "machine-readable output");
    compute->add_flag("--csv", csv, "golden-file CSV row");

    auto* construct = app.add_subcommand("construct", "emit a family lower-bound certificate");
    construct->add_option("--n", n, "modulus")->required();
    construct->add_option("--weights", weights, "units or units^J family");
    construct->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run the claim registry");
    verify->add_option("--claim", claim, "run only claims whose id contains this string");
    verify->add_option("--registry", registry, "registry file path");
    verify->add_flag("--only-exhaustive", only_exhaustive, "skip sampled claims");
    verify->add_option("--seed", seed, "RNG seed for sampled claims");
    verify->add_flag("--json", json, "machine-readable output");

    auto* table = app.add_subcommand("table", "tabulate values over a range of n");
    table->add_option("--n-range", range, "range A..B")->required();
    table->add_option("--weights", weights, "weight spec");
    table->add_option("--mode", mode, "C or D")->check(CLI::IsMember({"C", "D"}));
    table->add_option("--max-nodes", max_nodes, "per-n node budget");
    table->add_option("--time-limit", time_limit, "per-n time budget in seconds");
    table->add_flag("--csv", csv, "golden-file CSV output");

    auto* check = app.add_subcommand("check", "re-validate a certificate JSON (file or - for stdin)");
    check->add_option("path", cert_path, "certificate JSON path or -");
    check->add_option("--weights", weights, "weight spec")->required();
    check->add_option("--mode", mode, "C or D")->check(CLI::IsMember({"C", "D"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(n, weights, mode, max_nodes, time_limit, parallel, json, csv);
        if (construct->parsed()) return cmd_construct(n, weights, json);
        if (verify->parsed()) return cmd_verify(registry, claim, only_exhaustive, seed, json);
        if (table->parsed()) return cmd_table(range, weights, mode, max_nodes, time_limit, csv);
        if (check->parsed()) return cmd_check(cert_path, weights, mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
