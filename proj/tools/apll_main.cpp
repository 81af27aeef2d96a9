// apll: verification and search toolkit for almost perfect linear Lee codes
// of packing radius 2.
//
// Subcommands:
//   sieve    dimension-exclusion pipeline (candidate / excluded per n)
//   verify   core certificate verification plus the set-condition battery
//   analyze  full diagnostic battery including the multiplicity profile
//   search   exhaustive certificate enumeration for one dimension
//   lattice  Lee packing classification of an integer lattice basis

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apll/geometry.hpp"
#include "apll/io.hpp"
#include "apll/profile.hpp"
#include "apll/search.hpp"
#include "apll/sieve.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitBudgetExhausted = 3;

std::int64_t env_int64(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        return std::stoll(raw);
    } catch (const std::exception&) {
        throw apll::ParseError(std::string("environment variable ") + name +
                               " is not an integer");
    }
}

ordered_json check_json(const apll::CheckResult& c) {
    ordered_json j;
    j["check"] = c.id;
    j["status"] = apll::check_status_str(c.status);
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

void emit_checks(std::ostream& os, const apll::DiagnosticsReport& rep) {
    for (const auto& c : rep.checks) os << check_json(c).dump() << '\n';
}

ordered_json witness_json(const apll::Prop82Witness& w) {
    ordered_json j;
    j["v"] = w.v;
    j["m"] = w.m;
    if (w.a_finite)
        j["a"] = w.a;
    else
        j["a"] = "inf";
    j["b"] = w.b;
    if (w.solution_found) {
        j["ell"] = w.ell;
        j["x"] = w.x;
        j["y"] = w.y;
    }
    return j;
}

int run_sieve_cmd(std::int64_t n_max, const std::string& format,
                  const std::string& stage_name) {
    apll::SieveStage stage = apll::SieveStage::prop82;
    if (stage_name == "mod6") stage = apll::SieveStage::mod6;
    else if (stage_name == "thresholds") stage = apll::SieveStage::thresholds;
    else if (stage_name == "prop81") stage = apll::SieveStage::prop81;
    else if (stage_name == "prop82" || stage_name == "all") stage = apll::SieveStage::prop82;
    else {
        std::cerr << "error: unknown stage '" << stage_name << "'\n";
        return kExitInputError;
    }

    auto records = apll::run_sieve(n_max, stage);
    std::int64_t counts[5] = {0, 0, 0, 0, 0};
    for (const auto& r : records) ++counts[static_cast<int>(r.rule)];

    if (format == "csv") {
        std::cout << "n,verdict,rule,detail,v,m,a,b,ell,x,y\n";
        for (const auto& r : records) {
            std::cout << r.n << ',' << (r.excluded ? "excluded" : "candidate") << ','
                      << apll::sieve_rule_str(r.rule) << ',' << r.detail << ',';
            if (r.prop82) {
                const auto& w = *r.prop82;
                std::cout << w.v << ',' << w.m << ','
                          << (w.a_finite ? std::to_string(w.a) : std::string("inf")) << ','
                          << w.b << ',';
                if (w.solution_found)
                    std::cout << w.ell << ',' << w.x << ',' << w.y;
                else
                    std::cout << ",,";
            } else {
                std::cout << ",,,,,,";
            }
            std::cout << '\n';
        }
        if (stage >= apll::SieveStage::prop81)
            std::cout << "# note: " << apll::kCandidateCountNote << '\n';
        return kExitOk;
    }

    for (const auto& r : records) {
        ordered_json j;
        j["n"] = r.n;
        j["verdict"] = r.excluded ? "excluded" : "candidate";
        j["rule"] = apll::sieve_rule_str(r.rule);
        if (!r.detail.empty()) j["detail"] = r.detail;
        if (r.prop82) j["witness"] = witness_json(*r.prop82);
        std::cout << j.dump() << '\n';
    }
    ordered_json s;
    s["summary"]["max"] = n_max;
    s["summary"]["stage"] = stage_name;
    s["summary"]["counts"]["candidate"] = counts[0];
    s["summary"]["counts"]["mod6"] = counts[1];
    s["summary"]["counts"]["threshold"] = counts[2];
    s["summary"]["counts"]["prop81"] = counts[3];
    s["summary"]["counts"]["prop82"] = counts[4];
    s["summary"]["survivors"] = apll::sieve_survivors(records);
    if (stage >= apll::SieveStage::prop81)
        s["summary"]["note"] = apll::kCandidateCountNote;
    std::cout << s.dump() << '\n';
    return kExitOk;
}

apll::Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw apll::ParseError("cannot open certificate file '" + path + "'");
    return apll::read_certificate(in);
}

int run_verify_cmd(const std::string& path) {
    apll::Certificate cert = load_certificate(path);
    apll::DiagnosticsReport rep = apll::verify_certificate(cert);
    rep.append(apll::necessary_conditions(cert));
    emit_checks(std::cout, rep);
    ordered_json s;
    s["summary"]["file"] = path;
    s["summary"]["verdict"] = rep.all_passed() ? "pass" : "fail";
    s["summary"]["checks"] = rep.checks.size();
    std::cout << s.dump() << '\n';
    return rep.all_passed() ? kExitOk : kExitVerificationFailure;
}

ordered_json rational_json(const apll::Rational& r) { return r.str(); }

int run_analyze_cmd(const std::string& path) {
    apll::Certificate cert = load_certificate(path);
    apll::DiagnosticsReport rep = apll::analyze_certificate(cert);
    emit_checks(std::cout, rep);
    if (apll::verify_certificate(cert).all_passed()) {
        apll::PartitionProfile p = apll::partition_profile(cert);
        ordered_json j;
        j["profile"]["n"] = cert.n;
        j["profile"]["k0"] = cert.k0();
        j["profile"]["k1"] = cert.k1();
        j["profile"]["x_counts"] = p.x_counts;
        j["profile"]["y_counts"] = p.y_counts;
        j["profile"]["u_counts"] = p.u_counts;
        j["profile"]["v_counts"] = p.v_counts;
        j["profile"]["theta0"] = rational_json(p.theta0);
        j["profile"]["theta1"] = rational_json(p.theta1);
        j["profile"]["ell0"] = p.ell0;
        j["profile"]["u0"] = p.u0;
        j["profile"]["u1"] = p.u1;
        j["profile"]["delta_applicable"] = p.delta_applicable;
        j["profile"]["delta0_size"] = p.delta0_size;
        j["profile"]["delta1_size"] = p.delta1_size;
        j["profile"]["delta1_in_t0"] = p.delta1_in_t0;
        j["profile"]["delta1_in_t1"] = p.delta1_in_t1;
        j["profile"]["delta1_outside"] = p.delta1_outside;
        j["profile"]["sigma"] = p.sigma;
        j["profile"]["epsilon"] = p.epsilon;
        j["profile"]["eta"] = p.eta;
        std::cout << j.dump() << '\n';
    }
    ordered_json s;
    s["summary"]["file"] = path;
    s["summary"]["verdict"] = rep.all_passed() ? "pass" : "fail";
    s["summary"]["checks"] = rep.checks.size();
    std::cout << s.dump() << '\n';
    return rep.all_passed() ? kExitOk : kExitVerificationFailure;
}

int run_search_cmd(std::int64_t n, std::int64_t budget, bool budget_given,
                   bool dedupe, int jobs, const std::string& format) {
    std::int64_t env_budget = env_int64("APLL_SEARCH_BUDGET", 0);
    if (n >= 8 && !budget_given && env_budget == 0) {
        std::cerr << "error: search with --n >= 8 needs an explicit --budget (or "
                     "APLL_SEARCH_BUDGET); the space beyond n=7 is too large for a "
                     "silent default\n";
        return kExitInputError;
    }
    apll::SearchConfig cfg;
    cfg.n = n;
    cfg.work_budget = static_cast<std::uint64_t>(
        budget_given ? budget : (env_budget > 0 ? env_budget : 1'000'000'000));
    cfg.dedupe_by_automorphism = dedupe;
    cfg.parallel_width = jobs;

    auto outcomes = apll::search_dimension(n, cfg);
    bool all_exhausted = true;
    std::uint64_t total_nodes = 0;
    std::size_t total_certs = 0;
    for (const auto& [group, outcome] : outcomes) {
        std::ostringstream factors;
        for (std::size_t i = 0; i < group->invariant_factors().size(); ++i) {
            if (i) factors << ' ';
            factors << group->invariant_factors()[i];
        }
        if (format == "json") {
            for (const auto& cert : outcome.certificates) {
                ordered_json j;
                j["certificate"]["group"] = group->invariant_factors();
                j["certificate"]["n"] = cert.n;
                ordered_json t0 = ordered_json::array(), t1 = ordered_json::array();
                for (const auto& g : cert.t0) t0.push_back(apll::format_element(g));
                for (const auto& g : cert.t1) t1.push_back(apll::format_element(g));
                j["certificate"]["t0"] = t0;
                j["certificate"]["t1"] = t1;
                std::cout << j.dump() << '\n';
            }
            ordered_json j;
            j["group_summary"]["group"] = group->invariant_factors();
            j["group_summary"]["certificates"] = outcome.certificates.size();
            j["group_summary"]["exhausted"] = outcome.exhausted;
            j["group_summary"]["nodes_visited"] = outcome.nodes_visited;
            std::cout << j.dump() << '\n';
        } else {
            for (const auto& cert : outcome.certificates) {
                apll::write_certificate(std::cout, cert);
                std::cout << '\n';
            }
            std::cout << "# group " << factors.str() << " | certificates "
                      << outcome.certificates.size() << " | exhausted "
                      << (outcome.exhausted ? "true" : "false") << " | nodes "
                      << outcome.nodes_visited << '\n';
        }
        all_exhausted &= outcome.exhausted;
        total_nodes += outcome.nodes_visited;
        total_certs += outcome.certificates.size();
    }
    if (format == "json") {
        ordered_json j;
        j["summary"]["n"] = n;
        j["summary"]["groups"] = outcomes.size();
        j["summary"]["certificates"] = total_certs;
        j["summary"]["exhausted"] = all_exhausted;
        j["summary"]["nodes_visited"] = total_nodes;
        j["summary"]["dedupe"] = dedupe ? "power-map orbits" : "none";
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "# total | groups " << outcomes.size() << " | certificates "
                  << total_certs << " | exhausted " << (all_exhausted ? "true" : "false")
                  << " | nodes " << total_nodes << " | dedupe "
                  << (dedupe ? "power-map orbits" : "none") << '\n';
    }
    return all_exhausted ? kExitOk : kExitBudgetExhausted;
}

int run_lattice_cmd(const std::string& path, std::int64_t r) {
    std::ifstream in(path);
    if (!in) throw apll::ParseError("cannot open lattice file '" + path + "'");
    apll::LatticeBasis basis = apll::read_lattice(in);
    std::int64_t coset_budget = env_int64("APLL_COSET_BUDGET", apll::kDefaultCosetBudget);
    apll::PackingReport rep = apll::classify_packing(basis, r, coset_budget);
    ordered_json j;
    j["n"] = basis.n;
    j["index"] = rep.index;
    j["min_lee_distance"] = rep.min_lee_distance;
    j["packing_radius"] = rep.packing_radius;
    j["covering_radius"] = rep.covering_radius;
    j["density"] = rep.density.str();
    j["classification"] = apll::packing_class_str(rep.classification, rep.radius);
    std::cout << j.dump() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost perfect linear Lee code toolkit (packing radius 2)"};
    app.require_subcommand(1);

    auto* sieve = app.add_subcommand("sieve", "run the dimension-exclusion pipeline");
    std::int64_t sieve_max = 0;
    std::string sieve_format = "json", sieve_stage = "all";
    sieve->add_option("--max", sieve_max, "largest dimension to sieve")->required();
    sieve->add_option("--format", sieve_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sieve->add_option("--stage", sieve_stage, "last pipeline stage to run")
        ->check(CLI::IsMember({"all", "mod6", "thresholds", "prop81", "prop82"}));

    auto* verify = app.add_subcommand("verify", "verify a certificate file");
    std::string verify_path;
    verify->add_option("file", verify_path, "certificate file")->required();

    auto* analyze = app.add_subcommand("analyze", "full diagnostics for a certificate file");
    std::string analyze_path;
    analyze->add_option("file", analyze_path, "certificate file")->required();

    auto* search = app.add_subcommand("search", "enumerate certificates for one dimension");
    std::int64_t search_n = 1, search_budget = 1'000'000'000;
    bool search_dedupe = false;
    int search_jobs = 1;
    std::string search_format = "text";
    search->add_option("--n", search_n, "target dimension")->required();
    auto* budget_opt = search->add_option("--budget", search_budget, "node budget");
    search->add_flag("--dedupe", search_dedupe, "collapse automorphic copies");
    search->add_option("--jobs", search_jobs, "worker count hint");
    search->add_option("--format", search_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* lattice = app.add_subcommand("lattice", "classify a lattice basis as a Lee packing");
    std::string lattice_path;
    std::int64_t lattice_r = 0;
    lattice->add_option("file", lattice_path, "lattice basis file")->required();
    lattice->add_option("--r", lattice_r, "target packing radius")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (sieve->parsed()) return run_sieve_cmd(sieve_max, sieve_format, sieve_stage);
        if (verify->parsed()) return run_verify_cmd(verify_path);
        if (analyze->parsed()) return run_analyze_cmd(analyze_path);
        if (search->parsed())
            return run_search_cmd(search_n, search_budget, budget_opt->count() > 0,
                                  search_dedupe, search_jobs, search_format);
        if (lattice->parsed()) return run_lattice_cmd(lattice_path, lattice_r);
    } catch (const apll::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const apll::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
