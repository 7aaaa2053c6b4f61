// Command-line front end: exact Schur / Schur-Q evaluation, the lattice
// verification suites, alternating-sign-matrix utilities and wavefunction
// evaluation.  Exit codes: 0 success, 1 a verification found a mismatch,
// 2 malformed usage or input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sixv/alt_sign.hpp"
#include "sixv/lattice.hpp"
#include "sixv/schur.hpp"
#include "sixv/verify.hpp"
#include "sixv/version.hpp"

namespace {

using nlohmann::json;

struct SchurArgs {
    std::string lambda;
    int nvars = 0;
    std::string method = "both";
    std::string beta;
    bool unsafe_caps = false;
};

struct VerifyArgs {
    std::string suite = "all";
    int max_sites = 6;
    int max_particles = 3;
    int asm_cap = 4;
    std::string report;
    bool unsafe_caps = false;
};

struct AsmArgs {
    int n = 0;
    std::string what = "list";
    bool unsafe_caps = false;
};

struct WavefunctionArgs {
    int sites = 0;
    int particles = 0;
    std::string occ;
    std::string beta;
    bool unsafe_caps = false;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw sixv::StructuralError("empty entry in list: " + text);
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
            cur += ch;
        } else if (ch != ' ') {
            throw sixv::StructuralError(std::string("unexpected character '") + ch + "' in list");
        }
    }
    if (!cur.empty()) flush();
    return out;
}

int run_schur(const SchurArgs& a) {
    if (a.nvars < 1) throw sixv::StructuralError("--nvars must be at least 1");
    if (a.nvars > 3 && !a.unsafe_caps)
        throw sixv::StructuralError("--nvars above 3 requires --unsafe-caps");
    sixv::Partition lambda = sixv::Partition::parse(a.lambda);
    sixv::SchurContext ctx =
        a.beta.empty() ? sixv::SchurContext::make(a.nvars)
                       : sixv::SchurContext::make(a.nvars, sixv::rational_from_string(a.beta));
    if (a.method == "bialternant") {
        std::cout << schur_bialternant(lambda, ctx).to_string() << "\n";
        return 0;
    }
    if (a.method == "combinatorial") {
        std::cout << schur_combinatorial(lambda, ctx).to_string() << "\n";
        return 0;
    }
    sixv::Polynomial lhs = schur_combinatorial(lambda, ctx);
    sixv::Polynomial rhs = schur_bialternant(lambda, ctx);
    if (!(lhs == rhs)) {
        std::cerr << "mismatch for lambda=(" << lambda.to_string() << "), nvars=" << a.nvars
                  << ":\n  combinatorial: " << lhs.to_string()
                  << "\n  bialternant:   " << rhs.to_string() << "\n";
        return 1;
    }
    std::cerr << "combinatorial and bialternant forms agree\n";
    std::cout << lhs.to_string() << "\n";
    return 0;
}

int run_verify(const VerifyArgs& a) {
    if (!a.unsafe_caps) {
        if (a.max_sites > 6)
            throw sixv::StructuralError("--max-sites above 6 requires --unsafe-caps");
        if (a.max_particles > 3)
            throw sixv::StructuralError("--max-particles above 3 requires --unsafe-caps");
        if (a.asm_cap > 4) throw sixv::StructuralError("--asm-cap above 4 requires --unsafe-caps");
    }
    if (a.max_sites < 1 || a.max_particles < 0 || a.asm_cap < 1)
        throw sixv::StructuralError("caps must be positive");

    sixv::SuiteOptions opts;
    opts.max_sites = a.max_sites;
    opts.max_particles = a.max_particles;
    opts.asm_cap = a.asm_cap;

    std::vector<sixv::SuiteResult> results;
    if (a.suite == "all") {
        results = sixv::run_all(opts);
    } else {
        results.push_back(sixv::run_suite(a.suite, opts));
    }

    bool all_passed = true;
    const sixv::CheckResult* first_failure = nullptr;
    const sixv::SuiteResult* first_failure_suite = nullptr;
    json suites = json::array();
    for (const sixv::SuiteResult& s : results) {
        json checks = json::array();
        long failed = 0;
        double total_ms = 0;
        for (const sixv::CheckResult& c : s.checks) {
            json jc = {{"id", c.id},
                       {"params", c.params},
                       {"verdict", c.pass ? "pass" : "fail"},
                       {"ms", c.ms}};
            if (!c.pass) {
                jc["detail"] = c.detail;
                ++failed;
                if (!first_failure) {
                    first_failure = &c;
                    first_failure_suite = &s;
                }
            }
            total_ms += c.ms;
            checks.push_back(std::move(jc));
        }
        all_passed = all_passed && s.all_passed;
        suites.push_back({{"suite", s.suite},
                          {"all_passed", s.all_passed},
                          {"checks", std::move(checks)}});
        std::cerr << "suite " << s.suite << ": " << s.checks.size() << " checks, " << failed
                  << " failed (" << static_cast<long>(total_ms) << " ms)\n";
    }
    if (first_failure) {
        std::cerr << "first failure: " << first_failure_suite->suite << "/" << first_failure->id
                  << " [" << first_failure->params << "] " << first_failure->detail << "\n";
    }

    json doc = {{"schema", "sixv.verify.report/1"},
                {"version", sixv::kVersion},
                {"config",
                 {{"suite", a.suite},
                  {"max_sites", a.max_sites},
                  {"max_particles", a.max_particles},
                  {"asm_cap", a.asm_cap}}},
                {"suites", std::move(suites)},
                {"all_passed", all_passed}};
    std::string text = doc.dump(2);
    std::cout << text << "\n";
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        if (!out) throw sixv::StructuralError("cannot write report file: " + a.report);
        out << text << "\n";
    }
    return all_passed ? 0 : 1;
}

int run_asm(const AsmArgs& a) {
    if (a.n < 1) throw sixv::StructuralError("--n must be at least 1");
    if (a.n > 4 && !a.unsafe_caps)
        throw sixv::StructuralError("--n above 4 requires --unsafe-caps");
    if (a.what == "gf") {
        sixv::VarTablePtr table = sixv::VarTable::make({"x", "y", "z"});
        std::cout << sixv::asm_generating_function(a.n, table).to_string() << "\n";
        return 0;
    }
    std::vector<sixv::AsmMatrix> all = sixv::enumerate_asm(a.n);
    std::cerr << "n=" << a.n << ": " << all.size() << " matrices\n";
    if (a.what == "list") {
        for (const sixv::AsmMatrix& m : all) {
            for (int i = 0; i < m.n; ++i) {
                if (i) std::cout << ";";
                for (int j = 0; j < m.n; ++j) {
                    if (j) std::cout << ",";
                    std::cout << m.entry(i, j);
                }
            }
            std::cout << "\n";
        }
        return 0;
    }
    // stats
    std::cout << "index,nu,mu,rho\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        sixv::AsmStatistics s = sixv::asm_statistics(all[i]);
        std::cout << i << "," << s.nu << "," << s.mu << "," << s.rho << "\n";
    }
    return 0;
}

int run_wavefunction(const WavefunctionArgs& a) {
    if (a.sites < 1) throw sixv::StructuralError("--m must be at least 1");
    if (a.particles < 0) throw sixv::StructuralError("--n must be non-negative");
    if (!a.unsafe_caps) {
        if (a.sites > 6) throw sixv::StructuralError("--m above 6 requires --unsafe-caps");
        if (a.particles > 3) throw sixv::StructuralError("--n above 3 requires --unsafe-caps");
    }
    std::vector<int> counts = parse_int_list(a.occ);
    sixv::OccupationVector occ(counts);
    if (occ.sites() != a.sites)
        throw sixv::StructuralError("--occ length does not match --m");
    if (occ.particles() != a.particles)
        throw sixv::StructuralError("--occ particle count does not match --n");

    std::vector<std::string> names;
    for (int j = 1; j <= a.particles; ++j) names.push_back("z" + std::to_string(j));
    if (a.beta.empty()) names.push_back("b");
    sixv::VarTablePtr table = sixv::VarTable::make(names);
    sixv::Polynomial beta = a.beta.empty()
                                ? sixv::Polynomial::variable(table, "b")
                                : sixv::Polynomial::constant(
                                      table, sixv::rational_from_string(a.beta));
    std::vector<sixv::Polynomial> zs;
    for (int j = 1; j <= a.particles; ++j)
        zs.push_back(sixv::Polynomial::variable(table, "z" + std::to_string(j)));
    sixv::LatticeConfig cfg =
        sixv::make_six_vertex(a.sites, table, beta, sixv::Normalization::Tilde);
    std::cout << sixv::wavefunction(cfg, occ, zs).to_string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact six-vertex lattice and symmetric-function toolkit"};
    app.set_version_flag("--version", sixv::kVersion);
    app.require_subcommand(1);

    SchurArgs schur_args;
    CLI::App* schur = app.add_subcommand(
        "schur", "evaluate a Schur polynomial with the beta deformation");
    schur->add_option("--lambda", schur_args.lambda, "partition, comma-separated (e.g. 2,1)")
        ->required();
    schur->add_option("--nvars", schur_args.nvars, "number of variables z1..zN")->required();
    schur
        ->add_option("--method", schur_args.method,
                     "bialternant, combinatorial, or both (checks agreement)")
        ->check(CLI::IsMember({"bialternant", "combinatorial", "both"}));
    schur->add_option("--beta", schur_args.beta, "bind beta to a rational (default: formal)");
    schur->add_flag("--unsafe-caps", schur_args.unsafe_caps, "lift the size caps");

    VerifyArgs verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "run the exact verification suites");
    {
        std::vector<std::string> allowed = sixv::suite_names();
        allowed.insert(allowed.begin(), "all");
        verify->add_option("--suite", verify_args.suite, "suite name or 'all'")
            ->check(CLI::IsMember(allowed));
    }
    verify->add_option("--max-sites", verify_args.max_sites, "largest chain length (default 6)");
    verify->add_option("--max-particles", verify_args.max_particles,
                       "largest particle number (default 3)");
    verify->add_option("--asm-cap", verify_args.asm_cap,
                       "largest alternating-sign-matrix order (default 4)");
    verify->add_option("--report", verify_args.report, "also write the JSON report here");
    verify->add_flag("--unsafe-caps", verify_args.unsafe_caps, "lift the size caps");

    AsmArgs asm_args;
    CLI::App* asm_cmd =
        app.add_subcommand("asm", "enumerate alternating-sign matrices");
    asm_cmd->add_option("--n", asm_args.n, "matrix order")->required();
    asm_cmd->add_option("--what", asm_args.what, "list, stats (CSV), or gf")
        ->check(CLI::IsMember({"list", "stats", "gf"}));
    asm_cmd->add_flag("--unsafe-caps", asm_args.unsafe_caps, "lift the size caps");

    WavefunctionArgs wf_args;
    CLI::App* wf = app.add_subcommand(
        "wavefunction", "evaluate a doubly-deformed lattice wavefunction");
    wf->add_option("--m", wf_args.sites, "number of sites")->required();
    wf->add_option("--n", wf_args.particles, "number of particles / rows")->required();
    wf->add_option("--occ", wf_args.occ, "0/1 occupations, comma-separated, site 1 first")
        ->required();
    wf->add_option("--beta", wf_args.beta, "bind beta to a rational (default: formal)");
    wf->add_flag("--unsafe-caps", wf_args.unsafe_caps, "lift the size caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (schur->parsed()) return run_schur(schur_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (asm_cmd->parsed()) return run_asm(asm_args);
        if (wf->parsed()) return run_wavefunction(wf_args);
    } catch (const sixv::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
