// cuspverify: batch verification driver for the depth-zero test-vector
// classification. Subcommands:
//
//   verify --theorem <gauss-sum|even|odd|jh|ktype|all> --primes <lo..hi>
//          [--jobs N] [--out FILE]
//   query  --p P --nu a,b --chi a,b [--mu k]
//   report --format <json|csv> [--theorem ...] [--primes ...] [--out FILE]
//
// Exit codes: 0 all checks passed, 1 a sweep found a mismatch (the report
// names every witness), 2 invalid usage or input.

#include <CLI11.hpp>

#include "modp.hpp"
#include "report.hpp"
#include "sweeps.hpp"
#include "util.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace gl2;

namespace {

struct PrimeRange {
    int lo = 0, hi = 0;
    bool given = false;
};

std::vector<int> primes_in(const PrimeRange& r, int cap) {
    std::vector<int> ps;
    for (int p = r.lo; p <= r.hi && p <= cap; ++p)
        if (is_odd_prime(p)) ps.push_back(p);
    return ps;
}

PrimeRange parse_primes(const std::string& spec) {
    PrimeRange r;
    r.given = true;
    auto pos = spec.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(spec);
        } else {
            r.lo = std::stoi(spec.substr(0, pos));
            r.hi = std::stoi(spec.substr(pos + 2));
        }
    } catch (...) {
        throw CLI::ValidationError("--primes", "expected <p> or <lo..hi>");
    }
    if (r.lo > r.hi || r.lo < 3) throw CLI::ValidationError("--primes", "bad range");
    return r;
}

int run_sweeps(const std::string& theorem, PrimeRange range, const sweeps::Options& opt,
               const std::string& out_path, const std::string& format) {
    report::SweepReport rep;
    auto t0 = std::chrono::steady_clock::now();

    auto want = [&](const std::string& name) { return theorem == name || theorem == "all"; };
    auto add = [&](sweeps::Result&& r) {
        rep.checked += r.checked;
        rep.mismatches += r.mismatches;
        for (auto& w : r.witnesses) rep.witnesses.push_back(std::move(w));
        for (auto& v : r.verdicts) rep.verdicts.push_back(std::move(v));
    };

    std::vector<int> used_primes;
    auto use = [&](const std::vector<int>& ps) {
        for (int p : ps)
            if (std::find(used_primes.begin(), used_primes.end(), p) == used_primes.end())
                used_primes.push_back(p);
    };

    if (want("gauss-sum")) {
        PrimeRange def{3, 19, true};
        auto ps = primes_in(range.given ? range : def, 31);
        if (ps.empty()) throw CLI::ValidationError("--primes", "no valid odd prime in range");
        use(ps);
        for (int p : ps) {
            add(sweeps::gauss_lemma_sweep(p));
            if (p <= 19) add(sweeps::gauss_theorem_sweep(p, opt));
        }
    }
    if (want("even")) {
        PrimeRange def{3, 13, true};
        auto ps = primes_in(range.given ? range : def, 31);
        if (ps.empty()) throw CLI::ValidationError("--primes", "no valid odd prime in range");
        use(ps);
        for (int p : ps) add(sweeps::even_sweep(p, opt));
    }
    if (want("odd")) {
        PrimeRange def{3, 13, true};
        auto ps = primes_in(range.given ? range : def, 31);
        if (ps.empty()) throw CLI::ValidationError("--primes", "no valid odd prime in range");
        use(ps);
        for (int p : ps) add(sweeps::odd_sweep(p, opt));
    }
    if (want("jh")) {
        PrimeRange def{3, 13, true};
        auto ps = primes_in(range.given ? range : def, 31);
        if (ps.empty()) throw CLI::ValidationError("--primes", "no valid odd prime in range");
        use(ps);
        for (int p : ps) {
            add(sweeps::jh_sweep(p, opt));
            add(sweeps::multiplicity_sweep(p, opt));
            add(sweeps::xi_eigenvalue_sweep(p));
        }
    }
    if (want("ktype")) {
        PrimeRange def{3, 7, true};
        auto ps = primes_in(range.given ? range : def, 7);
        if (ps.empty()) throw CLI::ValidationError("--primes", "no valid odd prime <= 7 in range");
        use(ps);
        for (int p : ps) {
            add(sweeps::ktype_sweep(p, 1));
            if (p <= 5) add(sweeps::ktype_sweep(p, 2));
        }
    }
    if (theorem == "all") {
        PrimeRange def{3, 13, true};
        auto ps = primes_in(range.given ? range : def, 13);
        use(ps);
        for (int p : ps) add(sweeps::homomorphism_sweep(p, opt));
    }

    std::sort(used_primes.begin(), used_primes.end());
    for (int p : used_primes) rep.contexts.push_back(report::make_context(ff::FieldCtx(p)));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string payload = (format == "csv") ? report::to_csv(rep) : report::to_json(rep);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << payload;
    } else if (format == "csv" || format == "json") {
        std::cout << payload;
    }

    std::cerr << "checked " << rep.checked << " cases, " << rep.mismatches << " mismatches ("
              << rep.wall_seconds << " s)\n";
    for (const auto& w : rep.witnesses) std::cerr << "  MISMATCH: " << w << "\n";
    return rep.mismatches == 0 ? 0 : 1;
}

std::pair<int, int> parse_digits(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) throw CLI::ValidationError("digits", "expected a,b");
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

int run_query(int p, const std::string& nu_s, const std::string& chi_s, int mu, bool has_mu) {
    if (!is_odd_prime(p)) {
        std::cerr << "p must be an odd prime\n";
        return 2;
    }
    ff::FieldCtx F(p);
    cyclo::CycRing R(p);
    auto [na, nb] = parse_digits(nu_s);
    auto [ca, cb] = parse_digits(chi_s);
    ff::MultChar nu, chi;
    try {
        nu = ff::char_from_digits(F, na, nb);
        chi = ff::char_from_digits(F, ca, cb);
        nu = ff::normalize_char(F, nu);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (chi == nu || chi == ff::frob_char(F, nu)) {
        std::cerr << "excluded character: chi coincides with nu or nu^p\n";
        return 2;
    }
    if (ff::central_weight(F, chi) != ff::central_weight(F, nu)) {
        std::cerr << "chi does not agree with nu on F_p^*\n";
        return 2;
    }
    auto tag = ff::classify(F, nu, chi);
    int mu_rec = modp::predict(F, nu, chi);
    std::cout << "p = " << p << ", nu = (" << ff::digit_a(F, nu) << "," << ff::digit_b(F, nu)
              << "), k_nu = " << nu.k << "\n";
    std::cout << "chi = (" << ff::digit_a(F, chi) << "," << ff::digit_b(F, chi)
              << "), k_chi = " << chi.k << "\n";
    std::cout << "Type " << (tag.type == ff::Type::One ? 1 : 2) << ", t_chi = " << tag.t << "\n";
    if (ff::central_weight(F, nu) == 0) {
        auto ec = cyclo::epsilon_p(R, F, chi), en = cyclo::epsilon_p(R, F, nu);
        std::cout << "eps_p(chi) = " << (ec == cyclo::CycInt::integer(R, 1) ? "+1" : "-1")
                  << ", eps_p(nu) = " << (en == cyclo::CycInt::integer(R, 1) ? "+1" : "-1") << "\n";
    }
    std::cout << "recommended mu weight (mod p-1): " << mu_rec << "\n";
    if (has_mu) {
        kir::KirillovRep rep(F, R, nu);
        bool char0 = tori::is_test_vector(rep, chi, mu);
        bool modp_flag = modp::modp_test_vector(F, nu, chi, mu);
        std::cout << "v_mu with mu weight " << imod(mu, p - 1) << ": char-0 "
                  << (char0 ? "nonzero" : "zero") << ", mod-p " << (modp_flag ? "nonzero" : "zero")
                  << "\n";
        if (modp_flag) {
            // the actual F_{p^2} component (informational: only its
            // nonvanishing carries a claim)
            auto loc = modp::locate_split_char(F, nu, mu);
            auto jh = modp::jh_factors(F, nu);
            const modp::SymModel& M = loc.factor == 1 ? *jh.V1 : jh.V2;
            ff::Fq2 c = modp::chi_component_of_split_monomial(F, M, loc.i, chi);
            std::cout << "mod-p chi-component in V" << loc.factor << ": " << c.a << " + " << c.b
                      << "*theta\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of depth-zero test-vector classifications"};
    app.require_subcommand(1);

    std::string theorem = "all", primes_spec, out_path, format = "json";
    int jobs = 0;
    long long hom_pairs = 10000;

    auto* verify = app.add_subcommand("verify", "run a theorem sweep, exit 1 on any mismatch");
    verify->add_option("--theorem", theorem, "gauss-sum|even|odd|jh|ktype|all")
        ->check(CLI::IsMember({"gauss-sum", "even", "odd", "jh", "ktype", "all"}));
    verify->add_option("--primes", primes_spec, "prime range lo..hi (or one prime)");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--hom-pairs", hom_pairs, "random pairs per nu for the homomorphism sweep");
    verify->add_option("--out", out_path, "write a JSON report here");

    int qp = 0, qmu = 0;
    std::string qnu, qchi;
    auto* query = app.add_subcommand("query", "classify one (p, nu, chi) and recommend mu");
    query->add_option("--p", qp, "odd prime")->required();
    query->add_option("--nu", qnu, "digits a,b of nu")->required();
    query->add_option("--chi", qchi, "digits a,b of chi")->required();
    auto* muopt = query->add_option("--mu", qmu, "split character weight to test");

    auto* reportc = app.add_subcommand("report", "run a sweep and emit the verdict table");
    reportc->add_option("--theorem", theorem, "gauss-sum|even|odd|jh|ktype|all")
        ->check(CLI::IsMember({"gauss-sum", "even", "odd", "jh", "ktype", "all"}));
    reportc->add_option("--primes", primes_spec, "prime range lo..hi");
    reportc->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    reportc->add_option("--jobs", jobs, "worker threads");
    reportc->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    sweeps::Options opt;
    opt.jobs = jobs;
    opt.hom_pairs = hom_pairs;

    try {
        if (app.got_subcommand(query)) return run_query(qp, qnu, qchi, qmu, muopt->count() > 0);
        PrimeRange range;
        if (!primes_spec.empty()) range = parse_primes(primes_spec);
        if (range.given && primes_in(range, 31).empty()) {
            std::cerr << "no valid odd prime in --primes\n";
            return 2;
        }
        if (app.got_subcommand(verify)) return run_sweeps(theorem, range, opt, out_path, "none");
        return run_sweeps(theorem, range, opt, out_path, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
