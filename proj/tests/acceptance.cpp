// Acceptance suite: one line per criterion, everything exact, nonzero exit
// iff any criterion fails.
//
//  1. homomorphism law: p=3 all |G|^2 pairs, p in {5,7,11,13} >= 10^4 random
//     pairs per nu
//  2. Gauss-sum lemma G(chi) = p chi(sqrt(xi)) for every odd prime p <= 31
//  3. trivial-central-character theorem, all four clauses, p in {3..19}
//  4. even/odd theorems: recommended v_mu works mod p and in char 0, p <= 13
//  5. multiplicity one on both tori, p <= 13
//  6. Jordan-Hoelder / Brauer equality, p <= 13
//  7. mod-p nonvanishing implies char-0 nonvanishing over all recorded triples
//  8. K-type decomposition at (p,s) in {(3,1),(3,2),(5,1),(5,2),(7,1)}
//  9. x_xi eigenvalue on v_triv, v_quad is -eps_p(nu) = -nu(sqrt(xi)), p <= 13

#include "sweeps.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace gl2;

namespace {

int g_failures = 0;

void line(int criterion, const std::string& what, const sweeps::Result& r, double secs) {
    bool ok = r.mismatches == 0;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (checked %lld, mismatches %lld, %.1fs)\n",
                ok ? "PASS" : "FAIL", criterion, what.c_str(), r.checked, r.mismatches, secs);
    for (const auto& w : r.witnesses) std::printf("         witness: %s\n", w.c_str());
    std::fflush(stdout);
}

double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    sweeps::Options opt;
    opt.hom_pairs = 10000;

    // 1. homomorphism
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13}) r.merge(sweeps::homomorphism_sweep(p, opt));
        line(1, "rho(g) rho(h) = rho(gh) exactly (p=3 exhaustive; 10^4 pairs per nu for p in {5,7,11,13})",
             r, secs_since(t0));
    }

    // 2. Gauss-sum lemma
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) r.merge(sweeps::gauss_lemma_sweep(p));
        line(2, "G(chi) = p chi(sqrt(xi)) for every applicable chi, odd p <= 31", r, secs_since(t0));
    }

    std::vector<tori::Verdict> recorded;

    // 3. trivial central character: the four clauses
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13, 17, 19}) r.merge(sweeps::gauss_theorem_sweep(p, opt));
        recorded.insert(recorded.end(), r.verdicts.begin(), r.verdicts.end());
        line(3, "trivial-omega clauses 1-4 (incl. necessity) vs exact projections, p in {3..19}", r,
             secs_since(t0));
    }

    // 4. even/odd theorems
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13}) {
            r.merge(sweeps::even_sweep(p, opt));
            r.merge(sweeps::odd_sweep(p, opt));
        }
        recorded.insert(recorded.end(), r.verdicts.begin(), r.verdicts.end());
        line(4, "recommended v_mu is a test vector mod p and in char 0; case analysis exhaustive, p <= 13",
             r, secs_since(t0));
    }

    // 5. multiplicity one
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13}) r.merge(sweeps::multiplicity_sweep(p, opt));
        line(5, "rank-1 chi-projectors off {nu, nu^p}, rank 0 there; all p-1 split characters once, p <= 13",
             r, secs_since(t0));
    }

    // 6. Jordan-Hoelder / Brauer
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13}) r.merge(sweeps::jh_sweep(p, opt));
        line(6, "Brauer equality of reduced traces with V1 + V2 on p-regular classes; dims sum to p-1, p <= 13",
             r, secs_since(t0));
    }

    // 7. mod-p => char-0 over every recorded triple of (3) and (4)
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (const auto& v : recorded) {
            if (v.modp_nonzero < 0 || v.char0_nonzero < 0) continue;
            ++r.checked;
            if (v.modp_nonzero == 1 && v.char0_nonzero == 0)
                r.miss("mod-p nonzero but char-0 zero at p=" + std::to_string(v.p));
        }
        line(7, "mod-p nonvanishing implies char-0 nonvanishing on every sweep triple", r,
             secs_since(t0));
    }

    // 8. K-types
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (auto [p, s] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}})
            r.merge(sweeps::ktype_sweep(p, s));
        line(8, "K-type: <u_s,u_s>=1, degrees, conductor-exactly-s torus content, ramified census", r,
             secs_since(t0));
    }

    // 9. x_xi eigenvalue
    {
        auto t0 = std::chrono::steady_clock::now();
        sweeps::Result r;
        for (int p : {3, 5, 7, 11, 13}) r.merge(sweeps::xi_eigenvalue_sweep(p));
        line(9, "rho(x_xi) v = -eps_p(nu) v = -nu(sqrt(xi)) v for v in {v_triv, v_quad}, p <= 13", r,
             secs_since(t0));
    }

    if (g_failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
}
