#pragma once

// Exhaustive desk-scale sweeps behind the CLI and the acceptance suite.
// Each driver returns the number of cases it checked, the mismatches (with
// witnesses), and verdict rows for the report writers.

#include "ktype.hpp"
#include "tori.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gl2 {
namespace sweeps {

struct Options {
    int jobs = 0;                // 0: hardware concurrency
    std::uint64_t seed = 20260811;
    long long hom_pairs = 10000; // random pairs per nu in the homomorphism sweep
};

struct Result {
    long long checked = 0;
    long long mismatches = 0;
    std::vector<std::string> witnesses;
    std::vector<tori::Verdict> verdicts;

    void miss(const std::string& w) {
        ++mismatches;
        witnesses.push_back(w);
    }
    void merge(Result&& o);
};

// rho(g) rho(h) = rho(gh) exactly: every Bruhat-kernel identity
// W u(c) diag(kappa,1) W = p^2 rho(gamma) is verified per nu, then random
// pairs are certified through exact Borel-operator algebra (with a direct
// full-matrix subsample as a cross-check).
Result homomorphism_sweep(int p, const Options& opt);

// section 1 Lemma: G(chi) = p chi(sqrt(xi)) for every applicable chi
Result gauss_lemma_sweep(int p);

// Theorem "gauss-sum" (trivial central character): the four clauses for
// v_triv / v_quad against the exact projection oracle
Result gauss_theorem_sweep(int p, const Options& opt);

// Theorems "even" / "odd": the recommended v_mu is a test vector both mod p
// and in characteristic zero; every chi hits exactly one clause; mod-p
// nonvanishing implies characteristic-zero nonvanishing.
Result even_sweep(int p, const Options& opt);
Result odd_sweep(int p, const Options& opt);

// multiplicity one on both tori (criterion 5)
Result multiplicity_sweep(int p, const Options& opt);

// Jordan-Hoelder / Brauer-character equality (criterion 6)
Result jh_sweep(int p, const Options& opt);

// x_xi eigenvalue on v_triv, v_quad (criterion 9): the exact eigenvalue is
// -eps_p(nu) = -nu(sqrt(xi))
Result xi_eigenvalue_sweep(int p);

// K-type checks at level p^s (criterion 8), inducing conductor r = 1
Result ktype_sweep(int p, int s);

} // namespace sweeps
} // namespace gl2
