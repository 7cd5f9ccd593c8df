#pragma once

// Torus embeddings into GL_2(F_p), chi-isotypic projections, and the exact
// characteristic-zero test vector predicate. Projectors are kept
// unnormalized (no 1/(q^2-1)): only (non)vanishing matters, and this keeps
// all arithmetic inside Z[zeta_n, 1/p].

#include "kirillov.hpp"

#include <map>
#include <optional>

namespace gl2 {
namespace tori {

// a + b*theta -> (a b; b xi a)
kir::Mat2 embed(const ff::FieldCtx& F, ff::Fq2 t);

// The function x -> mu(x), normalized to 1 at x = 1; eigenvector of every
// diag(a, 1) with eigenvalue mu(a). mu given by its weight mod p-1.
kir::ModelVector split_eigenvector(const kir::KirillovRep& rep, int mu_weight);

// Unnormalized projection P_chi v = sum_{t in F_{p^2}^*} chi^{-1}(t) rho(emb(t)) v.
// pre: chi agrees with omega on F_p^*.
kir::ModelVector chi_projection(const kir::KirillovRep& rep, ff::MultChar chi,
                                const kir::ModelVector& v);

// Exact nonvanishing of P_chi applied to the mu-eigenvector.
// pre: chi compatible, chi not in {nu, nu^p}.
bool is_test_vector(const kir::KirillovRep& rep, ff::MultChar chi, int mu_weight);

// For v one of v_triv, v_quad (omega trivial on F_p^*): the exact eigenvalue
// of rho(x_xi), x_xi = (0 1; xi 0). nullopt if v is not an eigenvector.
std::optional<cyclo::CycInt> xi_weyl_eigenvalue(const kir::KirillovRep& rep,
                                                const kir::ModelVector& v);

// Multiplicity of every character of F_{p^2}^* in rho(nu)|_T, computed from
// exact projector traces: tr P_chi = (p^2-1) mult(chi).
std::map<int, int> restriction_multiplicities(const kir::KirillovRep& rep);

// Multiplicity of each split-torus character on D = diag(a, d) compatible
// with omega (keyed by the D^0 weight), from exact traces over D.
std::map<int, int> split_multiplicities(const kir::KirillovRep& rep);

// One record per (p, nu, chi, mu) sweep point.
struct Verdict {
    int p = 0;
    int nu_a = 0, nu_b = 0;
    int chi_a = 0, chi_b = 0;
    int mu_weight = -1;         // -1: no mu attached
    int type = 0;               // 1 or 2
    int t_chi = 0;
    std::string eps_chi, eps_nu; // "+1"/"-1" or "zeta^e"
    int predicted = -1;          // -1 none/not applicable, else 0/1
    int char0_nonzero = -1;
    int modp_nonzero = -1;
    bool mismatch = false;
    std::string note;
};

} // namespace tori
} // namespace gl2
