#pragma once

// Characteristic p: the Jordan-Hoelder factors det^e Sym^d of the reduced
// cuspidal representation, their split/nonsplit torus eigenbases over
// F_{p^2}, and the paper's Type-based test-vector predictions.
//
// Sym^d acts on homogeneous polynomials in X, Y by the substitution
// X -> a X + c Y, Y -> b X + d Y (matrix columns), twisted by det^e. The
// nonsplit torus diagonalizes in U = X + theta Y, V = X - theta Y; with
// this choice U carries sigma-weight 1 and V weight p, which is the
// labelling under which the printed exponent identities for V_1 hold.
// (U = X - sqrt(xi) Y for the trace-zero root sqrt(xi) = -theta.)

#include "kirillov.hpp"

#include <optional>
#include <string>

namespace gl2 {
namespace modp {

struct SymModel {
    int d = 0; // Sym degree
    int e = 0; // det twist
    int dim() const { return d + 1; }
};

struct JHFactors {
    std::optional<SymModel> V1; // det^{b+1} Sym^{a-b-2}, absent when a-b = 1
    SymModel V2;                // det^{a} Sym^{p-1-(a-b)}
};

// pre: nu does not factor through the norm (digits normalized to a > b here)
JHFactors jh_factors(const ff::FieldCtx& F, ff::MultChar nu);

// action matrix over F_{p^2}, row-major (d+1)x(d+1), columns indexed by the
// X-exponent of the source monomial X^i Y^{d-i}
std::vector<ff::Fq2> sym_action(const ff::FieldCtx& F, const SymModel& M, const kir::Mat2& g);
ff::Fq2 sym_trace(const ff::FieldCtx& F, const SymModel& M, const kir::Mat2& g);

// the character of the embedded torus on U^i V^{d-i} (det twist included),
// computed by acting with emb(sigma) and reading off the eigenvalue
ff::MultChar torus_char_of_uv_monomial(const ff::FieldCtx& F, const SymModel& M, int i);

// coefficient of the (unique) UV monomial carrying chi in the UV expansion
// of X^i Y^{d-i}; zero when no monomial of the model carries chi
ff::Fq2 chi_component_of_split_monomial(const ff::FieldCtx& F, const SymModel& M, int i,
                                        ff::MultChar chi);

struct SplitLocation {
    int factor = 0; // 1 or 2
    int i = 0;      // X-exponent inside that factor
};
// which factor carries the split character of weight mu (mod p-1)
SplitLocation locate_split_char(const ff::FieldCtx& F, ff::MultChar nu, int mu_weight);
// which factor (and U-exponent) carries chi; nullopt for chi in {nu, nu^p}
std::optional<SplitLocation> locate_torus_char(const ff::FieldCtx& F, ff::MultChar nu,
                                               ff::MultChar chi);

// true iff chi and mu land in the same JH factor and the chi-component of
// the mu-monomial is nonzero in F_{p^2}. pre: chi not in {nu, nu^p}.
bool modp_test_vector(const ff::FieldCtx& F, ff::MultChar nu, ff::MultChar chi, int mu_weight);

// the recommended split character weight for (nu, chi) from the even/odd
// case analysis; deterministic, defined for every compatible chi. With
// `alternate` the mirrored monomial X^{d-i} Y^i of the same factor is used
// instead (weight 2e + d - w); the two coincide on the central monomials.
int predict(const ff::FieldCtx& F, ff::MultChar nu, ff::MultChar chi, bool alternate = false);

struct BrauerReport {
    bool ok = true;
    long long classes_checked = 0;
    std::string first_failure;
};

// Brauer-character equality on p-regular classes: trace of the reduction of
// rho(nu) (computed from the exact Kirillov matrices through the fixed
// maximal ideal zeta_m -> sigma, zeta_p -> 1) equals tr V1 + tr V2.
BrauerReport brauer_check(const kir::KirillovRep& rep);

} // namespace modp
} // namespace gl2
