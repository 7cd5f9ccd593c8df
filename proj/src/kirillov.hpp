#pragma once

// The cuspidal representation rho(nu) of GL_2(F_p) in its Kirillov model:
// functions on F_p^* with the delta-function basis {delta_y}. Conventions:
//
//   Borel (a b; 0 d):   (rho(g) f)(x) = omega(d) psi(b d^{-1} x) f(a d^{-1} x)
//   Weyl  w' = (0 1; -1 0):  (rho(w') f)(y) = sum_x  j(yx) omega^{-1}(x) f(x)
//   j(u) = -(1/p) sum_{N x = u} psi(tr x) nu(x)
//
// with omega = nu|F_p^*. The omega^{-1}(x) column twist is forced by the
// composition law w' diag(a,d) = diag(d,a) w'; for trivial omega it reduces
// to the plain Bessel kernel. Everything else reaches w' through the Bruhat
// decomposition g = b_1 w' b_2. The formulas are accepted only because
// validate_rep checks the group laws exactly.

#include "cyclo.hpp"
#include "ffchar.hpp"
#include "util.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gl2 {
namespace kir {

struct Mat2 {
    int a = 1, b = 0, c = 0, d = 1;
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

Mat2 mat_mul(const Mat2& g, const Mat2& h, int p);
inline int mat_det(const Mat2& g, int p) { return imod((long long)g.a * g.d - (long long)g.b * g.c, p); }

// Generalized permutation operator: (M v)(x) = zeta_p^{s x} zeta_m^{wb} v(kappa x).
struct BorelOp {
    int kappa = 1;
    int s = 0;
    int wb = 0;
};

// Matrix / vector with entries that are monomial sums in Z[zeta_n], all
// divided by p^denom_pow.
struct CycMat {
    int dim = 0;
    int denom_pow = 0;
    std::vector<std::vector<cyclo::Mono>> e; // e[row * dim + col]
};

struct ModelVector {
    int denom_pow = 0;
    std::vector<std::vector<cyclo::Mono>> v;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

class KirillovRep {
public:
    KirillovRep(const ff::FieldCtx& F, const cyclo::CycRing& R, ff::MultChar nu);

    const ff::FieldCtx& field() const { return *F_; }
    const cyclo::CycRing& ring() const { return *R_; }
    ff::MultChar nu() const { return nu_; }
    int dim() const { return F_->p() - 1; }
    int komega() const { return komega_; } // weight of the central character

    // --- spec operations (explicit matrices) ---
    CycMat rho_borel(int a, int b, int d) const; // upper triangular
    CycMat rho_weyl() const;                     // w' = (0 1; -1 0)
    CycMat rho(const Mat2& g) const;             // any g, det != 0

    // --- engine pieces used by the sweeps ---
    BorelOp borel_op(int a, int b, int d) const;
    BorelOp compose(const BorelOp& A, const BorelOp& B) const; // A after B
    bool borel_op_equal(const BorelOp& A, const BorelOp& B) const;
    // monomials of the (y, x) entry of p * rho(w') (coefficients are -1)
    const std::vector<cyclo::Mono>& wmono(int y, int x) const {
        return w_[size_t(y - 1) * (F_->p() - 1) + (x - 1)];
    }
    // Bruhat decomposition g = b1 * w' * b2 with b2 unipotent (c != 0)
    void bruhat(const Mat2& g, Mat2& b1, Mat2& b2) const;

    // trace of p * rho(g) for elliptic g, as monomials (exact)
    std::vector<cyclo::Mono> trace_elliptic_scaled(const Mat2& g) const;
    // trace of rho(g) as an exact cyclotomic integer (any g)
    cyclo::CycInt trace(const Mat2& g) const;

    // exact matrix equality rho(g) rho(h) == rho(gh) by full products
    bool direct_hom_check(const Mat2& g, const Mat2& h) const;

private:
    const ff::FieldCtx* F_;
    const cyclo::CycRing* R_;
    ff::MultChar nu_;
    int komega_;
    std::vector<std::vector<cyclo::Mono>> w_; // (p-1)^2 entries of p*rho(w')
};

// --- matrix/vector algebra on the explicit types ---
CycMat mat_mul(const KirillovRep& rep, const CycMat& A, const CycMat& B);
ModelVector mat_apply(const KirillovRep& rep, const CycMat& A, const ModelVector& v);
bool mat_equal(const KirillovRep& rep, const CycMat& A, const CycMat& B);
bool vec_equal(const KirillovRep& rep, const ModelVector& a, const ModelVector& b);
bool vec_is_zero(const KirillovRep& rep, const ModelVector& a);
CycMat mat_identity(const KirillovRep& rep, int denom_pow = 0);
CycMat mat_scaled_identity(const KirillovRep& rep, const cyclo::Mono& scale, int denom_pow = 0);

// the function x -> mu(x) (split-torus eigenvector), coefficient 1 at x = 1
ModelVector character_vector(const KirillovRep& rep, int mu_weight);

// Checks: homomorphism law (exhaustive for p = 3, sampled otherwise),
// central character, diag(a,1) eigenvectors, w'^2 = nu(-1) I, and the
// elliptic trace identity tr rho(t) = -(nu(t) + nu^p(t)).
ValidationReport validate_rep(const KirillovRep& rep, int random_pairs = 2000, std::uint64_t seed = 1);

} // namespace kir
} // namespace gl2
