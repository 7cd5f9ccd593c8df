#pragma once

// Exact arithmetic in Z[zeta_n], n = p(p^2-1), realized as
// Z[zeta_p] (tensor) Z[zeta_m] with m = p^2-1 (p and m are coprime, and
// zeta_p = zeta_n^m, zeta_m = zeta_n^p). Elements are held either
//
//   * canonically: integer coefficients on the basis zeta_p^i zeta_m^j,
//     0 <= i < p-1, 0 <= j < phi(m) (CycInt, arbitrary-precision), or
//   * as unreduced group-ring accumulators on Z/p x Z/m (Accum, int64),
//     the fast form used by the sweep engines. Reduction modulo Phi_p and
//     Phi_m is overflow-checked, so the fast form is exact or fails loudly.
//
// The additive character psi is pinned to psi(x) = zeta_p^x (canonical lift
// of x to {0,...,p-1}); multiplicative character values are powers of
// zeta_m via the dlog tables of the FieldCtx.

#include "ffchar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace gl2 {
namespace cyclo {

using BigInt = boost::multiprecision::cpp_int;

// Phi_d(x) over Z, dense coefficient vector, constant term first.
std::vector<std::int64_t> cyclotomic_poly(int d);

// Reduction data for one cyclotomic order.
struct CycloAxis {
    int order = 1;  // m
    int degree = 1; // phi(m)
    // Phi_m(x) - x^degree as (exponent, coefficient) pairs
    std::vector<std::pair<int, std::int64_t>> tail;

    static CycloAxis make(int order);
    // In-place reduction of a length-`order` coefficient vector; slots
    // >= degree end up zero. Overflow-checked.
    void reduce_row(std::int64_t* v) const;
    void reduce_row_big(BigInt* v) const;
};

struct Mono {
    std::int32_t al; // zeta_p exponent, 0 <= al < p
    std::int32_t be; // zeta_m exponent, 0 <= be < m
    std::int64_t c;
};

class CycRing {
public:
    explicit CycRing(int p);

    int p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int phim() const { return axis_m_.degree; }
    int canon_size() const { return (p_ - 1) * phim(); }
    const CycloAxis& axis_m() const { return axis_m_; }

    // Reduce a p x m group-ring grid (row-major, row = zeta_p exponent) to
    // canonical form. Destroys the grid. `out` gets (p-1)*phi(m) entries.
    void reduce_grid(std::int64_t* grid, std::vector<std::int64_t>& out) const;
    // Same, but only answer whether the element is zero.
    bool grid_is_zero(std::int64_t* grid) const;

private:
    int p_, m_, n_;
    CycloAxis axis_m_;
};

// Unreduced element of Z[Z/p x Z/m]; the workhorse accumulator. Callers
// keep the accumulated magnitudes below 2^61 (the desk-scale sweeps stay
// under 2^24); the reductions re-check the bound before multiplying.
class Accum {
public:
    explicit Accum(const CycRing& R) : R_(&R), a_(std::size_t(R.p()) * R.m(), 0) {}

    const CycRing& ring() const { return *R_; }
    void clear();
    void add(int al, int be, std::int64_t c) { a_[std::size_t(al) * R_->m() + be] += c; }
    void add_mono(const Mono& mo) { add(mo.al, mo.be, mo.c); }
    // add c * zeta_p^al * zeta_m^be with arbitrary (possibly negative) exponents
    void add_wrapped(long long al, long long be, std::int64_t c);
    std::int64_t* data() { return a_.data(); }
    const std::int64_t* data() const { return a_.data(); }

    // destructive: reduces the grid
    bool reduce_is_zero();
    std::vector<std::int64_t> canonical(); // destructive

private:
    const CycRing* R_;
    std::vector<std::int64_t> a_;
};

// Element of Z[zeta_n] in canonical form with big-integer coefficients.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(const CycRing& R) : R_(&R), c_(R.canon_size()) {}

    static CycInt zero(const CycRing& R) { return CycInt(R); }
    static CycInt one(const CycRing& R) { return monomial(R, 0, 0); }
    static CycInt integer(const CycRing& R, const BigInt& v);
    // coef * zeta_p^al * zeta_m^be (exponents arbitrary, reduced here)
    static CycInt monomial(const CycRing& R, long long al, long long be, const BigInt& coef = 1);
    static CycInt from_monomials(const CycRing& R, const std::vector<Mono>& ms);
    static CycInt from_canonical(const CycRing& R, std::vector<std::int64_t> canon);

    const CycRing& ring() const { return *R_; }
    bool is_zero() const;
    // If the element is a rational integer, return it; otherwise throw.
    BigInt to_integer() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    CycInt operator*(const CycInt& o) const;
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    friend bool operator==(const CycInt& a, const CycInt& b) { return (a - b).is_zero(); }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    CycInt conj() const; // zeta_n -> zeta_n^{-1}
    // exact division by a rational integer; VerificationError if not divisible
    CycInt div_exact(const BigInt& d) const;
    CycInt scaled(const BigInt& s) const;

    // image under zeta_p -> 1, zeta_m -> sigma (reduction at the fixed
    // maximal ideal above p); F must have matching p.
    ff::Fq2 reduce_mod_p(const ff::FieldCtx& F) const;

    // numeric image under zeta_n -> exp(2 pi i /n) for report printing
    std::complex<double> embed() const;

    std::string to_string() const;

private:
    // canonicalize a p x m grid of big coefficients (destroys the grid)
    static CycInt from_big_grid(const CycRing& R, std::vector<BigInt>& grid);

    const CycRing* R_ = nullptr;
    std::vector<BigInt> c_;
};

// --- character / Gauss-sum values -------------------------------------

// psi(x) = zeta_p^{x mod p}
CycInt psi(const CycRing& R, int x);
// chi(x) as a cyclotomic integer (x != 0)
CycInt char_value(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi, ff::Fq2 x);

// G(chi) = sum_{u in F_{p^2}^*} chi(u) psi(tr u), as p^2-1 monomials
std::vector<Mono> gauss_sum_monomials(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi);
CycInt gauss_sum(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi);

// epsilon_p(chi): G(chi)/p for chi trivial on F_p^* not factoring through
// the norm (exact divisibility enforced); chi(sqrt(xi)) for the trivial and
// quadratic norm-factor characters. pre: chi trivial on F_p^*.
CycInt epsilon_p(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi);

// p*j(u) = -sum_{N x = u} psi(tr x) nu(x); u != 0, nu != nu^p
std::vector<Mono> bessel_num_monomials(const CycRing& R, const ff::FieldCtx& F, ff::MultChar nu, int u);
CycInt bessel_num(const CycRing& R, const ff::FieldCtx& F, ff::MultChar nu, int u);

} // namespace cyclo
} // namespace gl2
