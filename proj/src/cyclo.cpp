#include "cyclo.hpp"

#include "kernels/vecops.hpp"
#include "util.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace gl2 {
namespace cyclo {

using std::int64_t;
using std::size_t;

// exact division of integer polynomials, remainder must vanish
static std::vector<int64_t> poly_div_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    std::vector<int64_t> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        if (num[i] % den[dd] != 0) throw std::logic_error("inexact polynomial division");
        int64_t f = num[i] / den[dd];
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] = ck_sub(num[i - dd + j], ck_mul(f, den[j]));
    }
    for (int64_t c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return q;
}

std::vector<int64_t> cyclotomic_poly(int d) {
    static std::map<int, std::vector<int64_t>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<int64_t> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1; // x^d - 1
    std::vector<int64_t> res = num;
    for (int e = 1; e < d; ++e) {
        if (d % e == 0) res = poly_div_exact(res, cyclotomic_poly(e));
    }
    if (d == 1) res = num;
    cache[d] = res;
    return res;
}

CycloAxis CycloAxis::make(int order) {
    CycloAxis ax;
    ax.order = order;
    auto phi = cyclotomic_poly(order);
    ax.degree = int(phi.size()) - 1;
    for (int t = 0; t < ax.degree; ++t)
        if (phi[t] != 0) ax.tail.emplace_back(t, phi[t]);
    return ax;
}

void CycloAxis::reduce_row(int64_t* v) const {
    for (int j = order - 1; j >= degree; --j) {
        int64_t c = v[j];
        if (c == 0) continue;
        v[j] = 0;
        for (auto [t, s] : tail) v[j - degree + t] = ck_sub(v[j - degree + t], ck_mul(c, s));
    }
}

void CycloAxis::reduce_row_big(BigInt* v) const {
    for (int j = order - 1; j >= degree; --j) {
        if (v[j] == 0) continue;
        BigInt c = v[j];
        v[j] = 0;
        for (auto [t, s] : tail) v[j - degree + t] -= c * s;
    }
}

CycRing::CycRing(int p) : p_(p), m_(p * p - 1), n_(p * (p * p - 1)), axis_m_(CycloAxis::make(p * p - 1)) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

void CycRing::reduce_grid(int64_t* grid, std::vector<int64_t>& out) const {
    // zeta_p direction: zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2})
    if (kern::vec_max_abs_i64(grid, size_t(p_) * m_) > (std::uint64_t(1) << 61))
        throw std::overflow_error("accumulator too large before reduction");
    const int64_t* top = grid + size_t(p_ - 1) * m_;
    for (int i = 0; i < p_ - 1; ++i) kern::vec_sub_i64(grid + size_t(i) * m_, top, m_);
    // zeta_m direction, per surviving row
    out.assign(canon_size(), 0);
    for (int i = 0; i < p_ - 1; ++i) {
        int64_t* row = grid + size_t(i) * m_;
        axis_m_.reduce_row(row);
        std::copy(row, row + phim(), out.begin() + size_t(i) * phim());
    }
}

bool CycRing::grid_is_zero(int64_t* grid) const {
    if (kern::vec_all_zero_i64(grid, size_t(p_) * m_)) return true;
    if (kern::vec_max_abs_i64(grid, size_t(p_) * m_) > (std::uint64_t(1) << 61))
        throw std::overflow_error("accumulator too large before reduction");
    const int64_t* top = grid + size_t(p_ - 1) * m_;
    for (int i = 0; i < p_ - 1; ++i) {
        int64_t* row = grid + size_t(i) * m_;
        kern::vec_sub_i64(row, top, m_);
        axis_m_.reduce_row(row);
        if (!kern::vec_all_zero_i64(row, phim())) return false;
    }
    return true;
}

void Accum::clear() { kern::vec_zero_i64(a_.data(), a_.size()); }

void Accum::add_wrapped(long long al, long long be, int64_t c) {
    add(imod(al, R_->p()), imod(be, R_->m()), c);
}

bool Accum::reduce_is_zero() { return R_->grid_is_zero(a_.data()); }

std::vector<int64_t> Accum::canonical() {
    std::vector<int64_t> out;
    R_->reduce_grid(a_.data(), out);
    return out;
}

// --- CycInt ------------------------------------------------------------

CycInt CycInt::integer(const CycRing& R, const BigInt& v) {
    CycInt x(R);
    x.c_[0] = v;
    return x;
}

CycInt CycInt::from_big_grid(const CycRing& R, std::vector<BigInt>& grid) {
    CycInt x(R);
    // zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2}), then Phi_m per row
    for (int i = 0; i < R.p() - 1; ++i)
        for (int j = 0; j < R.m(); ++j) grid[size_t(i) * R.m() + j] -= grid[size_t(R.p() - 1) * R.m() + j];
    for (int i = 0; i < R.p() - 1; ++i) {
        R.axis_m().reduce_row_big(grid.data() + size_t(i) * R.m());
        for (int j = 0; j < R.phim(); ++j) x.c_[size_t(i) * R.phim() + j] = grid[size_t(i) * R.m() + j];
    }
    return x;
}

CycInt CycInt::monomial(const CycRing& R, long long al, long long be, const BigInt& coef) {
    std::vector<BigInt> grid(size_t(R.p()) * R.m());
    grid[size_t(imod(al, R.p())) * R.m() + imod(be, R.m())] = coef;
    return from_big_grid(R, grid);
}

CycInt CycInt::from_monomials(const CycRing& R, const std::vector<Mono>& ms) {
    Accum acc(R);
    for (const auto& mo : ms) acc.add_mono(mo);
    return from_canonical(R, acc.canonical());
}

CycInt CycInt::from_canonical(const CycRing& R, std::vector<int64_t> canon) {
    CycInt x(R);
    for (size_t i = 0; i < canon.size(); ++i) x.c_[i] = canon[i];
    return x;
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

BigInt CycInt::to_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) throw VerificationError("cyclotomic integer is not rational");
    return c_.empty() ? BigInt(0) : c_[0];
}

CycInt CycInt::operator-() const {
    CycInt x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt CycInt::operator*(const CycInt& o) const {
    const CycRing& R = *R_;
    int pm1 = R.p() - 1, ph = R.phim();
    // 2D convolution on a (2p-1) x m big grid; beta-degrees stay < m since
    // 2*(phi(m)-1) < m for even m.
    std::vector<BigInt> grid(size_t(R.p()) * R.m());
    for (int i1 = 0; i1 < pm1; ++i1)
        for (int j1 = 0; j1 < ph; ++j1) {
            const BigInt& a = c_[size_t(i1) * ph + j1];
            if (a == 0) continue;
            for (int i2 = 0; i2 < pm1; ++i2)
                for (int j2 = 0; j2 < ph; ++j2) {
                    const BigInt& b = o.c_[size_t(i2) * ph + j2];
                    if (b == 0) continue;
                    grid[size_t((i1 + i2) % R.p()) * R.m() + (j1 + j2)] += a * b;
                }
        }
    return from_big_grid(R, grid);
}

CycInt CycInt::conj() const {
    const CycRing& R = *R_;
    std::vector<BigInt> grid(size_t(R.p()) * R.m());
    int ph = R.phim();
    for (int i = 0; i < R.p() - 1; ++i)
        for (int j = 0; j < ph; ++j) {
            const BigInt& a = c_[size_t(i) * ph + j];
            if (a == 0) continue;
            grid[size_t((R.p() - i) % R.p()) * R.m() + (R.m() - j) % R.m()] += a;
        }
    return from_big_grid(R, grid);
}

CycInt CycInt::div_exact(const BigInt& d) const {
    CycInt x = *this;
    for (auto& v : x.c_) {
        if (v % d != 0) throw VerificationError("cyclotomic integer not divisible as claimed");
        v /= d;
    }
    return x;
}

CycInt CycInt::scaled(const BigInt& s) const {
    CycInt x = *this;
    for (auto& v : x.c_) v *= s;
    return x;
}

ff::Fq2 CycInt::reduce_mod_p(const ff::FieldCtx& F) const {
    const CycRing& R = *R_;
    if (F.m() != R.m()) throw std::invalid_argument("field/ring mismatch");
    ff::Fq2 acc{0, 0};
    int ph = R.phim();
    for (int i = 0; i < R.p() - 1; ++i)
        for (int j = 0; j < ph; ++j) {
            const BigInt& v = c_[size_t(i) * ph + j];
            if (v == 0) continue;
            int r = int(v % R.p());
            if (r < 0) r += R.p();
            if (r == 0) continue;
            // zeta_p -> 1, zeta_m^j -> sigma^j
            ff::Fq2 term = F.sigma_pow(j);
            acc = F.add(acc, F.mul({r, 0}, term));
        }
    return acc;
}

std::complex<double> CycInt::embed() const {
    const CycRing& R = *R_;
    const double tau = 6.28318530717958647692;
    std::complex<double> s{0.0, 0.0};
    int ph = R.phim();
    for (int i = 0; i < R.p() - 1; ++i)
        for (int j = 0; j < ph; ++j) {
            const BigInt& v = c_[size_t(i) * ph + j];
            if (v == 0) continue;
            double ang = tau * (double(i) / R.p() + double(j) / R.m());
            s += double(v.convert_to<long double>()) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    return s;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    int ph = R_->phim();
    for (int i = 0; i < R_->p() - 1; ++i)
        for (int j = 0; j < ph; ++j) {
            const BigInt& v = c_[size_t(i) * ph + j];
            if (v == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << v;
            if (i) os << "*zp^" << i;
            if (j) os << "*zm^" << j;
        }
    if (first) os << "0";
    return os.str();
}

// --- character values ----------------------------------------------------

CycInt psi(const CycRing& R, int x) { return CycInt::monomial(R, imod(x, R.p()), 0); }

CycInt char_value(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi, ff::Fq2 x) {
    return CycInt::monomial(R, 0, ff::eval_char(F, chi, x));
}

std::vector<Mono> gauss_sum_monomials(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi) {
    (void)R;
    std::vector<Mono> ms;
    ms.reserve(F.m());
    for (int e = 0; e < F.m(); ++e) {
        ff::Fq2 u = F.sigma_pow(e);
        ms.push_back(Mono{F.trace(u), int((long long)chi.k * e % F.m()), 1});
    }
    return ms;
}

CycInt gauss_sum(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi) {
    return CycInt::from_monomials(R, gauss_sum_monomials(R, F, chi));
}

CycInt epsilon_p(const CycRing& R, const ff::FieldCtx& F, ff::MultChar chi) {
    if (ff::central_weight(F, chi) != 0)
        throw std::invalid_argument("epsilon_p requires chi trivial on F_p^*");
    if (ff::factors_through_norm(F, chi)) {
        // the paper's extension: epsilon_p(chi) = chi(sqrt(xi))
        return CycInt::monomial(R, 0, (long long)chi.k * F.dlog_theta() % F.m());
    }
    return gauss_sum(R, F, chi).div_exact(F.p());
}

std::vector<Mono> bessel_num_monomials(const CycRing& R, const ff::FieldCtx& F, ff::MultChar nu, int u) {
    (void)R;
    int p = F.p();
    u = imod(u, p);
    if (u == 0) throw std::invalid_argument("bessel_num at u = 0");
    if (ff::digit_a(F, nu) == ff::digit_b(F, nu)) throw std::invalid_argument("nu factors through the norm");
    // {x : N x = u} = { sigma^{d + j(p-1)} : j = 0..p } with N(sigma^d) = u
    int d = F.dlog(ff::Fq2{u, 0}); // u = sigma^d, divisible by p+1
    std::vector<Mono> ms;
    ms.reserve(p + 1);
    for (int j = 0; j <= p; ++j) {
        int e = (d / (p + 1) + j * (p - 1)) % F.m();
        // N(sigma^e) = sigma^{e(p+1)} = u requires e(p+1) = d mod m
        ff::Fq2 x = F.sigma_pow(e);
        ms.push_back(Mono{F.trace(x), int((long long)nu.k * e % F.m()), -1});
    }
    return ms;
}

CycInt bessel_num(const CycRing& R, const ff::FieldCtx& F, ff::MultChar nu, int u) {
    return CycInt::from_monomials(R, bessel_num_monomials(R, F, nu, u));
}

} // namespace cyclo
} // namespace gl2
