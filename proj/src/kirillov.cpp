#include "kirillov.hpp"

#include "util.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace gl2 {
namespace kir {

using cyclo::Accum;
using cyclo::Mono;

Mat2 mat_mul(const Mat2& g, const Mat2& h, int p) {
    return Mat2{imod((long long)g.a * h.a + (long long)g.b * h.c, p),
                imod((long long)g.a * h.b + (long long)g.b * h.d, p),
                imod((long long)g.c * h.a + (long long)g.d * h.c, p),
                imod((long long)g.c * h.b + (long long)g.d * h.d, p)};
}

KirillovRep::KirillovRep(const ff::FieldCtx& F, const cyclo::CycRing& R, ff::MultChar nu)
    : F_(&F), R_(&R), nu_(nu) {
    int p = F.p(), m = F.m();
    if (ff::digit_a(F, nu) == ff::digit_b(F, nu))
        throw std::invalid_argument("nu must not factor through the norm");
    komega_ = ff::central_weight(F, nu);

    // bess[u-1]: monomials of p*j(u)
    std::vector<std::vector<Mono>> bess(p - 1);
    for (int u = 1; u < p; ++u) bess[u - 1] = cyclo::bessel_num_monomials(R, F, nu, u);

    w_.resize(size_t(p - 1) * (p - 1));
    for (int y = 1; y < p; ++y)
        for (int x = 1; x < p; ++x) {
            std::vector<Mono> entry = bess[(y * x) % p - 1];
            // omega^{-1}(x) column twist
            int shift = imod(-(long long)komega_ * (p + 1) % m * F.dlog_p(x), m);
            for (auto& mo : entry) mo.be = int((mo.be + (long long)shift) % m);
            w_[size_t(y - 1) * (p - 1) + (x - 1)] = std::move(entry);
        }
}

BorelOp KirillovRep::borel_op(int a, int b, int d) const {
    int p = F_->p(), m = F_->m();
    a = imod(a, p);
    b = imod(b, p);
    d = imod(d, p);
    if (a == 0 || d == 0) throw std::invalid_argument("singular diagonal");
    int dinv = inv_mod(d, p);
    BorelOp op;
    op.kappa = int((long long)a * dinv % p);
    op.s = int((long long)b * dinv % p);
    op.wb = int((long long)komega_ * (p + 1) % m * F_->dlog_p(d) % m);
    return op;
}

BorelOp KirillovRep::compose(const BorelOp& A, const BorelOp& B) const {
    int p = F_->p(), m = F_->m();
    BorelOp op;
    op.kappa = int((long long)A.kappa * B.kappa % p);
    op.s = int((A.s + (long long)B.s * A.kappa) % p);
    op.wb = int((A.wb + (long long)B.wb) % m);
    return op;
}

bool KirillovRep::borel_op_equal(const BorelOp& A, const BorelOp& B) const {
    return A.kappa == B.kappa && A.s == B.s && A.wb == B.wb;
}

CycMat KirillovRep::rho_borel(int a, int b, int d) const {
    int p = F_->p();
    BorelOp op = borel_op(a, b, d);
    CycMat M;
    M.dim = p - 1;
    M.denom_pow = 0;
    M.e.resize(size_t(p - 1) * (p - 1));
    for (int x = 1; x < p; ++x) {
        int col = (op.kappa * x) % p;
        M.e[size_t(x - 1) * (p - 1) + (col - 1)].push_back(Mono{(op.s * x) % p, op.wb, 1});
    }
    return M;
}

CycMat KirillovRep::rho_weyl() const {
    int p = F_->p();
    CycMat M;
    M.dim = p - 1;
    M.denom_pow = 1;
    M.e.resize(size_t(p - 1) * (p - 1));
    for (int y = 1; y < p; ++y)
        for (int x = 1; x < p; ++x) M.e[size_t(y - 1) * (p - 1) + (x - 1)] = wmono(y, x);
    return M;
}

void KirillovRep::bruhat(const Mat2& g, Mat2& b1, Mat2& b2) const {
    int p = F_->p();
    if (g.c % p == 0) throw std::invalid_argument("bruhat: g is Borel");
    int det = mat_det(g, p);
    if (det == 0) throw std::invalid_argument("singular g");
    int cinv = inv_mod(imod(g.c, p), p);
    b1 = Mat2{imod(-(long long)det * cinv, p), imod(-g.a, p), 0, imod(-g.c, p)};
    b2 = Mat2{1, int((long long)g.d * cinv % p), 0, 1};
}

CycMat KirillovRep::rho(const Mat2& g) const {
    int p = F_->p();
    if (mat_det(g, p) == 0) throw std::invalid_argument("singular g");
    if (imod(g.c, p) == 0) return rho_borel(imod(g.a, p), imod(g.b, p), imod(g.d, p));
    Mat2 b1, b2;
    bruhat(g, b1, b2);
    CycMat W = rho_weyl();
    return mat_mul(*this, rho_borel(b1.a, b1.b, b1.d), mat_mul(*this, W, rho_borel(b2.a, b2.b, b2.d)));
}

CycMat mat_mul(const KirillovRep& rep, const CycMat& A, const CycMat& B) {
    int n = A.dim, p = rep.field().p(), m = rep.field().m();
    CycMat C;
    C.dim = n;
    C.denom_pow = A.denom_pow + B.denom_pow;
    C.e.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto& a = A.e[size_t(i) * n + k];
            if (a.empty()) continue;
            for (int j = 0; j < n; ++j) {
                const auto& b = B.e[size_t(k) * n + j];
                if (b.empty()) continue;
                auto& c = C.e[size_t(i) * n + j];
                for (const auto& x : a)
                    for (const auto& y : b)
                        c.push_back(Mono{(x.al + y.al) % p, int((x.be + (long long)y.be) % m),
                                         ck_mul(x.c, y.c)});
            }
        }
    return C;
}

ModelVector mat_apply(const KirillovRep& rep, const CycMat& A, const ModelVector& v) {
    int n = A.dim, p = rep.field().p(), m = rep.field().m();
    ModelVector out;
    out.denom_pow = A.denom_pow + v.denom_pow;
    out.v.resize(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto& a = A.e[size_t(i) * n + k];
            const auto& b = v.v[k];
            for (const auto& x : a)
                for (const auto& y : b)
                    out.v[i].push_back(
                        Mono{(x.al + y.al) % p, int((x.be + (long long)y.be) % m), ck_mul(x.c, y.c)});
        }
    return out;
}

// difference of two monomial sums with denominator alignment, zero-tested
static bool monos_equal(const KirillovRep& rep, const std::vector<Mono>& a, int da,
                        const std::vector<Mono>& b, int db) {
    const cyclo::CycRing& R = rep.ring();
    Accum acc(R);
    std::int64_t sa = 1, sb = 1;
    for (int t = da; t < db; ++t) sa = ck_mul(sa, R.p()); // scale a by p^{db-da}
    for (int t = db; t < da; ++t) sb = ck_mul(sb, R.p());
    for (const auto& mo : a) acc.add(mo.al, mo.be, ck_mul(mo.c, sa));
    for (const auto& mo : b) acc.add(mo.al, mo.be, ck_mul(-mo.c, sb));
    return acc.reduce_is_zero();
}

bool mat_equal(const KirillovRep& rep, const CycMat& A, const CycMat& B) {
    if (A.dim != B.dim) return false;
    for (size_t i = 0; i < A.e.size(); ++i)
        if (!monos_equal(rep, A.e[i], A.denom_pow, B.e[i], B.denom_pow)) return false;
    return true;
}

bool vec_equal(const KirillovRep& rep, const ModelVector& a, const ModelVector& b) {
    if (a.v.size() != b.v.size()) return false;
    for (size_t i = 0; i < a.v.size(); ++i)
        if (!monos_equal(rep, a.v[i], a.denom_pow, b.v[i], b.denom_pow)) return false;
    return true;
}

bool vec_is_zero(const KirillovRep& rep, const ModelVector& a) {
    Accum acc(rep.ring());
    for (const auto& entry : a.v) {
        acc.clear();
        for (const auto& mo : entry) acc.add_mono(mo);
        if (!acc.reduce_is_zero()) return false;
    }
    return true;
}

CycMat mat_identity(const KirillovRep& rep, int denom_pow) {
    return mat_scaled_identity(rep, Mono{0, 0, 1}, denom_pow);
}

CycMat mat_scaled_identity(const KirillovRep& rep, const Mono& scale, int denom_pow) {
    int n = rep.dim();
    CycMat M;
    M.dim = n;
    M.denom_pow = denom_pow;
    M.e.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i) M.e[size_t(i) * n + i].push_back(scale);
    return M;
}

ModelVector character_vector(const KirillovRep& rep, int mu_weight) {
    const ff::FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    ModelVector v;
    v.denom_pow = 0;
    v.v.resize(p - 1);
    mu_weight = imod(mu_weight, p - 1);
    for (int x = 1; x < p; ++x)
        v.v[x - 1].push_back(Mono{0, int((long long)mu_weight * (p + 1) % m * F.dlog_p(x) % m), 1});
    return v;
}

std::vector<Mono> KirillovRep::trace_elliptic_scaled(const Mat2& g) const {
    // tr(L W R) = sum_y unitL(y) unitR(kR^{-1} y) W[kL y][kR^{-1} y]
    int p = F_->p(), m = F_->m();
    Mat2 b1, b2;
    bruhat(g, b1, b2);
    BorelOp L = borel_op(b1.a, b1.b, b1.d), Rr = borel_op(b2.a, b2.b, b2.d);
    int kRinv = inv_mod(Rr.kappa, p);
    std::vector<Mono> out;
    out.reserve(size_t(p - 1) * (p + 1));
    for (int y = 1; y < p; ++y) {
        int xcol = (kRinv * y) % p;
        int al0 = int(((long long)L.s * y + (long long)Rr.s * xcol) % p);
        long long be0 = (L.wb + (long long)Rr.wb) % m;
        for (const auto& mo : wmono((L.kappa * y) % p, xcol))
            out.push_back(Mono{(mo.al + al0) % p, int((mo.be + be0) % m), mo.c});
    }
    return out;
}

cyclo::CycInt KirillovRep::trace(const Mat2& g) const {
    int p = F_->p();
    if (imod(g.c, p) != 0) {
        return cyclo::CycInt::from_monomials(*R_, trace_elliptic_scaled(g)).div_exact(p);
    }
    // Borel: diagonal entries exist only where kappa*x = x
    BorelOp op = borel_op(imod(g.a, p), imod(g.b, p), imod(g.d, p));
    std::vector<Mono> out;
    if (op.kappa == 1)
        for (int x = 1; x < p; ++x) out.push_back(Mono{(op.s * x) % p, op.wb, 1});
    return cyclo::CycInt::from_monomials(*R_, out);
}

bool KirillovRep::direct_hom_check(const Mat2& g, const Mat2& h) const {
    CycMat lhs = mat_mul(*this, rho(g), rho(h));
    CycMat rhs = rho(mat_mul(g, h, F_->p()));
    return mat_equal(*this, lhs, rhs);
}

ValidationReport validate_rep(const KirillovRep& rep, int random_pairs, std::uint64_t seed) {
    ValidationReport rpt;
    const ff::FieldCtx& F = rep.field();
    const cyclo::CycRing& R = rep.ring();
    int p = F.p();

    auto pair_name = [](const Mat2& g, const Mat2& h) {
        std::ostringstream os;
        os << "g=(" << g.a << "," << g.b << ";" << g.c << "," << g.d << ") h=(" << h.a << "," << h.b
           << ";" << h.c << "," << h.d << ")";
        return os.str();
    };

    auto all_elements = [&]() {
        std::vector<Mat2> els;
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d) {
                        Mat2 g{a, b, c, d};
                        if (mat_det(g, p) != 0) els.push_back(g);
                    }
        return els;
    };

    // homomorphism law
    if (p == 3) {
        auto els = all_elements();
        for (const auto& g : els)
            for (const auto& h : els)
                if (!rep.direct_hom_check(g, h)) {
                    rpt.fail("homomorphism failed (p=3 exhaustive) at " + pair_name(g, h));
                    return rpt;
                }
    } else {
        std::mt19937_64 rng(seed);
        auto rand_elt = [&]() {
            while (true) {
                Mat2 g{int(rng() % p), int(rng() % p), int(rng() % p), int(rng() % p)};
                if (mat_det(g, p) != 0) return g;
            }
        };
        for (int i = 0; i < random_pairs; ++i) {
            Mat2 g = rand_elt(), h = rand_elt();
            if (!rep.direct_hom_check(g, h)) {
                rpt.fail("homomorphism failed at " + pair_name(g, h));
                return rpt;
            }
        }
    }

    // central character: rho(z I) = nu(z) I
    for (int z = 1; z < p; ++z) {
        CycMat lhs = rep.rho(Mat2{z, 0, 0, z});
        Mono scale{0, ff::eval_char(F, rep.nu(), ff::Fq2{z, 0}), 1};
        if (!mat_equal(rep, lhs, mat_scaled_identity(rep, scale))) rpt.fail("central character failed");
    }

    // Borel composition on all pairs for small p, sampled otherwise
    {
        std::vector<Mat2> borels;
        for (int a = 1; a < p; ++a)
            for (int d = 1; d < p; ++d)
                for (int b = 0; b < p; ++b) borels.push_back(Mat2{a, b, 0, d});
        if (p <= 5) {
            for (const auto& x : borels)
                for (const auto& y : borels)
                    if (!rep.direct_hom_check(x, y)) {
                        rpt.fail("Borel composition failed at " + pair_name(x, y));
                        break;
                    }
        } else {
            std::mt19937_64 rng(seed + 1);
            for (int it = 0; it < 3000; ++it) {
                const Mat2& x = borels[rng() % borels.size()];
                const Mat2& y = borels[rng() % borels.size()];
                if (!rep.direct_hom_check(x, y)) {
                    rpt.fail("Borel composition failed at " + pair_name(x, y));
                    break;
                }
            }
        }
    }

    // diag(a,1) eigenvectors: the characters mu themselves; their
    // eigenvalues at a generator of F_p^* are pairwise distinct, so the
    // p-1 of them exhaust the eigenspace decomposition
    for (int w = 0; w < p - 1; ++w) {
        ModelVector vmu = character_vector(rep, w);
        for (int a = 1; a < p; ++a) {
            ModelVector lhs = mat_apply(rep, rep.rho_borel(a, 0, 1), vmu);
            ModelVector rhs = vmu;
            int ev = int((long long)w * (p + 1) % F.m() * F.dlog_p(a) % F.m());
            for (auto& entry : rhs.v)
                for (auto& mo : entry) mo.be = int((mo.be + (long long)ev) % F.m());
            if (!vec_equal(rep, lhs, rhs)) rpt.fail("diag(a,1) eigenvector law failed");
        }
    }
    {
        int g0 = 0;
        for (int a = 1; a < p && !g0; ++a)
            if (F.dlog_p(a) % (p - 1) != 0 && std::gcd(F.dlog_p(a), p - 1) == 1) g0 = a;
        std::vector<char> seen(F.m(), 0);
        for (int w = 0; w < p - 1; ++w) {
            int ev = int((long long)w * (p + 1) % F.m() * F.dlog_p(g0) % F.m());
            if (seen[ev]) rpt.fail("repeated diag eigenvalue: eigenvectors cannot span");
            seen[ev] = 1;
        }
    }

    // w'^2 = rho(-I) = nu(-1) I
    {
        CycMat W = rep.rho_weyl();
        CycMat W2 = mat_mul(rep, W, W);
        Mono scale{0, ff::eval_char(F, rep.nu(), ff::Fq2{p - 1, 0}), 1};
        if (!mat_equal(rep, W2, mat_scaled_identity(rep, scale))) rpt.fail("w'^2 != nu(-1) I");
    }

    // elliptic traces: tr rho(t) = -(nu(t) + nu^p(t)); derived from
    // multiplicity one on T plus the full character-sum cancellation.
    ff::MultChar nup = ff::frob_char(F, rep.nu());
    for (int j = 1; j < F.m() && rpt.ok; ++j) {
        if (j % (p + 1) == 0) continue; // central
        ff::Fq2 t = F.sigma_pow(j);
        Mat2 g{t.a, t.b, int((long long)t.b * F.xi() % p), t.a};
        Accum acc(R);
        for (const auto& mo : rep.trace_elliptic_scaled(g)) acc.add_mono(mo);
        acc.add(0, ff::eval_char(F, rep.nu(), t), p);
        acc.add(0, ff::eval_char(F, nup, t), p);
        if (!acc.reduce_is_zero())
            rpt.fail("elliptic trace identity failed at t = sigma^" + std::to_string(j));
    }

    return rpt;
}

} // namespace kir
} // namespace gl2
