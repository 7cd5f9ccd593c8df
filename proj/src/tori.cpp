#include "tori.hpp"

#include "util.hpp"

namespace gl2 {
namespace tori {

using cyclo::Accum;
using cyclo::Mono;
using kir::BorelOp;
using kir::KirillovRep;
using kir::Mat2;
using kir::ModelVector;

Mat2 embed(const ff::FieldCtx& F, ff::Fq2 t) {
    if (F.is_zero(t)) throw std::invalid_argument("embedding of zero");
    return Mat2{t.a, t.b, int((long long)t.b * F.xi() % F.p()), t.a};
}

ModelVector split_eigenvector(const KirillovRep& rep, int mu_weight) {
    return kir::character_vector(rep, mu_weight);
}

// Accumulate the integral numerator N = p * sum_{j=0..p} chi^{-1}(sigma^j)
// rho(emb(sigma^j)) v into per-coordinate grids; P_chi v = (p-1)/p * N by the
// central collapse (compatibility of chi with omega is required for it).
static void projection_numerator(const KirillovRep& rep, ff::MultChar chi, const ModelVector& v,
                                 std::vector<Accum>& out) {
    const ff::FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    if (ff::central_weight(F, chi) != rep.komega())
        throw std::invalid_argument("chi incompatible with the central character");

    // j = 0: p * v
    for (int y = 1; y < p; ++y)
        for (const auto& mo : v.v[y - 1]) out[y - 1].add(mo.al, mo.be, ck_mul(mo.c, p));

    for (int j = 1; j <= p; ++j) {
        ff::Fq2 t = F.sigma_pow(j);
        Mat2 b1, b2;
        rep.bruhat(embed(F, t), b1, b2);
        BorelOp L = rep.borel_op(b1.a, b1.b, b1.d);
        BorelOp Rr = rep.borel_op(b2.a, b2.b, b2.d); // unipotent: kappa = 1, wb = 0
        long long be_chi = imod(-(long long)chi.k * j, m);
        for (int y = 1; y < p; ++y) {
            Accum& acc = out[y - 1];
            int row = (L.kappa * y) % p;
            long long al_y = (long long)L.s * y % p;
            long long be_y = (L.wb + be_chi) % m;
            for (int x = 1; x < p; ++x) {
                const auto& ws = rep.wmono(row, x);
                long long al_x = (al_y + (long long)Rr.s * x) % p;
                for (const auto& vm : v.v[(Rr.kappa * x) % p - 1]) {
                    long long al = (al_x + vm.al) % p;
                    long long be = (be_y + vm.be) % m;
                    for (const auto& wm : ws)
                        acc.add(int((al + wm.al) % p), int((be + wm.be) % m), ck_mul(wm.c, vm.c));
                }
            }
        }
    }
}

ModelVector chi_projection(const KirillovRep& rep, ff::MultChar chi, const ModelVector& v) {
    const ff::FieldCtx& F = rep.field();
    int p = F.p();
    std::vector<Accum> out(p - 1, Accum(rep.ring()));
    projection_numerator(rep, chi, v, out);
    // P_chi v = (p-1) * N / p
    ModelVector res;
    res.denom_pow = v.denom_pow + 1;
    res.v.resize(p - 1);
    int ph = rep.ring().phim();
    for (int y = 0; y < p - 1; ++y) {
        auto canon = out[y].canonical();
        for (int i = 0; i < p - 1; ++i)
            for (int jj = 0; jj < ph; ++jj) {
                std::int64_t c = canon[size_t(i) * ph + jj];
                if (c) res.v[y].push_back(Mono{i, jj, ck_mul(c, p - 1)});
            }
    }
    return res;
}

bool is_test_vector(const KirillovRep& rep, ff::MultChar chi, int mu_weight) {
    const ff::FieldCtx& F = rep.field();
    if (chi == rep.nu() || chi == ff::frob_char(F, rep.nu()))
        throw std::invalid_argument("chi in {nu, nu^p} is excluded");
    ModelVector v = split_eigenvector(rep, mu_weight);
    std::vector<Accum> out(F.p() - 1, Accum(rep.ring()));
    projection_numerator(rep, chi, v, out);
    for (auto& acc : out)
        if (!acc.reduce_is_zero()) return true;
    return false;
}

std::optional<cyclo::CycInt> xi_weyl_eigenvalue(const KirillovRep& rep, const ModelVector& v) {
    const ff::FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    if (rep.komega() != 0) throw std::invalid_argument("xi_weyl_eigenvalue requires trivial omega");
    Mat2 x_xi{0, 1, F.xi(), 0};
    ModelVector w = kir::mat_apply(rep, rep.rho(x_xi), v);
    if (v.v.empty() || v.v[0].size() != 1 || (v.v[0][0].c != 1 && v.v[0][0].c != -1))
        throw std::invalid_argument("vector must be normalized with unit coefficient at x = 1");
    Mono u1 = v.v[0][0];
    // candidate lambda = w(1) / v(1)
    std::vector<Mono> lam;
    for (const auto& mo : w.v[0])
        lam.push_back(Mono{imod(mo.al - u1.al, p), imod(mo.be - u1.be, m), mo.c * u1.c});
    // check w(x) == lambda * v(x) for every x (denominators: w has one more p)
    int extra = w.denom_pow - v.denom_pow;
    std::int64_t scale = 1;
    for (int t = 0; t < extra; ++t) scale = ck_mul(scale, p);
    for (int x = 1; x < p; ++x) {
        Accum acc(rep.ring());
        for (const auto& mo : w.v[x - 1]) acc.add(mo.al, mo.be, ck_mul(mo.c, 1));
        for (const auto& lm : lam)
            for (const auto& vm : v.v[x - 1])
                acc.add((lm.al + vm.al) % p, int((lm.be + (long long)vm.be) % m), ck_mul(-lm.c, vm.c));
        if (!acc.reduce_is_zero()) return std::nullopt;
    }
    cyclo::CycInt num = cyclo::CycInt::from_monomials(rep.ring(), lam);
    for (int t = 0; t < extra; ++t) num = num.div_exact(p);
    return num;
}

std::map<int, int> restriction_multiplicities(const KirillovRep& rep) {
    const ff::FieldCtx& F = rep.field();
    const cyclo::CycRing& R = rep.ring();
    int p = F.p(), m = F.m();

    // monomials of p * tr rho(emb(sigma^j)), j = 1..p (all elliptic)
    std::vector<std::vector<Mono>> tr(p + 1);
    tr[0].push_back(Mono{0, 0, (std::int64_t)p * (p - 1)});
    for (int j = 1; j <= p; ++j) {
        ff::Fq2 t = F.sigma_pow(j);
        tr[j] = rep.trace_elliptic_scaled(embed(F, t));
    }

    std::map<int, int> mult;
    for (int k = 0; k < m; ++k) {
        // central factor S = sum_{z in F_p^*} (nu chi^{-1})(z): p-1 or 0
        Accum sacc(R);
        long long dk = imod((long long)(rep.nu().k - k) % m * (p + 1), m);
        for (int e = 0; e < p - 1; ++e) sacc.add(0, int((dk * e) % m), 1);
        long long S = cyclo::CycInt::from_canonical(R, sacc.canonical()).to_integer().convert_to<long long>();
        if (S == 0) {
            mult[k] = 0;
            continue;
        }
        // p * tr P_chi / S = sum_j chi^{-1}(sigma^j) * (p tr rho(sigma^j))
        Accum acc(R);
        for (int j = 0; j <= p; ++j) {
            long long shift = imod(-(long long)k * j, m);
            for (const auto& mo : tr[j]) acc.add(mo.al, int((mo.be + shift) % m), mo.c);
        }
        auto val = cyclo::CycInt::from_canonical(R, acc.canonical()).to_integer();
        // tr P_chi = (p^2-1) mult
        cyclo::BigInt num = val * S;
        cyclo::BigInt den = (cyclo::BigInt)p * m;
        if (num % den != 0) throw VerificationError("projector trace not divisible by p^2-1");
        mult[k] = int((num / den).convert_to<long long>());
        if (mult[k] < 0) throw VerificationError("negative multiplicity");
    }
    return mult;
}

std::map<int, int> split_multiplicities(const KirillovRep& rep) {
    const ff::FieldCtx& F = rep.field();
    const cyclo::CycRing& R = rep.ring();
    int p = F.p(), m = F.m();
    int ph = R.phim();

    // model traces on all of D = diag(a, d)
    std::vector<std::vector<cyclo::BigInt>> trd(size_t(p - 1) * (p - 1));
    for (int a = 1; a < p; ++a)
        for (int d = 1; d < p; ++d) trd[size_t(a - 1) * (p - 1) + (d - 1)] = rep.trace(Mat2{a, 0, 0, d}).coeffs();

    // compatible D-characters: mu~_w(diag(a,d)) = mu_w(a) (omega mu_w^{-1})(d)
    std::map<int, int> mult;
    for (int w = 0; w < p - 1; ++w) {
        Accum acc(R);
        for (int a = 1; a < p; ++a)
            for (int d = 1; d < p; ++d) {
                long long shift = imod(-((long long)w * F.dlog_p(a) +
                                         (long long)imod(rep.komega() - w, p - 1) * F.dlog_p(d)) *
                                           (p + 1),
                                       m);
                const auto& canon = trd[size_t(a - 1) * (p - 1) + (d - 1)];
                for (int i = 0; i < p - 1; ++i)
                    for (int jj = 0; jj < ph; ++jj)
                        if (canon[size_t(i) * ph + jj] != 0)
                            acc.add_wrapped(i, jj + shift, canon[size_t(i) * ph + jj].convert_to<long long>());
            }
        auto val = cyclo::CycInt::from_canonical(R, acc.canonical()).to_integer();
        cyclo::BigInt den = (cyclo::BigInt)(p - 1) * (p - 1); // |D|
        if (val % den != 0) throw VerificationError("split projector trace not divisible by |D|");
        mult[w] = int((val / den).convert_to<long long>());
        if (mult[w] < 0) throw VerificationError("negative split multiplicity");
    }
    return mult;
}

} // namespace tori
} // namespace gl2
