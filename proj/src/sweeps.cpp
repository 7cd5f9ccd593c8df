#include "sweeps.hpp"

#include "modp.hpp"
#include "parallel.hpp"
#include "util.hpp"

#include <random>
#include <sstream>

namespace gl2 {
namespace sweeps {

using cyclo::Accum;
using cyclo::CycInt;
using cyclo::CycRing;
using cyclo::Mono;
using ff::FieldCtx;
using ff::MultChar;
using kir::BorelOp;
using kir::KirillovRep;
using kir::Mat2;

void Result::merge(Result&& o) {
    checked += o.checked;
    mismatches += o.mismatches;
    for (auto& w : o.witnesses) witnesses.push_back(std::move(w));
    for (auto& v : o.verdicts) verdicts.push_back(std::move(v));
}

static std::vector<MultChar> all_nu(const FieldCtx& F) {
    std::vector<MultChar> out;
    for (int a = 1; a < F.p(); ++a)
        for (int b = 0; b < a; ++b) out.push_back(ff::char_from_digits(F, a, b));
    return out;
}

static std::vector<MultChar> trivial_central_nu(const FieldCtx& F) {
    std::vector<MultChar> out;
    for (int a = (F.p() + 1) / 2; a < F.p(); ++a) out.push_back(ff::char_from_digits(F, a, F.p() - 1 - a));
    return out;
}

static int sign_of(const CycRing& R, const CycInt& v) {
    if (v == CycInt::integer(R, 1)) return 1;
    if (v == CycInt::integer(R, -1)) return -1;
    throw VerificationError("expected a sign");
}

static std::string nu_name(const FieldCtx& F, MultChar nu) {
    std::ostringstream os;
    os << "nu=(" << ff::digit_a(F, nu) << "," << ff::digit_b(F, nu) << ")";
    return os.str();
}

// ---------------------------------------------------------------------
// homomorphism sweep
// ---------------------------------------------------------------------

namespace {

// normal form of rho(g): Borel operator, or (1/p) L (pW) u(c)
struct NF {
    bool borel = false;
    BorelOp L;
    int c = 0;
};

NF nf_of(const KirillovRep& rep, const Mat2& g) {
    int p = rep.field().p();
    NF nf;
    if (imod(g.c, p) == 0) {
        nf.borel = true;
        nf.L = rep.borel_op(g.a, g.b, g.d);
        return nf;
    }
    Mat2 b1, b2;
    rep.bruhat(g, b1, b2);
    nf.L = rep.borel_op(b1.a, b1.b, b1.d);
    nf.c = imod(b2.b, p);
    return nf;
}

bool nf_equal(const KirillovRep& rep, const NF& a, const NF& b) {
    return a.borel == b.borel && rep.borel_op_equal(a.L, b.L) && a.c == b.c;
}

// pW D = D' pW for the diagonal-type operator D = (kappa, 0, wb); exact at
// the level of kernel monomials since bess depends only on the product yx.
BorelOp w_swap_diag(const KirillovRep& rep, int kappa, int wb) {
    const FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    BorelOp d;
    d.kappa = inv_mod(kappa, p);
    d.s = 0;
    d.wb = int((wb + (long long)rep.komega() * (p + 1) % m * F.dlog_p(kappa)) % m);
    return d;
}

Mat2 gamma_of(int kappa, int c, int p) {
    // w' (kappa c; 0 1) w', w' = (0 1; -1 0)
    Mat2 w{0, 1, p - 1, 0};
    return kir::mat_mul(kir::mat_mul(w, Mat2{kappa, c, 0, 1}, p), w, p);
}

// verify K_{kappa,c} = pW u(c)-then-diag... precisely: Mat(pW) Mat(M) Mat(pW)
// = p^2 rho(gamma) for M = (kappa, c, 0); returns false on the first failure
bool verify_kernel_identity(const KirillovRep& rep, int kappa, int c, std::string& witness) {
    const FieldCtx& F = rep.field();
    const CycRing& R = rep.ring();
    int p = F.p(), m = F.m();
    Mat2 gamma = gamma_of(kappa, c, p);
    NF gnf = nf_of(rep, gamma);
    Accum acc(R);
    for (int z = 1; z < p; ++z)
        for (int y = 1; y < p; ++y) {
            acc.clear();
            // LHS entry [z][y] = sum_x pW[z][x] zeta_p^{c x} pW[(kappa x)][y]
            for (int x = 1; x < p; ++x) {
                const auto& w1 = rep.wmono(z, x);
                const auto& w2 = rep.wmono((kappa * x) % p, y);
                int alc = (c * x) % p;
                for (const auto& m1 : w1)
                    for (const auto& m2 : w2)
                        acc.add((m1.al + m2.al + alc) % p, int((m1.be + (long long)m2.be) % m),
                                m1.c * m2.c);
            }
            // minus p^2 rho(gamma) entry [z][y]
            if (gnf.borel) {
                // Borel matrix: row z has its single entry in column kappa*z
                if ((gnf.L.kappa * z) % p == y)
                    acc.add((gnf.L.s * z) % p, gnf.L.wb, -(std::int64_t)p * p);
            } else {
                // p^2 rho(gamma) = p L (pW) u(c'): entry [z][y] =
                // p unitL(z) pW[kL z][y] zeta_p^{c' y}
                int row = (gnf.L.kappa * z) % p;
                int alz = int(((long long)gnf.L.s * z + (long long)gnf.c * y) % p);
                for (const auto& mo : rep.wmono(row, y))
                    acc.add((mo.al + alz) % p, int((mo.be + (long long)gnf.L.wb) % m),
                            -(std::int64_t)p * mo.c);
            }
            if (!acc.reduce_is_zero()) {
                std::ostringstream os;
                os << "kernel identity failed at kappa=" << kappa << " c=" << c << " entry(" << z
                   << "," << y << ")";
                witness = os.str();
                return false;
            }
        }
    return true;
}

// certify rho(g) rho(h) = rho(gh) through the verified identities
bool fast_pair_ok(const KirillovRep& rep, const Mat2& g, const Mat2& h) {
    const FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    Mat2 gh = kir::mat_mul(g, h, p);
    NF ng = nf_of(rep, g), nh = nf_of(rep, h), ngh = nf_of(rep, gh);
    auto u_op = [&](int c) { return BorelOp{1, c, 0}; };

    NF lhs;
    if (ng.borel && nh.borel) {
        lhs.borel = true;
        lhs.L = rep.compose(ng.L, nh.L);
    } else if (ng.borel) {
        lhs.borel = false;
        lhs.L = rep.compose(ng.L, nh.L);
        lhs.c = nh.c;
    } else if (nh.borel) {
        BorelOp y = rep.compose(u_op(ng.c), nh.L);
        int ctil = int((long long)y.s * inv_mod(y.kappa, p) % p);
        BorelOp dprime = w_swap_diag(rep, y.kappa, y.wb);
        lhs.borel = false;
        lhs.L = rep.compose(ng.L, dprime);
        lhs.c = ctil;
    } else {
        BorelOp mid = rep.compose(u_op(ng.c), nh.L); // (kappa, s, wb)
        Mat2 gamma = gamma_of(mid.kappa, mid.s, p);
        NF ngam = nf_of(rep, gamma);
        if (ngam.borel) {
            lhs.borel = true;
            lhs.L = rep.compose(ng.L, rep.compose(ngam.L, u_op(nh.c)));
            lhs.L.wb = int((lhs.L.wb + (long long)mid.wb) % m);
        } else {
            lhs.borel = false;
            lhs.L = rep.compose(ng.L, ngam.L);
            lhs.L.wb = int((lhs.L.wb + (long long)mid.wb) % m);
            lhs.c = (ngam.c + nh.c) % p;
        }
    }
    return nf_equal(rep, lhs, ngh);
}

} // namespace

Result homomorphism_sweep(int p, const Options& opt) {
    FieldCtx F(p);
    CycRing R(p);
    auto nus = all_nu(F);
    std::vector<Result> parts(nus.size());
    parallel_for(nus.size(), opt.jobs, [&](size_t i) {
        Result res;
        KirillovRep rep(F, R, nus[i]);
        // Borel composition spot-check against dense matrices
        std::mt19937_64 rng(opt.seed ^ (i * 0x9e3779b97f4a7c15ull));
        for (int it = 0; it < 50; ++it) {
            int a1 = 1 + int(rng() % (p - 1)), d1 = 1 + int(rng() % (p - 1)), b1 = int(rng() % p);
            int a2 = 1 + int(rng() % (p - 1)), d2 = 1 + int(rng() % (p - 1)), b2 = int(rng() % p);
            Mat2 x{a1, b1, 0, d1}, y{a2, b2, 0, d2};
            if (!rep.direct_hom_check(x, y)) res.miss("Borel composition failed " + nu_name(F, nus[i]));
            ++res.checked;
        }
        // kernel identities, all (kappa, c)
        for (int kappa = 1; kappa < p; ++kappa)
            for (int c = 0; c < p; ++c) {
                std::string w;
                ++res.checked;
                if (!verify_kernel_identity(rep, kappa, c, w)) res.miss(w + " " + nu_name(F, nus[i]));
            }
        if (res.mismatches) {
            parts[i] = std::move(res);
            return;
        }
        // random pairs certified through the verified identities
        auto rand_elt = [&]() {
            while (true) {
                Mat2 g{int(rng() % p), int(rng() % p), int(rng() % p), int(rng() % p)};
                if (kir::mat_det(g, p) != 0) return g;
            }
        };
        long long pairs = (p == 3) ? 0 : opt.hom_pairs;
        for (long long it = 0; it < pairs; ++it) {
            Mat2 g = rand_elt(), h = rand_elt();
            ++res.checked;
            if (!fast_pair_ok(rep, g, h)) {
                // the fast path is sound but not complete; settle exactly
                if (!rep.direct_hom_check(g, h)) res.miss("homomorphism failed " + nu_name(F, nus[i]));
            }
        }
        // direct full-matrix subsample (also cross-checks the fast path)
        int direct = (p <= 7) ? 30 : 8;
        for (int it = 0; it < direct; ++it) {
            Mat2 g = rand_elt(), h = rand_elt();
            ++res.checked;
            bool fast = fast_pair_ok(rep, g, h);
            bool full = rep.direct_hom_check(g, h);
            if (!full) res.miss("homomorphism failed (direct) " + nu_name(F, nus[i]));
            if (fast != full) res.miss("fast/direct disagreement " + nu_name(F, nus[i]));
        }
        // p = 3: all pairs, directly
        if (p == 3) {
            std::vector<Mat2> els;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    for (int c = 0; c < 3; ++c)
                        for (int d = 0; d < 3; ++d)
                            if (kir::mat_det(Mat2{a, b, c, d}, 3) != 0) els.push_back(Mat2{a, b, c, d});
            for (const auto& g : els)
                for (const auto& h : els) {
                    ++res.checked;
                    if (!rep.direct_hom_check(g, h)) {
                        res.miss("homomorphism failed (p=3 exhaustive) " + nu_name(F, nus[i]));
                        break;
                    }
                }
        }
        parts[i] = std::move(res);
    });
    Result out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

// ---------------------------------------------------------------------
// Gauss-sum lemma and Theorem "gauss-sum"
// ---------------------------------------------------------------------

Result gauss_lemma_sweep(int p) {
    Result res;
    FieldCtx F(p);
    CycRing R(p);
    for (int t = 0; t <= p; ++t) {
        int k = t * (p - 1);
        if (k % (p + 1) == 0) continue; // trivial or quadratic: epsilon by definition
        ++res.checked;
        CycInt g = cyclo::gauss_sum(R, F, MultChar{k});
        CycInt expect = CycInt::monomial(R, 0, (long long)k * F.dlog_theta() % F.m(), p);
        if (g != expect) res.miss("Gauss-sum lemma failed at p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
    return res;
}

Result gauss_theorem_sweep(int p, const Options& opt) {
    FieldCtx F(p);
    CycRing R(p);
    auto nus = trivial_central_nu(F);
    std::vector<Result> parts(nus.size());
    parallel_for(nus.size(), opt.jobs, [&](size_t i) {
        Result res;
        MultChar nu = nus[i];
        KirillovRep rep(F, R, nu);
        int eps_nu = sign_of(R, cyclo::epsilon_p(R, F, nu));
        MultChar nup = ff::frob_char(F, nu);
        int quad = (p - 1) / 2;
        for (auto chi : ff::compatible_chars(F, nu)) {
            if (chi == nu || chi == nup) continue;
            int eps_chi = sign_of(R, cyclo::epsilon_p(R, F, chi));
            auto tag = ff::classify(F, nu, chi);
            bool type1 = tag.type == ff::Type::One;
            for (int mu : {0, quad}) {
                tori::Verdict v;
                v.p = p;
                v.nu_a = ff::digit_a(F, nu);
                v.nu_b = ff::digit_b(F, nu);
                v.chi_a = ff::digit_a(F, chi);
                v.chi_b = ff::digit_b(F, chi);
                v.mu_weight = mu;
                v.type = type1 ? 1 : 2;
                v.t_chi = tag.t;
                v.eps_chi = eps_chi > 0 ? "+1" : "-1";
                v.eps_nu = eps_nu > 0 ? "+1" : "-1";
                bool char0 = tori::is_test_vector(rep, chi, mu);
                bool modp = modp::modp_test_vector(F, nu, chi, mu);
                v.char0_nonzero = char0 ? 1 : 0;
                v.modp_nonzero = modp ? 1 : 0;
                ++res.checked;
                if (modp && !char0) {
                    v.mismatch = true;
                    res.miss("mod-p nonzero but char-0 zero at " + nu_name(F, nu) + " k_chi=" +
                             std::to_string(chi.k));
                }
                // the four clauses of the trivial-central-character theorem
                int predicted = -1;
                if (eps_chi == eps_nu) predicted = 0;                  // clause 4
                else if (!type1 && mu == 0) predicted = 1;             // clauses 1, 3
                else if (type1 && mu == quad) predicted = 1;           // clauses 2, 3
                v.predicted = predicted;
                if (predicted >= 0 && char0 != (predicted == 1)) {
                    v.mismatch = true;
                    res.miss("Theorem clause mismatch at p=" + std::to_string(p) + " " +
                             nu_name(F, nu) + " k_chi=" + std::to_string(chi.k) + " mu=" +
                             std::to_string(mu));
                }
                if (predicted < 0) v.note = "outside the theorem's clauses";
                if (char0 && !modp) v.note += (v.note.empty() ? "" : "; ") + std::string("nonzero in char 0 only");
                res.verdicts.push_back(v);
            }
        }
        parts[i] = std::move(res);
    });
    Result out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

// ---------------------------------------------------------------------
// Theorems "even" and "odd"
// ---------------------------------------------------------------------

static Result parity_sweep(int p, int parity, const Options& opt) {
    FieldCtx F(p);
    CycRing R(p);
    std::vector<MultChar> nus;
    for (auto nu : all_nu(F))
        if ((ff::digit_a(F, nu) - ff::digit_b(F, nu)) % 2 == parity) nus.push_back(nu);
    std::vector<Result> parts(nus.size());
    parallel_for(nus.size(), opt.jobs, [&](size_t i) {
        Result res;
        MultChar nu = nus[i];
        KirillovRep rep(F, R, nu);
        MultChar nup = ff::frob_char(F, nu);
        bool trivial_omega = rep.komega() == 0;
        int clause_total = 0;
        for (auto chi : ff::compatible_chars(F, nu)) {
            if (chi == nu || chi == nup) continue;
            auto tag = ff::classify(F, nu, chi);
            // every chi hits exactly one clause of the case analysis
            int clause;
            if (parity == 0)
                clause = (tag.type == ff::Type::One ? 0 : 1) + (tag.t % 2 == 1 ? 0 : 2);
            else if (ff::digit_a(F, nu) - ff::digit_b(F, nu) > 1)
                clause = tag.type == ff::Type::One ? 0 : 1;
            else
                clause = 0;
            ++clause_total;
            (void)clause;

            int mu = modp::predict(F, nu, chi);
            bool modp_flag = modp::modp_test_vector(F, nu, chi, mu);
            bool char0 = tori::is_test_vector(rep, chi, mu);
            tori::Verdict v;
            v.p = p;
            v.nu_a = ff::digit_a(F, nu);
            v.nu_b = ff::digit_b(F, nu);
            v.chi_a = ff::digit_a(F, chi);
            v.chi_b = ff::digit_b(F, chi);
            v.mu_weight = mu;
            v.type = tag.type == ff::Type::One ? 1 : 2;
            v.t_chi = tag.t;
            if (trivial_omega) {
                v.eps_chi = sign_of(R, cyclo::epsilon_p(R, F, chi)) > 0 ? "+1" : "-1";
                v.eps_nu = sign_of(R, cyclo::epsilon_p(R, F, nu)) > 0 ? "+1" : "-1";
            }
            v.predicted = 1;
            v.char0_nonzero = char0 ? 1 : 0;
            v.modp_nonzero = modp_flag ? 1 : 0;
            ++res.checked;
            if (!modp_flag || !char0) {
                v.mismatch = true;
                res.miss("recommended mu fails at p=" + std::to_string(p) + " " + nu_name(F, nu) +
                         " k_chi=" + std::to_string(chi.k) + (modp_flag ? "" : " [mod p]") +
                         (char0 ? "" : " [char 0]"));
            }
            res.verdicts.push_back(v);
        }
        if (clause_total != p - 1)
            res.miss("case analysis not exhaustive for " + nu_name(F, nu));
        parts[i] = std::move(res);
    });
    Result out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

Result even_sweep(int p, const Options& opt) { return parity_sweep(p, 0, opt); }
Result odd_sweep(int p, const Options& opt) { return parity_sweep(p, 1, opt); }

// ---------------------------------------------------------------------
// multiplicities, Jordan-Hoelder, x_xi
// ---------------------------------------------------------------------

Result multiplicity_sweep(int p, const Options& opt) {
    FieldCtx F(p);
    CycRing R(p);
    auto nus = all_nu(F);
    std::vector<Result> parts(nus.size());
    parallel_for(nus.size(), opt.jobs, [&](size_t i) {
        Result res;
        MultChar nu = nus[i];
        KirillovRep rep(F, R, nu);
        MultChar nup = ff::frob_char(F, nu);
        auto mult = tori::restriction_multiplicities(rep);
        int total = 0;
        for (auto [k, mk] : mult) {
            ++res.checked;
            total += mk;
            MultChar chi{k};
            bool compat = ff::central_weight(F, chi) == rep.komega();
            bool excluded = chi == nu || chi == nup;
            int expect = (compat && !excluded) ? 1 : 0;
            if (mk != expect)
                res.miss("T-multiplicity wrong at " + nu_name(F, nu) + " k=" + std::to_string(k));
        }
        if (total != p - 1) res.miss("T-multiplicities do not sum to p-1 at " + nu_name(F, nu));
        auto smult = tori::split_multiplicities(rep);
        for (auto [w, mw] : smult) {
            ++res.checked;
            if (mw != 1)
                res.miss("D-multiplicity wrong at " + nu_name(F, nu) + " w=" + std::to_string(w));
        }
        // rank 0 at nu and nu^p directly on the model: the projectors kill
        // every basis vector
        for (MultChar dead : {nu, nup}) {
            for (int y = 1; y < F.p(); ++y) {
                kir::ModelVector dv;
                dv.denom_pow = 0;
                dv.v.resize(rep.dim());
                dv.v[y - 1].push_back(Mono{0, 0, 1});
                ++res.checked;
                if (!kir::vec_is_zero(rep, tori::chi_projection(rep, dead, dv)))
                    res.miss("P_nu does not vanish at " + nu_name(F, nu));
            }
        }
        parts[i] = std::move(res);
    });
    Result out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

Result jh_sweep(int p, const Options& opt) {
    FieldCtx F(p);
    CycRing R(p);
    auto nus = all_nu(F);
    std::vector<Result> parts(nus.size());
    parallel_for(nus.size(), opt.jobs, [&](size_t i) {
        Result res;
        MultChar nu = nus[i];
        int a = ff::digit_a(F, nu), b = ff::digit_b(F, nu);
        auto jh = modp::jh_factors(F, nu);
        ++res.checked;
        if ((a - b - 1) + (p - (a - b)) != p - 1 ||
            jh.V2.dim() + (jh.V1 ? jh.V1->dim() : 0) != p - 1)
            res.miss("JH dimension count failed at " + nu_name(F, nu));
        // Type tag of chi matches the factor carrying it
        for (auto chi : ff::compatible_chars(F, nu)) {
            if (chi == nu || chi == ff::frob_char(F, nu)) continue;
            ++res.checked;
            auto loc = modp::locate_torus_char(F, nu, chi);
            if (!loc) {
                res.miss("compatible chi missing from the JH factors at " + nu_name(F, nu));
                continue;
            }
            auto tag = ff::classify(F, nu, chi);
            if ((tag.type == ff::Type::One ? 1 : 2) != loc->factor)
                res.miss("Type/factor mismatch at " + nu_name(F, nu) + " k=" + std::to_string(chi.k));
        }
        // Brauer-character equality on p-regular classes
        KirillovRep rep(F, R, nu);
        auto rpt = modp::brauer_check(rep);
        res.checked += rpt.classes_checked;
        if (!rpt.ok) res.miss(rpt.first_failure);
        parts[i] = std::move(res);
    });
    Result out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

Result xi_eigenvalue_sweep(int p) {
    Result res;
    FieldCtx F(p);
    CycRing R(p);
    for (auto nu : trivial_central_nu(F)) {
        KirillovRep rep(F, R, nu);
        CycInt eps = cyclo::epsilon_p(R, F, nu);
        for (int mu : {0, (p - 1) / 2}) {
            ++res.checked;
            auto lam = tori::xi_weyl_eigenvalue(rep, tori::split_eigenvector(rep, mu));
            if (!lam || *lam != -eps)
                res.miss("x_xi eigenvalue mismatch at p=" + std::to_string(p) + " " + nu_name(F, nu) +
                         " mu=" + std::to_string(mu));
        }
    }
    return res;
}

// ---------------------------------------------------------------------
// K-type sweep
// ---------------------------------------------------------------------

Result ktype_sweep(int p, int s) {
    Result res;
    auto G = kt::FiniteLevelGroup::make(p, s);
    const int r = 1;
    auto Tun = kt::unramified_torus(G);
    auto un_chars = kt::torus_characters(G, Tun);

    for (int w1 = 1; w1 <= p - 2; ++w1) {
        kt::UnitChar nu{w1 * (G.unit_order() / (p - 1))};
        if (kt::unit_char_conductor(G, nu) != 1) {
            res.miss("inducing character does not have conductor p");
            continue;
        }
        auto u_s = kt::u_character(G, s, r, nu);
        // degrees: full induced and the complement
        auto ind_s = kt::induced_character(G, s, nu);
        long long deg_ind = kt::degree(G, ind_s);
        long long deg_u = kt::degree(G, u_s);
        long long q_pow = 1;
        for (int t = 0; t < s - 1; ++t) q_pow *= p;
        ++res.checked;
        if (deg_ind != (long long)(p + 1) * q_pow) res.miss("induced degree wrong");
        ++res.checked;
        long long expect_u = (s == r) ? (p + 1) * q_pow : (p + 1) * q_pow - (p + 1) * (q_pow / p);
        if (deg_u != expect_u) res.miss("u_{P^s} degree wrong");
        if (s > r) {
            ++res.checked;
            if (kt::degree(G, kt::induced_character(G, s - 1, nu)) != (p + 1) * (q_pow / p))
                res.miss("lower induced degree wrong");
        }

        // irreducibility and orthogonality of the complements
        ++res.checked;
        if (kt::inner_product(G, u_s, u_s) != 1) res.miss("<u_s, u_s> != 1");
        for (int t = r; t < s; ++t) {
            auto u_t = kt::u_character(G, t, r, nu);
            ++res.checked;
            if (kt::inner_product(G, u_s, u_t) != 0) res.miss("<u_s, u_t> != 0");
            ++res.checked;
            if (kt::inner_product(G, u_t, u_t) != 1) res.miss("<u_t, u_t> != 1");
        }

        // unramified restriction: exactly the compatible characters of
        // conductor s, each once
        long long compat_upto_s = 0, compat_exact_s = 0;
        for (const auto& chi : un_chars) {
            bool compat = kt::torus_char_compatible(G, Tun, chi, nu);
            int cond = kt::torus_char_conductor(G, Tun, chi);
            if (compat && cond <= s) ++compat_upto_s;
            if (compat && cond == s) ++compat_exact_s;
            long long mult = kt::torus_multiplicity(G, Tun, u_s, chi);
            ++res.checked;
            if (mult < 0 || mult > 1) res.miss("unramified restriction not multiplicity free");
            if (mult != ((compat && cond == s) ? 1 : 0))
                res.miss("unramified restriction: wrong character content at conductor " +
                         std::to_string(cond));
        }
        ++res.checked;
        if (compat_upto_s != (long long)(p + 1) * q_pow)
            res.miss("count of compatible characters of conductor up to s is wrong");
        ++res.checked;
        if (deg_u != compat_exact_s) res.miss("degree does not match the conductor-s character count");

        // u_{P^s} is trivial on G(s) (automatic at this level) but has no
        // invariants under G(s-1) for s > r
        if (s > r) {
            ++res.checked;
            if (kt::congruence_invariants(G, u_s, s - 1) != 0)
                res.miss("u_{P^s} has unexpected G(s-1)-invariants");
            ++res.checked;
            if (kt::congruence_invariants(G, kt::u_character(G, s - 1, r, nu), s - 1) !=
                kt::degree(G, kt::u_character(G, s - 1, r, nu)))
                res.miss("u_{P^{s-1}} should be trivial on G(s-1)");
        }

        // new vector: B(s) acts by nu on a unique line; Ind has one line per level
        ++res.checked;
        if (kt::borel_multiplicity(G, u_s, s, nu) != 1) res.miss("new-vector line not unique");
        ++res.checked;
        if (kt::borel_multiplicity(G, ind_s, s, nu) != s - r + 1)
            res.miss("Mackey count <Ind|_B(s), nu> != s-r+1");

        // ramified census: q^{r-1} characters at conductor 2r-1 = 1, then
        // q^t - q^{t-1} at each even conductor 2t, none at odd conductors > 1
        auto census = kt::ramified_census(G, nu);
        ++res.checked;
        if (census[0] != 0 || census[1] != 1) res.miss("ramified census: conductor 2r-1 count wrong");
        long long qt = 1;
        for (int t = 1; t <= s; ++t) {
            qt *= p;
            ++res.checked;
            if (census[2 * t] != qt - qt / p)
                res.miss("ramified census: conductor " + std::to_string(2 * t) + " count wrong");
            if (2 * t + 1 < int(census.size())) {
                ++res.checked;
                if (census[2 * t + 1] != 0)
                    res.miss("ramified census: odd conductor " + std::to_string(2 * t + 1) +
                             " should be empty");
            }
        }
    }
    return res;
}

} // namespace sweeps
} // namespace gl2
