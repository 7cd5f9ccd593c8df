#include <doctest.h>

#include "tori.hpp"

using namespace gl2;
using namespace gl2::tori;
using cyclo::CycInt;
using cyclo::CycRing;
using ff::FieldCtx;
using ff::Fq2;
using ff::MultChar;
using kir::KirillovRep;
using kir::Mat2;
using kir::ModelVector;

namespace {

ModelVector delta_vector(const KirillovRep& rep, int y) {
    ModelVector v;
    v.denom_pow = 0;
    v.v.resize(rep.dim());
    v.v[y - 1].push_back(cyclo::Mono{0, 0, 1});
    return v;
}

} // namespace

TEST_CASE("torus embedding is multiplicative and meets the diagonal in scalars") {
    FieldCtx F(7);
    for (int i = 1; i < F.m(); ++i)
        for (int j : {1, 5, 11}) {
            Fq2 x = F.sigma_pow(i), y = F.sigma_pow(j);
            CHECK(kir::mat_mul(embed(F, x), embed(F, y), 7) == embed(F, F.mul(x, y)));
        }
    for (int i = 1; i < F.m(); ++i) {
        Mat2 g = embed(F, F.sigma_pow(i));
        if (g.b == 0) CHECK(g.a == g.d); // diagonal intersection = scalars
    }
}

TEST_CASE("split eigenvectors: v_triv is constant, v_quad is the Legendre function") {
    FieldCtx F(5);
    CycRing R(5);
    KirillovRep rep(F, R, ff::char_from_digits(F, 3, 1));
    ModelVector vt = split_eigenvector(rep, 0);
    for (int x = 1; x < 5; ++x) {
        REQUIRE(vt.v[x - 1].size() == 1);
        CHECK(vt.v[x - 1][0].be == 0);
        CHECK(vt.v[x - 1][0].c == 1);
    }
    ModelVector vq = split_eigenvector(rep, 2);
    for (int x = 1; x < 5; ++x) {
        CycInt val = CycInt::from_monomials(R, vq.v[x - 1]);
        bool square = (x == 1 || x == 4);
        CHECK(val == CycInt::integer(R, square ? 1 : -1));
    }
    // eigenvalue under diag(a,1) equals mu(a), for every mu and a
    for (int w = 0; w < 4; ++w) {
        ModelVector v = split_eigenvector(rep, w);
        for (int a = 1; a < 5; ++a) {
            ModelVector lhs = kir::mat_apply(rep, rep.rho_borel(a, 0, 1), v);
            ModelVector rhs = v;
            int ev = int((long long)w * 6 % 24 * F.dlog_p(a) % 24);
            for (auto& entry : rhs.v)
                for (auto& mo : entry) mo.be = (mo.be + ev) % 24;
            CHECK(kir::vec_equal(rep, lhs, rhs));
        }
    }
}

TEST_CASE("chi-projections: vanishing at nu, orthogonality, completeness") {
    FieldCtx F(5);
    CycRing R(5);
    KirillovRep rep(F, R, ff::char_from_digits(F, 3, 1));
    MultChar nu = rep.nu();

    // P_nu kills every basis vector
    for (int y = 1; y < 5; ++y) CHECK(kir::vec_is_zero(rep, chi_projection(rep, nu, delta_vector(rep, y))));

    // sum over compatible chi of P_chi = (p^2-1) id, on each basis vector
    for (int y = 1; y < 5; ++y) {
        ModelVector dv = delta_vector(rep, y);
        ModelVector acc;
        acc.denom_pow = 1;
        acc.v.resize(rep.dim());
        for (auto chi : ff::compatible_chars(F, nu)) {
            ModelVector pv = chi_projection(rep, chi, dv);
            REQUIRE(pv.denom_pow == 1);
            for (int i = 0; i < rep.dim(); ++i)
                acc.v[i].insert(acc.v[i].end(), pv.v[i].begin(), pv.v[i].end());
        }
        ModelVector expect = dv;
        expect.denom_pow = 1;
        for (auto& entry : expect.v)
            for (auto& mo : entry) mo.c *= 24 * 5; // (p^2-1) * p for the denominator
        CHECK(kir::vec_equal(rep, acc, expect));
    }

    // P_chi P_chi' = 0 for distinct chi, and P_chi restricted to its image
    // is (p^2-1) id
    MultChar chi{12}, chi2{4};
    ModelVector dv = delta_vector(rep, 2);
    ModelVector p1 = chi_projection(rep, chi, dv);
    CHECK(kir::vec_is_zero(rep, chi_projection(rep, chi2, p1)));
    ModelVector p11 = chi_projection(rep, chi, p1);
    ModelVector scaled = p1;
    scaled.denom_pow += 1;
    for (auto& entry : scaled.v)
        for (auto& mo : entry) mo.c *= 24 * 5;
    CHECK(kir::vec_equal(rep, p11, scaled));

    // the projection lands in the chi-eigenspace: rho(emb(sigma)) P_chi v = chi(sigma) P_chi v
    ModelVector lhs = kir::mat_apply(rep, rep.rho(embed(F, F.sigma())), p1);
    ModelVector rhs = p1;
    rhs.denom_pow += 1;
    for (auto& entry : rhs.v)
        for (auto& mo : entry) {
            mo.be = (mo.be + chi.k) % 24;
            mo.c *= 5;
        }
    CHECK(kir::vec_equal(rep, lhs, rhs));
}

TEST_CASE("is_test_vector: paper instances at p=5") {
    FieldCtx F(5);
    CycRing R(5);
    KirillovRep rep(F, R, ff::char_from_digits(F, 3, 1)); // trivial omega, eps_5(nu) = +1
    // chi trivial: eps equal -> not a test vector for v_triv
    CHECK_FALSE(is_test_vector(rep, MultChar{0}, 0));
    // chi quadratic (k = 12): eps differ -> v_quad works
    CHECK(is_test_vector(rep, MultChar{12}, 2));
    // excluded characters
    CHECK_THROWS_AS(is_test_vector(rep, rep.nu(), 0), std::invalid_argument);
    CHECK_THROWS_AS(is_test_vector(rep, ff::frob_char(F, rep.nu()), 0), std::invalid_argument);
    // incompatible central character
    CHECK_THROWS_AS(is_test_vector(rep, MultChar{1}, 0), std::invalid_argument);
}

TEST_CASE("is_test_vector is invariant under nu -> nu^p") {
    FieldCtx F(5);
    CycRing R(5);
    for (auto [a, b] : {std::pair{3, 1}, {4, 2}, {2, 1}}) {
        MultChar nu = ff::char_from_digits(F, a, b);
        KirillovRep r1(F, R, nu), r2(F, R, ff::frob_char(F, nu));
        for (auto chi : ff::compatible_chars(F, nu)) {
            if (chi == nu || chi == ff::frob_char(F, nu)) continue;
            for (int w = 0; w < 4; ++w)
                CHECK(is_test_vector(r1, chi, w) == is_test_vector(r2, chi, w));
        }
    }
}

TEST_CASE("x_xi eigenvalue on v_triv and v_quad equals -eps_p(nu), exactly") {
    for (int p : {3, 5, 7}) {
        FieldCtx F(p);
        CycRing R(p);
        for (int a = (p + 1) / 2; a < p; ++a) {
            int b = p - 1 - a;
            KirillovRep rep(F, R, ff::char_from_digits(F, a, b));
            CycInt eps = cyclo::epsilon_p(R, F, rep.nu());
            for (int w : {0, (p - 1) / 2}) {
                auto lam = xi_weyl_eigenvalue(rep, split_eigenvector(rep, w));
                REQUIRE(lam.has_value());
                CHECK(*lam == -eps);
            }
        }
    }
}

TEST_CASE("x_xi: a generic non-eigenvector is reported as such") {
    FieldCtx F(5);
    CycRing R(5);
    KirillovRep rep(F, R, ff::char_from_digits(F, 3, 1));
    // mu of weight 1: mu^2 != 1, so rho(x_xi) v_mu is proportional to v_{mu^{-1}} != v_mu
    CHECK_FALSE(xi_weyl_eigenvalue(rep, split_eigenvector(rep, 1)).has_value());
    // nontrivial omega is rejected
    KirillovRep rep2(F, R, ff::char_from_digits(F, 2, 1));
    CHECK_THROWS_AS(xi_weyl_eigenvalue(rep2, split_eigenvector(rep2, 0)), std::invalid_argument);
}

TEST_CASE("restriction multiplicities: one per compatible character off {nu, nu^p}") {
    FieldCtx F(5);
    CycRing R(5);
    for (auto [a, b] : {std::pair{3, 1}, {2, 0}}) {
        MultChar nu = ff::char_from_digits(F, a, b);
        KirillovRep rep(F, R, nu);
        auto mult = restriction_multiplicities(rep);
        int total = 0;
        for (auto [k, m] : mult) {
            total += m;
            MultChar chi{k};
            bool compat = ff::central_weight(F, chi) == rep.komega();
            bool excluded = chi == nu || chi == ff::frob_char(F, nu);
            CHECK(m == ((compat && !excluded) ? 1 : 0));
        }
        CHECK(total == 4); // p - 1

        auto smult = split_multiplicities(rep);
        for (auto [w, m] : smult) CHECK(m == 1);
        CHECK(smult.size() == 4);
    }
}
