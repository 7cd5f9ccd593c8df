#include <doctest.h>

#include "cyclo.hpp"
#include "util.hpp"

#include <random>

using namespace gl2;
using namespace gl2::cyclo;
using gl2::ff::FieldCtx;
using gl2::ff::Fq2;
using gl2::ff::MultChar;

namespace {

CycInt random_elem(std::mt19937_64& rng, const CycRing& R) {
    std::vector<Mono> ms;
    int terms = 1 + int(rng() % 6);
    for (int t = 0; t < terms; ++t)
        ms.push_back(Mono{int(rng() % R.p()), int(rng() % R.m()), std::int64_t(rng() % 19) - 9});
    return CycInt::from_monomials(R, ms);
}

// convolution of two monomial streams, as an Accum
bool stream_product_equals(const CycRing& R, const std::vector<Mono>& a, const std::vector<Mono>& b,
                           const std::vector<Mono>& expect) {
    Accum acc(R);
    for (const auto& x : a)
        for (const auto& y : b)
            acc.add((x.al + y.al) % R.p(), int((x.be + (long long)y.be) % R.m()), ck_mul(x.c, y.c));
    for (const auto& e : expect) acc.add(e.al, e.be, -e.c);
    return acc.reduce_is_zero();
}

} // namespace

TEST_CASE("cyclotomic polynomials: known values") {
    CHECK(cyclotomic_poly(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic_poly(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    // phi degrees for the rings in range
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        auto phi = cyclotomic_poly(p * p - 1);
        int m = p * p - 1, deg = int(phi.size()) - 1;
        int euler = 0;
        for (int k = 1; k <= m; ++k) {
            int g = std::gcd(k, m);
            if (g == 1) ++euler;
        }
        CHECK(deg == euler);
    }
}

TEST_CASE("zeta_n is annihilated by Phi_n, and subgroup sums vanish") {
    for (int p : {3, 5, 7}) {
        CycRing R(p);
        // zeta_n = zeta_p^a zeta_m^b with a = m^{-1} mod p, b = p^{-1} mod m
        int a = inv_mod(R.m() % p, p);
        int b = 0;
        for (int t = 0; t < R.m(); ++t)
            if ((long long)t * p % R.m() == 1) {
                b = t;
                break;
            }
        auto phin = cyclotomic_poly(R.n());
        Accum acc(R);
        for (size_t t = 0; t < phin.size(); ++t)
            if (phin[t]) acc.add(int((long long)a * t % p), int((long long)b * t % R.m()), phin[t]);
        CHECK(acc.reduce_is_zero());
        // sum of all p-th roots of unity
        Accum acc2(R);
        for (int i = 0; i < p; ++i) acc2.add(i, 0, 1);
        CHECK(acc2.reduce_is_zero());
        // sum of all m-th roots of unity
        Accum acc3(R);
        for (int j = 0; j < R.m(); ++j) acc3.add(0, j, 1);
        CHECK(acc3.reduce_is_zero());
    }
}

TEST_CASE("ring laws on randomized triples, exact") {
    for (int p : {3, 5}) {
        CycRing R(p);
        std::mt19937_64 rng(42 + p);
        for (int it = 0; it < 30; ++it) {
            CycInt x = random_elem(rng, R), y = random_elem(rng, R), z = random_elem(rng, R);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x + y == y + x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK((x - x).is_zero());
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
        }
    }
}

TEST_CASE("psi: values, full sum, inverses") {
    CycRing R(7);
    FieldCtx F(7);
    CHECK(psi(R, 0) == CycInt::one(R));
    CycInt s = CycInt::zero(R);
    for (int x = 0; x < 7; ++x) s += psi(R, x);
    CHECK(s.is_zero());
    for (int x = 0; x < 7; ++x) CHECK(psi(R, x) * psi(R, -x) == CycInt::one(R));
    CHECK(psi(R, 3).conj() == psi(R, -3));
}

TEST_CASE("gauss sums: trivial character and the G(eta) = p eta(sqrt(xi)) evaluation") {
    for (int p : {3, 5, 7, 11}) {
        CycRing R(p);
        FieldCtx F(p);
        CHECK(gauss_sum(R, F, MultChar{0}) == CycInt::integer(R, -1));
        // chi nontrivial, trivial on F_p^*, not through the norm
        for (int t = 1; t <= p; ++t) {
            int k = t * (p - 1);
            if (k % (p + 1) == 0) continue;
            CycInt g = gauss_sum(R, F, MultChar{k});
            CycInt expect =
                CycInt::monomial(R, 0, (long long)k * F.dlog_theta() % F.m(), p);
            CHECK(g == expect);
        }
    }
}

TEST_CASE("|G(chi)|^2 = p^2 and G(chi) G(chi^{-1}) = chi(-1) p^2, all nontrivial chi, p <= 13") {
    for (int p : {3, 5, 7, 11, 13}) {
        CycRing R(p);
        FieldCtx F(p);
        for (int k = 1; k < F.m(); ++k) {
            auto g = gauss_sum_monomials(R, F, MultChar{k});
            // complex conjugation is zeta -> zeta^{-1}
            std::vector<Mono> gconj;
            for (const auto& mo : g)
                gconj.push_back(Mono{(p - mo.al) % p, (F.m() - mo.be) % F.m(), mo.c});
            CHECK(stream_product_equals(R, g, gconj, {Mono{0, 0, (std::int64_t)p * p}}));
            // ... while the inverse character carries the chi(-1) sign
            auto ginv = gauss_sum_monomials(R, F, MultChar{F.m() - k});
            int sign = ff::char_sign_at_minus_one(F, MultChar{k});
            CHECK(stream_product_equals(R, g, ginv, {Mono{0, 0, (std::int64_t)sign * p * p}}));
        }
    }
}

TEST_CASE("epsilon_p: extension values and exact division") {
    FieldCtx F(5);
    CycRing R(5);
    CHECK(epsilon_p(R, F, MultChar{0}) == CycInt::one(R));
    // quadratic norm character at p=5: theta^12 = xi^6 = 4 = -1 mod 5
    Fq2 t12 = F.pow(F.theta(), 12);
    CHECK(t12 == Fq2{4, 0});
    CHECK(epsilon_p(R, F, MultChar{12}) == CycInt::integer(R, -1));
    // k = 4: G/5 agrees with chi(sqrt(xi))
    CycInt e4 = epsilon_p(R, F, MultChar{4});
    CHECK(e4 == CycInt::monomial(R, 0, 4 * F.dlog_theta() % F.m()));
    // preconditions
    CHECK_THROWS_AS(epsilon_p(R, F, MultChar{3}), std::invalid_argument);
    // non-divisibility is a hard failure
    CHECK_THROWS_AS(CycInt::one(R).div_exact(5), VerificationError);
}

TEST_CASE("epsilon_p is (-1)^t on weights t(p-1), all p <= 13") {
    for (int p : {3, 5, 7, 11, 13}) {
        CycRing R(p);
        FieldCtx F(p);
        for (int t = 0; t <= p; ++t) {
            CycInt e = epsilon_p(R, F, MultChar{t * (p - 1)});
            CHECK(e == CycInt::integer(R, t % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("bessel numerators: hand oracle at p=3 and the -G(nu) identity") {
    FieldCtx F(3);
    CycRing R(3);
    MultChar nu = ff::char_from_digits(F, 2, 1); // k = 5
    // independent 4-term oracle: enumerate x with N x = 1 by brute force
    CycInt hand = CycInt::zero(R);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Fq2 x{a, b};
            if (F.is_zero(x) || F.norm(x) != 1) continue;
            hand -= psi(R, F.trace(x)) * char_value(R, F, nu, x);
        }
    CycInt bn = bessel_num(R, F, nu, 1);
    CHECK(bn == hand);
    // frozen value: zeta_3 - zeta_3^2
    CHECK(bn == CycInt::monomial(R, 1, 0) - CycInt::monomial(R, 2, 0));

    // sum over u of bessel_num(nu, u) = -G(nu), all nu, p <= 13
    for (int p : {3, 5, 7, 11, 13}) {
        FieldCtx Fp(p);
        CycRing Rp(p);
        for (int a = 1; a < p; ++a)
            for (int b = 0; b < a; ++b) {
                MultChar nup = ff::char_from_digits(Fp, a, b);
                Accum acc(Rp);
                for (int u = 1; u < p; ++u)
                    for (const auto& mo : bessel_num_monomials(Rp, Fp, nup, u)) acc.add_mono(mo);
                for (const auto& mo : gauss_sum_monomials(Rp, Fp, nup)) acc.add_mono(mo);
                CHECK(acc.reduce_is_zero());
            }
    }
}

TEST_CASE("bessel numerators match brute-force norm-circle sums (p <= 7)") {
    for (int p : {3, 5, 7}) {
        FieldCtx F(p);
        CycRing R(p);
        for (auto [a, b] : {std::pair{p - 1, 0}, {2, 1}}) {
            MultChar nu = ff::char_from_digits(F, a, b);
            for (int u = 1; u < p; ++u) {
                CycInt brute = CycInt::zero(R);
                for (int xa = 0; xa < p; ++xa)
                    for (int xb = 0; xb < p; ++xb) {
                        Fq2 x{xa, xb};
                        if (F.is_zero(x) || F.norm(x) != u) continue;
                        brute -= psi(R, F.trace(x)) * char_value(R, F, nu, x);
                    }
                CHECK(bessel_num(R, F, nu, u) == brute);
            }
        }
    }
}

TEST_CASE("bessel kernel is invariant under nu -> nu^p") {
    for (int p : {3, 5, 7}) {
        FieldCtx F(p);
        CycRing R(p);
        for (int a = 1; a < p; ++a)
            for (int b = 0; b < a; ++b) {
                MultChar nu = ff::char_from_digits(F, a, b);
                MultChar nup = ff::frob_char(F, nu);
                for (int u = 1; u < p; ++u)
                    CHECK(bessel_num(R, F, nu, u) == bessel_num(R, F, nup, u));
            }
    }
    CycRing R(5);
    FieldCtx F(5);
    CHECK_THROWS_AS(bessel_num(R, F, ff::char_from_digits(F, 3, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_num(R, F, ff::char_from_digits(F, 2, 2), 1), std::invalid_argument);
}

TEST_CASE("reduction to F_{p^2} is a ring homomorphism") {
    FieldCtx F(5);
    CycRing R(5);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        CycInt x = random_elem(rng, R), y = random_elem(rng, R);
        Fq2 rx = x.reduce_mod_p(F), ry = y.reduce_mod_p(F);
        CHECK((x * y).reduce_mod_p(F) == F.mul(rx, ry));
        CHECK((x + y).reduce_mod_p(F) == F.add(rx, ry));
    }
    // zeta_m -> sigma
    CHECK(CycInt::monomial(R, 0, 7).reduce_mod_p(F) == F.sigma_pow(7));
    // zeta_p -> 1
    CHECK(CycInt::monomial(R, 2, 0).reduce_mod_p(F) == Fq2{1, 0});
}

TEST_CASE("engine accumulators agree with CycInt arithmetic") {
    for (int p : {3, 5, 7, 11}) {
        CycRing R(p);
        std::mt19937_64 rng(1000 + p);
        for (int it = 0; it < 25; ++it) {
            std::vector<Mono> ms;
            for (int t = 0; t < 8; ++t)
                ms.push_back(Mono{int(rng() % R.p()), int(rng() % R.m()), std::int64_t(rng() % 11) - 5});
            Accum acc(R);
            for (const auto& mo : ms) acc.add_mono(mo);
            CycInt direct = CycInt::zero(R);
            for (const auto& mo : ms)
                direct += CycInt::monomial(R, mo.al, mo.be, mo.c);
            CHECK(CycInt::from_canonical(R, acc.canonical()) == direct);
        }
    }
}
