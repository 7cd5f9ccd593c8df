#include <doctest.h>

#include "ffchar.hpp"

#include <random>
#include <set>

using namespace gl2;
using namespace gl2::ff;

TEST_CASE("xi is the smallest non-square (checked by enumeration)") {
    for (int p : {3, 5, 7, 11, 13, 17, 19}) {
        FieldCtx F(p);
        std::set<int> squares;
        for (int x = 1; x < p; ++x) squares.insert(x * x % p);
        int expected = 0;
        for (int x = 2; x < p; ++x)
            if (!squares.count(x)) {
                expected = x;
                break;
            }
        CHECK(F.xi() == expected);
    }
    CHECK(FieldCtx(5).xi() == 2); // squares mod 5 are {1,4}
    CHECK(FieldCtx(3).xi() == 2); // squares mod 3 are {1}
}

TEST_CASE("non-primes are rejected") {
    CHECK_THROWS_AS(FieldCtx(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(2), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(9), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
}

TEST_CASE("sigma generates and theta has trace zero, theta^2 = xi") {
    for (int p : {3, 5, 7, 11, 13}) {
        FieldCtx F(p);
        CHECK(F.trace(F.theta()) == 0);
        CHECK(F.mul(F.theta(), F.theta()) == Fq2{F.xi(), 0});
        // order of sigma is exactly m
        CHECK(F.sigma_pow(F.m()) == Fq2{1, 0});
        for (int d = 1; d < F.m(); ++d)
            if (F.m() % d == 0) CHECK(F.sigma_pow(d) != Fq2{1, 0});
    }
}

TEST_CASE("field laws: norm, trace, frobenius") {
    FieldCtx F(7);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        Fq2 x{int(rng() % 7), int(rng() % 7)};
        Fq2 y{int(rng() % 7), int(rng() % 7)};
        if (F.is_zero(x) || F.is_zero(y)) continue;
        CHECK(F.norm(F.mul(x, y)) == F.norm(x) * F.norm(y) % 7);
        CHECK(F.frobenius(x) == F.pow(x, 7));
        CHECK(F.mul(x, F.inv(x)) == Fq2{1, 0});
        CHECK((F.dlog(F.mul(x, y)) - F.dlog(x) - F.dlog(y)) % F.m() == 0);
    }
}

TEST_CASE("character digits and canonicalization") {
    FieldCtx F(5);
    CHECK(char_from_digits(F, 3, 1).k == 8);
    CHECK(char_from_digits(F, 4, 4).k == 0); // (p-1, p-1) canonicalized
    MultChar c = char_from_digits(F, 2, 2);
    CHECK(c.k == 12);
    CHECK(factors_through_norm(F, c));
    CHECK_THROWS_AS(char_from_digits(F, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(char_from_digits(F, 0, -1), std::invalid_argument);
}

TEST_CASE("eval_char basics and multiplicativity") {
    FieldCtx F(5);
    MultChar chi = char_from_digits(F, 3, 1); // k = 8
    CHECK(eval_char(F, chi, Fq2{1, 0}) == 0);
    CHECK(eval_char(F, MultChar{0}, F.sigma_pow(7)) == 0);
    CHECK(eval_char(F, chi, F.sigma_pow(3)) == 0); // 8*3 = 24 = 0 mod 24
    CHECK(eval_char(F, chi, F.sigma()) == chi.k);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        Fq2 x = F.sigma_pow(int(rng() % F.m()));
        Fq2 y = F.sigma_pow(int(rng() % F.m()));
        CHECK((eval_char(F, chi, F.mul(x, y)) - eval_char(F, chi, x) - eval_char(F, chi, y)) % F.m() == 0);
    }
}

TEST_CASE("frobenius swaps digits") {
    FieldCtx F(7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            if (a == 6 && b == 6) continue;
            MultChar c = char_from_digits(F, a, b);
            MultChar cf = frob_char(F, c);
            if (a == b) {
                CHECK(cf == c);
            } else {
                CHECK(digit_a(F, cf) == b);
                CHECK(digit_b(F, cf) == a);
            }
            CHECK(char_sign_at_minus_one(F, c) == ((a + b) % 2 ? -1 : 1));
        }
}

TEST_CASE("classify: Type 1/2 and t_chi") {
    FieldCtx F(5);
    MultChar nu = char_from_digits(F, 3, 1);
    // the trivial character has Type 2, the quadratic has Type 1
    CHECK(classify(F, nu, MultChar{0}).type == Type::Two);
    CHECK(classify(F, nu, MultChar{12}).type == Type::One);
    // chi = nu sits on the boundary: excluded from Type 1, t = 0
    TypeTag self = classify(F, nu, nu);
    CHECK(self.t == 0);
    CHECK(self.type == Type::Two);
    // nu given in the swapped labelling classifies identically
    CHECK(classify(F, frob_char(F, nu), MultChar{12}).type == Type::One);
    CHECK_THROWS_AS(classify(F, nu, MultChar{1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(F, char_from_digits(F, 2, 2), MultChar{0}), std::invalid_argument);
}

TEST_CASE("compatible_chars enumerates p+1 weights") {
    FieldCtx F5(5);
    auto cs = compatible_chars(F5, char_from_digits(F5, 3, 1));
    std::vector<int> ks;
    for (auto c : cs) ks.push_back(c.k);
    CHECK(ks == std::vector<int>{0, 4, 8, 12, 16, 20});

    FieldCtx F3(3);
    CHECK(compatible_chars(F3, char_from_digits(F3, 2, 0)).size() == 4);

    for (int p : {3, 5, 7, 11, 13, 17}) {
        FieldCtx F(p);
        for (int a = 1; a < p; ++a) {
            auto list = compatible_chars(F, char_from_digits(F, a, 0));
            CHECK(int(list.size()) == p + 1);
        }
    }
}

TEST_CASE("trivial-restriction weights: k_nu = (p-1)(b+1)") {
    for (int p : {5, 7, 11, 13}) {
        FieldCtx F(p);
        for (int a = (p + 1) / 2; a < p; ++a) {
            int b = p - 1 - a;
            MultChar nu = char_from_digits(F, a, b);
            CHECK(central_weight(F, nu) == 0);
            CHECK(nu.k == (p - 1) * (b + 1));
            CHECK(frob_char(F, nu).k == (p - 1) * (a + 1));
            // even case: t_nu and t_{nu^p} have the same parity
            if ((a - b) % 2 == 0) {
                TypeTag t1 = classify(F, nu, nu), t2 = classify(F, nu, frob_char(F, nu));
                CHECK(t1.t % 2 == t2.t % 2);
            }
        }
    }
}
