#include <doctest.h>

#include "kernels/cpu.hpp"
#include "kernels/vecops.hpp"

#include <random>
#include <vector>

using namespace gl2;

namespace {

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, size_t n, std::int64_t mag) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = std::int64_t(rng() % (2 * std::uint64_t(mag) + 1)) - mag;
    return v;
}

} // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        size_t n = rng() % 300;
        auto a = random_vec(rng, n, std::int64_t(1) << 40);
        auto b = random_vec(rng, n, std::int64_t(1) << 40);
        std::int64_t s = std::int64_t(rng() % 7) - 3;

        auto a1 = a, a2 = a;
        kern::vec_add_i64(a1.data(), b.data(), n);
        kern::scalar::vec_add_i64(a2.data(), b.data(), n);
        CHECK(a1 == a2);

        a1 = a, a2 = a;
        kern::vec_sub_i64(a1.data(), b.data(), n);
        kern::scalar::vec_sub_i64(a2.data(), b.data(), n);
        CHECK(a1 == a2);

        a1 = a, a2 = a;
        kern::vec_axpy_i64(a1.data(), s, b.data(), n);
        kern::scalar::vec_axpy_i64(a2.data(), s, b.data(), n);
        CHECK(a1 == a2);

        CHECK(kern::vec_all_zero_i64(a.data(), n) == kern::scalar::vec_all_zero_i64(a.data(), n));
        CHECK(kern::vec_max_abs_i64(a.data(), n) == kern::scalar::vec_max_abs_i64(a.data(), n));
    }
}

TEST_CASE("zero scans catch a single nonzero entry anywhere") {
    for (size_t n : {1u, 3u, 8u, 15u, 64u, 129u}) {
        std::vector<std::int64_t> v(n, 0);
        CHECK(kern::vec_all_zero_i64(v.data(), n));
        for (size_t i = 0; i < n; ++i) {
            v[i] = -1;
            CHECK_FALSE(kern::vec_all_zero_i64(v.data(), n));
            CHECK_FALSE(kern::scalar::vec_all_zero_i64(v.data(), n));
            v[i] = 0;
        }
    }
}

TEST_CASE("forcing the scalar path keeps results identical") {
    std::mt19937_64 rng(99);
    auto a = random_vec(rng, 1000, std::int64_t(1) << 30);
    auto b = random_vec(rng, 1000, std::int64_t(1) << 30);
    auto a1 = a;
    kern::vec_add_i64(a1.data(), b.data(), a.size());
    kern::force_scalar(true);
    auto a2 = a;
    kern::vec_add_i64(a2.data(), b.data(), a.size());
    kern::force_scalar(false);
    CHECK(a1 == a2);
}
