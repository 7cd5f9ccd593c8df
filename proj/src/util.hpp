#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gl2 {

// Raised when an identity the library is supposed to *verify* fails
// (e.g. a Gauss sum that is not divisible by p). Distinct from
// std::invalid_argument, which is reserved for rejected inputs.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t ck_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
    return r;
}

inline std::int64_t ck_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 sub overflow");
    return r;
}

inline std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 mul overflow");
    return r;
}

// nonnegative a mod b for b > 0
inline int imod(long long a, int b) {
    int r = int(a % b);
    return r < 0 ? r + b : r;
}

inline bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline int pow_mod(long long base, long long exp, int mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return int(r);
}

inline int inv_mod(int a, int p) { return pow_mod(a, p - 2, p); } // p prime, a != 0

} // namespace gl2
