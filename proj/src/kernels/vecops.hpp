#pragma once

#include <cstddef>
#include <cstdint>

// Flat int64 coefficient-vector kernels used by the exact cyclotomic
// arithmetic. Each kernel has a scalar reference implementation and a SIMD
// variant (AVX2 on x86-64, NEON on aarch64); the variant is chosen at
// runtime from the detected CPU capabilities. The SIMD variants must be
// bit-identical to the scalar ones; tests/test_kernels.cpp checks this on
// randomized inputs.

namespace gl2 {
namespace kern {

// dst[i] += src[i]
void vec_add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
// dst[i] -= src[i]
void vec_sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
// dst[i] += a * src[i]
void vec_axpy_i64(std::int64_t* dst, std::int64_t a, const std::int64_t* src, std::size_t n);
// all entries zero?
bool vec_all_zero_i64(const std::int64_t* v, std::size_t n);
// max |v[i]| (0 for empty)
std::uint64_t vec_max_abs_i64(const std::int64_t* v, std::size_t n);
void vec_zero_i64(std::int64_t* v, std::size_t n);

// Scalar reference versions, always available (used by the equivalence
// tests and as the fallback path).
namespace scalar {
void vec_add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
void vec_sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
void vec_axpy_i64(std::int64_t* dst, std::int64_t a, const std::int64_t* src, std::size_t n);
bool vec_all_zero_i64(const std::int64_t* v, std::size_t n);
std::uint64_t vec_max_abs_i64(const std::int64_t* v, std::size_t n);
} // namespace scalar

} // namespace kern
} // namespace gl2
