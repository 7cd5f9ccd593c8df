#include "kernels/vecops.hpp"

#include "kernels/cpu.hpp"

#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define GL2_HAVE_AVX2_BUILD 1
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#define GL2_HAVE_NEON_BUILD 1
#endif

namespace gl2 {
namespace kern {

using std::int64_t;
using std::size_t;
using std::uint64_t;

namespace scalar {

void vec_add_i64(int64_t* dst, const int64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void vec_sub_i64(int64_t* dst, const int64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] -= src[i];
}

void vec_axpy_i64(int64_t* dst, int64_t a, const int64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] += a * src[i];
}

bool vec_all_zero_i64(const int64_t* v, size_t n) {
    int64_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc |= v[i];
    return acc == 0;
}

uint64_t vec_max_abs_i64(const int64_t* v, size_t n) {
    uint64_t mx = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t a = v[i] < 0 ? uint64_t(-(v[i] + 1)) + 1 : uint64_t(v[i]);
        if (a > mx) mx = a;
    }
    return mx;
}

} // namespace scalar

#if GL2_HAVE_AVX2_BUILD
namespace avx2 {

__attribute__((target("avx2"))) static void vec_add_i64(int64_t* dst, const int64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(a, b));
    }
    for (; i < n; ++i) dst[i] += src[i];
}

__attribute__((target("avx2"))) static void vec_sub_i64(int64_t* dst, const int64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi64(a, b));
    }
    for (; i < n; ++i) dst[i] -= src[i];
}

__attribute__((target("avx2"))) static void vec_axpy_i64(int64_t* dst, int64_t a, const int64_t* src, size_t n) {
    // 64x64 multiply-low is not a single AVX2 op; mul_epu32 cross terms.
    __m256i va_lo = _mm256_set1_epi64x(a);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i lo = _mm256_mul_epu32(x, va_lo);
        __m256i xh = _mm256_srli_epi64(x, 32);
        __m256i ah = _mm256_srli_epi64(va_lo, 32);
        __m256i m1 = _mm256_mul_epu32(xh, va_lo);
        __m256i m2 = _mm256_mul_epu32(x, ah);
        __m256i hi = _mm256_slli_epi64(_mm256_add_epi64(m1, m2), 32);
        __m256i prod = _mm256_add_epi64(lo, hi);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(d, prod));
    }
    for (; i < n; ++i) dst[i] += a * src[i];
}

__attribute__((target("avx2"))) static bool vec_all_zero_i64(const int64_t* v, size_t n) {
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < n; ++i)
        if (v[i]) return false;
    return true;
}

} // namespace avx2
#endif

#if GL2_HAVE_NEON_BUILD
namespace neon {

static void vec_add_i64(int64_t* dst, const int64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_s64(dst + i, vaddq_s64(vld1q_s64(dst + i), vld1q_s64(src + i)));
    }
    for (; i < n; ++i) dst[i] += src[i];
}

static void vec_sub_i64(int64_t* dst, const int64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_s64(dst + i, vsubq_s64(vld1q_s64(dst + i), vld1q_s64(src + i)));
    }
    for (; i < n; ++i) dst[i] -= src[i];
}

static bool vec_all_zero_i64(const int64_t* v, size_t n) {
    size_t i = 0;
    int64x2_t acc = vdupq_n_s64(0);
    for (; i + 2 <= n; i += 2) acc = vorrq_s64(acc, vld1q_s64(v + i));
    if (vgetq_lane_s64(acc, 0) | vgetq_lane_s64(acc, 1)) return false;
    for (; i < n; ++i)
        if (v[i]) return false;
    return true;
}

} // namespace neon
#endif

void vec_add_i64(int64_t* dst, const int64_t* src, size_t n) {
#if GL2_HAVE_AVX2_BUILD
    if (!scalar_forced() && cpu_caps().avx2) return avx2::vec_add_i64(dst, src, n);
#elif GL2_HAVE_NEON_BUILD
    if (!scalar_forced() && cpu_caps().neon) return neon::vec_add_i64(dst, src, n);
#endif
    scalar::vec_add_i64(dst, src, n);
}

void vec_sub_i64(int64_t* dst, const int64_t* src, size_t n) {
#if GL2_HAVE_AVX2_BUILD
    if (!scalar_forced() && cpu_caps().avx2) return avx2::vec_sub_i64(dst, src, n);
#elif GL2_HAVE_NEON_BUILD
    if (!scalar_forced() && cpu_caps().neon) return neon::vec_sub_i64(dst, src, n);
#endif
    scalar::vec_sub_i64(dst, src, n);
}

void vec_axpy_i64(int64_t* dst, int64_t a, const int64_t* src, size_t n) {
#if GL2_HAVE_AVX2_BUILD
    if (!scalar_forced() && cpu_caps().avx2) return avx2::vec_axpy_i64(dst, a, src, n);
#endif
    scalar::vec_axpy_i64(dst, a, src, n);
}

bool vec_all_zero_i64(const int64_t* v, size_t n) {
#if GL2_HAVE_AVX2_BUILD
    if (!scalar_forced() && cpu_caps().avx2) return avx2::vec_all_zero_i64(v, n);
#elif GL2_HAVE_NEON_BUILD
    if (!scalar_forced() && cpu_caps().neon) return neon::vec_all_zero_i64(v, n);
#endif
    return scalar::vec_all_zero_i64(v, n);
}

uint64_t vec_max_abs_i64(const int64_t* v, size_t n) { return scalar::vec_max_abs_i64(v, n); }

void vec_zero_i64(int64_t* v, size_t n) { std::memset(v, 0, n * sizeof(int64_t)); }

} // namespace kern
} // namespace gl2
