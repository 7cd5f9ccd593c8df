#include "kernels/cpu.hpp"

#include <atomic>

namespace gl2 {
namespace kern {

static CpuCaps detect() {
    CpuCaps c;
#if defined(__x86_64__) || defined(__i386__)
#if defined(__GNUC__)
    c.avx2 = __builtin_cpu_supports("avx2");
#endif
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    c.neon = true;
#endif
    return c;
}

const CpuCaps& cpu_caps() {
    static CpuCaps caps = detect();
    return caps;
}

static std::atomic<bool> g_scalar_only{false};

void force_scalar(bool scalar_only) { g_scalar_only.store(scalar_only); }
bool scalar_forced() { return g_scalar_only.load(); }

} // namespace kern
} // namespace gl2
