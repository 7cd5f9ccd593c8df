#pragma once

// Runtime CPU feature detection for kernel dispatch.

namespace gl2 {
namespace kern {

struct CpuCaps {
    bool avx2 = false;
    bool neon = false;
};

// Detected once, cached.
const CpuCaps& cpu_caps();

// Force a specific path (used by the equivalence tests). Passing
// use_simd=false pins the scalar reference kernels.
void force_scalar(bool scalar_only);
bool scalar_forced();

} // namespace kern
} // namespace gl2
