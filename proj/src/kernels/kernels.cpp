#include "besov/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#endif

namespace besov::kernels {
namespace {

const Backend* g_active = nullptr;

bool detect_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    bool avx2 = (ebx & (1u << 5)) != 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
    bool fma = (ecx & (1u << 12)) != 0;
    return avx2 && fma;
#else
    return false;
#endif
}

const Backend* pick_auto() {
#if defined(BESOV_HAVE_AVX2)
    if (detect_avx2()) return &avx2_backend;
#endif
    return &scalar_backend;
}

const Backend* initial_backend() {
    if (const char* env = std::getenv("BESOV_SIMD")) {
        std::string req(env);
        if (req == "scalar") return &scalar_backend;
#if defined(BESOV_HAVE_AVX2)
        if (req == "avx2" && detect_avx2()) return &avx2_backend;
#endif
        // unknown or unavailable request falls through to auto-detection
    }
    return pick_auto();
}

} // namespace

bool cpu_has_avx2() { return detect_avx2(); }

const Backend& active() {
    if (!g_active) g_active = initial_backend();
    return *g_active;
}

void force(const std::string& name) {
    if (name == "auto") {
        g_active = pick_auto();
        return;
    }
    if (name == "scalar") {
        g_active = &scalar_backend;
        return;
    }
#if defined(BESOV_HAVE_AVX2)
    if (name == "avx2") {
        if (!detect_avx2()) throw std::runtime_error("avx2 backend unavailable on this cpu");
        g_active = &avx2_backend;
        return;
    }
#endif
    throw std::runtime_error("unknown kernel backend: " + name);
}

} // namespace besov::kernels
