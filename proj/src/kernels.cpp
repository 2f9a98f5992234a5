#include "vilenkin/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace vilenkin::kernels {

const Ops* avx2_ops_impl();
const Ops* neon_ops_impl();

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    return avx2_ops_impl();
#else
    return nullptr;
#endif
}

const Ops* neon_ops() { return neon_ops_impl(); }

namespace {

const Ops& select() {
    if (const char* forced = std::getenv("VILENKIN_KERNELS")) {
        if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
        if (std::strcmp(forced, "avx2") == 0 && avx2_ops()) return *avx2_ops();
        if (std::strcmp(forced, "neon") == 0 && neon_ops()) return *neon_ops();
    }
    if (const Ops* v = avx2_ops()) return *v;
    if (const Ops* v = neon_ops()) return *v;
    return scalar_ops();
}

}  // namespace

const Ops& active() {
    static const Ops& ops = select();
    return ops;
}

}  // namespace vilenkin::kernels
