#include "clmul.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define SSK3_X86_CLMUL 1
#endif

namespace ssk3::detail {

u128 clmul_portable(std::uint64_t a, std::uint64_t b) {
    // 4-bit window table over b.
    u128 table[16];
    table[0] = 0;
    for (int i = 1; i < 16; ++i) {
        u128 v = 0;
        for (int bit = 0; bit < 4; ++bit)
            if ((i >> bit) & 1) v ^= static_cast<u128>(b) << bit;
        table[i] = v;
    }
    u128 r = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        r <<= 4;
        r ^= table[(a >> shift) & 0xF];
    }
    return r;
}

#ifdef SSK3_X86_CLMUL
namespace {

__attribute__((target("pclmul,sse4.1"))) u128 clmul_hw(std::uint64_t a, std::uint64_t b) {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
    auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    return (static_cast<u128>(hi) << 64) | lo;
}

using ClmulFn = u128 (*)(std::uint64_t, std::uint64_t);

ClmulFn pick() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1") ? clmul_hw
                                                                               : clmul_portable;
}

}  // namespace

u128 clmul(std::uint64_t a, std::uint64_t b) {
    static const ClmulFn fn = pick();
    return fn(a, b);
}
#else
u128 clmul(std::uint64_t a, std::uint64_t b) { return clmul_portable(a, b); }
#endif

}  // namespace ssk3::detail
