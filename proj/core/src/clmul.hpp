#pragma once

#include <cstdint>

namespace ssk3::detail {

using u128 = unsigned __int128;

// Carry-less 64x64 -> 128 multiply. Uses PCLMULQDQ when the CPU has it.
u128 clmul(std::uint64_t a, std::uint64_t b);

u128 clmul_portable(std::uint64_t a, std::uint64_t b);

}  // namespace ssk3::detail
