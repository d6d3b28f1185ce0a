#pragma once

#include <cstdint>

namespace dkdv {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit integers (fixed base set, exact).
bool is_prime_u64(std::uint64_t n);

}  // namespace dkdv
