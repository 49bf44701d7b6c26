#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace normlab {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);  // ascending, distinct
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);  // n = p^k, k >= 0
// The prime p for which n is a power of p (n > 1), if any.
std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n);
std::uint64_t smallest_primitive_root(std::uint64_t p);

}  // namespace normlab
