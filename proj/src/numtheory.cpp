#include "normlab/numtheory.hpp"

#include "normlab/error.hpp"

namespace normlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  auto power_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (power_mod(g, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error(ErrorKind::Internal, "no primitive root found");
}

}  // namespace normlab
