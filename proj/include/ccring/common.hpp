#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccring {

// Thrown when an exact structural cross-check fails (two routes that must
// agree disagree, a construction identity does not hold, ...). Callers map
// this to "verification failed" rather than "bad usage".
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive enumeration would exceed the codeword budget.
class ThresholdExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default enumeration budget: 2^24 codewords.
inline constexpr std::uint64_t kDefaultEnumThreshold = std::uint64_t{1} << 24;

// true iff base^exp <= limit, computed without overflow.
inline bool pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  if (base <= 1) return base <= limit;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (acc > limit / base) return false;
    acc *= base;
  }
  return acc <= limit;
}

// base^exp, throwing std::overflow_error past 2^63.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  const std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) throw std::overflow_error("checked_pow: overflow");
    acc *= base;
  }
  return acc;
}

// Small deterministic RNG. Identical sequence on every platform/compiler,
// which keeps seeded reports byte-identical.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace ccring
