#pragma once

// The single source of randomness: std::mt19937_64 seeded with one 64-bit
// value, with a rejection-sampled bounded draw so transcripts do not depend
// on the standard library's distribution implementation.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

namespace sepform {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    const std::uint64_t threshold = (0 - span) % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x < threshold);
    return lo + x % span;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Seed from SEPFORM_SEED when set and parseable.
inline std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv("SEPFORM_SEED");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t pos = 0;
    unsigned long long s = std::stoull(v, &pos, 0);
    if (pos != std::string(v).size()) return std::nullopt;
    return static_cast<std::uint64_t>(s);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace sepform
