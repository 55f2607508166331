#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Raised when an operation is invoked outside its mathematical domain.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a configuration fails validation at load time.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Canonical rendering: integers without denominator, otherwise p/q in
/// lowest terms (cpp_rational keeps itself reduced).
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Deterministic, platform-independent RNG for the property suites
/// (std::uniform_int_distribution is implementation-defined, so we roll
/// a fixed xorshift instead).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  /// Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace satake
