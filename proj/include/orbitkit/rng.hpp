#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace orbitkit {

// SplitMix64: 64-bit counter generator with a strong output mixer.  Chosen
// over the standard-library engines because Monte Carlo operations here hand
// every chunk of work its own substream (split()), so runs are reproducible
// independently of evaluation order.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Independent substream; the parent advances by one draw.
  SplitMix64 split() { return SplitMix64(next()); }

  // Uniform on [0, 1), 53 mantissa bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the paired value is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double re = gaussian(), im = gaussian();
    return {re / 1.4142135623730951, im / 1.4142135623730951};
  }

private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0;
};

} // namespace orbitkit
