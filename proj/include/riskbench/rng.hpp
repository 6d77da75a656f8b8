#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace riskbench {

/// Deterministic random stream built on splitmix64. The generator and every
/// distribution are spelled out here so corpora and training runs are
/// reproducible byte-for-byte across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be positive.
  std::int64_t uniform_int(std::int64_t n) {
    return static_cast<std::int64_t>(uniform01() * static_cast<double>(n));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Knuth's method; fine for the small lambdas used here.
  int poisson(double lambda) {
    const double limit = std::exp(-lambda);
    double prod = uniform01();
    int n = 0;
    while (prod > limit) {
      ++n;
      prod *= uniform01();
    }
    return n;
  }

  /// Number of failures before the first success.
  int geometric(double p) {
    int n = 0;
    while (!bernoulli(p)) ++n;
    return n;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(static_cast<std::int64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Derive an independent stream; used to give folds and models their own
  /// sequences regardless of evaluation order.
  Rng fork(std::uint64_t stream) const {
    Rng child(state_ ^ (0xD1342543DE82EF95ULL * (stream + 1)));
    child.next_u64();
    return child;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace riskbench
