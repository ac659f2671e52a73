#pragma once

// Seeded random streams for path simulation.
//
// Every simulated record gets its own generator, seeded by mixing the base
// seed with the record index (splitmix64 finalizer over base ^ golden*(j+1)).
// This makes dataset generation independent of evaluation order: the j-th
// record is bit-identical whether records are produced serially or in
// parallel. Standard normals come from the Marsaglia polar method built on
// mt19937_64 uniforms, so the whole pipeline is reproducible for a given
// build (std::normal_distribution is implementation-defined; this is not).

#include <cmath>
#include <cstdint>
#include <random>

namespace sdeclass {

// splitmix64 finalizer (Vigna); bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of the per-record stream derived from (base_seed, record_index).
inline std::uint64_t record_stream_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix64(base_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Deterministic N(0,1) sampler: mt19937_64 + Marsaglia polar method.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sdeclass
