#pragma once

#include <cstdint>

#include "quadbound/rational.hpp"

namespace quadbound {

/// xoshiro256** seeded through splitmix64. Worker streams are derived from
/// the master seed as splitmix64(seed ^ (worker+1) * 0x9e3779b97f4a7c15),
/// which keeps runs reproducible for any fixed (seed, worker count).
class Rng {
  public:
    explicit Rng(uint64_t seed) { reseed(seed); }

    void reseed(uint64_t seed);
    static Rng worker_stream(uint64_t seed, uint64_t worker);

    uint64_t u64();
    // uniform in [0, n)
    uint64_t below(uint64_t n);
    // uniform in [0, n) for big integers
    Int below(const Int& n);
    // uniform in [0, 1)
    double real();

  private:
    uint64_t s_[4];
};

}  // namespace quadbound
