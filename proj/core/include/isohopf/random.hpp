#pragma once

#include <cstdint>
#include <random>

namespace isohopf {

// Deterministic derivation of sub-seeds so that every consumer gets its own stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace isohopf
