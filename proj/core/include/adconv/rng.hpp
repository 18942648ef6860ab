#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace adconv {

// All randomness flows through explicitly seeded engines; there is no global
// generator. Distinct purposes (dataset, init, shuffling) take distinct
// streams derived from the run seed so paired runs see identical data order.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(seed * 0x9e3779b97f4a7c15ull + stream);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
  return std::normal_distribution<double>(mean, stddev)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline void fill_uniform(Rng& rng, std::span<double> out, double lo, double hi) {
  for (double& v : out) v = uniform(rng, lo, hi);
}

inline void fill_normal(Rng& rng, std::span<double> out, double mean, double stddev) {
  for (double& v : out) v = normal(rng, mean, stddev);
}

}  // namespace adconv
