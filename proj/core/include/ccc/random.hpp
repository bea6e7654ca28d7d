#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ccc {

// One step of splitmix64; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Derives a child seed from a parent seed and a sequence of task tags.
// Different tag sequences give statistically independent streams.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

// Seeded generator for the random hypersurface choices. Wraps
// std::mt19937_64, whose output sequence is fixed by the standard; field
// draws use rejection sampling so they do not depend on the standard
// library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, bound).
  std::uint32_t uniform(std::uint32_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccc
