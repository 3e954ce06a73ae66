#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "affine_lab/rational.hpp"

namespace affine_lab {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). Each call advances the state by
 * 0x9E3779B97F4A7C15 and returns the state mixed by
 *
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z =  z ^ (z >> 31)
 *
 * Written out here so that any implementation can reproduce a seeded
 * experiment bit for bit.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [1, range] by rejection: draws x until
  /// x < 2^64 − (2^64 mod range), then returns x mod range + 1.
  std::uint64_t uniform(std::uint64_t range);

 private:
  std::uint64_t state_;
};

enum class GenKind { Arithmetic, Geometric, RandomInt, Explicit };

std::string_view gen_kind_name(GenKind kind);  // ap, gp, random_int, explicit
GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::Arithmetic;
  Rational start = Rational(1);
  Rational step = Rational(1);  // common difference (ap) or ratio (gp)
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::uint64_t range = 100;    // random_int draws from [1, range]
  ScalarSet values;             // explicit
};

/**
 * Exactly n distinct rationals.
 *
 *   ap          {start + i·step : 0 ≤ i < n}
 *   gp          {start · stepⁱ : 0 ≤ i < n}
 *   random_int  n distinct draws of SplitMix64(seed).uniform(range),
 *               repeats rejected
 *   explicit    `values`, which must hold n distinct elements (n = 0
 *               accepts whatever is given)
 *
 * Throws std::invalid_argument when n = 0 (except explicit), when a gp has
 * ratio or start 0, when range < n, or when the spec cannot produce n
 * distinct values (step 0, ratio ±1, ...).
 */
ScalarSet generate(const GenSpec& spec);

/// Compact descriptor, e.g. "ap:1:1:4", "gp:1:2:4", "rand:7:100:5".
std::string describe(const GenSpec& spec);

/// Parses the descriptors produced by describe() (explicit specs excluded).
/// Throws std::invalid_argument on malformed text.
GenSpec parse_gen_descriptor(std::string_view text);

}  // namespace affine_lab
