#include "affine_lab/generators.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace affine_lab {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

std::uint64_t SplitMix64::uniform(std::uint64_t range) {
  if (range == 0) throw std::invalid_argument("uniform: range must be positive");
  // 2^64 mod range, computed without 128-bit arithmetic.
  const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - excess;  // accept x <= limit
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % range + 1;
}

std::string_view gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Arithmetic: return "ap";
    case GenKind::Geometric: return "gp";
    case GenKind::RandomInt: return "random_int";
    case GenKind::Explicit: return "explicit";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "ap") return GenKind::Arithmetic;
  if (name == "gp") return GenKind::Geometric;
  if (name == "random_int" || name == "rand") return GenKind::RandomInt;
  if (name == "explicit") return GenKind::Explicit;
  throw std::invalid_argument("unknown set kind: " + std::string(name));
}

ScalarSet generate(const GenSpec& spec) {
  if (spec.kind == GenKind::Explicit) {
    ScalarSet out = make_set(spec.values);
    if (spec.n != 0 && out.size() != spec.n)
      throw std::invalid_argument("explicit set has " + std::to_string(out.size()) + " distinct values, expected " +
                                  std::to_string(spec.n));
    return out;
  }
  if (spec.n == 0) throw std::invalid_argument("generate: n must be at least 1");

  std::vector<Rational> values;
  values.reserve(spec.n);
  switch (spec.kind) {
    case GenKind::Arithmetic: {
      Rational v = spec.start;
      for (std::size_t i = 0; i < spec.n; ++i, v += spec.step) values.push_back(v);
      break;
    }
    case GenKind::Geometric: {
      if (spec.step.is_zero() || spec.start.is_zero())
        throw std::invalid_argument("generate: geometric progression needs nonzero start and ratio");
      Rational v = spec.start;
      for (std::size_t i = 0; i < spec.n; ++i, v *= spec.step) values.push_back(v);
      break;
    }
    case GenKind::RandomInt: {
      if (spec.range < spec.n) throw std::invalid_argument("generate: range smaller than n");
      SplitMix64 rng(spec.seed);
      std::unordered_set<std::uint64_t> seen;
      while (values.size() < spec.n) {
        const std::uint64_t v = rng.uniform(spec.range);
        if (seen.insert(v).second) values.emplace_back(v);
      }
      break;
    }
    case GenKind::Explicit: break;
  }
  ScalarSet out = make_set(std::move(values));
  if (out.size() != spec.n)
    throw std::invalid_argument("generate: spec collapses to " + std::to_string(out.size()) + " distinct values, expected " +
                                std::to_string(spec.n));
  return out;
}

std::string describe(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Arithmetic: return "ap:" + spec.start.str() + ":" + spec.step.str() + ":" + std::to_string(spec.n);
    case GenKind::Geometric: return "gp:" + spec.start.str() + ":" + spec.step.str() + ":" + std::to_string(spec.n);
    case GenKind::RandomInt:
      return "rand:" + std::to_string(spec.seed) + ":" + std::to_string(spec.range) + ":" + std::to_string(spec.n);
    case GenKind::Explicit: return "explicit";
  }
  return "?";
}

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

GenSpec parse_gen_descriptor(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("set descriptor needs kind:x:y:n, got '" + std::string(text) + "'");
  GenSpec spec;
  spec.kind = parse_gen_kind(parts[0]);
  if (spec.kind == GenKind::Explicit) throw std::invalid_argument("explicit sets are given as JSON arrays");
  spec.n = parse_u64(parts[3], "set size");
  if (spec.kind == GenKind::RandomInt) {
    spec.seed = parse_u64(parts[1], "seed");
    spec.range = parse_u64(parts[2], "range");
  } else {
    spec.start = Rational::parse(parts[1]);
    spec.step = Rational::parse(parts[2]);
  }
  return spec;
}

}  // namespace affine_lab
