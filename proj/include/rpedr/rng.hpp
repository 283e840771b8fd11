#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rpedr::rng {

// Substream purposes. Every random draw in the library comes from a stream
// derived from (master seed, purpose, a, b), so results are independent of
// execution order and thread count.
enum class Purpose : std::uint64_t {
  projection = 1,
  split = 2,
  regressor = 3,  // reserved; the four base regressors are deterministic
  null_resample = 4,
  stage1 = 5,
  stage2 = 6,
  dim_select = 7,
  data_gen = 8,
  cell = 9,
  scratch = 10,
};

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Counter-based key derivation (splitmix64 finalizer chain). Pure function of
// its inputs; no shared state.
inline constexpr std::uint64_t derive(std::uint64_t master, Purpose purpose,
                                      std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t s = mix64(master + kGamma);
  s = mix64(s ^ (static_cast<std::uint64_t>(purpose) + kGamma));
  s = mix64(s ^ (a + kGamma));
  s = mix64(s ^ (b + kGamma));
  return s;
}

inline constexpr std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

using Stream = std::mt19937_64;

inline Stream make_stream(std::uint64_t master, Purpose purpose,
                          std::uint64_t a = 0, std::uint64_t b = 0) {
  return Stream(derive(master, purpose, a, b));
}

inline double uniform01(Stream& g) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(g);
}

// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Stream& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline double std_normal(Stream& g) {
  return std::normal_distribution<double>(0.0, 1.0)(g);
}

// Standard Cauchy via the inverse CDF, tan(pi*(u - 1/2)); portable across RNG
// library implementations.
inline double std_cauchy(Stream& g) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  return std::tan(pi * (uniform01(g) - 0.5));
}

}  // namespace rpedr::rng
