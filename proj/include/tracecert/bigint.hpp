#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tracecert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Single exception type for all input/contract violations in this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int int_from_decimal(const std::string& text) {
  if (text.empty()) throw Error("empty string is not a decimal integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error("not a decimal integer: " + text);
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw Error("not a decimal integer: " + text);
  return Int(text);
}

// Renders num/den with den > 0; integral values drop the denominator.
inline std::string rat_to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(int_from_decimal(text));
  Int num = int_from_decimal(text.substr(0, slash));
  Int den = int_from_decimal(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator: " + text);
  return Rat(num, den);
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= Int(n - k + i);
    result /= Int(i);  // exact: the partial product is binom(n-k+i, i)
  }
  return result;
}

inline Int int_pow(Int base, std::uint64_t exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline bool probably_prime(const Int& n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One generator per (seed, stream) pair; streams keep trial draws independent.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

// Uniform draw from [1, bound].  mt19937_64 output is pinned by the standard,
// so draws are identical across platforms (std::uniform_int_distribution is
// not).  The extra 64-bit word keeps the modulo bias below 2^-64.
inline Int draw_in_range(std::mt19937_64& rng, const Int& bound) {
  if (bound < 1) throw Error("draw bound must be positive");
  std::size_t bits = boost::multiprecision::msb(bound) + 1;
  std::size_t words = bits / 64 + 2;
  Int acc = 0;
  for (std::size_t w = 0; w < words; ++w) {
    acc <<= 64;
    acc |= Int(rng());
  }
  return acc % bound + 1;
}

}  // namespace tracecert
