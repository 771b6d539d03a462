#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracecert/coset_system.hpp"
#include "tracecert/group_spec.hpp"

namespace tracecert::testing {

// Regular S3 in S6 with the element order 1, (12), (23), (13), (123), (132).
inline GroupSpec s3_regular_spec() {
  GroupSpec spec;
  spec.name = "S3-regular";
  spec.degree = 3;
  spec.kind = "regular";
  spec.cycles = {"(1 2)", "(1 2 3)"};
  spec.element_order = {"()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"};
  return spec;
}

// S3 x D8 in S24, D8 regular on its elements 1, a, a^2, a^3, b, ab, a^2b, a^3b
// with a = (1 2 3 4) and b = (2 4).
inline GroupSpec s3xd8_spec() {
  GroupSpec d8;
  d8.name = "D8-regular";
  d8.degree = 4;
  d8.kind = "regular";
  d8.cycles = {"(1 2 3 4)", "(2 4)"};
  d8.element_order = {"()", "(1 2 3 4)", "(1 3)(2 4)", "(1 4 3 2)", "(2 4)", "(1 2)(3 4)", "(1 3)", "(1 4)(2 3)"};
  GroupSpec spec;
  spec.name = "S3xD8";
  spec.kind = "product";
  spec.factors = {symmetric_group_spec(3), std::move(d8)};
  return spec;
}

inline GroupSpec c3_regular_spec() {
  GroupSpec spec;
  spec.name = "C3-regular";
  spec.degree = 3;
  spec.kind = "regular";
  spec.cycles = {"(1 2 3)"};
  return spec;
}

inline CosetSystem s3_regular_system() { return coset_system(build_group(s3_regular_spec())); }
inline CosetSystem s3xd8_system() { return coset_system(build_group(s3xd8_spec())); }

// pi_1..pi_6 for the regular S3 system, rows of images.
inline const std::vector<std::vector<std::uint32_t>>& s3_regular_pi_tables() {
  static const std::vector<std::vector<std::uint32_t>> tables = {
      {1, 2, 3, 4, 5, 6}, {2, 1, 6, 5, 4, 3}, {3, 5, 1, 6, 2, 4},
      {4, 6, 5, 1, 3, 2}, {5, 3, 4, 2, 6, 1}, {6, 4, 2, 3, 1, 5},
  };
  return tables;
}

// Entry [i-1][j-1] = pi_j(i) on the first block of S3 x D8; blocks repeat
// shifted by 8.
inline const std::vector<std::vector<std::uint32_t>>& s3xd8_block_tables() {
  static const std::vector<std::vector<std::uint32_t>> tables = {
      {1, 2, 3, 4, 5, 6, 7, 8}, {2, 3, 4, 1, 6, 7, 8, 5}, {3, 4, 1, 2, 7, 8, 5, 6}, {4, 1, 2, 3, 8, 5, 6, 7},
      {5, 8, 7, 6, 1, 4, 3, 2}, {6, 5, 8, 7, 2, 1, 4, 3}, {7, 6, 5, 8, 3, 2, 1, 4}, {8, 7, 6, 5, 4, 3, 2, 1},
  };
  return tables;
}

// The ten k=3, t=2 exponent vectors for r = 6.
inline const std::vector<std::vector<std::uint32_t>>& family_vectors_r6() {
  static const std::vector<std::vector<std::uint32_t>> vecs = {
      {2, 1, 1, 0, 0, 0}, {2, 1, 0, 1, 0, 0}, {2, 1, 0, 0, 1, 0}, {2, 1, 0, 0, 0, 1}, {2, 0, 1, 1, 0, 0},
      {2, 0, 1, 0, 1, 0}, {2, 0, 1, 0, 0, 1}, {2, 0, 0, 1, 1, 0}, {2, 0, 0, 1, 0, 1}, {2, 0, 0, 0, 1, 1},
  };
  return vecs;
}

// The first 24 of the 35 k=4, t=2 exponent vectors for r = 8.
inline const std::vector<std::vector<std::uint32_t>>& family_vectors_r8_prefix() {
  static const std::vector<std::vector<std::uint32_t>> vecs = {
      {2, 1, 1, 1, 0, 0, 0, 0}, {2, 1, 1, 0, 1, 0, 0, 0}, {2, 1, 1, 0, 0, 1, 0, 0}, {2, 1, 1, 0, 0, 0, 1, 0},
      {2, 1, 1, 0, 0, 0, 0, 1}, {2, 1, 0, 1, 1, 0, 0, 0}, {2, 1, 0, 1, 0, 1, 0, 0}, {2, 1, 0, 1, 0, 0, 1, 0},
      {2, 1, 0, 1, 0, 0, 0, 1}, {2, 1, 0, 0, 1, 1, 0, 0}, {2, 1, 0, 0, 1, 0, 1, 0}, {2, 1, 0, 0, 1, 0, 0, 1},
      {2, 1, 0, 0, 0, 1, 1, 0}, {2, 1, 0, 0, 0, 1, 0, 1}, {2, 1, 0, 0, 0, 0, 1, 1}, {2, 0, 1, 1, 1, 0, 0, 0},
      {2, 0, 1, 1, 0, 1, 0, 0}, {2, 0, 1, 1, 0, 0, 1, 0}, {2, 0, 1, 1, 0, 0, 0, 1}, {2, 0, 1, 0, 1, 1, 0, 0},
      {2, 0, 1, 0, 1, 0, 1, 0}, {2, 0, 1, 0, 1, 0, 0, 1}, {2, 0, 1, 0, 0, 1, 1, 0}, {2, 0, 1, 0, 0, 1, 0, 1},
  };
  return vecs;
}

}  // namespace tracecert::testing
