#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tracecert/coset_system.hpp"
#include "tracecert/linalg.hpp"
#include "tracecert/polynomial.hpp"

namespace tracecert {

// Tuple a = (a_1,...,a_r) of non-negative exponents.
struct ExponentVector {
  std::vector<std::uint32_t> entries;

  std::uint64_t height() const {
    std::uint64_t h = 0;
    for (std::uint32_t e : entries) h += e;
    return h;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) = default;
};

// Tr_a(x_1,...,x_n) = sum_{i=1}^n prod_{j=1}^r x_{pi_j(i)}^{a_j}.
// Row i contributes one monomial of degree H(a); like monomials collect.
inline SparsePolynomial trace_polynomial(const CosetSystem& cs, const ExponentVector& a) {
  if (a.entries.size() != cs.r)
    throw Error("exponent vector length " + std::to_string(a.entries.size()) + " does not match r = " + std::to_string(cs.r));
  SparsePolynomial out(cs.n);
  for (std::uint32_t i = 1; i <= cs.n; ++i) {
    Monomial m(cs.n, 0);
    for (std::uint32_t j = 1; j <= cs.r; ++j)
      m[cs.pi[j - 1].images()[i - 1] - 1] += a.entries[j - 1];
    out.add_term(std::move(m), 1);
  }
  return out;
}

// The k-element subsets of [r] containing 1, ordered lexicographically on
// their non-1 elements.  Count = binom(r-1, k-1).
inline std::vector<std::vector<std::uint32_t>> subsets_containing_one(std::uint32_t r, std::uint32_t k) {
  if (k < 2 || k > r - 1 || r < 3) throw Error("k must lie in [2, r-1] with r >= 3");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> pick(k - 1);
  for (std::uint32_t i = 0; i < k - 1; ++i) pick[i] = i + 2;
  while (true) {
    std::vector<std::uint32_t> subset{1};
    subset.insert(subset.end(), pick.begin(), pick.end());
    out.push_back(std::move(subset));
    // next (k-1)-combination of {2..r} in lexicographic order
    std::int64_t pos = static_cast<std::int64_t>(k) - 2;
    while (pos >= 0 && pick[pos] == r - (k - 2 - pos)) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (std::size_t q = pos + 1; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

// a(B): t at position 1, ones on B \ {1}, zeros elsewhere; height k+t-1.
inline ExponentVector vector_from_subset(const std::vector<std::uint32_t>& b, std::uint32_t t, std::uint32_t r) {
  if (t < 2) throw Error("t must be at least 2");
  if (std::find(b.begin(), b.end(), 1u) == b.end()) throw Error("subset must contain 1");
  ExponentVector a;
  a.entries.assign(r, 0);
  a.entries[0] = t;
  for (std::uint32_t x : b) {
    if (x < 1 || x > r) throw Error("subset element " + std::to_string(x) + " out of range [1, " + std::to_string(r) + "]");
    if (x != 1) {
      if (a.entries[x - 1] != 0) throw Error("subset element " + std::to_string(x) + " repeated");
      a.entries[x - 1] = 1;
    }
  }
  return a;
}

struct VectorFamily {
  std::uint32_t r = 0, k = 0, t = 0;
  std::vector<std::vector<std::uint32_t>> subsets;  // B_1..B_l
  std::vector<ExponentVector> vectors;              // a(B_1)..a(B_l)
};

struct TraceFamily {
  std::uint32_t n = 0, r = 0, k = 0, t = 0;  // k = t = 0 for explicit vector input
  std::vector<ExponentVector> vectors;
  std::vector<SparsePolynomial> polys;  // polys[i] = Tr_{vectors[i]}
};

// The full candidate family over S_k(r); l = binom(r-1, k-1) members.
inline std::pair<VectorFamily, TraceFamily> build_family(const CosetSystem& cs, std::uint32_t k, std::uint32_t t) {
  if (cs.r < 3) throw Error("family construction needs r >= 3");
  if (k < 2 || k > cs.r - 1) throw Error("k must lie in [2, r-1]");
  if (t < 2) throw Error("t must be at least 2");
  VectorFamily vf;
  vf.r = cs.r;
  vf.k = k;
  vf.t = t;
  vf.subsets = subsets_containing_one(cs.r, k);
  TraceFamily tf;
  tf.n = cs.n;
  tf.r = cs.r;
  tf.k = k;
  tf.t = t;
  for (const auto& b : vf.subsets) {
    vf.vectors.push_back(vector_from_subset(b, t, cs.r));
    tf.vectors.push_back(vf.vectors.back());
    tf.polys.push_back(trace_polynomial(cs, vf.vectors.back()));
  }
  return {std::move(vf), std::move(tf)};
}

// Trace family for explicitly chosen exponent vectors (arbitrary a >= 0).
inline TraceFamily family_from_vectors(const CosetSystem& cs, std::vector<ExponentVector> vectors) {
  TraceFamily tf;
  tf.n = cs.n;
  tf.r = cs.r;
  for (const ExponentVector& a : vectors) tf.polys.push_back(trace_polynomial(cs, a));
  tf.vectors = std::move(vectors);
  return tf;
}

struct IndependenceResult {
  bool independent = false;
  std::size_t rank = 0;
  std::vector<Rat> dependency;  // nonzero combination of the polys, empty when independent
};

// Exact rank of the coefficient matrix (rows = polynomials, columns = the
// union of their monomials in canonical order).
inline IndependenceResult check_linear_independence(const TraceFamily& family) {
  if (family.polys.empty()) throw Error("empty family");
  std::map<Monomial, std::size_t, TermOrder> columns;
  for (const SparsePolynomial& p : family.polys)
    for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
  std::size_t idx = 0;
  for (auto& [m, col] : columns) col = idx++;
  std::vector<std::vector<Int>> matrix(family.polys.size(), std::vector<Int>(columns.size(), Int(0)));
  for (std::size_t i = 0; i < family.polys.size(); ++i)
    for (const auto& [m, c] : family.polys[i].terms()) matrix[i][columns.at(m)] = c;

  IndependenceResult res;
  res.rank = integer_rank(matrix);
  res.independent = res.rank == family.polys.size();
  if (!res.independent) {
    auto dep = row_dependency(matrix);
    if (dep) res.dependency = std::move(*dep);
  }
  return res;
}

}  // namespace tracecert
