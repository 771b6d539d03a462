#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecert/bigint.hpp"
#include "tracecert/jacobian.hpp"
#include "tracecert/trace_family.hpp"

namespace tracecert {

inline constexpr std::uint32_t kDefaultAttemptBudget = 16;

struct FeasibilityResult {
  std::uint32_t n = 0, r = 0;
  std::vector<std::pair<std::uint32_t, Int>> feasible_pairs;  // (k, l) with l >= n
  std::optional<std::uint32_t> chosen_k;                      // smallest feasible k
  std::uint32_t chosen_t = 2;
};

// Condition (1): k in [2, r-1] with binom(r-1, k-1) >= n.  An empty list
// means the method does not apply to this group.
inline FeasibilityResult feasibility(std::uint32_t n, std::uint32_t r, std::uint32_t t = 2) {
  if (r < 1) throw Error("r must be at least 1");
  if (t < 2) throw Error("t must be at least 2");
  FeasibilityResult res;
  res.n = n;
  res.r = r;
  res.chosen_t = t;
  for (std::uint32_t k = 2; r >= 1 && k <= r - 1; ++k) {
    Int l = binomial(r - 1, k - 1);
    if (l >= n) {
      res.feasible_pairs.emplace_back(k, l);
      if (!res.chosen_k) res.chosen_k = k;
    }
  }
  return res;
}

// (1/n) * sum of heights, reduced.
inline Rat exponent_general(const std::vector<ExponentVector>& vectors, std::uint32_t n) {
  if (vectors.size() != n) throw Error("need exactly n vectors");
  if (n == 0) throw Error("n must be positive");
  Int total = 0;
  for (const ExponentVector& a : vectors) total += a.height();
  return Rat(total, n);
}

// z = prod deg f_i = prod H(a_i); fiber of the associated polynomial map has
// at most z points.
inline Int fiber_bound(const std::vector<ExponentVector>& vectors) {
  Int z = 1;
  for (const ExponentVector& a : vectors) z *= Int(a.height());
  return z;
}

inline Rat schmidt_exponent(std::uint32_t n) {
  if (n < 1) throw Error("n must be at least 1");
  return Rat(Int(n) + 2, 4);
}

enum class Strategy { FirstN, GreedyRank, RandomRestart };

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "first-n") return Strategy::FirstN;
  if (s == "greedy-rank") return Strategy::GreedyRank;
  if (s == "random-restart") return Strategy::RandomRestart;
  throw Error("unknown strategy: " + s + " (expected first-n, greedy-rank, or random-restart)");
}

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::FirstN: return "first-n";
    case Strategy::GreedyRank: return "greedy-rank";
    case Strategy::RandomRestart: return "random-restart";
  }
  throw Error("unreachable strategy");
}

struct SelectionResult {
  bool certified = false;
  std::vector<std::uint32_t> chosen;  // 1-based indices into the family
  NonvanishingCertificate certificate;
  std::uint32_t attempts_used = 0;
};

namespace detail {

inline JacobianMatrix subset_jacobian(const TraceFamily& family, const std::vector<std::uint32_t>& chosen) {
  std::vector<SparsePolynomial> fs;
  fs.reserve(chosen.size());
  for (std::uint32_t idx : chosen) fs.push_back(family.polys[idx - 1]);
  return jacobian(fs, chosen);
}

inline std::vector<std::uint32_t> first_n_indices(std::uint32_t n) {
  std::vector<std::uint32_t> idx(n);
  for (std::uint32_t i = 0; i < n; ++i) idx[i] = i + 1;
  return idx;
}

}  // namespace detail

// Chooses n of the l candidate polynomials and certifies their Jacobian.
//
//   first-n         the lexicographic prefix f_1..f_n; deterministic and
//                   seed-independent
//   greedy-rank     per attempt, draw one witness point, walk the l gradient
//                   rows in order and keep the first n whose evaluated rows
//                   are linearly independent; full evaluated rank n already
//                   proves det != 0 at that point, so the certificate is
//                   immediate
//   random-restart  per attempt, certify a uniformly drawn n-subset
//
// When every attempt ends PROBABLY_ZERO the result reports the first-n
// subset's negative certificate; failure is reported, not thrown.
inline SelectionResult select_subset(const TraceFamily& family,
                                     Strategy strategy,
                                     std::uint64_t seed,
                                     std::uint32_t trials,
                                     const Int& bound,
                                     std::uint32_t attempt_budget = kDefaultAttemptBudget) {
  const std::uint32_t n = family.n;
  const std::size_t l = family.polys.size();
  if (l < n) throw Error("family has fewer than n polynomials");
  if (attempt_budget < 1) throw Error("attempt budget must be at least 1");

  SelectionResult res;

  if (strategy == Strategy::FirstN) {
    res.chosen = detail::first_n_indices(n);
    res.certificate = certify_nonvanishing(detail::subset_jacobian(family, res.chosen), seed, trials, bound);
    res.certified = res.certificate.status == CertStatus::CertifiedNonzero;
    res.attempts_used = 1;
    return res;
  }

  if (strategy == Strategy::GreedyRank) {
    // Precompute all l gradient rows once; evaluation per attempt is cheap.
    std::vector<std::vector<SparsePolynomial>> gradients;
    gradients.reserve(l);
    for (const SparsePolynomial& f : family.polys) {
      std::vector<SparsePolynomial> row;
      row.reserve(n);
      for (std::uint32_t v = 1; v <= n; ++v) row.push_back(f.partial_derivative(v));
      gradients.push_back(std::move(row));
    }
    // Same Schwartz-Zippel precondition certify_nonvanishing enforces, taken
    // over the worst case: the n largest row degrees bound every subset.
    std::vector<std::int64_t> row_degrees;
    for (const auto& row : gradients) {
      std::int64_t best = 0;
      for (const SparsePolynomial& e : row) best = std::max(best, e.total_degree());
      row_degrees.push_back(best);
    }
    std::sort(row_degrees.rbegin(), row_degrees.rend());
    Int worst_degree = 0;
    for (std::uint32_t i = 0; i < n; ++i) worst_degree += row_degrees[i];
    if (bound < 1 || bound < 2 * worst_degree)
      throw Error("coordinate bound " + to_decimal(bound) + " too small for the Schwartz-Zippel contract (need >= " +
                  to_decimal(Int(2 * worst_degree)) + ")");
    for (std::uint32_t attempt = 0; attempt < attempt_budget; ++attempt) {
      std::vector<Int> w = witness_point(seed, attempt, n, bound);
      IncrementalRank rank(n);
      std::vector<std::uint32_t> picked;
      for (std::uint32_t i = 1; i <= l && picked.size() < n; ++i) {
        std::vector<Int> row(n);
        for (std::uint32_t j = 0; j < n; ++j) row[j] = gradients[i - 1][j].evaluate(w);
        if (rank.add_row(row)) picked.push_back(i);
      }
      if (picked.size() < n) continue;
      JacobianMatrix m = detail::subset_jacobian(family, picked);
      Int det = evaluate_determinant_at(m, w);
      // Full evaluated rank guarantees a nonzero determinant at w.
      if (det == 0) throw Error("internal: rank-n subset evaluated to zero determinant");
      res.certified = true;
      res.chosen = std::move(picked);
      res.attempts_used = attempt + 1;
      res.certificate.status = CertStatus::CertifiedNonzero;
      res.certificate.witness = std::move(w);
      res.certificate.det_value = std::move(det);
      res.certificate.chosen_indices = res.chosen;
      res.certificate.seed = seed;
      res.certificate.trials_used = attempt + 1;
      res.certificate.coordinate_bound = bound;
      return res;
    }
  }

  if (strategy == Strategy::RandomRestart) {
    for (std::uint32_t attempt = 0; attempt < attempt_budget; ++attempt) {
      // Partial Fisher-Yates over [1, l], seeded per attempt.
      std::mt19937_64 rng = seeded_rng(seed, 0x73756273ULL + attempt);
      std::vector<std::uint32_t> pool(l);
      for (std::size_t i = 0; i < l; ++i) pool[i] = static_cast<std::uint32_t>(i + 1);
      for (std::uint32_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (l - i));
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::uint32_t> picked(pool.begin(), pool.begin() + n);
      std::sort(picked.begin(), picked.end());
      NonvanishingCertificate cert =
          certify_nonvanishing(detail::subset_jacobian(family, picked), splitmix64(seed ^ attempt), trials, bound);
      if (cert.status == CertStatus::CertifiedNonzero) {
        res.certified = true;
        res.chosen = std::move(picked);
        res.certificate = std::move(cert);
        res.attempts_used = attempt + 1;
        return res;
      }
    }
  }

  // Honest negative: report the first-n subset's failure certificate.
  res.chosen = detail::first_n_indices(n);
  res.certificate = certify_nonvanishing(detail::subset_jacobian(family, res.chosen), seed, trials, bound);
  res.certified = res.certificate.status == CertStatus::CertifiedNonzero;
  res.attempts_used = attempt_budget;
  return res;
}

}  // namespace tracecert
