#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tracecert/bigint.hpp"
#include "tracecert/linalg.hpp"
#include "tracecert/polynomial.hpp"

namespace tracecert {

inline constexpr std::uint32_t kDefaultSymbolicGate = 8;

// Square grid of formal partial derivatives, entry (i,j) = df_i/dx_j.
struct JacobianMatrix {
  std::uint32_t n = 0;
  std::vector<std::vector<SparsePolynomial>> entries;
  std::vector<std::uint32_t> chosen_indices;  // provenance: 1-based indices into the family
};

inline JacobianMatrix jacobian(const std::vector<SparsePolynomial>& fs,
                               std::vector<std::uint32_t> chosen_indices = {}) {
  if (fs.empty()) throw Error("empty polynomial list");
  const std::uint32_t n = static_cast<std::uint32_t>(fs.size());
  if (fs.front().variable_count() != n)
    throw Error("need exactly n polynomials in n variables, got " + std::to_string(n) + " polynomials in " +
                std::to_string(fs.front().variable_count()) + " variables");
  JacobianMatrix m;
  m.n = n;
  if (chosen_indices.empty()) {
    for (std::uint32_t i = 1; i <= n; ++i) chosen_indices.push_back(i);
  } else if (chosen_indices.size() != n) {
    throw Error("provenance index count does not match matrix size");
  }
  m.chosen_indices = std::move(chosen_indices);
  for (const SparsePolynomial& f : fs) {
    if (f.variable_count() != n) throw Error("variable count mismatch across polynomials");
    std::vector<SparsePolynomial> row;
    row.reserve(n);
    for (std::uint32_t v = 1; v <= n; ++v) row.push_back(f.partial_derivative(v));
    m.entries.push_back(std::move(row));
  }
  return m;
}

enum class CertStatus { CertifiedNonzero, ProbablyZero, ExactZero };

inline std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedNonzero: return "CERTIFIED_NONZERO";
    case CertStatus::ProbablyZero: return "PROBABLY_ZERO";
    case CertStatus::ExactZero: return "EXACT_ZERO";
  }
  throw Error("unreachable certificate status");
}

inline CertStatus cert_status_from_string(const std::string& s) {
  if (s == "CERTIFIED_NONZERO") return CertStatus::CertifiedNonzero;
  if (s == "PROBABLY_ZERO") return CertStatus::ProbablyZero;
  if (s == "EXACT_ZERO") return CertStatus::ExactZero;
  throw Error("unknown certificate status: " + s);
}

// A CERTIFIED_NONZERO certificate is a deterministic proof: re-evaluating the
// matrix entries at the witness and taking the exact integer determinant must
// reproduce det_value != 0.  PROBABLY_ZERO is evidence, never a conclusion.
struct NonvanishingCertificate {
  CertStatus status = CertStatus::ProbablyZero;
  std::vector<Int> witness;
  Int det_value = 0;
  std::vector<std::uint32_t> chosen_indices;
  std::uint64_t seed = 0;
  std::uint32_t trials_used = 0;
  Int coordinate_bound = 0;
  Rat failure_probability_bound = 0;  // meaningful only for PROBABLY_ZERO
};

// Upper bound on deg det: sum over rows of the largest entry degree.
inline Int determinant_degree_bound(const JacobianMatrix& m) {
  Int total = 0;
  for (const auto& row : m.entries) {
    std::int64_t best = 0;
    for (const SparsePolynomial& e : row) best = std::max(best, e.total_degree());
    total += best;
  }
  return total;
}

// Witness coordinates are a pure function of (seed, trial): trial tau draws
// x_1..x_n in order from seeded_rng(seed, tau).
inline std::vector<Int> witness_point(std::uint64_t seed, std::uint32_t trial, std::uint32_t n, const Int& bound) {
  std::mt19937_64 rng = seeded_rng(seed, trial);
  std::vector<Int> w;
  w.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) w.push_back(draw_in_range(rng, bound));
  return w;
}

inline Int evaluate_determinant_at(const JacobianMatrix& m, const std::vector<Int>& witness) {
  std::vector<std::vector<Int>> grid(m.n, std::vector<Int>(m.n));
  for (std::uint32_t i = 0; i < m.n; ++i)
    for (std::uint32_t j = 0; j < m.n; ++j) grid[i][j] = m.entries[i][j].evaluate(witness);
  return integer_determinant(std::move(grid));
}

// Exact determinant polynomial via fraction-free elimination over Z[x].
inline SparsePolynomial symbolic_determinant(const JacobianMatrix& m, std::uint32_t gate = kDefaultSymbolicGate) {
  if (m.n > gate)
    throw Error("symbolic determinant gate exceeded: n = " + std::to_string(m.n) + " > gate = " + std::to_string(gate));
  const std::uint32_t nvars = m.entries[0][0].variable_count();
  return fraction_free_determinant<SparsePolynomial>(m.entries, SparsePolynomial::constant(nvars, 1));
}

// Schwartz-Zippel certification.  One nonzero exact evaluation proves
// det != 0; `trials` zero evaluations bound the chance of a missed nonzero
// determinant by (degree_bound / bound)^trials, which the caller must keep
// meaningful: bound >= 2 * degree_bound is enforced, not silently weakened.
inline NonvanishingCertificate certify_nonvanishing(const JacobianMatrix& m,
                                                    std::uint64_t seed,
                                                    std::uint32_t trials,
                                                    const Int& bound,
                                                    bool exact_mode = false,
                                                    std::uint32_t gate = kDefaultSymbolicGate) {
  if (trials < 1) throw Error("need at least one trial");
  const Int degree_bound = determinant_degree_bound(m);
  if (bound < 1 || bound < 2 * degree_bound)
    throw Error("coordinate bound " + to_decimal(bound) + " too small for the Schwartz-Zippel contract (need >= " +
                to_decimal(Int(2 * degree_bound)) + ")");

  NonvanishingCertificate cert;
  cert.chosen_indices = m.chosen_indices;
  cert.seed = seed;
  cert.coordinate_bound = bound;

  if (exact_mode && symbolic_determinant(m, gate).is_zero()) {
    cert.status = CertStatus::ExactZero;
    cert.trials_used = 0;
    return cert;
  }

  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    std::vector<Int> w = witness_point(seed, trial, m.n, bound);
    Int det = evaluate_determinant_at(m, w);
    if (det != 0) {
      cert.status = CertStatus::CertifiedNonzero;
      cert.witness = std::move(w);
      cert.det_value = std::move(det);
      cert.trials_used = trial + 1;
      return cert;
    }
  }
  cert.status = CertStatus::ProbablyZero;
  cert.trials_used = trials;
  cert.failure_probability_bound = Rat(int_pow(degree_bound, trials), int_pow(bound, trials));
  return cert;
}

inline bool reverify(const NonvanishingCertificate& cert, const JacobianMatrix& m) {
  if (cert.status != CertStatus::CertifiedNonzero)
    throw Error("only CERTIFIED_NONZERO certificates can be re-verified");
  if (cert.witness.size() != m.n) throw Error("witness length does not match matrix size");
  Int det = evaluate_determinant_at(m, cert.witness);
  return det != 0 && det == cert.det_value;
}

}  // namespace tracecert
