#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracecert/bigint.hpp"
#include "tracecert/permutation.hpp"

namespace tracecert {

// Exponent vector; length always equals the ambient variable count.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (std::uint32_t e : m) d += e;
  return d;
}

// Graded lexicographic, descending: map iteration starts at the leading term.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse polynomial over Z.  Invariants: no stored zero coefficients, all
// monomials have length variable_count(), terms held in canonical order.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::uint32_t variable_count) : nvars_(variable_count) {
    if (variable_count == 0) throw Error("polynomial needs at least one variable");
  }

  static SparsePolynomial constant(std::uint32_t nvars, Int value) {
    SparsePolynomial p(nvars);
    p.add_term(Monomial(nvars, 0), std::move(value));
    return p;
  }

  static SparsePolynomial variable(std::uint32_t nvars, std::uint32_t v) {
    SparsePolynomial p(nvars);
    Monomial m(nvars, 0);
    p.check_var(v);
    m[v - 1] = 1;
    p.add_term(std::move(m), 1);
    return p;
  }

  static SparsePolynomial monomial(std::uint32_t nvars, Monomial m, Int coeff) {
    SparsePolynomial p(nvars);
    if (m.size() != nvars) throw Error("monomial length does not match variable count");
    p.add_term(std::move(m), std::move(coeff));
    return p;
  }

  std::uint32_t variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int, TermOrder>& terms() const { return terms_; }

  // Total degree; the zero polynomial reports -1.
  std::int64_t total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<std::int64_t>(monomial_degree(terms_.begin()->first));
  }

  const std::pair<const Monomial, Int>& leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  void add_term(Monomial m, Int coeff) {
    if (m.size() != nvars_) throw Error("monomial length does not match variable count");
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend SparsePolynomial operator+(const SparsePolynomial& p, const SparsePolynomial& q) {
    p.check_same(q);
    SparsePolynomial out = p;
    for (const auto& [m, c] : q.terms_) out.add_term(m, c);
    return out;
  }

  friend SparsePolynomial operator-(const SparsePolynomial& p) {
    SparsePolynomial out(p.nvars_);
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend SparsePolynomial operator-(const SparsePolynomial& p, const SparsePolynomial& q) {
    p.check_same(q);
    SparsePolynomial out = p;
    for (const auto& [m, c] : q.terms_) out.add_term(m, -c);
    return out;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q) {
    p.check_same(q);
    SparsePolynomial out(p.nvars_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) {
        Monomial m(p.nvars_);
        for (std::uint32_t i = 0; i < p.nvars_; ++i) m[i] = mp[i] + mq[i];
        out.add_term(std::move(m), cp * cq);
      }
    return out;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& p, const Int& scalar) {
    SparsePolynomial out(p.nvars_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, c * scalar);
    return out;
  }

  friend bool operator==(const SparsePolynomial& p, const SparsePolynomial& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
  }

  SparsePolynomial partial_derivative(std::uint32_t v) const {
    check_var(v);
    SparsePolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[v - 1] == 0) continue;
      Monomial dm = m;
      dm[v - 1] -= 1;
      out.add_term(std::move(dm), c * m[v - 1]);
    }
    return out;
  }

  // Exact value at an integer point; with a modulus (must be prime) the
  // residue in [0, modulus) via modular exponentiation.
  Int evaluate(std::span<const Int> point, const std::optional<Int>& modulus = std::nullopt) const {
    if (point.size() != nvars_) throw Error("evaluation point length does not match variable count");
    if (modulus && !probably_prime(*modulus)) throw Error("modulus is not prime");
    Int total = 0;
    for (const auto& [m, c] : terms_) {
      Int term = modulus ? Int(c % *modulus) : c;
      for (std::uint32_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (modulus) {
          Int base = point[i] % *modulus;
          if (base < 0) base += *modulus;
          Int pw = boost::multiprecision::powm(base, Int(m[i]), *modulus);
          term = term * pw % *modulus;
        } else {
          term *= int_pow(point[i], m[i]);
        }
      }
      total = modulus ? Int((total + term) % *modulus) : Int(total + term);
    }
    if (modulus && total < 0) total += *modulus;
    return total;
  }

  // Dense coefficients of p(base + t*e_v) in ascending powers of t, via the
  // binomial expansion of each term.  Coefficient of t^1 equals the partial
  // derivative at base; the tests rely on that identity.
  std::vector<Int> univariate_restriction(std::span<const Int> base, std::uint32_t v) const {
    if (base.size() != nvars_) throw Error("evaluation point length does not match variable count");
    check_var(v);
    std::uint32_t max_e = 0;
    for (const auto& [m, c] : terms_) max_e = std::max(max_e, m[v - 1]);
    std::vector<Int> out(max_e + 1, Int(0));
    for (const auto& [m, c] : terms_) {
      Int rest = c;
      for (std::uint32_t i = 0; i < nvars_; ++i)
        if (i != v - 1 && m[i] > 0) rest *= int_pow(base[i], m[i]);
      const std::uint32_t e = m[v - 1];
      for (std::uint32_t s = 0; s <= e; ++s)
        out[s] += rest * binomial(e, s) * int_pow(base[v - 1], e - s);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  // Variable substitution x_i -> x_{g(i)}.
  SparsePolynomial permute_variables(const Permutation& g) const {
    if (g.degree() != nvars_) throw Error("permutation degree does not match variable count");
    SparsePolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial pm(nvars_, 0);
      for (std::uint32_t i = 0; i < nvars_; ++i) pm[g.images()[i] - 1] = m[i];
      out.add_term(std::move(pm), c);
    }
    return out;
  }

 private:
  void check_same(const SparsePolynomial& other) const {
    if (nvars_ != other.nvars_) throw Error("variable count mismatch");
  }
  void check_var(std::uint32_t v) const {
    if (v < 1 || v > nvars_) throw Error("variable index " + std::to_string(v) + " out of range [1, " + std::to_string(nvars_) + "]");
  }

  std::uint32_t nvars_;
  std::map<Monomial, Int, TermOrder> terms_;
};

// Quotient of an exact division; throws if the division is not exact.
// Standard leading-term cancellation: the leading monomial of the remainder
// strictly decreases in the term order, so the loop terminates.
inline SparsePolynomial exact_divide(const SparsePolynomial& num, const SparsePolynomial& den) {
  if (num.variable_count() != den.variable_count()) throw Error("variable count mismatch");
  if (den.is_zero()) throw Error("division by the zero polynomial");
  const std::uint32_t nvars = num.variable_count();
  SparsePolynomial quotient(nvars);
  SparsePolynomial rem = num;
  const auto& [dm, dc] = den.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    Monomial qm(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) {
      if (rm[i] < dm[i]) throw Error("inexact polynomial division");
      qm[i] = rm[i] - dm[i];
    }
    if (rc % dc != 0) throw Error("inexact polynomial division");
    SparsePolynomial piece = SparsePolynomial::monomial(nvars, std::move(qm), rc / dc);
    quotient = quotient + piece;
    rem = rem - piece * den;
  }
  return quotient;
}

}  // namespace tracecert
