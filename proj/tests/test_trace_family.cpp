#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "support.hpp"
#include "tracecert/trace_family.hpp"

using namespace tracecert;
using namespace tracecert::testing;

namespace {

ExponentVector ev(std::vector<std::uint32_t> entries) { return ExponentVector{std::move(entries)}; }

struct RegularS3Fixture {
  CosetSystem cs = s3_regular_system();
};

}  // namespace

TEST_CASE_METHOD(RegularS3Fixture, "first trace polynomial of the regular S3 family", "[tracefam]") {
  SparsePolynomial f1 = trace_polynomial(cs, ev({2, 1, 1, 0, 0, 0}));
  SparsePolynomial expected(6);
  expected.add_term(Monomial{2, 1, 1, 0, 0, 0}, 1);
  expected.add_term(Monomial{1, 2, 0, 0, 1, 0}, 1);
  expected.add_term(Monomial{1, 0, 2, 0, 0, 1}, 1);
  expected.add_term(Monomial{0, 0, 0, 2, 1, 1}, 1);
  expected.add_term(Monomial{0, 1, 0, 1, 2, 0}, 1);
  expected.add_term(Monomial{0, 0, 1, 1, 0, 2}, 1);
  REQUIRE(f1 == expected);
  REQUIRE(f1.term_count() == 6);
  REQUIRE(f1.total_degree() == 4);

  std::vector<Int> pt{1, 2, 3, 4, 5, 6};
  REQUIRE(f1.evaluate(pt) == 1192);

  // d f1 / d x1 picks up the three monomials containing x1.
  SparsePolynomial d1(6);
  d1.add_term(Monomial{1, 1, 1, 0, 0, 0}, 2);
  d1.add_term(Monomial{0, 2, 0, 0, 1, 0}, 1);
  d1.add_term(Monomial{0, 0, 2, 0, 0, 1}, 1);
  REQUIRE(f1.partial_derivative(1) == d1);
  REQUIRE(f1.partial_derivative(1).term_count() == 3);
}

TEST_CASE_METHOD(RegularS3Fixture, "trace polynomial degenerate and invalid inputs", "[tracefam]") {
  // All-zero exponents: every row contributes the constant monomial.
  REQUIRE(trace_polynomial(cs, ev({0, 0, 0, 0, 0, 0})) == SparsePolynomial::constant(6, 6));
  // Tr evaluated at the all-ones point counts the rows.
  SparsePolynomial f = trace_polynomial(cs, ev({3, 0, 2, 0, 0, 1}));
  std::vector<Int> ones(6, Int(1));
  REQUIRE(f.evaluate(ones) == 6);
  REQUIRE_THROWS_AS(trace_polynomial(cs, ev({1, 2, 3})), Error);
}

TEST_CASE("subset enumeration is lexicographic on the non-1 elements", "[tracefam]") {
  auto s63 = subsets_containing_one(6, 3);
  REQUIRE(s63.size() == 10);
  REQUIRE(s63.front() == std::vector<std::uint32_t>{1, 2, 3});
  REQUIRE(s63[4] == std::vector<std::uint32_t>{1, 3, 4});
  REQUIRE(s63.back() == std::vector<std::uint32_t>{1, 5, 6});

  auto s84 = subsets_containing_one(8, 4);
  REQUIRE(s84.size() == 35);
  REQUIRE(s84.front() == std::vector<std::uint32_t>{1, 2, 3, 4});
  REQUIRE(s84[23] == std::vector<std::uint32_t>{1, 3, 6, 8});
  REQUIRE(s84.back() == std::vector<std::uint32_t>{1, 6, 7, 8});

  // k = 2 and k = r-1 are the boundary cases that remain legal.
  REQUIRE(subsets_containing_one(3, 2) ==
          std::vector<std::vector<std::uint32_t>>{{1, 2}, {1, 3}});
  REQUIRE(subsets_containing_one(4, 3) ==
          std::vector<std::vector<std::uint32_t>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});

  REQUIRE_THROWS_AS(subsets_containing_one(6, 1), Error);
  REQUIRE_THROWS_AS(subsets_containing_one(6, 6), Error);
  REQUIRE_THROWS_AS(subsets_containing_one(2, 2), Error);
}

TEST_CASE("exponent vectors from subsets", "[tracefam]") {
  ExponentVector a = vector_from_subset({1, 3, 4}, 5, 6);
  REQUIRE(a.entries == std::vector<std::uint32_t>{5, 0, 1, 1, 0, 0});
  REQUIRE(a.height() == 7);

  REQUIRE_THROWS_AS(vector_from_subset({1, 2}, 1, 4), Error);
  REQUIRE_THROWS_AS(vector_from_subset({2, 3}, 2, 4), Error);
  REQUIRE_THROWS_AS(vector_from_subset({1, 3, 3}, 2, 4), Error);
  REQUIRE_THROWS_AS(vector_from_subset({1, 9}, 2, 4), Error);
}

TEST_CASE_METHOD(RegularS3Fixture, "k=3, t=2 family on regular S3", "[tracefam]") {
  auto [vf, tf] = build_family(cs, 3, 2);
  REQUIRE(vf.r == 6);
  REQUIRE(vf.subsets.size() == 10);
  REQUIRE(vf.vectors.size() == 10);
  const auto& frozen = family_vectors_r6();
  for (std::size_t i = 0; i < 10; ++i) {
    REQUIRE(vf.vectors[i].entries == frozen[i]);
    REQUIRE(vf.vectors[i].height() == 4);  // k + t - 1
  }
  REQUIRE(tf.vectors == vf.vectors);
  REQUIRE(tf.polys.size() == 10);
  REQUIRE(tf.n == 6);
  for (const SparsePolynomial& p : tf.polys) REQUIRE(p.total_degree() == 4);

  auto indep = check_linear_independence(tf);
  REQUIRE(indep.independent);
  REQUIRE(indep.rank == 10);
  REQUIRE(indep.dependency.empty());
}

TEST_CASE("k=4, t=2 family on S3 x D8", "[tracefam]") {
  CosetSystem cs = s3xd8_system();
  auto [vf, tf] = build_family(cs, 4, 2);
  REQUIRE(vf.vectors.size() == 35);
  const auto& prefix = family_vectors_r8_prefix();
  for (std::size_t i = 0; i < prefix.size(); ++i) REQUIRE(vf.vectors[i].entries == prefix[i]);
  REQUIRE(tf.n == 24);
  for (const ExponentVector& a : tf.vectors) REQUIRE(a.height() == 5);

  auto indep = check_linear_independence(tf);
  REQUIRE(indep.independent);
  REQUIRE(indep.rank == 35);
}

TEST_CASE_METHOD(RegularS3Fixture, "family construction rejects bad parameters", "[tracefam]") {
  REQUIRE_THROWS_AS(build_family(cs, 1, 2), Error);
  REQUIRE_THROWS_AS(build_family(cs, 6, 2), Error);
  REQUIRE_THROWS_AS(build_family(cs, 3, 1), Error);
}

TEST_CASE_METHOD(RegularS3Fixture, "explicit vector families and dependency certificates", "[tracefam]") {
  TraceFamily tf = family_from_vectors(cs, {ev({2, 1, 1, 0, 0, 0}), ev({2, 1, 1, 0, 0, 0})});
  REQUIRE(tf.k == 0);
  REQUIRE(tf.t == 0);
  REQUIRE(tf.polys.size() == 2);
  REQUIRE(tf.polys[0] == tf.polys[1]);

  auto indep = check_linear_independence(tf);
  REQUIRE_FALSE(indep.independent);
  REQUIRE(indep.rank == 1);
  REQUIRE(indep.dependency.size() == 2);

  // The certificate annihilates the coefficient rows monomial by monomial.
  std::map<Monomial, Rat, TermOrder> combo;
  for (std::size_t i = 0; i < tf.polys.size(); ++i)
    for (const auto& [m, c] : tf.polys[i].terms()) combo[m] += indep.dependency[i] * Rat(c);
  bool nonzero_cert = false;
  for (const Rat& c : indep.dependency) nonzero_cert = nonzero_cert || c != 0;
  REQUIRE(nonzero_cert);
  for (const auto& [m, c] : combo) REQUIRE(c == 0);

  REQUIRE_THROWS_AS(check_linear_independence(TraceFamily{}), Error);
}
