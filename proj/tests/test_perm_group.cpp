#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "tracecert/perm_group.hpp"

using namespace tracecert;

namespace {

std::vector<Permutation> perms(std::uint32_t degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> out;
  for (const std::string& s : cycles) out.push_back(parse_permutation(s, degree));
  return out;
}

}  // namespace

TEST_CASE("closure generates S3 in a generator-order-independent sequence", "[permgroup]") {
  PermutationGroup g = close_group(perms(3, {"(1 2)", "(1 2 3)"}));
  REQUIRE(g.order() == 6);
  REQUIRE(g.degree() == 3);
  std::vector<std::string> sequence;
  for (const Permutation& e : g.elements()) sequence.push_back(e.cycle_string());
  REQUIRE(sequence == std::vector<std::string>{"()", "(1 2)", "(1 2 3)", "(2 3)", "(1 3 2)", "(1 3)"});

  PermutationGroup reversed = close_group(perms(3, {"(1 2 3)", "(1 2)"}));
  REQUIRE(reversed.elements() == g.elements());
}

TEST_CASE("closure handles the trivial and cyclic cases", "[permgroup]") {
  PermutationGroup trivial = close_group({}, kDefaultGroupCap, 4);
  REQUIRE(trivial.order() == 1);
  REQUIRE(trivial.degree() == 4);
  REQUIRE_FALSE(trivial.is_transitive());

  PermutationGroup c4 = close_group(perms(4, {"(1 2 3 4)"}));
  REQUIRE(c4.order() == 4);
  REQUIRE(c4.is_transitive());
  REQUIRE(c4.contains(parse_permutation("(1 3)(2 4)", 4)));
}

TEST_CASE("closure enforces the order cap", "[permgroup]") {
  REQUIRE_THROWS_AS(close_group(perms(4, {"(1 2)", "(1 2 3 4)"}), 10), Error);
  REQUIRE_NOTHROW(close_group(perms(4, {"(1 2)", "(1 2 3 4)"}), 24));
  REQUIRE_THROWS_AS(close_group(perms(3, {"(1 2)"}), 0), Error);
  std::vector<Permutation> mixed = {parse_permutation("(1 2)", 3), parse_permutation("(1 2)", 4)};
  REQUIRE_THROWS_AS(close_group(std::move(mixed)), Error);
}

TEST_CASE("from_elements validates closure and preserves order", "[permgroup]") {
  std::vector<std::string> listed = {"()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"};
  PermutationGroup g = PermutationGroup::from_elements(perms(3, listed));
  REQUIRE(g.order() == 6);
  for (std::size_t i = 0; i < listed.size(); ++i) REQUIRE(g.elements()[i].cycle_string() == listed[i]);
  REQUIRE(g.index_of(parse_permutation("(2 3)", 3)) == 3);

  REQUIRE_THROWS_AS(PermutationGroup::from_elements(perms(3, {"()", "(1 2)", "(1 2 3)"})), Error);
  REQUIRE_THROWS_AS(PermutationGroup::from_elements(perms(3, {"()", "(1 2)", "(1 2)"})), Error);
  REQUIRE_THROWS_AS(PermutationGroup::from_elements({}), Error);
}

TEST_CASE("membership and indexing", "[permgroup]") {
  PermutationGroup g = close_group(perms(3, {"(1 2)", "(1 2 3)"}));
  REQUIRE(g.contains(parse_permutation("(1 3)", 3)));
  REQUIRE(g.index_of(Permutation(3)) == 1);
  PermutationGroup c3 = close_group(perms(3, {"(1 2 3)"}));
  REQUIRE_FALSE(c3.contains(parse_permutation("(1 2)", 3)));
  REQUIRE_THROWS_AS(c3.index_of(parse_permutation("(1 2)", 3)), Error);
}

TEST_CASE("point stabilizer keeps the parent element order", "[permgroup]") {
  PermutationGroup s4 = close_group(perms(4, {"(1 2)", "(1 2 3 4)"}));
  PermutationGroup h = point_stabilizer(s4);
  REQUIRE(h.order() == 6);
  for (const Permutation& e : h.elements()) REQUIRE(e(1) == 1);

  PermutationGroup h3 = point_stabilizer(s4, 3);
  REQUIRE(h3.order() == 6);
  for (const Permutation& e : h3.elements()) REQUIRE(e(3) == 3);
  REQUIRE_THROWS_AS(point_stabilizer(s4, 5), Error);
}

TEST_CASE("normalizer of the D8 point stabilizer has order 4", "[permgroup]") {
  PermutationGroup d8 = close_group(perms(4, {"(1 2 3 4)", "(2 4)"}));
  REQUIRE(d8.order() == 8);
  PermutationGroup h = point_stabilizer(d8);
  REQUIRE(h.order() == 2);
  PermutationGroup n = normalizer(d8, h);
  REQUIRE(n.order() == 4);
  REQUIRE(n.contains(parse_permutation("(1 3)", 4)));
  REQUIRE(n.contains(parse_permutation("(1 3)(2 4)", 4)));
}

TEST_CASE("normalizer of the trivial subgroup is everything", "[permgroup]") {
  PermutationGroup s3 = close_group(perms(3, {"(1 2)", "(1 2 3)"}));
  PermutationGroup trivial = point_stabilizer(close_group(perms(3, {"(1 2 3)"})));
  REQUIRE(trivial.order() == 1);
  REQUIRE(normalizer(s3, trivial).order() == 6);

  PermutationGroup other = close_group(perms(4, {"(1 2)"}));
  REQUIRE_THROWS_AS(normalizer(s3, other), Error);
}

TEST_CASE("regular representation acts by left multiplication", "[permgroup]") {
  std::vector<std::string> listed = {"()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"};
  PermutationGroup s3 = PermutationGroup::from_elements(perms(3, listed));
  PermutationGroup reg = regular_representation(s3);
  REQUIRE(reg.degree() == 6);
  REQUIRE(reg.order() == 6);
  REQUIRE(reg.elements()[0].is_identity());
  REQUIRE(reg.elements()[1].cycle_string() == "(1 2)(3 5)(4 6)");
  REQUIRE(reg.is_transitive());
  // rho(g)(1) = index of g
  for (std::size_t i = 0; i < 6; ++i) REQUIRE(reg.elements()[i](1) == i + 1);
}

TEST_CASE("regular representation needs the identity first", "[permgroup]") {
  std::vector<Permutation> swapped = perms(3, {"(1 2)", "()", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"});
  PermutationGroup g = PermutationGroup::from_elements(std::move(swapped));
  REQUIRE_THROWS_AS(regular_representation(g), Error);
}

TEST_CASE("product group is the Klein four group for C2 x C2", "[permgroup]") {
  PermutationGroup c2 = close_group(perms(2, {"(1 2)"}));
  PermutationGroup v4 = product_group(c2, c2);
  REQUIRE(v4.degree() == 4);
  REQUIRE(v4.order() == 4);
  REQUIRE(v4.is_transitive());
  std::vector<std::string> sequence;
  for (const Permutation& e : v4.elements()) sequence.push_back(e.cycle_string());
  REQUIRE(sequence == std::vector<std::string>{"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
}

TEST_CASE("product group point labels are a-major lexicographic", "[permgroup]") {
  PermutationGroup s3 = close_group(perms(3, {"(1 2)", "(1 2 3)"}));
  PermutationGroup c2 = close_group(perms(2, {"(1 2)"}));
  PermutationGroup prod = product_group(s3, c2);
  REQUIRE(prod.degree() == 6);
  REQUIRE(prod.order() == 12);
  // (identity, swap) exchanges q within every p block
  REQUIRE(prod.elements()[1].cycle_string() == "(1 2)(3 4)(5 6)");
}

TEST_CASE("malle constant minimizes the index over non-identity elements", "[permgroup]") {
  REQUIRE(malle_constant(close_group(perms(3, {"(1 2)", "(1 2 3)"}))) == Rat(1));
  REQUIRE(malle_constant(close_group(perms(4, {"(1 2 3 4)"}))) == Rat(1, 2));
  std::vector<std::string> listed = {"()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"};
  PermutationGroup reg = regular_representation(PermutationGroup::from_elements(perms(3, listed)));
  REQUIRE(malle_constant(reg) == Rat(1, 3));
  REQUIRE_THROWS_AS(malle_constant(close_group({}, kDefaultGroupCap, 3)), Error);
}

TEST_CASE("transitivity detection", "[permgroup]") {
  REQUIRE(close_group(perms(3, {"(1 2 3)"})).is_transitive());
  REQUIRE_FALSE(close_group(perms(3, {"(1 2)"})).is_transitive());
  REQUIRE_FALSE(close_group(perms(4, {"(1 2)", "(3 4)"})).is_transitive());
}
