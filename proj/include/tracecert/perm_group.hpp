#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tracecert/bigint.hpp"
#include "tracecert/permutation.hpp"

namespace tracecert {

// Exhaustive algorithms throughout; closure and normalizer are quadratic-ish
// in the order, so inputs are capped.  The intended regime is small groups of
// possibly large degree.
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

class PermutationGroup {
 public:
  // Breadth-first closure.  Each BFS level is sorted lexicographically before
  // insertion, so the element sequence does not depend on generator order.
  static PermutationGroup closure(std::vector<Permutation> generators,
                                  std::uint64_t cap = kDefaultGroupCap,
                                  std::uint32_t degree = 0) {
    if (cap < 1) throw Error("group cap must be at least 1");
    if (degree == 0) degree = generators.empty() ? 1 : generators.front().degree();
    for (const Permutation& g : generators)
      if (g.degree() != degree) throw Error("generators disagree on degree");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    PermutationGroup result;
    result.degree_ = degree;
    result.push_element(Permutation(degree));
    std::vector<Permutation> frontier = result.elements_;
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& cur : frontier)
        for (const Permutation& gen : generators) {
          Permutation prod = cur * gen;
          if (!result.index_.count(prod)) next.push_back(std::move(prod));
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (result.elements_.size() + next.size() > cap)
        throw Error("group order exceeds cap " + std::to_string(cap));
      for (Permutation& p : next) result.push_element(std::move(p));
      frontier.clear();
      for (std::size_t i = result.elements_.size() - next.size(); i < result.elements_.size(); ++i)
        frontier.push_back(result.elements_[i]);
    }
    for (const Permutation& g : generators) result.generators_.push_back(g);
    if (result.generators_.empty()) result.generators_.push_back(Permutation(degree));
    return result;
  }

  // Validates closure under composition; identity and inverses follow for a
  // finite closed set.  The given element order is preserved (it defines the
  // point labels of a regular representation built on top).
  static PermutationGroup from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) throw Error("element list is empty");
    const std::uint32_t degree = elements.front().degree();
    PermutationGroup result;
    result.degree_ = degree;
    for (Permutation& g : elements) {
      if (g.degree() != degree) throw Error("elements disagree on degree");
      if (result.index_.count(g)) throw Error("duplicate element " + g.cycle_string());
      result.push_element(std::move(g));
    }
    for (const Permutation& a : result.elements_)
      for (const Permutation& b : result.elements_)
        if (!result.index_.count(a * b))
          throw Error("element list is not closed: " + a.cycle_string() + " * " + b.cycle_string() + " is missing");
    if (!result.index_.count(Permutation(degree)))
      throw Error("element list lacks the identity");
    result.generators_ = result.elements_;
    return result;
  }

  std::uint32_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& g) const { return index_.count(g) != 0; }

  // 1-based position in the element sequence.
  std::uint32_t index_of(const Permutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw Error("element " + g.cycle_string() + " not in group");
    return it->second + 1;
  }

  bool is_transitive() const {
    std::vector<bool> seen(degree_, false);
    seen[0] = true;
    std::vector<std::uint32_t> stack{1};
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::uint32_t p = stack.back();
      stack.pop_back();
      for (const Permutation& g : generators_) {
        std::uint32_t q = g.images()[p - 1];
        if (!seen[q - 1]) {
          seen[q - 1] = true;
          ++reached;
          stack.push_back(q);
        }
      }
    }
    return reached == degree_;
  }

  // Subgroups constructed from an already validated parent skip revalidation.
  static PermutationGroup from_subgroup_elements(std::vector<Permutation> elements, std::uint32_t degree) {
    PermutationGroup result;
    result.degree_ = degree;
    for (Permutation& g : elements) result.push_element(std::move(g));
    result.generators_ = result.elements_;
    return result;
  }

 private:
  PermutationGroup() = default;

  void push_element(Permutation g) {
    index_.emplace(g, static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(std::move(g));
  }

  std::uint32_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

inline PermutationGroup close_group(std::vector<Permutation> generators,
                                    std::uint64_t cap = kDefaultGroupCap,
                                    std::uint32_t degree = 0) {
  return PermutationGroup::closure(std::move(generators), cap, degree);
}

// H = {g in G : g(point) = point}, in G's element order.
inline PermutationGroup point_stabilizer(const PermutationGroup& g, std::uint32_t point = 1) {
  if (point < 1 || point > g.degree()) throw Error("stabilized point out of range");
  std::vector<Permutation> kept;
  for (const Permutation& e : g.elements())
    if (e.images()[point - 1] == point) kept.push_back(e);
  return PermutationGroup::from_subgroup_elements(std::move(kept), g.degree());
}

// N_G(H) by exhaustive conjugation test.  g H g^-1 subset H suffices since
// conjugation preserves cardinality.
inline PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h) {
  if (h.degree() != g.degree()) throw Error("subgroup degree mismatch");
  for (const Permutation& e : h.elements())
    if (!g.contains(e)) throw Error("not a subgroup: " + e.cycle_string() + " lies outside the group");
  std::vector<Permutation> kept;
  for (const Permutation& cand : g.elements()) {
    Permutation inv = cand.inverse();
    bool normalizes = true;
    for (const Permutation& e : h.elements())
      if (!h.contains(cand * e * inv)) {
        normalizes = false;
        break;
      }
    if (normalizes) kept.push_back(cand);
  }
  return PermutationGroup::from_subgroup_elements(std::move(kept), g.degree());
}

// Left-multiplication action on the group's own element sequence: point i
// corresponds to elements()[i-1].  The image is a group isomorphic to the
// base, so no closure revalidation is needed.
inline PermutationGroup regular_representation(const PermutationGroup& base) {
  if (!base.elements().front().is_identity())
    throw Error("regular representation requires the identity listed first");
  const std::uint32_t n = static_cast<std::uint32_t>(base.order());
  std::vector<Permutation> images;
  images.reserve(n);
  for (const Permutation& g : base.elements()) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 1; i <= n; ++i) img[i - 1] = base.index_of(g * base.elements()[i - 1]);
    images.emplace_back(std::move(img));
  }
  return PermutationGroup::from_subgroup_elements(std::move(images), n);
}

// Direct product acting on pairs (p, q) ordered lexicographically:
// point (p, q) has index (p-1)*deg(b) + q.  Element sequence is also
// lexicographic, a-major.
inline PermutationGroup product_group(const PermutationGroup& a, const PermutationGroup& b) {
  const std::uint64_t degree64 = static_cast<std::uint64_t>(a.degree()) * b.degree();
  if (degree64 > 0xffffffffULL) throw Error("product degree overflows");
  const std::uint32_t db = b.degree();
  std::vector<Permutation> elems;
  elems.reserve(a.order() * b.order());
  for (const Permutation& alpha : a.elements())
    for (const Permutation& beta : b.elements()) {
      std::vector<std::uint32_t> img(degree64);
      for (std::uint32_t p = 1; p <= a.degree(); ++p)
        for (std::uint32_t q = 1; q <= db; ++q)
          img[(p - 1) * db + (q - 1)] = (alpha.images()[p - 1] - 1) * db + beta.images()[q - 1];
      elems.emplace_back(std::move(img));
    }
  return PermutationGroup::from_subgroup_elements(std::move(elems), static_cast<std::uint32_t>(degree64));
}

// a(G) = 1 / min ind(g) over non-identity g, with ind(g) = n - #orbits(<g>).
// The orbit count of a single permutation equals its cycle count.
inline Rat malle_constant(const PermutationGroup& g) {
  if (g.order() < 2) throw Error("Malle constant undefined for the trivial group");
  std::uint32_t min_ind = 0;
  for (const Permutation& e : g.elements()) {
    if (e.is_identity()) continue;
    std::uint32_t ind = g.degree() - cycle_count(e);
    if (min_ind == 0 || ind < min_ind) min_ind = ind;
  }
  return Rat(1, min_ind);
}

}  // namespace tracecert
