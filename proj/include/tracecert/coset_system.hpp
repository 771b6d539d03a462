#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tracecert/perm_group.hpp"

namespace tracecert {

// Coset decomposition G/H = g_1 H u ... u g_n H for transitive G with
// H = Stab_G(1).  Cosets biject with points via gH -> g(1), which makes
// every coset lookup a single table read.  The first r cosets are exactly
// those lying in N = N_G(H).
struct CosetSystem {
  PermutationGroup group;
  PermutationGroup stabilizer_H;
  PermutationGroup normalizer_N;
  std::vector<Permutation> reps{};  // g_1..g_n, g_1 = identity
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::vector<std::uint32_t> coset_of_point{};  // coset_of_point[p-1] = i with reps[i-1](1) = p
  std::vector<Permutation> pi{};                // pi[j-1] = right action of g_j, j in [1, r]
  Permutation relabel{1};                       // relabel(i) = reps[i-1](1)
};

namespace detail {

inline bool same_subgroup(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.order() != b.order()) return false;
  for (const Permutation& e : a.elements())
    if (!b.contains(e)) return false;
  return true;
}

}  // namespace detail

inline CosetSystem coset_system(const PermutationGroup& g,
                                const PermutationGroup& h,
                                const PermutationGroup& n_group,
                                const std::optional<std::vector<Permutation>>& ordering = std::nullopt) {
  if (!g.is_transitive()) throw Error("group is not transitive");
  const std::uint32_t n = g.degree();
  if (n < 2) throw Error("degree must be at least 2 (H = G is degenerate)");
  if (!detail::same_subgroup(h, point_stabilizer(g)))
    throw Error("H is not the stabilizer of point 1");
  if (!detail::same_subgroup(n_group, normalizer(g, h)))
    throw Error("N is not the normalizer of H");
  if (g.order() % h.order() != 0 || g.order() / h.order() != n)
    throw Error("index [G:H] does not equal the degree");

  CosetSystem cs{g, h, n_group};
  cs.n = n;
  cs.r = static_cast<std::uint32_t>(n_group.order() / h.order());

  // Lexicographically smallest element of each coset, bucketed by g(1).
  // A coset lies inside N or misses it entirely, since H <= N.
  std::vector<std::optional<Permutation>> min_rep(n);
  for (const Permutation& e : g.elements()) {
    std::uint32_t p = e.images()[0];
    if (!min_rep[p - 1] || e < *min_rep[p - 1]) min_rep[p - 1] = e;
  }
  std::vector<bool> in_n(n);
  for (std::uint32_t p = 1; p <= n; ++p) in_n[p - 1] = n_group.contains(*min_rep[p - 1]);

  if (ordering) {
    if (ordering->size() != n) throw Error("ordering must list exactly n coset representatives");
    std::vector<bool> seen(n, false);
    for (const Permutation& rep : *ordering) {
      if (rep.degree() != n || !g.contains(rep))
        throw Error("ordering entry " + rep.cycle_string() + " is not a group element");
      std::uint32_t p = rep.images()[0];
      if (seen[p - 1]) throw Error("ordering lists two representatives of one coset");
      seen[p - 1] = true;
    }
    if (!(*ordering)[0].is_identity()) throw Error("the first coset representative must be the identity");
    for (std::uint32_t i = 1; i <= n; ++i) {
      bool should_be_n = i <= cs.r;
      if (in_n[(*ordering)[i - 1].images()[0] - 1] != should_be_n)
        throw Error("ordering must place the normalizer cosets first");
    }
    cs.reps = *ordering;
  } else {
    for (std::uint32_t p = 1; p <= n; ++p)
      if (in_n[p - 1]) cs.reps.push_back(*min_rep[p - 1]);
    for (std::uint32_t p = 1; p <= n; ++p)
      if (!in_n[p - 1]) cs.reps.push_back(*min_rep[p - 1]);
  }

  cs.coset_of_point.assign(n, 0);
  std::vector<std::uint32_t> relabel_img(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::uint32_t p = cs.reps[i - 1].images()[0];
    cs.coset_of_point[p - 1] = i;
    relabel_img[i - 1] = p;
  }
  cs.relabel = Permutation(std::move(relabel_img));

  // pi_j(i) = coset index of g_i g_j, read off from (g_i g_j)(1) = g_i(g_j(1)).
  cs.pi.reserve(cs.r);
  for (std::uint32_t j = 1; j <= cs.r; ++j) {
    std::uint32_t target = cs.reps[j - 1].images()[0];
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 1; i <= n; ++i)
      img[i - 1] = cs.coset_of_point[cs.reps[i - 1].images()[target - 1] - 1];
    cs.pi.emplace_back(std::move(img));
  }
  return cs;
}

inline CosetSystem coset_system(const PermutationGroup& g,
                                const std::optional<std::vector<Permutation>>& ordering = std::nullopt) {
  PermutationGroup h = point_stabilizer(g);
  PermutationGroup n = normalizer(g, h);
  return coset_system(g, h, n, ordering);
}

inline const Permutation& right_action_pi(const CosetSystem& cs, std::uint32_t j) {
  if (j < 1 || j > cs.r) throw Error("pi index " + std::to_string(j) + " out of range [1, " + std::to_string(cs.r) + "]");
  return cs.pi[j - 1];
}

inline Permutation left_action_lambda(const CosetSystem& cs, const Permutation& g) {
  if (!cs.group.contains(g)) throw Error("element " + g.cycle_string() + " not in group");
  std::vector<std::uint32_t> img(cs.n);
  for (std::uint32_t i = 1; i <= cs.n; ++i)
    img[i - 1] = cs.coset_of_point[g.images()[cs.reps[i - 1].images()[0] - 1] - 1];
  return Permutation(std::move(img));
}

}  // namespace tracecert
