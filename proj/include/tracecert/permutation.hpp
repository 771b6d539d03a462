#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tracecert/bigint.hpp"

namespace tracecert {

// Permutation of {1,...,n} stored as the image table images_[i-1] = g(i).
//
// Composition convention, fixed once for the whole library:
//   (g*h)(x) = g(h(x)), i.e. the right factor acts first.
// Cycle strings follow the same rule: in "(1 2)(2 3)" the rightmost cycle
// is applied first, the left factor last, so the result maps 1 -> 2.
class Permutation {
 public:
  explicit Permutation(std::uint32_t degree) : images_(degree) {
    if (degree == 0) throw Error("permutation degree must be at least 1");
    std::iota(images_.begin(), images_.end(), 1u);
  }

  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    if (n == 0) throw Error("permutation degree must be at least 1");
    std::vector<bool> seen(n, false);
    for (std::uint32_t v : images_) {
      if (v < 1 || v > n) throw Error("image " + std::to_string(v) + " out of range [1, " + std::to_string(n) + "]");
      if (seen[v - 1]) throw Error("image " + std::to_string(v) + " repeated; not a bijection");
      seen[v - 1] = true;
    }
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }

  std::uint32_t operator()(std::uint32_t point) const {
    if (point < 1 || point > images_.size())
      throw Error("point " + std::to_string(point) + " out of range [1, " + std::to_string(images_.size()) + "]");
    return images_[point - 1];
  }

  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw Error("degree mismatch in composition");
    std::vector<std::uint32_t> img(g.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.images_[h.images_[i] - 1];
    return Permutation(std::move(img));
  }

  // Cycles ordered by smallest moved point, each starting at its smallest
  // point; fixed points omitted; identity rendered as "()".
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::uint32_t start = 1; start <= images_.size(); ++start) {
      if (done[start - 1] || images_[start - 1] == start) continue;
      out += '(';
      std::uint32_t p = start;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(p);
        done[p - 1] = true;
        p = images_[p - 1];
        first = false;
      } while (p != start);
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Parses cycle notation such as "(1 2)(3 4 5)" or "(1,2,3)"; "()" is the
// identity.  Cycles need not be disjoint; per the library convention the
// leftmost cycle is applied last.
inline Permutation parse_permutation(std::string_view text, std::uint32_t degree) {
  if (degree == 0) throw Error("permutation degree must be at least 1");
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw Error("empty cycle text");
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("expected '(' in cycle text at position " + std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      while (pos < text.size() && (text[pos] == ',')) { ++pos; skip_ws(); }
      if (pos == text.size()) throw Error("unterminated cycle");
      if (text[pos] == ')') { ++pos; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(std::string("unexpected character '") + text[pos] + "' in cycle text");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) throw Error("point " + std::to_string(value) + " out of range [1, " + std::to_string(degree) + "]");
        ++pos;
      }
      if (value == 0) throw Error("point 0 out of range [1, " + std::to_string(degree) + "]");
      std::uint32_t point = static_cast<std::uint32_t>(value);
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        throw Error("point " + std::to_string(point) + " repeated within one cycle");
      cycle.push_back(point);
    }
    any_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<std::uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 1u);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      // Fold left to right; the product applies later cycles first.
      result = result * Permutation(std::move(img));
    }
    skip_ws();
  }
  if (!any_cycle) throw Error("empty cycle text");
  return result;
}

inline std::uint32_t cycle_count(const Permutation& p) {
  std::uint32_t count = 0;
  std::vector<bool> done(p.degree(), false);
  for (std::uint32_t start = 1; start <= p.degree(); ++start) {
    if (done[start - 1]) continue;
    ++count;
    std::uint32_t q = start;
    do {
      done[q - 1] = true;
      q = p.images()[q - 1];
    } while (q != start);
  }
  return count;
}

}  // namespace tracecert
