#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutlab/constructors.hpp"
#include "cutlab/group.hpp"

namespace test_support {

using cutlab::Element;
using cutlab::FiniteGroup;

inline Element find_label(const FiniteGroup& g, const std::string& label) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

// Classes by conjugating with every element; nothing shared with the library
// except multiply and inverse.
inline std::vector<std::vector<Element>> brute_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < n; ++y) {
      const Element c = g.multiply(g.multiply(g.inverse(y), x), y);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : brute_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Is there a bijection f with f(0)=0 carrying one table to the other?
// Only used on small groups: tries every image of a generating set.
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (class_sizes(a) != class_sizes(b)) return false;
  const auto gens = a.generators();
  // Words: every element of a as a product of generators (BFS).
  const std::size_t n = a.order();
  std::vector<long> parent(n, -1), via(n, -1);
  std::vector<Element> order{0};
  std::vector<int> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = a.multiply(order[i], gens[k]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        via[y] = static_cast<long>(k);
        order.push_back(y);
      }
    }
  std::vector<Element> images(gens.size(), 0);
  auto try_map = [&]() {
    std::vector<Element> f(n, 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Element y = order[i];
      f[y] = b.multiply(f[parent[y]], images[via[y]]);
    }
    std::vector<int> hit(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (hit[f[x]]) return false;
      hit[f[x]] = 1;
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (f[a.multiply(x, y)] != b.multiply(f[x], f[y])) return false;
    return true;
  };
  // Exhaustive over generator images; fine for the small orders used in tests.
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) return try_map();
    for (Element y = 0; y < n; ++y) {
      images[k] = y;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace test_support
