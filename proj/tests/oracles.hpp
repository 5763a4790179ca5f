// Test-side brute-force oracles, deliberately independent of the library's
// enumeration path: no order-divisibility pruning, no homomorphism-closure
// propagation.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/group.hpp"

namespace oracles {

using bracelab::Elem;
using bracelab::FiniteGroup;
using bracelab::GroupPtr;

inline bool image_abelian(const FiniteGroup& g, const std::vector<Elem>& img) {
  std::vector<Elem> im(img);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  for (size_t i = 0; i < im.size(); ++i)
    for (size_t j = i + 1; j < im.size(); ++j)
      if (g.mul(im[i], im[j]) != g.mul(im[j], im[i])) return false;
  return true;
}

// Exhaustive scan over all |G|^(|G|-1) image arrays (images[0] = 0), pruned
// only by the homomorphism constraints already decidable at each prefix.
inline std::vector<std::vector<Elem>> abelian_maps_full_scan(const GroupPtr& g) {
  int n = g->order();
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> img(n, -1);
  img[0] = 0;
  if (n == 1) {
    found.push_back({0});
    return found;
  }
  // odometer over positions 1..n-1
  std::function<void(Elem)> rec = [&](Elem pos) {
    if (pos == n) {
      if (image_abelian(*g, img)) found.push_back(img);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      img[pos] = v;
      bool ok = true;
      for (Elem a = 0; a <= pos && ok; ++a)
        for (Elem b = 0; b <= pos && ok; ++b)
          if (g->mul(a, b) <= pos &&
              img[g->mul(a, b)] != g->mul(img[a], img[b]))
            ok = false;
      if (ok) rec(pos + 1);
    }
    img[pos] = -1;
  };
  rec(1);
  std::sort(found.begin(), found.end());
  return found;
}

// All |G|^k generator-image assignments; images derived through a fixed
// spanning word per element, then checked against the full multiplication
// table.
inline std::vector<std::vector<Elem>> abelian_maps_generator_scan(
    const GroupPtr& g) {
  int n = g->order();
  std::vector<Elem> gens = bracelab::generating_set(*g);
  int k = static_cast<int>(gens.size());
  std::vector<std::vector<Elem>> found;
  if (k == 0) {
    found.push_back(std::vector<Elem>(n, 0));
    return found;
  }

  // spanning words: reach[x] = (prev, gen index) with x = prev * gens[gi]
  std::vector<std::pair<Elem, int>> reach(n, {-1, -1});
  std::vector<Elem> bfs_order;
  reach[0] = {0, -1};
  bfs_order.push_back(0);
  for (size_t head = 0; head < bfs_order.size(); ++head) {
    Elem x = bfs_order[head];
    for (int gi = 0; gi < k; ++gi) {
      Elem y = g->mul(x, gens[gi]);
      if (reach[y].first < 0 && y != 0) {
        reach[y] = {x, gi};
        bfs_order.push_back(y);
      }
    }
  }

  std::vector<Elem> assign(k, 0);
  std::vector<Elem> img(n);
  std::function<void(int)> rec = [&](int level) {
    if (level == k) {
      img[0] = 0;
      for (size_t i = 1; i < bfs_order.size(); ++i) {
        Elem x = bfs_order[i];
        img[x] = g->mul(img[reach[x].first], assign[reach[x].second]);
      }
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (img[g->mul(a, b)] != g->mul(img[a], img[b])) return;
      if (image_abelian(*g, img)) found.push_back(img);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      assign[level] = v;
      rec(level + 1);
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// normality by the literal definition, every g and every h
inline bool is_normal_definition(const bracelab::Subgroup& h) {
  const auto& g = *h.parent;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem m : h.members)
      if (!h.contains(g.conj(x, m))) return false;
  return true;
}

// the full subgroup lattice by closure growth (small orders only)
inline std::vector<bracelab::Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<bracelab::Subgroup> out;
  std::vector<std::vector<Elem>> frontier{{0}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& members : frontier) {
      for (Elem x = 0; x < g->order(); ++x) {
        if (std::binary_search(members.begin(), members.end(), x)) continue;
        std::vector<Elem> gens(members);
        gens.push_back(x);
        auto closed = bracelab::subgroup_generated(g, gens);
        if (seen.insert(closed.members).second) next.push_back(closed.members);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& members : seen)
    out.push_back(bracelab::make_subgroup(g, members));
  return out;
}

}  // namespace oracles
