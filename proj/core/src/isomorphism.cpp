#include <algorithm>
#include <functional>

#include "bracelab/group.hpp"
#include "hom_extend.hpp"

namespace bracelab {

namespace detail {

std::optional<std::vector<Elem>> extend_hom_partial(
    const FiniteGroup& source, const FiniteGroup& target,
    const std::vector<Elem>& gens, const std::vector<Elem>& gen_images,
    bool require_injective) {
  int n = source.order();
  std::vector<Elem> img(n, -1);
  std::vector<char> used(target.order(), 0);
  std::vector<Elem> known;
  known.reserve(n);

  auto assign = [&](Elem x, Elem v) -> bool {
    if (img[x] >= 0) return img[x] == v;
    if (require_injective && used[v]) return false;
    img[x] = v;
    used[v] = 1;
    known.push_back(x);
    return true;
  };

  if (!assign(0, 0)) return std::nullopt;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], gen_images[i])) return std::nullopt;

  // Every ordered pair (known[i], known[j]) with j <= i is processed when i
  // is reached; appended elements extend the same loop.
  for (size_t i = 0; i < known.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      Elem a = known[i], b = known[j];
      if (!assign(source.mul(a, b), target.mul(img[a], img[b])))
        return std::nullopt;
      if (!assign(source.mul(b, a), target.mul(img[b], img[a])))
        return std::nullopt;
    }
  return img;
}

std::optional<std::vector<Elem>> extend_hom(const FiniteGroup& source,
                                            const FiniteGroup& target,
                                            const std::vector<Elem>& gens,
                                            const std::vector<Elem>& gen_images,
                                            bool require_injective) {
  auto img = extend_hom_partial(source, target, gens, gen_images,
                                require_injective);
  if (!img) return std::nullopt;
  for (Elem v : *img)
    if (v < 0) return std::nullopt;  // generators do not span source
  return img;
}

}  // namespace detail

namespace {

// Backtracking over generator images; candidates filtered by element order
// and conjugacy-class size, visited in increasing element order so the
// first complete assignment is deterministic.
template <typename OnFound>
void search_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                         bool stop_at_first, OnFound&& on_found) {
  std::vector<Elem> gens = generating_set(g);
  if (gens.empty()) {
    if (g.order() == 1 && h.order() == 1) on_found(std::vector<Elem>{0});
    return;
  }
  std::vector<Elem> chosen;
  bool done = false;

  auto class_size = [](const FiniteGroup& grp, Elem a) {
    return static_cast<int>(grp.classes()[grp.class_of(a)].size());
  };

  std::function<void(size_t)> rec = [&](size_t level) {
    if (done) return;
    if (level == gens.size()) {
      auto img = detail::extend_hom(g, h, gens, chosen, true);
      if (img) {
        on_found(*img);
        if (stop_at_first) done = true;
      }
      return;
    }
    Elem src = gens[level];
    std::vector<Elem> prefix(gens.begin(), gens.begin() + level + 1);
    for (Elem cand = 0; cand < h.order() && !done; ++cand) {
      if (h.element_order(cand) != g.element_order(src)) continue;
      if (class_size(h, cand) != class_size(g, src)) continue;
      chosen.push_back(cand);
      if (detail::extend_hom_partial(g, h, prefix, chosen, true))
        rec(level + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::optional<GroupMap> find_isomorphism(const GroupPtr& g, const GroupPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  if (g->order() > 120)
    throw cap_error("find_isomorphism: order above the 120 cap");
  if (!(iso_fingerprint(*g) == iso_fingerprint(*h))) return std::nullopt;
  std::optional<GroupMap> out;
  search_isomorphisms(*g, *h, true, [&](const std::vector<Elem>& images) {
    out = GroupMap{g, h, images};
  });
  return out;
}

std::vector<GroupMap> enumerate_automorphisms(const GroupPtr& g) {
  if (g->order() > 120)
    throw cap_error("enumerate_automorphisms: order above the 120 cap");
  std::vector<GroupMap> out;
  search_isomorphisms(*g, *g, false, [&](const std::vector<Elem>& images) {
    out.push_back(GroupMap{g, g, images});
  });
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) {
    return a.images < b.images;
  });
  return out;
}

}  // namespace bracelab
