#include "bracelab/abelian.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hom_extend.hpp"

namespace bracelab {

namespace {

bool image_set_abelian(const FiniteGroup& g, const std::vector<Elem>& images) {
  std::vector<Elem> im(images);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  for (size_t i = 0; i < im.size(); ++i)
    for (size_t j = i + 1; j < im.size(); ++j)
      if (g.mul(im[i], im[j]) != g.mul(im[j], im[i])) return false;
  return true;
}

bool compute_fpf(const std::vector<Elem>& images) {
  for (size_t x = 1; x < images.size(); ++x)
    if (images[x] == static_cast<Elem>(x)) return false;
  return true;
}

}  // namespace

AbelianMap make_abelian_map(GroupPtr g, std::vector<Elem> images) {
  GroupMap m = make_group_map(g, g, std::move(images));
  if (!image_set_abelian(*g, m.images))
    throw invariant_error("map image is not abelian");
  for (const auto& cls : g->classes()) {
    for (size_t i = 1; i < cls.size(); ++i)
      if (m.images[cls[i]] != m.images[cls[0]])
        throw invariant_error("abelian map not constant on a conjugacy class");
  }
  AbelianMap out;
  out.group = std::move(m.source);
  out.images = std::move(m.images);
  out.fixed_point_free = compute_fpf(out.images);
  return out;
}

AbelianMap trivial_abelian_map(GroupPtr g) {
  std::vector<Elem> images(g->order(), 0);
  return make_abelian_map(std::move(g), std::move(images));
}

bool is_fixed_point_free(const AbelianMap& psi) {
  return compute_fpf(psi.images);
}

std::vector<AbelianMap> enumerate_abelian_maps(const GroupPtr& g,
                                               int order_bound) {
  int n = g->order();
  if (n > order_bound)
    throw cap_error("enumerate_abelian_maps: order exceeds bound");

  std::vector<Elem> gens = generating_set(*g);
  std::vector<AbelianMap> out;
  if (gens.empty()) {
    out.push_back(trivial_abelian_map(g));
    return out;
  }

  // images of a generator of order k must have order dividing k
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int k = g->element_order(gens[i]);
    for (Elem h = 0; h < n; ++h)
      if (k % g->element_order(h) == 0) candidates[i].push_back(h);
  }

  std::vector<Elem> chosen(gens.size(), 0);
  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == gens.size()) {
      auto img = detail::extend_hom(*g, *g, gens, chosen, false);
      if (!img) return;
      if (!image_set_abelian(*g, *img)) return;
      AbelianMap m;
      m.group = g;
      m.images = std::move(*img);
      m.fixed_point_free = compute_fpf(m.images);
      out.push_back(std::move(m));
      return;
    }
    for (Elem cand : candidates[level]) {
      chosen[level] = cand;
      rec(level + 1);
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(),
            [](const AbelianMap& a, const AbelianMap& b) {
              return a.images < b.images;
            });
  return out;
}

AbelianMap quasi_inverse(const AbelianMap& psi) {
  if (!psi.fixed_point_free)
    throw spec_error("quasi_inverse requires a fixed point free map");
  const auto& g = *psi.group;
  int n = g.order();
  std::vector<Elem> images(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem k = g.mul(x, psi(g.inv(x)));  // g psi(g^-1) ranges over all of G
    if (images[k] >= 0)
      throw invariant_error("quasi_inverse: defining assignment collides");
    images[k] = psi(g.inv(x));
  }
  AbelianMap qi = make_abelian_map(psi.group, std::move(images));
  if (!qi.fixed_point_free)
    throw invariant_error("quasi_inverse: result is not fixed point free");
  return qi;
}

AbelianMap conjugate_map(const AbelianMap& psi, const GroupMap& phi) {
  if (!same_group(phi.source, psi.group) || !same_group(phi.target, psi.group))
    throw spec_error("conjugate_map: automorphism is not on the same group");
  if (!phi.is_bijective())
    throw spec_error("conjugate_map: map is not an automorphism");
  GroupMap inv = inverse_of(phi);
  std::vector<Elem> images(psi.images.size());
  for (Elem x = 0; x < static_cast<Elem>(images.size()); ++x)
    images[x] = inv(psi(phi(x)));
  return make_abelian_map(psi.group, std::move(images));
}

AbelianMap normal_complement_map(const GroupPtr& g, const Subgroup& normal_part,
                                 const Subgroup& abelian_part) {
  if (!same_group(normal_part.parent, g) || !same_group(abelian_part.parent, g))
    throw spec_error("normal_complement_map: subgroups of a different group");
  if (!is_normal(normal_part))
    throw spec_error("normal_complement_map: first factor is not normal");
  for (Elem a : abelian_part.members)
    for (Elem b : abelian_part.members)
      if (g->mul(a, b) != g->mul(b, a))
        throw spec_error("normal_complement_map: complement is not abelian");
  for (Elem a : normal_part.members)
    if (a != 0 && abelian_part.contains(a))
      throw spec_error("normal_complement_map: factors intersect");
  if (normal_part.order() * abelian_part.order() != g->order())
    throw spec_error("normal_complement_map: orders do not multiply to |G|");

  std::vector<Elem> images(g->order(), -1);
  for (Elem h : normal_part.members)
    for (Elem k : abelian_part.members) {
      Elem x = g->mul(h, k);
      if (images[x] >= 0)
        throw spec_error("normal_complement_map: decomposition not unique");
      images[x] = k;
    }
  return make_abelian_map(g, std::move(images));
}

}  // namespace bracelab
