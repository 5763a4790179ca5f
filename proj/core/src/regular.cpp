#include "bracelab/regular.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bracelab {

namespace {

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (Elem v : p) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using PermSet = std::unordered_set<Perm, PermHash>;

PermSet to_set(const std::vector<Perm>& perms) {
  PermSet s;
  s.reserve(perms.size() * 2);
  for (const auto& p : perms) s.insert(p);
  return s;
}

bool is_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (Elem v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<Perm> greedy_perm_generators(const std::vector<Perm>& perms,
                                         int degree) {
  std::vector<Perm> gens;
  PermSet span;
  span.insert(identity_perm(degree));
  for (const auto& p : perms) {
    if (span.count(p)) continue;
    gens.push_back(p);
    // close the span under the new generator set
    std::vector<Perm> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          Perm y = compose_perms(x, s);
          if (span.insert(y).second) next.push_back(std::move(y));
          Perm z = compose_perms(s, x);
          if (span.insert(z).second) next.push_back(std::move(z));
        }
      frontier = std::move(next);
    }
    if (span.size() == perms.size()) break;
  }
  return gens;
}

}  // namespace

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose_perms(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

Perm invert_perm(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<Elem>(i);
  return out;
}

bool PermSubgroup::contains(const Perm& p) const {
  return std::binary_search(perms.begin(), perms.end(), p);
}

int PermSubgroup::index_of_label(Elem g) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == g) return static_cast<int>(i);
  return -1;
}

const Perm& PermSubgroup::by_label(Elem g) const {
  int i = index_of_label(g);
  if (i < 0) throw spec_error("no member with the requested label");
  return perms[i];
}

PermSubgroup make_perm_subgroup(GroupPtr base, std::vector<Perm> perms,
                                std::vector<Elem> labels) {
  if (!base) throw spec_error("perm subgroup needs a base group");
  int degree = base->order();
  if (!labels.empty() && labels.size() != perms.size())
    throw spec_error("labels must align with permutations");
  for (const auto& p : perms)
    if (!is_permutation(p, degree))
      throw invariant_error("member is not a permutation of the right degree");

  // canonical order: sort by image array, labels follow their permutation
  std::vector<int> order(perms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return perms[a] < perms[b]; });
  std::vector<Perm> sorted;
  std::vector<Elem> sorted_labels;
  sorted.reserve(perms.size());
  for (int i : order) {
    if (!sorted.empty() && sorted.back() == perms[i]) {
      if (!labels.empty())
        throw invariant_error("duplicate permutation in a labeled subgroup");
      continue;
    }
    sorted.push_back(std::move(perms[i]));
    if (!labels.empty()) sorted_labels.push_back(labels[i]);
  }

  PermSet members = to_set(sorted);
  if (!members.count(identity_perm(degree)))
    throw invariant_error("perm subgroup is missing the identity");
  for (const auto& a : sorted) {
    if (!members.count(invert_perm(a)))
      throw invariant_error("perm subgroup not closed under inverses");
    for (const auto& b : sorted)
      if (!members.count(compose_perms(a, b)))
        throw invariant_error("perm subgroup not closed under composition");
  }
  return PermSubgroup{std::move(base), std::move(sorted),
                      std::move(sorted_labels)};
}

PermSubgroup left_translations(const GroupPtr& g) {
  int n = g->order();
  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    for (Elem h = 0; h < n; ++h) perms[a][h] = g->mul(a, h);
  }
  return make_perm_subgroup(g, std::move(perms), std::move(labels));
}

PermSubgroup right_translations(const GroupPtr& g) {
  int n = g->order();
  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    for (Elem h = 0; h < n; ++h) perms[a][h] = g->mul(h, g->inv(a));
  }
  return make_perm_subgroup(g, std::move(perms), std::move(labels));
}

namespace {

PermSubgroup checked_regular_stable(GroupPtr base, std::vector<Perm> perms,
                                    std::vector<Elem> labels,
                                    const char* what) {
  PermSubgroup p =
      make_perm_subgroup(std::move(base), std::move(perms), std::move(labels));
  if (!is_regular(p))
    throw invariant_error(std::string(what) + ": result is not regular");
  if (!is_stable(p))
    throw invariant_error(std::string(what) + ": result is not stable");
  return p;
}

}  // namespace

PermSubgroup subgroup_from_map(const AbelianMap& psi) {
  const auto& g = *psi.group;
  int n = g.order();
  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    Elem left = g.mul(a, psi(g.inv(a)));  // a psi(a^-1)
    Elem right = psi(a);
    for (Elem h = 0; h < n; ++h) perms[a][h] = g.mul(g.mul(left, h), right);
  }
  return checked_regular_stable(psi.group, std::move(perms), std::move(labels),
                                "subgroup_from_map");
}

PermSubgroup opposite_subgroup_from_map(const AbelianMap& psi) {
  const auto& g = *psi.group;
  int n = g.order();
  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    for (Elem h = 0; h < n; ++h)
      perms[a][h] = g.mul(g.mul(g.mul(h, psi(g.inv(h))), a), psi(h));
  }
  PermSubgroup opp =
      checked_regular_stable(psi.group, std::move(perms), std::move(labels),
                             "opposite_subgroup_from_map");
  // |N'| = |N| plus elementwise commutation makes N' the centralizer of N.
  PermSubgroup n_psi = subgroup_from_map(psi);
  if (!commute_elementwise(n_psi, opp))
    throw invariant_error("opposite subgroup does not commute with N");
  return opp;
}

PermSubgroup lambda_rho_subgroup(const AbelianMap& psi) {
  if (!psi.fixed_point_free)
    throw spec_error(
        "lambda_rho_subgroup: map has a nontrivial fixed point, the set "
        "{lambda(g) rho(psi(g))} is not regular");
  const auto& g = *psi.group;
  int n = g.order();
  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    Elem r = g.inv(psi(a));
    for (Elem h = 0; h < n; ++h) perms[a][h] = g.mul(g.mul(a, h), r);
  }
  return checked_regular_stable(psi.group, std::move(perms), std::move(labels),
                                "lambda_rho_subgroup");
}

bool is_regular(const PermSubgroup& p) {
  int n = p.base->order();
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (const auto& perm : p.perms) {
    if (seen[perm[0]]) return false;  // evaluation at identity collides
    seen[perm[0]] = 1;
  }
  Perm id = identity_perm(n);
  for (const auto& perm : p.perms) {
    if (perm == id) continue;
    for (Elem h = 0; h < n; ++h)
      if (perm[h] == h) return false;
  }
  return true;
}

namespace {

bool stable_under(const PermSubgroup& p, const std::vector<Elem>& group_elems,
                  const std::vector<Perm>& members) {
  const auto& g = *p.base;
  int n = g.order();
  for (Elem k : group_elems) {
    Perm lam(n), lam_inv(n);
    for (Elem h = 0; h < n; ++h) {
      lam[h] = g.mul(k, h);
      lam_inv[h] = g.mul(g.inv(k), h);
    }
    for (const auto& eta : members) {
      Perm conj = compose_perms(lam, compose_perms(eta, lam_inv));
      if (!p.contains(conj)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_stable(const PermSubgroup& p) {
  std::vector<Elem> ggens = generating_set(*p.base);
  std::vector<Perm> pgens = greedy_perm_generators(p.perms, p.base->order());
  return stable_under(p, ggens, pgens);
}

bool is_stable_full(const PermSubgroup& p) {
  std::vector<Elem> all(p.base->order());
  std::iota(all.begin(), all.end(), 0);
  return stable_under(p, all, p.perms);
}

bool commute_elementwise(const PermSubgroup& a, const PermSubgroup& b) {
  int degree = a.base->order();
  // pairwise commutation of generators extends to the spans
  auto agens = greedy_perm_generators(a.perms, degree);
  auto bgens = greedy_perm_generators(b.perms, degree);
  for (const auto& x : agens)
    for (const auto& y : bgens)
      if (compose_perms(x, y) != compose_perms(y, x)) return false;
  return true;
}

bool same_induced_subgroup(const AbelianMap& psi1, const AbelianMap& psi2) {
  if (!same_group(psi1.group, psi2.group))
    throw spec_error("same_induced_subgroup: maps live on different groups");
  const auto& g = *psi1.group;
  const auto& center = g.center_members();
  auto central = [&](Elem z) {
    return std::binary_search(center.begin(), center.end(), z);
  };
  for (Elem x = 0; x < g.order(); ++x)
    if (!central(g.mul(psi2(x), psi1(g.inv(x))))) return false;
  return true;
}

MapSubgroups map_subgroups(const AbelianMap& psi) {
  const auto& gp = psi.group;
  const auto& g = *gp;
  const auto& center = g.center_members();
  auto central = [&](Elem z) {
    return std::binary_search(center.begin(), center.end(), z);
  };

  std::vector<Elem> kernel, lambda_src, fixed, rho_src;
  for (Elem x = 0; x < g.order(); ++x) {
    if (psi(x) == 0) kernel.push_back(x);
    if (central(psi(x))) lambda_src.push_back(x);
    if (psi(x) == x) fixed.push_back(x);
    if (central(g.mul(x, psi(g.inv(x))))) rho_src.push_back(x);
  }
  std::vector<Elem> product;
  for (Elem k : kernel)
    for (Elem f : fixed) product.push_back(g.mul(k, f));

  MapSubgroups out{make_subgroup(gp, kernel), make_subgroup(gp, lambda_src),
                   make_subgroup(gp, fixed), make_subgroup(gp, rho_src),
                   make_subgroup(gp, product)};
  if (!is_normal(out.kernel))
    throw invariant_error("map kernel is not normal");
  for (Elem a : out.fixed_points.members)
    for (Elem b : out.fixed_points.members)
      if (g.mul(a, b) != g.mul(b, a))
        throw invariant_error("fixed-point subgroup is not abelian");
  for (Elem a : out.kernel.members)
    if (!out.lambda_source.contains(a))
      throw invariant_error("kernel not contained in the lambda source");
  for (Elem a : out.fixed_points.members)
    if (!out.rho_source.contains(a))
      throw invariant_error("fixed points not contained in the rho source");
  for (Elem a : out.kernel.members)
    if (a != 0 && out.fixed_points.contains(a))
      throw invariant_error("kernel and fixed points intersect nontrivially");
  return out;
}

namespace {

PermSubgroup intersect_with(const PermSubgroup& n, const PermSubgroup& other) {
  PermSet others = to_set(other.perms);
  std::vector<Perm> kept;
  std::vector<Elem> kept_labels;
  for (int i = 0; i < n.size(); ++i) {
    if (!others.count(n.perms[i])) continue;
    kept.push_back(n.perms[i]);
    if (!n.labels.empty()) kept_labels.push_back(n.labels[i]);
  }
  return make_perm_subgroup(n.base, std::move(kept), std::move(kept_labels));
}

}  // namespace

PermSubgroup lambda_points(const PermSubgroup& n) {
  return intersect_with(n, left_translations(n.base));
}

PermSubgroup rho_points(const PermSubgroup& n) {
  return intersect_with(n, right_translations(n.base));
}

GroupPtr perm_subgroup_as_group(const PermSubgroup& p,
                                std::vector<int>* perm_to_elem) {
  int degree = p.base->order();
  int k = p.size();
  Perm id = identity_perm(degree);
  std::vector<int> order;
  order.reserve(k);
  for (int i = 0; i < k; ++i)
    if (p.perms[i] == id) order.push_back(i);
  if (order.empty())
    throw invariant_error("perm subgroup has no identity element");
  for (int i = 0; i < k; ++i)
    if (p.perms[i] != id) order.push_back(i);
  if (perm_to_elem) {
    perm_to_elem->assign(k, -1);
    for (int i = 0; i < k; ++i) (*perm_to_elem)[order[i]] = i;
  }

  std::unordered_map<Perm, int, PermHash> index;
  index.reserve(k * 2);
  for (int i = 0; i < k; ++i) index[p.perms[order[i]]] = i;

  std::vector<Elem> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto it = index.find(compose_perms(p.perms[order[i]], p.perms[order[j]]));
      if (it == index.end())
        throw invariant_error("perm subgroup not closed");
      table[static_cast<size_t>(i) * k + j] = it->second;
    }
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    if (!p.labels.empty())
      names[i] = p.base->name(p.labels[order[i]]);
    else
      names[i] = "p" + std::to_string(i);
  }
  std::ostringstream spec;
  spec << "perm-sub:" << k << ":" << p.base->spec();
  return FiniteGroup::create(spec.str(), std::move(table), std::move(names),
                             {});
}

GroupPtr circle_group(const AbelianMap& psi) {
  const auto& g = *psi.group;
  int n = g.order();
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    Elem left = g.mul(a, psi(g.inv(a)));
    for (Elem b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = g.mul(g.mul(left, b), psi(a));
  }
  return FiniteGroup::create("circle:" + g.spec(), std::move(table),
                             g.names(), {});
}

PermSubgroup transported_subgroup(const AbelianMap& psi, const GroupPtr& target,
                                  const GroupMap& alpha) {
  const auto& g = *psi.group;
  int n = g.order();
  if (target->order() != n)
    throw spec_error("transported_subgroup: target order differs");
  if (static_cast<int>(alpha.images.size()) != n || !alpha.is_bijective())
    throw spec_error("transported_subgroup: alpha is not a bijection");
  if (!same_group(alpha.target, target))
    throw spec_error("transported_subgroup: alpha target mismatch");
  // alpha must be an isomorphism from the circle group, checked directly
  // against the twisted law.
  auto twisted = [&](Elem a, Elem b) {
    return g.mul(g.mul(g.mul(a, psi(g.inv(a))), b), psi(a));
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (alpha(twisted(a, b)) != target->mul(alpha(a), alpha(b)))
        throw spec_error(
            "transported_subgroup: alpha is not a circle-group isomorphism");

  std::vector<Elem> alpha_inv(n);
  for (Elem a = 0; a < n; ++a) alpha_inv[alpha(a)] = a;

  std::vector<Perm> perms(n, Perm(n));
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = a;
    for (Elem m = 0; m < n; ++m)
      perms[a][m] = alpha(g.mul(a, alpha_inv[m]));
  }
  PermSubgroup p = checked_regular_stable(target, std::move(perms),
                                          std::move(labels),
                                          "transported_subgroup");
  std::vector<const Perm*> by_lab(n);
  for (int i = 0; i < p.size(); ++i) by_lab[p.labels[i]] = &p.perms[i];
  // label law pi_g pi_h = pi_{gh} makes g -> pi_g an isomorphism from G
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (compose_perms(*by_lab[a], *by_lab[b]) != *by_lab[g.mul(a, b)])
        throw invariant_error("transported subgroup: label law fails");
  // conjugation identity: ^m pi_g = pi_k with
  //   k = psi(w) w^-1 g w psi(w^-1),  w = alpha^-1(m^-1),
  // which reduces to k = w^-1 g w when psi is trivial.
  for (Elem m = 0; m < n; ++m) {
    Perm lam(n), lam_inv(n);
    for (Elem x = 0; x < n; ++x) {
      lam[x] = target->mul(m, x);
      lam_inv[x] = target->mul(target->inv(m), x);
    }
    Elem w = alpha_inv[target->inv(m)];
    for (Elem a = 0; a < n; ++a) {
      Perm conj = compose_perms(lam, compose_perms(*by_lab[a], lam_inv));
      Elem expect = g.mul(
          g.mul(g.mul(g.mul(psi(w), g.inv(w)), a), w), psi(g.inv(w)));
      if (conj != *by_lab[expect])
        throw invariant_error(
            "transported subgroup: conjugation identity fails");
    }
  }
  return p;
}

}  // namespace bracelab
