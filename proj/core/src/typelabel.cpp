#include <algorithm>
#include <functional>

#include "bracelab/regular.hpp"

namespace bracelab {

namespace {

bool is_prime_int(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool isomorphic(const GroupPtr& a, const GroupPtr& b) {
  return find_isomorphism(a, b).has_value();
}

// descending divisor chains d1 >= d2 >= ..., d_{i+1} | d_i, product = n.
// Exactly one chain matches an abelian group (its invariant factors).
void divisor_chains(int n, int max_head, std::vector<int>& prefix,
                    const std::function<bool(const std::vector<int>&)>& visit,
                    bool& done) {
  if (done) return;
  if (n == 1) {
    done = visit(prefix);
    return;
  }
  for (int d = std::min(n, max_head); d >= 2; --d) {
    if (n % d != 0) continue;
    prefix.push_back(d);
    divisor_chains(n / d, d, prefix, visit, done);
    prefix.pop_back();
    if (done) return;
  }
}

std::string chain_label(const std::vector<int>& chain) {
  std::string label;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) label += " x ";
    label += "C:" + std::to_string(chain[i]);
  }
  return label;
}

GroupPtr build_chain(const std::vector<int>& chain) {
  GroupPtr g = build_group("C:" + std::to_string(chain[0]));
  for (size_t i = 1; i < chain.size(); ++i)
    g = direct_product(g, build_group("C:" + std::to_string(chain[i])));
  return g;
}

// the nonabelian builder-family specs of a given order, in canonical order
std::vector<std::string> nonabelian_family_specs(int m) {
  std::vector<std::string> specs;
  if (m % 2 == 0 && m / 2 >= 3) specs.push_back("D:" + std::to_string(m / 2));
  long fact = 6;  // 3!
  for (int k = 3; fact <= 2L * m; fact *= ++k) {
    if (fact == m) specs.push_back("S:" + std::to_string(k));
    if (fact == 2L * m && k >= 4) specs.push_back("A:" + std::to_string(k));
  }
  for (int q = 2; q * q < m; ++q) {
    if (m % q != 0) continue;
    int p = m / q;
    if (is_prime_int(p) && is_prime_int(q) && p > q && (p - 1) % q == 0)
      specs.push_back("M:" + std::to_string(p) + ":" + std::to_string(q));
  }
  return specs;
}

}  // namespace

std::string group_type_label(const GroupPtr& m, const GroupPtr& base) {
  int n = m->order();
  if (base && base->order() == n && isomorphic(m, base)) return base->spec();
  if (n == 1) return "C:1";
  // cyclic
  for (Elem a = 0; a < n; ++a)
    if (m->element_order(a) == n) return "C:" + std::to_string(n);
  if (m->is_abelian()) {
    std::string found;
    std::vector<int> prefix;
    bool done = false;
    divisor_chains(n, n, prefix, [&](const std::vector<int>& chain) {
      if (chain.size() < 2) return false;  // cyclic was handled above
      if (isomorphic(m, build_chain(chain))) {
        found = chain_label(chain);
        return true;
      }
      return false;
    }, done);
    if (!found.empty()) return found;
  } else {
    for (const auto& spec : nonabelian_family_specs(n))
      if (isomorphic(m, build_group(spec))) return spec;
    // nonabelian family times an abelian cofactor
    for (int d = 6; d < n; ++d) {
      if (n % d != 0) continue;
      for (const auto& spec : nonabelian_family_specs(d)) {
        GroupPtr head = build_group(spec);
        std::string found;
        std::vector<int> prefix;
        bool done = false;
        divisor_chains(n / d, n / d, prefix,
                       [&](const std::vector<int>& chain) {
                         if (isomorphic(m, direct_product(head,
                                                          build_chain(chain)))) {
                           found = spec + " x " + chain_label(chain);
                           return true;
                         }
                         return false;
                       },
                       done);
        if (!found.empty()) return found;
      }
    }
  }
  return "unknown:order-" + std::to_string(n) + ":" +
         iso_fingerprint(*m).to_string();
}

std::string hgs_type(const PermSubgroup& n,
                     const std::optional<MapSubgroups>& ctx) {
  if (n.size() > 120) throw cap_error("hgs_type: subgroup above the 120 cap");
  GroupPtr m = perm_subgroup_as_group(n);
  if (ctx) {
    const Subgroup& g0 = ctx->kernel;
    const Subgroup& g1 = ctx->fixed_points;
    if (g0.order() * g1.order() == n.size()) {
      auto head = subgroup_as_group(g0);
      auto tail = subgroup_as_group(g1);
      if (!isomorphic(m, direct_product(head.group, tail.group)))
        throw invariant_error(
            "hgs_type: kernel-fixed product is not isomorphic to N");
      if (g1.order() == 1) return group_type_label(head.group, n.base);
      if (g0.order() == 1) return group_type_label(tail.group, n.base);
      return group_type_label(head.group) + " x " +
             group_type_label(tail.group);
    }
  }
  return group_type_label(m, n.base);
}

std::optional<std::string> product_decomposition(const AbelianMap& psi) {
  const auto& g = *psi.group;
  int n = g.order();
  MapSubgroups subs = map_subgroups(psi);
  PermSubgroup n_psi = subgroup_from_map(psi);

  std::vector<const Perm*> by_lab(n);
  for (int i = 0; i < n_psi.size(); ++i)
    by_lab[n_psi.labels[i]] = &n_psi.perms[i];

  // eta_{g0 g1} = lambda(g0) rho(g1^-1), and the assignment (g0,g1) ->
  // eta_{g0 g1} embeds kernel x fixed into N.
  const auto& k = subs.kernel.members;
  const auto& f = subs.fixed_points.members;
  std::vector<Elem> combined;
  combined.reserve(k.size() * f.size());
  for (Elem g0 : k)
    for (Elem g1 : f) {
      Elem label = g.mul(g0, g1);
      combined.push_back(label);
      const Perm& eta = *by_lab[label];
      for (Elem h = 0; h < n; ++h)
        if (eta[h] != g.mul(g.mul(g0, h), g1))
          throw invariant_error(
              "product_decomposition: eta_{g0 g1} != lambda(g0) rho(g1^-1)");
    }
  std::sort(combined.begin(), combined.end());
  if (std::adjacent_find(combined.begin(), combined.end()) != combined.end())
    throw invariant_error("product_decomposition: embedding is not injective");
  // the embedded copy multiplies componentwise
  for (Elem g0 : k)
    for (Elem g1 : f)
      for (Elem h0 : k)
        for (Elem h1 : f)
          if (compose_perms(*by_lab[g.mul(g0, g1)], *by_lab[g.mul(h0, h1)]) !=
              *by_lab[g.mul(g.mul(g0, h0), g.mul(g1, h1))])
            throw invariant_error(
                "product_decomposition: embedded copy is not componentwise");

  if (subs.kernel.order() * subs.fixed_points.order() != n) return std::nullopt;
  return hgs_type(n_psi, subs);
}

}  // namespace bracelab
