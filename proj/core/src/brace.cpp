#include "bracelab/brace.hpp"

#include <algorithm>
#include <functional>

namespace bracelab {

namespace {

std::vector<Elem> table_inverses(int n, const std::vector<Elem>& t) {
  std::vector<Elem> inv(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t[a * n + b] == 0) {
        inv[a] = b;
        break;
      }
  return inv;
}

bool brace_law_holds(int n, const std::vector<Elem>& dot,
                     const std::vector<Elem>& circle) {
  std::vector<Elem> dinv = table_inverses(n, dot);
  for (Elem x = 0; x < n; ++x) {
    Elem xi = dinv[x];
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = circle[x * n + dot[y * n + z]];
        Elem rhs = dot[dot[circle[x * n + y] * n + xi] * n + circle[x * n + z]];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

int table_order(int n, const std::vector<Elem>& t, Elem a) {
  Elem x = a;
  int k = 1;
  while (x != 0) {
    x = t[x * n + a];
    ++k;
  }
  return k;
}

}  // namespace

bool is_group_table(int n, const std::vector<Elem>& table) {
  if (n <= 0 || static_cast<int>(table.size()) != n * n) return false;
  for (Elem v : table)
    if (v < 0 || v >= n) return false;
  for (Elem x = 0; x < n; ++x)
    if (table[0 * n + x] != x || table[x * n + 0] != x) return false;
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem v = table[a * n + b];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      Elem v = table[a * n + b];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = table[a * n + b];
      for (Elem c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) return false;
    }
  auto inv = table_inverses(n, table);
  for (Elem a = 0; a < n; ++a)
    if (inv[a] < 0 || table[inv[a] * n + a] != 0) return false;
  return true;
}

bool verify_brace(const SkewBrace& b) {
  return is_group_table(b.size, b.dot) && is_group_table(b.size, b.circle) &&
         brace_law_holds(b.size, b.dot, b.circle);
}

bool is_biskew(const SkewBrace& b) {
  return verify_brace(b) && brace_law_holds(b.size, b.circle, b.dot);
}

SkewBrace swapped_brace(const SkewBrace& b) {
  return SkewBrace{b.size, b.circle, b.dot};
}

SkewBrace opposite_brace(const SkewBrace& b) {
  int n = b.size;
  SkewBrace out;
  out.size = n;
  out.dot.resize(n * n);
  out.circle = b.circle;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) out.dot[x * n + y] = b.dot[y * n + x];
  if (!verify_brace(out))
    throw invariant_error("opposite_brace: result fails the brace law");
  return out;
}

SkewBrace trivial_brace(const GroupPtr& g) {
  return SkewBrace{g->order(), g->table(), g->table()};
}

SkewBrace almost_trivial_brace(const GroupPtr& g) {
  int n = g->order();
  std::vector<Elem> rev(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) rev[x * n + y] = g->mul(y, x);
  return SkewBrace{n, g->table(), std::move(rev)};
}

SkewBrace brace_from_map(const AbelianMap& psi) {
  const auto& g = *psi.group;
  int n = g.order();
  SkewBrace out;
  out.size = n;
  out.dot = g.table();
  out.circle.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    Elem left = g.mul(a, psi(g.inv(a)));
    for (Elem b = 0; b < n; ++b)
      out.circle[a * n + b] = g.mul(g.mul(left, b), psi(a));
  }
  if (!is_biskew(out))
    throw invariant_error("brace_from_map: result is not a bi-skew brace");
  // circle group is label-isomorphic to N_psi: eta_g eta_h = eta_{g∘h}
  PermSubgroup n_psi = subgroup_from_map(psi);
  std::vector<const Perm*> by_lab(n);
  for (int i = 0; i < n_psi.size(); ++i)
    by_lab[n_psi.labels[i]] = &n_psi.perms[i];
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (compose_perms(*by_lab[a], *by_lab[b]) !=
          *by_lab[out.circle[a * n + b]])
        throw invariant_error(
            "brace_from_map: circle group does not match N_psi");
  return out;
}

SkewBrace brace_from_regular_subgroup(const PermSubgroup& n) {
  if (!is_regular(n))
    throw spec_error(
        "brace_from_regular_subgroup: subgroup is not regular, evaluation at "
        "the identity is not a bijection");
  int sz = n.size();
  // kappa indexing: carrier element g is the member with eta[0] = g, so the
  // dot table (composition) is just the row matrix.
  std::vector<const Perm*> by_kappa(sz);
  for (const auto& p : n.perms) by_kappa[p[0]] = &p;
  SkewBrace out;
  out.size = sz;
  out.dot.resize(static_cast<size_t>(sz) * sz);
  for (Elem g = 0; g < sz; ++g)
    for (Elem h = 0; h < sz; ++h) out.dot[g * sz + h] = (*by_kappa[g])[h];
  out.circle = n.base->table();
  if (!verify_brace(out))
    throw invariant_error(
        "brace_from_regular_subgroup: brace law fails (subgroup is regular "
        "but not stable)");
  return out;
}

std::vector<Elem> dot_inverses(const SkewBrace& b) {
  return table_inverses(b.size, b.dot);
}

std::vector<Elem> circle_inverses(const SkewBrace& b) {
  return table_inverses(b.size, b.circle);
}

bool brace_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.size != b.size) return false;
  int n = a.size;
  if (n > 64) throw cap_error("brace_isomorphic: carrier above the 64 cap");
  if (!verify_brace(a) || !verify_brace(b))
    throw spec_error("brace_isomorphic: inputs must be braces");

  // signature pruning: an isomorphism preserves orders in both tables
  auto signature = [n](const SkewBrace& br, Elem x) {
    return std::make_pair(table_order(n, br.dot, x),
                          table_order(n, br.circle, x));
  };
  std::vector<std::pair<int, int>> sig_a(n), sig_b(n);
  for (Elem x = 0; x < n; ++x) {
    sig_a[x] = signature(a, x);
    sig_b[x] = signature(b, x);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<Elem> img(n, -1);
  std::vector<char> used(n, 0);

  // assign with forced propagation through both tables; undo is by snapshot
  std::function<bool(Elem, Elem)> assign = [&](Elem x, Elem y) -> bool {
    if (img[x] >= 0) return img[x] == y;
    if (used[y] || sig_a[x] != sig_b[y]) return false;
    img[x] = y;
    used[y] = 1;
    for (Elem known = 0; known < n; ++known) {
      if (img[known] < 0) continue;
      Elem ky = img[known];
      if (!assign(a.dot_of(known, x), b.dot_of(ky, y))) return false;
      if (!assign(a.dot_of(x, known), b.dot_of(y, ky))) return false;
      if (!assign(a.circle_of(known, x), b.circle_of(ky, y))) return false;
      if (!assign(a.circle_of(x, known), b.circle_of(y, ky))) return false;
    }
    return true;
  };

  std::function<bool()> rec = [&]() -> bool {
    Elem x = -1;
    for (Elem i = 0; i < n; ++i)
      if (img[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      for (Elem p = 0; p < n; ++p)
        for (Elem q = 0; q < n; ++q) {
          if (img[a.dot_of(p, q)] != b.dot_of(img[p], img[q])) return false;
          if (img[a.circle_of(p, q)] != b.circle_of(img[p], img[q]))
            return false;
        }
      return true;
    }
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      auto saved_img = img;
      auto saved_used = used;
      if (assign(x, y) && rec()) return true;
      img = saved_img;
      used = saved_used;
    }
    return false;
  };

  if (!assign(0, 0)) return false;
  return rec();
}

}  // namespace bracelab
