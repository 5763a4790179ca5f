#include "bracelab/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace bracelab {

namespace {

void check_table_shape(int n, const std::vector<Elem>& table,
                       const std::vector<std::string>& names) {
  if (n <= 0) throw spec_error("group order must be positive");
  if (static_cast<int>(table.size()) != n * n)
    throw spec_error("multiplication table has wrong size");
  if (static_cast<int>(names.size()) != n)
    throw spec_error("expected one name per element");
  for (Elem v : table)
    if (v < 0 || v >= n) throw invariant_error("table entry out of range");
}

void check_group_axioms(int n, const std::vector<Elem>& table) {
  auto mul = [&](Elem a, Elem b) { return table[a * n + b]; };
  for (Elem x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw invariant_error("index 0 is not a two-sided identity");
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem v = mul(a, b);
      if (seen[v]) throw invariant_error("row is not a permutation");
      seen[v] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      Elem v = mul(a, b);
      if (seen[v]) throw invariant_error("column is not a permutation");
      seen[v] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw invariant_error("table is not associative");
    }
}

std::vector<Elem> closure_under(const FiniteGroup& g,
                                const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out;
  in[0] = 1;
  out.push_back(0);
  std::queue<Elem> todo;
  todo.push(0);
  for (Elem s : gens) {
    if (s < 0 || s >= g.order()) throw spec_error("generator index out of range");
    if (!in[s]) {
      in[s] = 1;
      out.push_back(s);
      todo.push(s);
    }
  }
  while (!todo.empty()) {
    Elem x = todo.front();
    todo.pop();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
        todo.push(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GroupPtr FiniteGroup::create(std::string spec, std::vector<Elem> table,
                             std::vector<std::string> names,
                             std::vector<Elem> generators) {
  int n = static_cast<int>(names.size());
  check_table_shape(n, table, names);
  check_group_axioms(n, table);

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->spec_ = std::move(spec);
  g->table_ = std::move(table);
  g->names_ = std::move(names);
  g->generators_ = std::move(generators);

  g->inv_.assign(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g->mul(a, b) == 0) {
        g->inv_[a] = b;
        break;
      }
  for (Elem a = 0; a < n; ++a) {
    if (g->inv_[a] < 0 || g->mul(g->inv_[a], a) != 0)
      throw invariant_error("element has no two-sided inverse");
  }

  g->orders_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    Elem x = a;
    int k = 1;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->orders_[a] = k;
  }

  g->abelian_ = true;
  for (Elem a = 0; a < n && g->abelian_; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  for (Elem z = 0; z < n; ++z) {
    bool central = true;
    for (Elem x = 0; x < n; ++x)
      if (g->mul(z, x) != g->mul(x, z)) {
        central = false;
        break;
      }
    if (central) g->center_.push_back(z);
  }

  g->class_of_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    if (g->class_of_[a] >= 0) continue;
    int id = static_cast<int>(g->classes_.size());
    std::set<Elem> cls;
    for (Elem x = 0; x < n; ++x) cls.insert(g->conj(x, a));
    std::vector<Elem> members(cls.begin(), cls.end());
    for (Elem m : members) g->class_of_[m] = id;
    g->classes_.push_back(std::move(members));
  }
  // classes() is ordered by minimum element because elements are scanned in
  // increasing order and each class is recorded at its least member.

  if (!g->generators_.empty()) {
    auto span = closure_under(*g, g->generators_);
    if (static_cast<int>(span.size()) != n)
      throw spec_error("recorded generators do not generate the group");
  }
  return g;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order() == b->order() && a->table() == b->table();
}

bool Subgroup::contains(Elem a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<Elem> members) {
  if (!parent) throw spec_error("subgroup needs a parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int n = parent->order();
  for (Elem m : members)
    if (m < 0 || m >= n) throw spec_error("subgroup member out of range");
  if (members.empty() || members[0] != 0)
    throw invariant_error("subgroup must contain the identity");
  auto inside = [&](Elem x) {
    return std::binary_search(members.begin(), members.end(), x);
  };
  for (Elem a : members) {
    if (!inside(parent->inv(a)))
      throw invariant_error("subgroup not closed under inverses");
    for (Elem b : members)
      if (!inside(parent->mul(a, b)))
        throw invariant_error("subgroup not closed under products");
  }
  if (n % static_cast<int>(members.size()) != 0)
    throw invariant_error("subgroup order does not divide group order");
  return Subgroup{std::move(parent), std::move(members)};
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup whole_group(GroupPtr g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens) {
  return Subgroup{g, closure_under(*g, gens)};
}

Subgroup center(const GroupPtr& g) { return Subgroup{g, g->center_members()}; }

namespace {

std::vector<Elem> commutator_members(const FiniteGroup& g) {
  std::set<Elem> comms;
  int n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return closure_under(g, std::vector<Elem>(comms.begin(), comms.end()));
}

}  // namespace

Subgroup commutator_subgroup(const GroupPtr& g) {
  return Subgroup{g, commutator_members(*g)};
}

namespace {

std::vector<Elem> greedy_generators(const FiniteGroup& g,
                                    const std::vector<Elem>& universe) {
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem x : universe) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure_under(g, gens);
    if (span.size() == universe.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<Elem> generating_set(const FiniteGroup& g) {
  if (!g.generators().empty()) return g.generators();
  std::vector<Elem> universe(g.order());
  std::iota(universe.begin(), universe.end(), 0);
  return greedy_generators(g, universe);
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<Elem> ggens = generating_set(g);
  if (ggens.empty()) return true;
  // Generators of the subgroup suffice: conjugation by a fixed g is an
  // automorphism, and conjugation by products composes.
  std::vector<Elem> hgens = greedy_generators(g, h.members);
  for (Elem x : ggens)
    for (Elem m : hgens)
      if (!h.contains(g.conj(x, m))) return false;
  return true;
}

bool GroupMap::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (Elem v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

GroupMap make_group_map(GroupPtr source, GroupPtr target,
                        std::vector<Elem> images) {
  if (!source || !target) throw spec_error("map needs source and target");
  int n = source->order();
  if (static_cast<int>(images.size()) != n)
    throw spec_error("map image array has wrong length");
  for (Elem v : images)
    if (v < 0 || v >= target->order())
      throw spec_error("map image out of range");
  if (images[0] != 0) throw invariant_error("map must send identity to identity");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        throw invariant_error("homomorphism law fails");
  return GroupMap{std::move(source), std::move(target), std::move(images)};
}

GroupMap identity_map(const GroupPtr& g) {
  std::vector<Elem> images(g->order());
  std::iota(images.begin(), images.end(), 0);
  return GroupMap{g, g, std::move(images)};
}

GroupMap inverse_of(const GroupMap& m) {
  if (!m.is_bijective()) throw spec_error("cannot invert a non-bijective map");
  std::vector<Elem> inv(m.images.size());
  for (Elem a = 0; a < static_cast<Elem>(m.images.size()); ++a)
    inv[m.images[a]] = a;
  return GroupMap{m.target, m.source, std::move(inv)};
}

GroupMap compose_maps(const GroupMap& outer, const GroupMap& inner) {
  if (!same_group(inner.target, outer.source))
    throw spec_error("map composition: target/source mismatch");
  std::vector<Elem> images(inner.images.size());
  for (size_t i = 0; i < images.size(); ++i)
    images[i] = outer.images[inner.images[i]];
  return GroupMap{inner.source, outer.target, std::move(images)};
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "n" << order << (abelian ? "-ab" : "-nab") << "-z" << center_order
     << "-o[";
  for (size_t i = 0; i < order_histogram.size(); ++i) {
    if (i) os << ",";
    os << order_histogram[i].first << ":" << order_histogram[i].second;
  }
  os << "]-c[";
  for (size_t i = 0; i < class_sizes.size(); ++i) {
    if (i) os << ",";
    os << class_sizes[i];
  }
  os << "]-k" << commutator_order;
  return os.str();
}

Fingerprint iso_fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  fp.center_order = static_cast<int>(g.center_members().size());
  std::vector<std::pair<int, int>> hist;
  for (Elem a = 0; a < g.order(); ++a) {
    int o = g.element_order(a);
    auto it = std::find_if(hist.begin(), hist.end(),
                           [&](const auto& p) { return p.first == o; });
    if (it == hist.end())
      hist.emplace_back(o, 1);
    else
      ++it->second;
  }
  std::sort(hist.begin(), hist.end());
  fp.order_histogram = std::move(hist);
  for (const auto& cls : g.classes())
    fp.class_sizes.push_back(static_cast<int>(cls.size()));
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  fp.commutator_order = static_cast<int>(commutator_members(g).size());
  return fp;
}

ExtractedGroup subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent;
  int k = h.order();
  std::vector<int> from_parent(g.order(), -1);
  for (int i = 0; i < k; ++i) from_parent[h.members[i]] = i;
  std::vector<Elem> table(k * k);
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = g.name(h.members[i]);
    for (int j = 0; j < k; ++j) {
      int v = from_parent[g.mul(h.members[i], h.members[j])];
      if (v < 0) throw invariant_error("subgroup extraction: not closed");
      table[i * k + j] = v;
    }
  }
  std::ostringstream spec;
  spec << "sub:" << k << ":" << g.spec();
  ExtractedGroup out;
  out.group = FiniteGroup::create(spec.str(), std::move(table),
                                  std::move(names), {});
  out.to_parent = h.members;
  out.from_parent = std::move(from_parent);
  return out;
}

}  // namespace bracelab
