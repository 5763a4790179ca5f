#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracelab/common.hpp"

namespace bracelab {

class FiniteGroup;

/// Groups are immutable after construction and shared freely across threads.
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group as an exact multiplication table over dense element
/// indices 0..order-1, identity at index 0.
class FiniteGroup {
 public:
  /// Validates the table (identity at 0, Latin square, associativity,
  /// two-sided inverses) and precomputes inverses, element orders, the
  /// center and the conjugacy classes. Throws invariant_error on a broken
  /// table, spec_error on malformed arguments.
  static GroupPtr create(std::string spec, std::vector<Elem> table,
                         std::vector<std::string> names,
                         std::vector<Elem> generators);

  int order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  int element_order(Elem a) const { return orders_[a]; }
  bool is_abelian() const { return abelian_; }

  /// The builder spec this group was created from ("D:6", "file:...", or a
  /// synthesized label for derived groups).
  const std::string& spec() const { return spec_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Recorded generators; empty means "unknown".
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<Elem>& table() const { return table_; }

  const std::vector<Elem>& center_members() const { return center_; }
  /// Conjugacy classes, each sorted, ordered by minimum element.
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }
  int class_of(Elem a) const { return class_of_[a]; }

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::string spec_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  std::vector<Elem> generators_;
  std::vector<Elem> inv_;
  std::vector<int> orders_;
  std::vector<Elem> center_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<int> class_of_;
  bool abelian_ = false;
};

/// Builds one of the built-in families or a product of them:
///   "C:n" (n>=1), "D:n" (n>=3), "S:n" (n>=2), "A:n" (n>=3),
///   "M:p:q" (p>q primes, q | p-1), "X x Y", "file:<path>".
GroupPtr build_group(const std::string& spec);

/// Lexicographic pair indexing, identity (0,0) -> 0.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Cayley-table text format: line 1 the order n, line 2 the n element
/// names (whitespace separated), then n rows of n product indices
/// (row a lists a*b for b = 0..n-1). Identity must be index 0.
GroupPtr load_cayley_table(std::istream& in, const std::string& label);
GroupPtr load_cayley_file(const std::string& path);
void save_cayley_table(const FiniteGroup& g, std::ostream& out);

/// True if a and b are the same object or carry identical tables.
bool same_group(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> members;  // sorted, always contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elem a) const;
};

/// Verifies identity, closure, inverses and Lagrange before returning.
Subgroup make_subgroup(GroupPtr parent, std::vector<Elem> members);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup whole_group(GroupPtr g);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens);
Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);

/// Conjugation-closure test, reduced to generators of parent and subgroup.
bool is_normal(const Subgroup& h);

/// A total map between groups stored element-wise. images[0] == 0 and the
/// homomorphism law are enforced at construction.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images[a]; }
  bool is_bijective() const;
};

GroupMap make_group_map(GroupPtr source, GroupPtr target,
                        std::vector<Elem> images);
GroupMap identity_map(const GroupPtr& g);
GroupMap inverse_of(const GroupMap& m);  // m must be bijective
/// outer(inner(x))
GroupMap compose_maps(const GroupMap& outer, const GroupMap& inner);

/// Recorded generators when present, else a greedy minimal-ish set.
std::vector<Elem> generating_set(const FiniteGroup& g);

/// Canonical isomorphism-invariant tuple. Equal fingerprints are necessary
/// (not sufficient) for isomorphism.
struct Fingerprint {
  int order = 0;
  bool abelian = false;
  int center_order = 0;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
  std::vector<int> class_sizes;                      // ascending
  int commutator_order = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint iso_fingerprint(const FiniteGroup& g);

/// Fingerprint pre-filter, then backtracking on generator images; first
/// match under increasing target-element order. Orders capped at 120.
std::optional<GroupMap> find_isomorphism(const GroupPtr& g, const GroupPtr& h);

/// All automorphisms, by exhaustive generator-image backtracking.
std::vector<GroupMap> enumerate_automorphisms(const GroupPtr& g);

/// A subgroup re-indexed as a standalone group, with both index maps.
struct ExtractedGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;    // new index -> parent index
  std::vector<int> from_parent;   // parent index -> new index, -1 outside
};
ExtractedGroup subgroup_as_group(const Subgroup& h);

}  // namespace bracelab
