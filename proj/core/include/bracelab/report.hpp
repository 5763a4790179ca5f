#pragma once

#include <map>

#include "bracelab/serialize.hpp"
#include "bracelab/ybe.hpp"

namespace bracelab {

struct MapRecord {
  std::vector<Elem> images;
  bool fixed_point_free = false;
  int class_id = 0;            // distinct-subgroup class (literal set equality)
  std::string type_label;      // recomputable from the map alone
  bool equals_lambda = false;  // N equals the left regular representation
  bool opposite_distinct = false;
};

struct ClassInfo {
  int representative = 0;  // record index of the lexicographically least map
  std::string type_label;
  bool self_opposite = false;
};

/// Full classification of one group: every abelian endomorphism, the
/// distinct subgroups they induce (with opposites), and per-type tallies.
struct Classification {
  GroupPtr group;
  std::vector<MapRecord> records;
  std::vector<ClassInfo> classes;
  int distinct_subgroups = 0;
  std::map<std::string, int> class_type_tallies;     // one entry per class
  std::map<std::string, int> subgroup_type_tallies;  // sums to distinct_subgroups
};

Classification classify_group(const GroupPtr& g, int order_cap = 120);

struct DihedralCell {
  long expected = 0;
  long computed = -1;
  bool ok() const { return expected == computed; }
};

/// One dihedral row: the family formulas against the computed counts. The
/// three type columns follow the canonical class representative (trivial or
/// fixed point free -> full dihedral type; else split by kernel shape), with
/// every column membership verified by explicit isomorphism.
struct DihedralRow {
  int n = 0;
  long raw_maps = 0;
  long center_hom_count = 0;  // raw_maps = classes * center_hom_count
  DihedralCell map_classes, hgs_total, type_dn, type_half, type_cn;
  bool collapse_checked = false;  // half-type vs D_n isomorphism matches n mod 4
  bool ok = false;
};

std::vector<DihedralRow> dihedral_table(int max_n);

struct VerifyResult {
  std::string family;
  bool pass = false;
  std::string detail;
};

/// Runs every invariant family against one group; with_oracle additionally
/// compares the constructed subgroups against the exhaustive search
/// (order <= 8 only).
std::vector<VerifyResult> verify_group(const GroupPtr& g, bool with_oracle,
                                       int order_cap = 120);
bool all_passed(const std::vector<VerifyResult>& results);

ojson classification_to_json(const Classification& c);
std::string classification_to_csv(const Classification& c);
ojson dihedral_table_to_json(const std::vector<DihedralRow>& rows);
std::string dihedral_table_to_csv(const std::vector<DihedralRow>& rows);
ojson verify_to_json(const std::vector<VerifyResult>& results);
std::string verify_to_csv(const std::vector<VerifyResult>& results);

}  // namespace bracelab
