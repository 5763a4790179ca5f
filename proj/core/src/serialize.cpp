#include "bracelab/serialize.hpp"

namespace bracelab {

namespace {

ojson table_rows(int n, const std::vector<Elem>& flat) {
  ojson rows = ojson::array();
  for (int a = 0; a < n; ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < n; ++b) row.push_back(flat[a * n + b]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Elem> table_flat(const ojson& rows, int n) {
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  if (static_cast<int>(rows.size()) != n)
    throw spec_error("json table has wrong row count");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw spec_error("json table has wrong column count");
    for (const auto& v : row) flat.push_back(v.get<Elem>());
  }
  return flat;
}

}  // namespace

ojson map_to_json(const AbelianMap& psi) {
  ojson j;
  j["group"] = psi.group->spec();
  j["images"] = psi.images;
  return j;
}

AbelianMap abelian_map_from_json(const ojson& j) {
  GroupPtr g = build_group(j.at("group").get<std::string>());
  return make_abelian_map(g, j.at("images").get<std::vector<Elem>>());
}

ojson perm_subgroup_to_json(const PermSubgroup& p,
                            const std::string& type_label) {
  ojson j;
  j["group"] = p.base->spec();
  ojson perms = ojson::array();
  for (const auto& perm : p.perms) perms.push_back(perm);
  j["perms"] = std::move(perms);
  ojson labels = ojson::object();
  for (size_t i = 0; i < p.labels.size(); ++i)
    labels[std::to_string(i)] = p.labels[i];
  j["labels"] = std::move(labels);
  j["type"] = type_label;
  return j;
}

PermSubgroup perm_subgroup_from_json(const ojson& j) {
  GroupPtr g = build_group(j.at("group").get<std::string>());
  std::vector<Perm> perms;
  for (const auto& row : j.at("perms"))
    perms.push_back(row.get<std::vector<Elem>>());
  std::vector<Elem> labels;
  const auto& jl = j.at("labels");
  if (!jl.empty()) {
    labels.resize(perms.size());
    for (auto it = jl.begin(); it != jl.end(); ++it)
      labels.at(std::stoul(it.key())) = it.value().get<Elem>();
  }
  return make_perm_subgroup(g, std::move(perms), std::move(labels));
}

ojson brace_to_json(const SkewBrace& b) {
  ojson j;
  j["size"] = b.size;
  j["dot"] = table_rows(b.size, b.dot);
  j["circle"] = table_rows(b.size, b.circle);
  return j;
}

SkewBrace brace_from_json(const ojson& j) {
  SkewBrace b;
  b.size = j.at("size").get<int>();
  b.dot = table_flat(j.at("dot"), b.size);
  b.circle = table_flat(j.at("circle"), b.size);
  if (!verify_brace(b)) throw invariant_error("json brace fails verification");
  return b;
}

ojson solution_to_json(const PairTable& r, int jobs) {
  int n = r.size;
  ojson j;
  j["size"] = n;
  ojson rows = ojson::array();
  for (Elem x = 0; x < n; ++x) {
    ojson row = ojson::array();
    for (Elem y = 0; y < n; ++y)
      row.push_back(ojson::array({r.first[x * n + y], r.second[x * n + y]}));
    rows.push_back(std::move(row));
  }
  j["R"] = std::move(rows);
  j["properties"] = {{"involutive", is_involutive(r)},
                     {"nondegenerate", is_nondegenerate(r)},
                     {"braid", verify_braid(r, jobs)}};
  return j;
}

PairTable solution_from_json(const ojson& j) {
  PairTable r;
  r.size = j.at("size").get<int>();
  int n = r.size;
  r.first.resize(static_cast<size_t>(n) * n);
  r.second.resize(static_cast<size_t>(n) * n);
  const auto& rows = j.at("R");
  if (static_cast<int>(rows.size()) != n)
    throw spec_error("json solution has wrong row count");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const auto& cell = rows.at(x).at(y);
      r.first[x * n + y] = cell.at(0).get<Elem>();
      r.second[x * n + y] = cell.at(1).get<Elem>();
    }
  return r;
}

}  // namespace bracelab
