#include "bracelab/report.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hom_extend.hpp"

namespace bracelab {

namespace {

using SubgroupKey = std::vector<Elem>;

SubgroupKey key_of(const PermSubgroup& p) {
  SubgroupKey k;
  k.reserve(static_cast<size_t>(p.size()) * p.base->order());
  for (const auto& perm : p.perms) k.insert(k.end(), perm.begin(), perm.end());
  return k;
}

bool is_trivial_images(const std::vector<Elem>& images) {
  return std::all_of(images.begin(), images.end(),
                     [](Elem v) { return v == 0; });
}

long count_homs_into_center(const GroupPtr& g) {
  const auto& center = g->center_members();
  std::vector<Elem> gens = generating_set(*g);
  if (gens.empty()) return 1;
  long count = 0;
  std::vector<Elem> chosen(gens.size());
  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == gens.size()) {
      if (detail::extend_hom(*g, *g, gens, chosen, false)) ++count;
      return;
    }
    for (Elem z : center) {
      if (g->element_order(gens[level]) % g->element_order(z) != 0) continue;
      chosen[level] = z;
      rec(level + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

Classification classify_group(const GroupPtr& g, int order_cap) {
  if (g->order() > order_cap)
    throw cap_error("classify_group: order exceeds the cap");
  Classification out;
  out.group = g;

  std::vector<AbelianMap> maps = enumerate_abelian_maps(g, order_cap);
  SubgroupKey lambda_key = key_of(left_translations(g));

  std::map<SubgroupKey, int> class_ids;
  std::map<SubgroupKey, std::string> distinct;  // every N and N', labeled

  struct Pending {
    SubgroupKey n_key, opp_key;
  };
  std::vector<Pending> pending(maps.size());

  for (size_t i = 0; i < maps.size(); ++i) {
    PermSubgroup n = subgroup_from_map(maps[i]);
    PermSubgroup opp = opposite_subgroup_from_map(maps[i]);
    SubgroupKey nkey = key_of(n);
    SubgroupKey okey = key_of(opp);

    MapRecord rec;
    rec.images = maps[i].images;
    rec.fixed_point_free = maps[i].fixed_point_free;
    rec.type_label = hgs_type(n, map_subgroups(maps[i]));
    rec.equals_lambda = (nkey == lambda_key);
    rec.opposite_distinct = (okey != nkey);

    auto [it, inserted] =
        class_ids.try_emplace(nkey, static_cast<int>(out.classes.size()));
    rec.class_id = it->second;
    if (inserted) {
      ClassInfo ci;
      ci.representative = static_cast<int>(i);  // maps are lex-sorted
      ci.type_label = rec.type_label;
      ci.self_opposite = !rec.opposite_distinct;
      out.classes.push_back(std::move(ci));
    }
    pending[i] = {std::move(nkey), std::move(okey)};
    out.records.push_back(std::move(rec));
  }

  // label every distinct subgroup by its class label (opposites are
  // isomorphic to their partner, so they share the label)
  for (size_t i = 0; i < maps.size(); ++i) {
    const std::string& label = out.classes[out.records[i].class_id].type_label;
    distinct.try_emplace(pending[i].n_key, label);
    distinct.try_emplace(pending[i].opp_key, label);
  }
  out.distinct_subgroups = static_cast<int>(distinct.size());
  for (const auto& ci : out.classes) ++out.class_type_tallies[ci.type_label];
  for (const auto& [key, label] : distinct) ++out.subgroup_type_tallies[label];
  return out;
}

namespace {

GroupPtr dihedral_half_times_c2(int n) {
  // D_{n/2} x C_2, with D_2 spelled as the Klein group
  if (n / 2 >= 3)
    return build_group("D:" + std::to_string(n / 2) + " x C:2");
  return build_group("C:2 x C:2 x C:2");
}

}  // namespace

std::vector<DihedralRow> dihedral_table(int max_n) {
  if (max_n < 3) throw spec_error("dihedral_table: max_n must be at least 3");
  if (2 * max_n > 120) throw cap_error("dihedral_table: 2*max_n above 120");

  std::vector<DihedralRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    GroupPtr g = build_group("D:" + std::to_string(n));
    Classification c = classify_group(g);
    bool even = n % 2 == 0;

    DihedralRow row;
    row.n = n;
    row.raw_maps = static_cast<long>(c.records.size());
    row.center_hom_count = count_homs_into_center(g);
    row.map_classes = {even ? 1 + 3L * n / 2 : 1 + n,
                       static_cast<long>(c.classes.size())};
    row.hgs_total = {even ? 2 + 5L * n / 2 : 2 + n, c.distinct_subgroups};

    long dn = 0, half = 0, cn = 0;
    bool columns_verified = true;
    for (const auto& ci : c.classes) {
      const MapRecord& rep = c.records[ci.representative];
      AbelianMap rep_map = make_abelian_map(g, rep.images);
      GroupPtr nabs = perm_subgroup_as_group(subgroup_from_map(rep_map));
      if (is_trivial_images(rep.images) || rep.fixed_point_free) {
        ++dn;
        if (!find_isomorphism(nabs, g)) columns_verified = false;
        continue;
      }
      MapSubgroups subs = map_subgroups(rep_map);
      if (subs.kernel.order() * subs.fixed_points.order() != g->order()) {
        columns_verified = false;
        continue;
      }
      GroupPtr kernel_group = subgroup_as_group(subs.kernel).group;
      bool kernel_cyclic = false;
      for (Elem x = 0; x < kernel_group->order(); ++x)
        if (kernel_group->element_order(x) == kernel_group->order())
          kernel_cyclic = true;
      GroupPtr expected;
      if (kernel_cyclic) {
        ++cn;
        expected = build_group("C:" + std::to_string(n) + " x C:2");
      } else {
        ++half;
        expected = dihedral_half_times_c2(n);
      }
      if (!find_isomorphism(nabs, expected)) columns_verified = false;
    }
    row.type_dn = {even ? 1 + n / 2L : 1, dn};
    row.type_half = {even ? n / 2L : 0, half};
    row.type_cn = {even ? n / 2L : n, cn};

    if (even) {
      bool collapses = find_isomorphism(dihedral_half_times_c2(n), g).has_value();
      row.collapse_checked = (collapses == (n % 4 == 2));
    } else {
      row.collapse_checked = true;
    }

    bool raw_consistent =
        row.raw_maps == row.map_classes.computed * row.center_hom_count;
    row.ok = row.map_classes.ok() && row.hgs_total.ok() && row.type_dn.ok() &&
             row.type_half.ok() && row.type_cn.ok() && columns_verified &&
             row.collapse_checked && raw_consistent;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// verify families

namespace {

struct Require {
  void operator()(bool cond, const std::string& msg) const {
    if (!cond) throw invariant_error(msg);
  }
};

std::vector<Perm> all_perms_of_degree(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct VerifyContext {
  GroupPtr g;
  std::vector<AbelianMap> maps;
  std::vector<PermSubgroup> subgroups;  // N per map
  std::vector<SubgroupKey> keys;
};

void run_family(std::vector<VerifyResult>& out, const std::string& name,
                const std::function<std::string()>& body) {
  try {
    out.push_back({name, true, body()});
  } catch (const std::exception& e) {
    out.push_back({name, false, e.what()});
  }
}

Elem twisted(const FiniteGroup& g, const AbelianMap& psi, Elem a, Elem b) {
  return g.mul(g.mul(g.mul(a, psi(g.inv(a))), b), psi(a));
}

}  // namespace

std::vector<VerifyResult> verify_group(const GroupPtr& g, bool with_oracle,
                                       int order_cap) {
  Require require;
  std::vector<VerifyResult> out;
  int n = g->order();
  if (n > order_cap) throw cap_error("verify_group: order exceeds the cap");

  VerifyContext ctx;
  ctx.g = g;

  run_family(out, "group-axioms", [&] {
    require(is_group_table(n, g->table()), "group table fails the axioms");
    return "order " + std::to_string(n);
  });

  run_family(out, "abelian-maps", [&] {
    ctx.maps = enumerate_abelian_maps(g, order_cap);
    require(!ctx.maps.empty(), "no maps enumerated");
    require(is_trivial_images(ctx.maps[0].images),
            "trivial map missing or not first");
    for (size_t i = 0; i < ctx.maps.size(); ++i) {
      const auto& m = ctx.maps[i];
      AbelianMap rebuilt = make_abelian_map(g, m.images);  // re-validates
      require(rebuilt.fixed_point_free == m.fixed_point_free,
              "cached fixed-point-free flag is wrong");
      if (i > 0)
        require(ctx.maps[i - 1].images < m.images,
                "enumeration not strictly sorted");
    }
    return std::to_string(ctx.maps.size()) + " maps";
  });
  if (ctx.maps.empty()) return out;

  run_family(out, "regular-stable", [&] {
    for (const auto& psi : ctx.maps) {
      PermSubgroup sub = subgroup_from_map(psi);  // factory: regular + stable
      require(sub.size() == n, "wrong subgroup size");
      std::vector<const Perm*> by_lab(n);
      for (int i = 0; i < sub.size(); ++i) by_lab[sub.labels[i]] = &sub.perms[i];
      for (Elem a = 0; a < n; ++a)
        require((*by_lab[a])[0] == a, "eta_g[identity] != g");
      // composition law: eta_g eta_h = eta_{g psi(g^-1) h psi(g)}
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          require(compose_perms(*by_lab[a], *by_lab[b]) ==
                      *by_lab[twisted(*g, psi, a, b)],
                  "composition law fails");
      if (n <= 16)
        require(is_stable_full(sub), "full stability check fails");
      ctx.subgroups.push_back(std::move(sub));
      ctx.keys.push_back(key_of(ctx.subgroups.back()));
    }
    return std::to_string(ctx.maps.size()) + " subgroups";
  });
  if (ctx.subgroups.size() != ctx.maps.size()) return out;

  run_family(out, "opposites", [&] {
    std::map<SubgroupKey, bool> centralizer_checked;
    std::vector<Perm> sym;
    if (n <= 8) sym = all_perms_of_degree(n);
    for (size_t i = 0; i < ctx.maps.size(); ++i) {
      PermSubgroup opp = opposite_subgroup_from_map(ctx.maps[i]);
      require(opp.size() == n, "|N'| != |N|");
      require(commute_elementwise(ctx.subgroups[i], opp),
              "N and N' do not commute");
      if (n <= 8 && !centralizer_checked[ctx.keys[i]]) {
        centralizer_checked[ctx.keys[i]] = true;
        // literal centralizer of N in the full symmetric group
        std::vector<Perm> centralizer;
        for (const auto& cand : sym) {
          bool commutes = true;
          for (const auto& eta : ctx.subgroups[i].perms)
            if (compose_perms(cand, eta) != compose_perms(eta, cand)) {
              commutes = false;
              break;
            }
          if (commutes) centralizer.push_back(cand);
        }
        std::sort(centralizer.begin(), centralizer.end());
        require(centralizer == opp.perms,
                "opposite differs from the literal centralizer");
      }
    }
    return n <= 8 ? "with literal centralizer" : "commuting + cardinality";
  });

  run_family(out, "subgroup-equality", [&] {
    for (size_t i = 0; i < ctx.maps.size(); ++i)
      for (size_t j = 0; j < ctx.maps.size(); ++j) {
        bool criterion = same_induced_subgroup(ctx.maps[i], ctx.maps[j]);
        bool literal = (ctx.keys[i] == ctx.keys[j]);
        require(criterion == literal,
                "central-ratio criterion disagrees with set equality");
      }
    return std::to_string(ctx.maps.size() * ctx.maps.size()) + " pairs";
  });

  if (n <= 16) {
    run_family(out, "aut-conjugation", [&] {
      auto auts = enumerate_automorphisms(g);
      const auto& center = g->center_members();
      auto central = [&](Elem z) {
        return std::binary_search(center.begin(), center.end(), z);
      };
      for (const auto& psi : ctx.maps) {
        auto psi_image_fp =
            iso_fingerprint(*subgroup_as_group(
                                 subgroup_generated(g, psi.images))
                                 .group);
        long kernel_size =
            std::count(psi.images.begin(), psi.images.end(), 0);
        for (const auto& phi : auts) {
          AbelianMap conj = conjugate_map(psi, phi);
          bool same = same_induced_subgroup(psi, conj);
          // the central-ratio criterion, and equivalently: psi and phi
          // commute modulo the center
          bool zeta_crit = true, commute_crit = true;
          for (Elem x = 0; x < n; ++x) {
            if (!central(g->mul(conj(x), psi(g->inv(x))))) zeta_crit = false;
            if (!central(g->mul(psi(phi(x)), g->inv(phi(psi(x))))))
              commute_crit = false;
          }
          require(same == zeta_crit,
                  "central-ratio criterion disagrees for a conjugate pair");
          require(same == commute_crit,
                  "commute-mod-center criterion disagrees");
          // conjugates preserve the image subgroup type and the kernel size
          require(
              iso_fingerprint(*subgroup_as_group(
                                   subgroup_generated(g, conj.images))
                                   .group) == psi_image_fp,
              "conjugate image fingerprint differs");
          require(std::count(conj.images.begin(), conj.images.end(), 0) ==
                      kernel_size,
                  "conjugate kernel size differs");
        }
      }
      return std::to_string(auts.size()) + " automorphisms";
    });
  }

  run_family(out, "quasi-inverse", [&] {
    int fpf_count = 0;
    for (const auto& psi : ctx.maps) {
      if (!psi.fixed_point_free) continue;
      ++fpf_count;
      AbelianMap qi = quasi_inverse(psi);
      for (Elem x = 0; x < n; ++x) {
        Elem k = g->mul(x, psi(g->inv(x)));
        require(qi(k) == psi(g->inv(x)), "defining identity fails");
      }
      require(quasi_inverse(qi).images == psi.images,
              "quasi-inverse is not an involution");
      // bridge: the lambda-rho subgroup of psi is N of its quasi-inverse
      require(lambda_rho_subgroup(psi) == subgroup_from_map(qi),
              "lambda-rho subgroup differs from N of the quasi-inverse");
    }
    return std::to_string(fpf_count) + " fixed point free maps";
  });

  run_family(out, "five-subgroups", [&] {
    for (size_t i = 0; i < ctx.maps.size(); ++i) {
      MapSubgroups subs = map_subgroups(ctx.maps[i]);  // postconditions inside
      const PermSubgroup& sub = ctx.subgroups[i];
      std::vector<const Perm*> by_lab(n);
      for (int k = 0; k < sub.size(); ++k) by_lab[sub.labels[k]] = &sub.perms[k];
      auto expect = [&](const Subgroup& source) {
        std::vector<Perm> perms;
        for (Elem x : source.members) perms.push_back(*by_lab[x]);
        std::sort(perms.begin(), perms.end());
        return perms;
      };
      require(lambda_points(sub).perms == expect(subs.lambda_source),
              "lambda-point description fails");
      require(rho_points(sub).perms == expect(subs.rho_source),
              "rho-point description fails");
    }
    return std::to_string(ctx.maps.size()) + " maps";
  });

  run_family(out, "product-embedding", [&] {
    int full = 0;
    for (const auto& psi : ctx.maps)
      if (product_decomposition(psi)) ++full;  // asserts the embedding inside
    return std::to_string(full) + " full decompositions";
  });

  run_family(out, "braces", [&] {
    // guard against a vacuous verifier: a fixed pair of valid order-4 group
    // tables that is not a brace
    {
      GroupPtr c4 = build_group("C:4");
      const Elem relabel[4] = {0, 2, 1, 3};
      std::vector<Elem> circle(16);
      for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
          circle[a * 4 + b] = relabel[c4->mul(relabel[a], relabel[b])];
      SkewBrace bad{4, c4->table(), circle};
      require(is_group_table(4, bad.circle), "non-example tables invalid");
      require(!verify_brace(bad), "verifier accepted a non-brace");
    }
    require(is_biskew(trivial_brace(g)), "trivial brace not bi-skew");
    require(is_biskew(almost_trivial_brace(g)),
            "almost trivial brace not bi-skew");
    if (n <= 64)
      require(brace_isomorphic(opposite_brace(trivial_brace(g)),
                               almost_trivial_brace(g)),
              "opposite of trivial is not the almost trivial brace");
    for (size_t i = 0; i < ctx.maps.size(); ++i) {
      SkewBrace b = brace_from_map(ctx.maps[i]);  // bi-skew + circle == N_psi
      require(b.dot == g->table(), "brace dot is not the group law");
      SkewBrace from_n = brace_from_regular_subgroup(ctx.subgroups[i]);
      require(from_n.dot == b.circle && from_n.circle == b.dot,
              "kappa-relabeled brace differs from the swapped brace");
      SkewBrace opp = opposite_brace(b);
      require(opposite_brace(opp).dot == b.dot, "opposite not an involution");
      bool dot_abelian = g->is_abelian();
      require((opp.dot == b.dot) == dot_abelian,
              "opposite equals original iff dot abelian");
    }
    return std::to_string(ctx.maps.size()) + " braces";
  });

  run_family(out, "ybe", [&] {
    for (const auto& psi : ctx.maps) {
      FourSolutions four = four_solutions(psi);  // cross-checks inside
      bool circle_abelian = true;
      for (Elem a = 0; a < n && circle_abelian; ++a)
        for (Elem b = 0; b < n; ++b)
          if (twisted(*g, psi, a, b) != twisted(*g, psi, b, a)) {
            circle_abelian = false;
            break;
          }
      bool r12_equal =
          four.r1.first == four.r2.first && four.r1.second == four.r2.second;
      bool r34_equal =
          four.r3.first == four.r4.first && four.r3.second == four.r4.second;
      require(r12_equal == g->is_abelian(), "R1 = R2 iff G abelian fails");
      require(r34_equal == circle_abelian, "R3 = R4 iff circle abelian fails");
      require(is_involutive(four.r1) == g->is_abelian(),
              "R1 involutive iff dot abelian fails");
      require(is_involutive(four.r2) == g->is_abelian(),
              "R2 involutive iff dot abelian fails");
      require(is_involutive(four.r3) == circle_abelian,
              "R3 involutive iff circle abelian fails");
      require(is_involutive(four.r4) == circle_abelian,
              "R4 involutive iff circle abelian fails");
      if (g->is_abelian()) {
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            require(four.r1.apply(a, b) == std::make_pair(b, a),
                    "abelian collapse to the flip fails");
      }
    }
    return std::to_string(4 * ctx.maps.size()) + " solutions";
  });

  run_family(out, "transport", [&] {
    for (size_t i = 0; i < ctx.maps.size(); ++i) {
      std::vector<int> perm_to_elem;
      GroupPtr nabs = perm_subgroup_as_group(ctx.subgroups[i], &perm_to_elem);
      std::vector<Elem> alpha_images(n);
      for (int k = 0; k < ctx.subgroups[i].size(); ++k)
        alpha_images[ctx.subgroups[i].labels[k]] = perm_to_elem[k];
      GroupMap alpha = make_group_map(circle_group(ctx.maps[i]), nabs,
                                      std::move(alpha_images));
      PermSubgroup p = transported_subgroup(ctx.maps[i], nabs, alpha);
      require(p.size() == n, "transported subgroup has the wrong size");
    }
    return std::to_string(ctx.maps.size()) + " transports";
  });

  if (with_oracle) {
    run_family(out, "oracle", [&] {
      auto all = all_regular_stable_subgroups(g);  // throws above the cap
      std::set<SubgroupKey> oracle_keys;
      for (const auto& sub : all) oracle_keys.insert(key_of(sub));
      std::set<SubgroupKey> constructed;
      for (size_t i = 0; i < ctx.maps.size(); ++i) {
        constructed.insert(ctx.keys[i]);
        constructed.insert(key_of(opposite_subgroup_from_map(ctx.maps[i])));
      }
      for (const auto& key : constructed)
        require(oracle_keys.count(key) > 0,
                "constructed subgroup missing from the oracle");
      std::ostringstream os;
      os << "constructed " << constructed.size() << " of " << oracle_keys.size();
      return os.str();
    });
  }

  return out;
}

bool all_passed(const std::vector<VerifyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const VerifyResult& r) { return r.pass; });
}

// ---------------------------------------------------------------------------
// rendering

ojson classification_to_json(const Classification& c) {
  ojson j;
  j["group"] = c.group->spec();
  j["order"] = c.group->order();
  j["abelian_maps"] = c.records.size();
  j["map_classes"] = c.classes.size();
  j["distinct_subgroups"] = c.distinct_subgroups;
  j["class_types"] = c.class_type_tallies;
  j["subgroup_types"] = c.subgroup_type_tallies;
  ojson recs = ojson::array();
  for (size_t i = 0; i < c.records.size(); ++i) {
    const auto& r = c.records[i];
    ojson jr;
    jr["index"] = i;
    jr["images"] = r.images;
    jr["fixed_point_free"] = r.fixed_point_free;
    jr["class"] = r.class_id;
    jr["type"] = r.type_label;
    jr["equals_lambda"] = r.equals_lambda;
    jr["opposite_distinct"] = r.opposite_distinct;
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  return j;
}

std::string classification_to_csv(const Classification& c) {
  std::ostringstream os;
  os << "index,images,fixed_point_free,class,type,equals_lambda,"
        "opposite_distinct\n";
  for (size_t i = 0; i < c.records.size(); ++i) {
    const auto& r = c.records[i];
    os << i << ",\"";
    for (size_t k = 0; k < r.images.size(); ++k)
      os << (k ? " " : "") << r.images[k];
    os << "\"," << (r.fixed_point_free ? 1 : 0) << "," << r.class_id << ","
       << r.type_label << "," << (r.equals_lambda ? 1 : 0) << ","
       << (r.opposite_distinct ? 1 : 0) << "\n";
  }
  return os.str();
}

namespace {

ojson cell_json(const DihedralCell& cell) {
  return ojson{{"expected", cell.expected}, {"computed", cell.computed}};
}

}  // namespace

ojson dihedral_table_to_json(const std::vector<DihedralRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson j;
    j["n"] = r.n;
    j["raw_abelian_maps"] = r.raw_maps;
    j["center_hom_count"] = r.center_hom_count;
    j["abelian_map_classes"] = cell_json(r.map_classes);
    j["hgs_with_opposites"] = cell_json(r.hgs_total);
    j["type_full_dihedral"] = cell_json(r.type_dn);
    j["type_half_dihedral_x_c2"] = cell_json(r.type_half);
    j["type_cyclic_x_c2"] = cell_json(r.type_cn);
    j["collapse_checked"] = r.collapse_checked;
    j["ok"] = r.ok;
    arr.push_back(std::move(j));
  }
  return ojson{{"rows", std::move(arr)}};
}

std::string dihedral_table_to_csv(const std::vector<DihedralRow>& rows) {
  std::ostringstream os;
  os << "n,raw_abelian_maps,classes_expected,classes,hgs_expected,hgs,"
        "dn_expected,dn,half_expected,half,cn_expected,cn,ok\n";
  for (const auto& r : rows) {
    os << r.n << "," << r.raw_maps << "," << r.map_classes.expected << ","
       << r.map_classes.computed << "," << r.hgs_total.expected << ","
       << r.hgs_total.computed << "," << r.type_dn.expected << ","
       << r.type_dn.computed << "," << r.type_half.expected << ","
       << r.type_half.computed << "," << r.type_cn.expected << ","
       << r.type_cn.computed << "," << (r.ok ? 1 : 0) << "\n";
  }
  return os.str();
}

ojson verify_to_json(const std::vector<VerifyResult>& results) {
  ojson arr = ojson::array();
  for (const auto& r : results)
    arr.push_back(
        ojson{{"family", r.family}, {"pass", r.pass}, {"detail", r.detail}});
  return ojson{{"families", std::move(arr)}, {"all_passed", all_passed(results)}};
}

std::string verify_to_csv(const std::vector<VerifyResult>& results) {
  std::ostringstream os;
  os << "family,pass,detail\n";
  for (const auto& r : results)
    os << r.family << "," << (r.pass ? 1 : 0) << ",\"" << r.detail << "\"\n";
  return os.str();
}

}  // namespace bracelab
