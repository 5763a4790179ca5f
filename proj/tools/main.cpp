// bracelab: exact workbench for regular subgroups, skew braces and
// Yang-Baxter solutions built from abelian endomorphisms of finite groups.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bracelab/report.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  bool csv = false;
  std::string out_path;
  int jobs = 0;  // 0 = auto
};

void emit(const GlobalOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(o.out_path);
  if (!out) throw bracelab::spec_error("cannot open output file " + o.out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

std::string pretty(const bracelab::ojson& j) { return j.dump(2); }

}  // namespace

int main(int argc, char** argv) {
  using namespace bracelab;

  CLI::App app{
      "bracelab: abelian endomorphisms, regular stable subgroups, skew "
      "braces and set-theoretic Yang-Baxter solutions over exact finite "
      "group tables"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts opts;
  app.add_flag("--csv", opts.csv, "emit CSV instead of JSON");
  app.add_option("--out", opts.out_path, "write output to a file");
  app.add_option("--jobs", opts.jobs,
                 "worker threads for the verification loops (0 = auto)");

  std::string spec;
  auto* classify = app.add_subcommand(
      "classify", "enumerate abelian maps and classify the induced subgroups");
  classify->add_option("spec", spec, "group spec, e.g. D:6 or S:4")->required();

  int max_n = 12;
  auto* table = app.add_subcommand(
      "dihedral-table",
      "reproduce the dihedral family counts; mismatches are a hard failure");
  table->add_option("--max-n", max_n, "largest dihedral index")->required();

  std::string verify_spec;
  bool with_oracle = false;
  auto* verify = app.add_subcommand(
      "verify", "run every invariant family against one group");
  verify->add_option("spec", verify_spec, "group spec")->required();
  verify->add_flag("--oracle", with_oracle,
                   "also compare against the exhaustive regular-stable "
                   "search (order <= 8)");

  std::string ybe_spec, variant_name = "R1";
  int map_index = 0;
  auto* ybe = app.add_subcommand(
      "ybe", "emit one verified Yang-Baxter solution table");
  ybe->add_option("spec", ybe_spec, "group spec")->required();
  ybe->add_option("--map", map_index,
                  "index into the enumerated abelian maps (lexicographic)")
      ->required();
  ybe->add_option("--variant", variant_name, "one of R1, R2, R3, R4");

  std::string maps_spec;
  auto* maps_cmd =
      app.add_subcommand("maps", "list the abelian endomorphisms of a group");
  maps_cmd->add_option("spec", maps_spec, "group spec")->required();

  CLI11_PARSE(app, argc, argv);
  if (opts.jobs != 0) set_default_jobs(opts.jobs);

  try {
    if (classify->parsed()) {
      Classification c = classify_group(build_group(spec));
      emit(opts, opts.csv ? classification_to_csv(c)
                          : pretty(classification_to_json(c)));
      return 0;
    }
    if (table->parsed()) {
      auto rows = dihedral_table(max_n);
      emit(opts, opts.csv ? dihedral_table_to_csv(rows)
                          : pretty(dihedral_table_to_json(rows)));
      for (const auto& r : rows)
        if (!r.ok) {
          std::cerr << "dihedral-table: row n=" << r.n
                    << " disagrees with the formulas\n";
          return kExitVerify;
        }
      return 0;
    }
    if (verify->parsed()) {
      auto results = verify_group(build_group(verify_spec), with_oracle);
      emit(opts,
           opts.csv ? verify_to_csv(results) : pretty(verify_to_json(results)));
      return all_passed(results) ? 0 : kExitVerify;
    }
    if (ybe->parsed()) {
      SolutionVariant variant;
      if (variant_name == "R1")
        variant = SolutionVariant::R1;
      else if (variant_name == "R2")
        variant = SolutionVariant::R2;
      else if (variant_name == "R3")
        variant = SolutionVariant::R3;
      else if (variant_name == "R4")
        variant = SolutionVariant::R4;
      else
        throw spec_error("unknown variant " + variant_name);
      GroupPtr g = build_group(ybe_spec);
      auto maps = enumerate_abelian_maps(g);
      if (map_index < 0 || map_index >= static_cast<int>(maps.size()))
        throw spec_error("map index out of range, group has " +
                         std::to_string(maps.size()) + " abelian maps");
      PairTable sol =
          solution_from_brace(brace_from_map(maps[map_index]), variant);
      PairTable closed = closed_form_solution(maps[map_index], variant);
      if (closed.first != sol.first || closed.second != sol.second)
        throw invariant_error("closed form disagrees with the brace table");
      if (opts.csv) {
        std::ostringstream os;
        os << "x,y,out_x,out_y\n";
        for (Elem x = 0; x < sol.size; ++x)
          for (Elem y = 0; y < sol.size; ++y)
            os << x << "," << y << "," << sol.first[x * sol.size + y] << ","
               << sol.second[x * sol.size + y] << "\n";
        emit(opts, os.str());
      } else {
        emit(opts, pretty(solution_to_json(sol)));
      }
      return 0;
    }
    if (maps_cmd->parsed()) {
      GroupPtr g = build_group(maps_spec);
      auto maps = enumerate_abelian_maps(g);
      if (opts.csv) {
        std::ostringstream os;
        os << "index,images,fixed_point_free\n";
        for (size_t i = 0; i < maps.size(); ++i) {
          os << i << ",\"";
          for (size_t k = 0; k < maps[i].images.size(); ++k)
            os << (k ? " " : "") << maps[i].images[k];
          os << "\"," << (maps[i].fixed_point_free ? 1 : 0) << "\n";
        }
        emit(opts, os.str());
      } else {
        ojson arr = ojson::array();
        for (const auto& m : maps) {
          ojson jm = map_to_json(m);
          jm["fixed_point_free"] = m.fixed_point_free;
          arr.push_back(std::move(jm));
        }
        emit(opts, pretty(ojson{{"group", g->spec()},
                                {"count", maps.size()},
                                {"maps", std::move(arr)}}));
      }
      return 0;
    }
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
