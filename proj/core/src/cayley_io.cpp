#include <fstream>
#include <sstream>

#include "bracelab/group.hpp"

namespace bracelab {

GroupPtr load_cayley_table(std::istream& in, const std::string& label) {
  long n = 0;
  if (!(in >> n) || n < 1) throw spec_error("cayley table: bad order line");
  if (n > 100000) throw cap_error("cayley table: order too large");
  std::vector<std::string> names(n);
  for (long i = 0; i < n; ++i)
    if (!(in >> names[i])) throw spec_error("cayley table: missing names");
  std::vector<Elem> table(n * n);
  for (long i = 0; i < n * n; ++i) {
    long v;
    if (!(in >> v)) throw spec_error("cayley table: missing table entries");
    if (v < 0 || v >= n) throw spec_error("cayley table: entry out of range");
    table[i] = static_cast<Elem>(v);
  }
  // FiniteGroup::create verifies identity-at-0, Latin square, associativity
  // and inverses.
  return FiniteGroup::create(label, std::move(table), std::move(names), {});
}

GroupPtr load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open group file '" + path + "'");
  return load_cayley_table(in, "file:" + path);
}

void save_cayley_table(const FiniteGroup& g, std::ostream& out) {
  int n = g.order();
  out << n << "\n";
  for (Elem a = 0; a < n; ++a) {
    // names are whitespace-separated in this format
    std::string nm = g.name(a);
    for (char& c : nm)
      if (c == ' ' || c == '\t') c = '_';
    out << (a ? " " : "") << nm;
  }
  out << "\n";
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
}

}  // namespace bracelab
