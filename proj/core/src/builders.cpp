#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bracelab/group.hpp"

namespace bracelab {

namespace {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::string power_name(const std::string& base, int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

GroupPtr build_cyclic(int n) {
  if (n < 1) throw spec_error("C:n requires n >= 1");
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = power_name("g", a);
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::create("C:" + std::to_string(n), std::move(table),
                             std::move(names), std::move(gens));
}

// Rotations r^a at index a, reflections r^a s at index n + a.
GroupPtr build_dihedral(int n) {
  if (n < 3) throw spec_error("D:n requires n >= 3");
  int m = 2 * n;
  auto idx = [&](int a, int b) { return (b ? n : 0) + ((a % n + n) % n); };
  std::vector<Elem> table(m * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < 2; ++d)
          table[idx(a, b) * m + idx(c, d)] = idx(b ? a - c : a + c, b ^ d);
  std::vector<std::string> names(m);
  for (int a = 0; a < n; ++a) {
    names[a] = power_name("r", a);
    names[n + a] = a == 0 ? "s" : power_name("r", a) + " s";
  }
  return FiniteGroup::create("D:" + std::to_string(n), std::move(table),
                             std::move(names), {1, n});
}

std::string cycle_notation(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> done(n, 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    any = true;
    os << "(" << i + 1;
    done[i] = 1;
    for (int j = p[i]; j != i; j = p[j]) {
      os << " " << j + 1;
      done[j] = 1;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

bool perm_is_even(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

GroupPtr build_symmetric_like(int n, bool alternating) {
  if (!alternating && n < 2) throw spec_error("S:n requires n >= 2");
  if (alternating && n < 3) throw spec_error("A:n requires n >= 3");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!alternating || perm_is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lexicographic order puts the identity first
  int m = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;

  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<int> prod(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) prod[k] = elems[i][elems[j][k]];
      table[static_cast<size_t>(i) * m + j] = index.at(prod);
    }
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = cycle_notation(elems[i]);

  std::vector<Elem> gens;
  auto add_gen = [&](std::vector<int> q) { gens.push_back(index.at(q)); };
  if (!alternating) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    add_gen(t);
    if (n > 2) {
      std::vector<int> c(n);
      for (int k = 0; k < n; ++k) c[k] = (k + 1) % n;
      add_gen(c);
    }
  } else {
    std::vector<int> c3(n);
    std::iota(c3.begin(), c3.end(), 0);
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    add_gen(c3);
    if (n > 3) {
      std::vector<int> c(n);
      if (n % 2 == 1) {
        for (int k = 0; k < n; ++k) c[k] = (k + 1) % n;
      } else {
        c[0] = 0;
        for (int k = 1; k < n; ++k) c[k] = k % (n - 1) + 1;
      }
      add_gen(c);
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::string spec = (alternating ? "A:" : "S:") + std::to_string(n);
  return FiniteGroup::create(spec, std::move(table), std::move(names),
                             std::move(gens));
}

// <s, t : s^p = t^q = 1, t s t^-1 = s^d>, elements s^i t^j at index i*q + j.
GroupPtr build_metacyclic(long p, long q) {
  if (!is_prime(p) || !is_prime(q) || p <= q)
    throw spec_error("M:p:q requires primes p > q");
  if ((p - 1) % q != 0) throw spec_error("M:p:q requires q | p-1");
  long d = 0;
  for (long c = 2; c < p; ++c) {
    long pw = 1;
    for (long e = 0; e < q; ++e) pw = pw * c % p;
    if (pw == 1) {
      d = c;
      break;
    }
  }
  if (d == 0) throw spec_error("M:p:q: no element of order q mod p");
  int m = static_cast<int>(p * q);
  std::vector<long> dpow(q);
  dpow[0] = 1;
  for (long j = 1; j < q; ++j) dpow[j] = dpow[j - 1] * d % p;
  auto idx = [&](long i, long j) {
    return static_cast<int>(((i % p + p) % p) * q + ((j % q + q) % q));
  };
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < q; ++j)
      for (long k = 0; k < p; ++k)
        for (long l = 0; l < q; ++l)
          table[static_cast<size_t>(idx(i, j)) * m + idx(k, l)] =
              idx(i + k * dpow[j], j + l);
  std::vector<std::string> names(m);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < q; ++j) {
      std::string nm;
      if (i == 0 && j == 0)
        nm = "1";
      else if (j == 0)
        nm = power_name("s", static_cast<int>(i));
      else if (i == 0)
        nm = power_name("t", static_cast<int>(j));
      else
        nm = power_name("s", static_cast<int>(i)) + " " +
             power_name("t", static_cast<int>(j));
      names[idx(i, j)] = nm;
    }
  std::string spec = "M:" + std::to_string(p) + ":" + std::to_string(q);
  return FiniteGroup::create(spec, std::move(table), std::move(names),
                             {idx(1, 0), idx(0, 1)});
}

long parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw spec_error("malformed group spec: expected integer, got '" + s + "'");
  return std::stol(s);
}

GroupPtr build_atom(const std::string& atom) {
  auto colon = atom.find(':');
  if (colon == std::string::npos)
    throw spec_error("malformed group spec: '" + atom + "'");
  std::string family = atom.substr(0, colon);
  std::string rest = atom.substr(colon + 1);
  if (family == "file") {
    if (rest.empty()) throw spec_error("file: spec needs a path");
    return load_cayley_file(rest);
  }
  if (family == "M") {
    auto colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw spec_error("M:p:q spec needs two arguments");
    long p = parse_int(rest.substr(0, colon2));
    long q = parse_int(rest.substr(colon2 + 1));
    return build_metacyclic(p, q);
  }
  long n = parse_int(rest);
  if (family == "C") return build_cyclic(static_cast<int>(n));
  if (family == "D") return build_dihedral(static_cast<int>(n));
  if (family == "S") return build_symmetric_like(static_cast<int>(n), false);
  if (family == "A") return build_symmetric_like(static_cast<int>(n), true);
  throw spec_error("unknown group family '" + family + "'");
}

}  // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  int na = a->order(), nb = b->order();
  int m = na * nb;
  auto idx = [&](Elem x, Elem y) { return x * nb + y; };
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          table[static_cast<size_t>(idx(x1, y1)) * m + idx(x2, y2)] =
              idx(a->mul(x1, x2), b->mul(y1, y2));
  std::vector<std::string> names(m);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      names[idx(x, y)] = "(" + a->name(x) + ", " + b->name(y) + ")";
  std::vector<Elem> gens;
  for (Elem g : generating_set(*a)) gens.push_back(idx(g, 0));
  for (Elem g : generating_set(*b)) gens.push_back(idx(0, g));
  return FiniteGroup::create(a->spec() + " x " + b->spec(), std::move(table),
                             std::move(names), std::move(gens));
}

GroupPtr build_group(const std::string& spec) {
  // top-level product split on " x "
  std::vector<std::string> atoms;
  size_t pos = 0;
  while (true) {
    size_t sep = spec.find(" x ", pos);
    if (sep == std::string::npos) {
      atoms.push_back(spec.substr(pos));
      break;
    }
    atoms.push_back(spec.substr(pos, sep - pos));
    pos = sep + 3;
  }
  for (auto& atm : atoms) {
    while (!atm.empty() && atm.front() == ' ') atm.erase(atm.begin());
    while (!atm.empty() && atm.back() == ' ') atm.pop_back();
    if (atm.empty()) throw spec_error("malformed group spec: '" + spec + "'");
  }
  GroupPtr g = build_atom(atoms[0]);
  for (size_t i = 1; i < atoms.size(); ++i)
    g = direct_product(g, build_atom(atoms[i]));
  return g;
}

}  // namespace bracelab
