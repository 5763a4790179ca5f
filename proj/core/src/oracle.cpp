#include <algorithm>
#include <set>

#include "bracelab/regular.hpp"

namespace bracelab {

namespace {

// Search state: one permutation row per label g (the member with eta[0] = g),
// plus per-column bitmasks of used values to keep the columns Latin.
struct OracleState {
  std::vector<Perm> rows;
  std::vector<char> assigned;
  std::vector<unsigned> col_used;
};

class OracleSearch {
 public:
  explicit OracleSearch(const GroupPtr& g) : g_(g), n_(g->order()) {
    lam_.resize(n_, Perm(n_));
    lam_inv_.resize(n_, Perm(n_));
    for (Elem k = 0; k < n_; ++k)
      for (Elem h = 0; h < n_; ++h) {
        lam_[k][h] = g->mul(k, h);
        lam_inv_[k][h] = g->mul(g->inv(k), h);
      }
  }

  std::vector<PermSubgroup> run() {
    OracleState st;
    st.rows.assign(n_, Perm());
    st.assigned.assign(n_, 0);
    st.col_used.assign(n_, 0);
    std::vector<Elem> queue;
    if (!try_set(st, identity_perm(n_), queue) || !propagate(st, queue))
      throw invariant_error("oracle: inconsistent initial state");
    recurse(st);

    std::vector<PermSubgroup> out;
    for (const auto& perms : found_) {
      PermSubgroup p = make_perm_subgroup(
          g_, std::vector<Perm>(perms.begin(), perms.end()));
      if (!is_regular(p) || !is_stable_full(p))
        throw invariant_error("oracle: produced subgroup fails verification");
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  bool try_set(OracleState& st, const Perm& perm, std::vector<Elem>& queue) {
    Elem label = perm[0];
    if (st.assigned[label]) return st.rows[label] == perm;
    for (Elem h = 1; h < n_; ++h)
      if (st.col_used[h] & (1u << perm[h])) return false;
    st.rows[label] = perm;
    st.assigned[label] = 1;
    for (Elem h = 1; h < n_; ++h) st.col_used[h] |= 1u << perm[h];
    queue.push_back(label);
    return true;
  }

  // Forces closure under composition, inverses and conjugation by lambda(G).
  bool propagate(OracleState& st, std::vector<Elem>& queue) {
    while (!queue.empty()) {
      Elem gl = queue.back();
      queue.pop_back();
      Perm row = st.rows[gl];
      if (!try_set(st, invert_perm(row), queue)) return false;
      for (Elem k = 1; k < n_; ++k) {
        Perm conj = compose_perms(lam_[k], compose_perms(row, lam_inv_[k]));
        if (!try_set(st, conj, queue)) return false;
      }
      for (Elem a = 0; a < n_; ++a) {
        if (!st.assigned[a]) continue;
        if (!try_set(st, compose_perms(st.rows[a], row), queue)) return false;
        if (!try_set(st, compose_perms(row, st.rows[a]), queue)) return false;
      }
    }
    return true;
  }

  void recurse(const OracleState& st) {
    Elem next = -1;
    for (Elem gl = 0; gl < n_; ++gl)
      if (!st.assigned[gl]) {
        next = gl;
        break;
      }
    if (next < 0) {
      std::vector<Perm> perms(st.rows);
      std::sort(perms.begin(), perms.end());
      found_.insert(std::move(perms));
      return;
    }
    Perm cand(n_, -1);
    cand[0] = next;
    enumerate_candidates(st, cand, 1, 1u << next);
  }

  void enumerate_candidates(const OracleState& st, Perm& cand, Elem pos,
                            unsigned used) {
    if (pos == n_) {
      OracleState copy = st;
      std::vector<Elem> queue;
      if (try_set(copy, cand, queue) && propagate(copy, queue)) recurse(copy);
      return;
    }
    for (Elem v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      if (st.col_used[pos] & (1u << v)) continue;
      cand[pos] = v;
      enumerate_candidates(st, cand, pos + 1, used | (1u << v));
    }
    cand[pos] = -1;
  }

  GroupPtr g_;
  int n_;
  std::vector<Perm> lam_, lam_inv_;
  std::set<std::vector<Perm>> found_;
};

}  // namespace

std::vector<PermSubgroup> all_regular_stable_subgroups(const GroupPtr& g) {
  if (g->order() > 8)
    throw cap_error("all_regular_stable_subgroups: order above the 8 cap");
  return OracleSearch(g).run();
}

}  // namespace bracelab
