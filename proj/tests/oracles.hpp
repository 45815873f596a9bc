// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, kept independent of the library code paths they check:
// path counting by plain DFS, positive roots by exhausting the Tits form,
// and dimension vectors by literal knitting (no Coxeter matrices).

#ifndef QHA_TESTS_ORACLES_HPP
#define QHA_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "qha/weights.hpp"

namespace qha::testing {

inline long count_paths_dfs(const Quiver& q, int from, int to) {
  long total = from == to ? 1 : 0;  // the trivial path
  std::function<void(int)> walk = [&](int at) {
    for (const Arrow& a : q.arrows())
      if (a.tail == at) {
        if (a.head == to) ++total;
        walk(a.head);
      }
  };
  walk(from);
  return total;
}

// q_T(d) = sum d_i^2 - sum_{arrows} d_tail d_head
inline long tits_form(const Quiver& q, const std::vector<long>& d) {
  long acc = 0;
  for (long x : d) acc += x * x;
  for (const Arrow& a : q.arrows())
    acc -= d[static_cast<size_t>(a.tail)] * d[static_cast<size_t>(a.head)];
  return acc;
}

// all nonzero d >= 0 with entries <= bound and q_T(d) = 1; by Gabriel these
// are exactly the dimension vectors of indecomposables for Dynkin q
inline std::set<std::vector<long>> positive_roots_bruteforce(const Quiver& q, long bound) {
  std::set<std::vector<long>> roots;
  std::vector<long> d(static_cast<size_t>(q.size()), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == d.size()) {
      if (tits_form(q, d) == 1) roots.insert(d);
      return;
    }
    for (long x = 0; x <= bound; ++x) {
      d[i] = x;
      rec(i + 1);
    }
    d[i] = 0;
  };
  rec(0);
  roots.erase(std::vector<long>(d.size(), 0));
  return roots;
}

// knit dimension vectors column by column from chi(P_i), using only mesh
// additivity (the matrix-free route)
class KnitOracle {
public:
  explicit KnitOracle(const Quiver& q) : q_(q) {
    IntMat c = cartan_matrix(q);
    for (int i = 0; i < q.size(); ++i) table_[{i, 0}] = projective_dimvec(c, i);
  }

  const DimVec& dim(int vertex, long power) {
    auto it = table_.find({vertex, power});
    if (it != table_.end()) return it->second;
    if (power < 0) throw std::logic_error("oracle only knits forward");
    knit_column(power);
    return table_.at({vertex, power});
  }

private:
  void knit_column(long m) {
    if (table_.count({0, m}) == 0 && m > 1) knit_column(m - 1);
    for (int v : q_.topological_order()) {
      DimVec acc(static_cast<size_t>(q_.size()), Int(0));
      for (const Arrow& a : q_.arrows()) {
        const DimVec* add = nullptr;
        if (a.tail == v) add = &dim_ready(a.head, m - 1);
        if (a.head == v) add = &dim_ready(a.tail, m);
        if (add)
          for (size_t k = 0; k < acc.size(); ++k) acc[k] += (*add)[k];
      }
      const DimVec& prev = dim_ready(v, m - 1);
      for (size_t k = 0; k < acc.size(); ++k) acc[k] -= prev[k];
      table_[{v, m}] = acc;
    }
  }

  const DimVec& dim_ready(int vertex, long power) { return table_.at({vertex, power}); }

  const Quiver& q_;
  std::map<std::pair<int, long>, DimVec> table_;
};

// census quivers, one orientation each
inline Quiver linear_an(int n) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    as.push_back(Arrow{std::string(1, static_cast<char>('a' + i - 1)), i - 1, i});
  return Quiver::from_parts(vs, as);
}

inline Quiver dn_quiver(int n) {
  // two short legs feeding the end of a path
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  as.push_back(Arrow{"a", 0, 2});
  as.push_back(Arrow{"b", 1, 2});
  for (int i = 3; i < n; ++i) as.push_back(Arrow{"c" + std::to_string(i), i - 1, i});
  return Quiver::from_parts(vs, as);
}

inline Quiver en_quiver(int n) {
  // path 1..n-1 with vertex n hanging off the third node
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (int i = 1; i < n - 1; ++i) as.push_back(Arrow{"a" + std::to_string(i), i - 1, i});
  as.push_back(Arrow{"b", n - 1, 2});
  return Quiver::from_parts(vs, as);
}

inline Quiver kronecker(int arrows = 2) {
  std::vector<Arrow> as;
  for (int i = 0; i < arrows; ++i)
    as.push_back(Arrow{std::string(1, static_cast<char>('a' + i)), 0, 1});
  return Quiver::from_parts({"1", "2"}, as);
}

inline std::vector<Quiver> dynkin_census() {
  std::vector<Quiver> out;
  for (int n = 1; n <= 8; ++n) out.push_back(linear_an(n));
  for (int n = 4; n <= 8; ++n) out.push_back(dn_quiver(n));
  out.push_back(en_quiver(6));
  out.push_back(en_quiver(7));
  out.push_back(en_quiver(8));
  return out;
}

}  // namespace qha::testing

#endif
