// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_ZQ_HPP
#define QHA_ZQ_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/cartan.hpp"

namespace qha {

/// Vertex (i, m) of the translation quiver ZQ; stands for nu_1^{-m} P_i.
struct ZQVertex {
  int vertex = 0;  // vertex index of Q
  long power = 0;  // m

  auto operator<=>(const ZQVertex&) const = default;
};

/// Formal direct sum of ZQ positions with multiplicities >= 1.
using IndecMultiset = std::map<ZQVertex, long>;

IndecMultiset multiset_add(const IndecMultiset& a, const IndecMultiset& b);
/// a - b; the failing step index is reported by the caller.
std::optional<IndecMultiset> multiset_subtract(const IndecMultiset& a, const IndecMultiset& b);
long multiset_total(const IndecMultiset& m);

inline ZQVertex translate(ZQVertex x, long k) { return ZQVertex{x.vertex, x.power + k}; }

struct QhaLayers {
  std::vector<IndecMultiset> layers;  // layers[n] is the *-degree n piece
  IndecMultiset aggregate;
  DimVec aggregate_dimvec;
};

/// ZQ combinatorics over a fixed quiver; memoizes dimension vectors.
class TranslationQuiver {
public:
  explicit TranslationQuiver(Quiver q);

  const Quiver& quiver() const { return q_; }
  const IntMat& cartan() const { return cartan_; }
  const QuiverClass& cls() const { return class_; }

  /// Phi^{-m} chi(P_i); entrywise negative entries encode derived shifts.
  const DimVec& dimvec(ZQVertex x) const;
  DimVec dimvec(const IndecMultiset& m) const;

  /// Arrows out of x in ZQ: (j,m) for alpha: i->j and (j,m+1) for alpha: j->i.
  IndecMultiset successors(ZQVertex x) const;
  IndecMultiset predecessors(ZQVertex x) const;

  /// Module positions (entrywise >= 0, nonzero dim vector) for Dynkin Q,
  /// scanned orbit by orbit; throws NotDynkin otherwise.
  std::vector<std::pair<ZQVertex, DimVec>> enumerate_indecomposables() const;

  /// Position of P_i, and of I_i inside the module window (Dynkin).
  ZQVertex projective_position(int i) const { return ZQVertex{i, 0}; }
  ZQVertex injective_position(int i) const;

  /// Minimal rad^n-approximation objects L_0..L_{n_max} of M by the mesh
  /// recursion L_n = successors(L_{n-1}) minus tau^{-1} L_{n-2}; throws
  /// LadderBroken(n) when the subtraction leaves the successor multiset.
  std::vector<IndecMultiset> ladder(const IndecMultiset& m, long n_max) const;

  /// Per-degree layers of Lambda e_i via ladder({P_i}); n_max < 0 means the
  /// natural Dynkin range h-2 (NotDynkin if unbounded).
  QhaLayers qha_decomposition(int i, long n_max = -1) const;

  /// Largest power m such that (i, m) is still a module position (Dynkin).
  long module_orbit_end(int i) const;

  /// Display name of a module position: P_i, I_i, S_i when the dimension
  /// vector matches, otherwise the bare pair.
  std::string position_name(ZQVertex x) const;

  std::string export_dot(long power_lo, long power_hi) const;
  /// Module window of a Dynkin quiver.
  std::string export_dot_module_window() const;

  std::string multiset_json(const IndecMultiset& m) const;
  std::string multiset_str(const IndecMultiset& m) const;

private:
  std::string vertex_label(ZQVertex x) const;

  Quiver q_;
  QuiverClass class_;
  IntMat cartan_;
  IntMat phi_, phi_inv_;
  mutable std::map<ZQVertex, DimVec> dim_cache_;
};

/// The A^_N quiver of the standard orientation: vertices 0..N, arrows
/// 0 -> 1, i -> i+1 (1 <= i < N) and 0 -> N.
Quiver make_hat_an(int n);

/// Predicted decomposition of Lambda_n e_i on the A^_N quiver: the multiset
/// of tau^{-q-b} P_r over b = 0..n where i+n-2b = q(N+1)+r with 0 <= r <= N.
/// Throws WrongQuiverShape unless q matches make_hat_an's presentation.
IndecMultiset hat_an_predict(const Quiver& q, int i, long n);

}  // namespace qha

#endif
