// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_PATHALG_HPP
#define QHA_PATHALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/weights.hpp"

namespace qha {

/// Bidegree cell of the double-quiver path algebra: all paths src -> tgt of
/// path length `len` containing `star` reverse arrows.
struct Cell {
  int src = 0, tgt = 0, len = 0, star = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Arrow-id sequence; the empty sequence is the trivial path at Cell::src.
using ArrowSeq = std::vector<int>;

/// Homogeneous element of k(double quiver): one cell, finitely many paths.
class PathVector {
public:
  explicit PathVector(Field f) : field_(f) {}
  PathVector(Field f, Cell c) : field_(f), cell_(c), pinned_(true) {}

  const Field& field() const { return field_; }
  bool has_cell() const { return pinned_; }
  const Cell& cell() const;
  bool is_zero_vector() const { return terms_.empty(); }
  const std::map<ArrowSeq, Scalar>& terms() const { return terms_; }

  /// Adds c * path; an empty path needs `at` (its vertex). Throws
  /// NonHomogeneous if the term lives in a different cell.
  void add_term(const DoubleQuiver& dq, const ArrowSeq& path, const Scalar& c, int at = -1);
  void add(const PathVector& other);
  void scale(const Scalar& c);

  PathVector left_mul(const DoubleQuiver& dq, int arrow) const;   // arrow * this
  PathVector right_mul(const DoubleQuiver& dq, int arrow) const;  // this * arrow

  std::string str(const DoubleQuiver& dq) const;

private:
  Field field_;
  Cell cell_{};
  bool pinned_ = false;
  std::map<ArrowSeq, Scalar> terms_;
};

Cell cell_of(const DoubleQuiver& dq, const ArrowSeq& path, int at = -1);

/// Concatenation product; zero when the cells do not compose.
PathVector pv_mul(const DoubleQuiver& dq, const PathVector& a, const PathVector& b);

/// rho_i, optionally weighted by v_i^{-1} (NonSincereWeight if v_i = 0).
PathVector mesh_relation(const DoubleQuiver& dq, int i, const Weight* v = nullptr);
/// eta_a = [a, wrho] = v_{h(a)}^{-1} a rho_{h(a)} - v_{t(a)}^{-1} rho_{t(a)} a.
PathVector qh_relation(const DoubleQuiver& dq, const Weight& v, int arrow);

enum class RelationKind { Preprojective, QuiverHeisenberg };

struct RelationFamily {
  RelationKind kind = RelationKind::Preprojective;
  Field field;
  std::optional<Weight> weight;
  std::vector<PathVector> generators;

  RelationFamily() : field(Field::rationals()) {}
};

RelationFamily preprojective_family(const DoubleQuiver& dq, const Field& f);
RelationFamily qh_family(const DoubleQuiver& dq, const Weight& v);

struct EngineOptions {
  long cap_cell_size = 200000;  // per-cell path-basis cap; ResourceBound beyond
  int threads = 0;              // 0: QHA_THREADS env or hardware concurrency
  bool no_trust_bound = false;  // scan one extra path-length band
};

/// All monomial paths of the double quiver up to a length bound, bucketed by
/// cell; bucket order is lexicographic in the canonical arrow order.
class PathIndex {
public:
  PathIndex(const DoubleQuiver& dq, int len_max, long cap_cell_size);

  const std::vector<ArrowSeq>& paths(const Cell& c) const;
  long count(const Cell& c) const { return static_cast<long>(paths(c).size()); }
  int len_max() const { return len_max_; }
  std::vector<Cell> nonempty_cells(int star_max) const;

private:
  int len_max_;
  std::map<Cell, std::vector<ArrowSeq>> buckets_;
  std::vector<ArrowSeq> empty_;
};

struct GradedDimTable {
  int len_max = 0, star_max = 0;
  std::map<Cell, long> dims;  // nonzero entries only

  long dim(const Cell& c) const {
    auto it = dims.find(c);
    return it == dims.end() ? 0 : it->second;
  }
  /// dim e_tgt Lambda_star e_src summed over path length, i.e. the *-slice.
  long star_slice(int src, int tgt, int star) const;
  /// dim Lambda e_i = sum over cells with tgt == i.
  long idempotent_total(int i) const;
  long total() const;
  std::string csv(const Quiver& q) const;
  std::string json(const Quiver& q) const;
};

/// dim of every bidegree cell of k(double quiver)/(family) by exact rank:
/// #paths minus rank of the spanning set p*g*q inside the cell.
GradedDimTable graded_dim(const DoubleQuiver& dq, const RelationFamily& family, int len_max,
                          int star_max, const EngineOptions& opts = {});

/// Membership of a homogeneous element in the bigraded ideal component:
/// one rank comparison.
bool element_is_zero(const DoubleQuiver& dq, const RelationFamily& family, const PathVector& elem,
                     const EngineOptions& opts = {});

/// Element grammar: terms `COEFF * NAME.NAME...` joined by + or -, reverse
/// arrows written NAME', macros rho(i), wrho(i), wrho2(i).
PathVector parse_element(const DoubleQuiver& dq, const Field& f, const Weight* v,
                         const std::string& text);

struct VerifyRow {
  int star = 0;
  int vertex = 0;     // j
  long engine = 0;    // dim e_j Lambda_star e_i
  long knit = 0;      // dimension predicted by the ladder
  bool ok = false;
  std::string kind;   // "layer" or "duality"
};

struct VerifyReport {
  int basepoint = 0;  // i
  bool ok = true;
  long engine_total = 0;
  long knit_total = 0;
  std::vector<VerifyRow> rows;
  std::optional<VerifyRow> first_mismatch;
};

/// Knitting vs relation engine for Lambda e_i of a Dynkin quiver with a
/// regular weight: every *-layer, the h-2 duality slice, and the vanishing
/// of the h-1 layer. Throws IrregularWeight when the precondition fails.
VerifyReport verify_against_knitting(const Quiver& q, const Weight& v, int i,
                                     const EngineOptions& opts = {});

}  // namespace qha

#endif
