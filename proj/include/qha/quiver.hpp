// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_QUIVER_HPP
#define QHA_QUIVER_HPP

#include <string>
#include <vector>

#include "qha/matrix.hpp"

namespace qha {

struct Arrow {
  std::string name;
  int tail = 0;  // vertex index
  int head = 0;

  bool operator==(const Arrow&) const = default;
};

/// Finite connected acyclic quiver. Vertex and arrow order is declaration
/// order and fixed for life; every matrix in the toolkit is indexed by it.
class Quiver {
public:
  static Quiver from_parts(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Text format:
  ///   vertices: 1 2 3
  ///   arrow a: 1 -> 2
  /// `#` comments and blank lines are ignored. A leading `{` switches to the
  /// JSON mirror {"vertices":[...],"arrows":[{"name","tail","head"}]}.
  static Quiver parse(const std::string& text);
  static Quiver parse_file(const std::string& path);

  int size() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(int i) const { return vertices_[static_cast<size_t>(i)]; }
  const Arrow& arrow(int a) const { return arrows_[static_cast<size_t>(a)]; }
  int vertex_index(const std::string& name) const;  // UnknownVertex

  /// Vertex indices in a topological order (tails before heads).
  const std::vector<int>& topological_order() const { return topo_; }

  std::string to_text() const;
  std::string to_json() const;

  bool operator==(const Quiver&) const = default;

private:
  Quiver() = default;
  void validate();

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_;
};

/// The double quiver: base arrows keep their indices 0..k-1, the reverse of
/// arrow a is arrow a+k, named with an apostrophe suffix.
class DoubleQuiver {
public:
  explicit DoubleQuiver(Quiver base) : base_(std::move(base)) {}

  const Quiver& base() const { return base_; }
  int vertex_count() const { return base_.size(); }
  int arrow_count() const { return 2 * base_.arrow_count(); }
  bool is_reverse(int a) const { return a >= base_.arrow_count(); }
  int reverse_of(int a) const {
    int k = base_.arrow_count();
    return a >= k ? a - k : a + k;
  }
  int tail(int a) const {
    const Arrow& ar = base_.arrow(a % base_.arrow_count());
    return is_reverse(a) ? ar.head : ar.tail;
  }
  int head(int a) const {
    const Arrow& ar = base_.arrow(a % base_.arrow_count());
    return is_reverse(a) ? ar.tail : ar.head;
  }
  int star_degree(int a) const { return is_reverse(a) ? 1 : 0; }
  std::string arrow_name(int a) const {
    std::string n = base_.arrow(a % base_.arrow_count()).name;
    return is_reverse(a) ? n + "'" : n;
  }
  /// Arrow index by double-quiver name (with optional apostrophe).
  int arrow_index(const std::string& name) const;

private:
  Quiver base_;
};

enum class DynkinType { A, D, E };

struct QuiverClass {
  enum class Kind { Dynkin, ExtendedDynkin, Wild };

  Kind kind = Kind::Wild;
  DynkinType type = DynkinType::A;  // meaningful unless Wild
  int rank = 0;                     // Dynkin rank; affine X~n has n+1 vertices
  int coxeter_number = 0;           // Dynkin only

  bool dynkin() const { return kind == Kind::Dynkin; }
  bool extended_dynkin() const { return kind == Kind::ExtendedDynkin; }
  std::string name() const;  // "A3", "D~4", "wild"
};

/// Dynkin/extended-Dynkin/wild trichotomy via the symmetrized Tits form
/// matrix 2I - adjacency, decided by exact leading principal minors;
/// the letter is then read off the underlying tree or cycle.
QuiverClass classify(const Quiver& q);

/// 2I - (undirected multigraph adjacency); loops are impossible here.
IntMat tits_form_matrix(const Quiver& q);

}  // namespace qha

#endif
