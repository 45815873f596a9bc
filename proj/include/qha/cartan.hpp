// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_CARTAN_HPP
#define QHA_CARTAN_HPP

#include <string>
#include <vector>

#include "qha/quiver.hpp"

namespace qha {

/// Dimension vector, indexed by the quiver's vertex order.
using DimVec = std::vector<Int>;

std::string dimvec_str(const DimVec& d);
Int dimvec_sum(const DimVec& d);

/// C_ij = number of directed paths i -> j (trivial paths included), so C is
/// unitriangular in any topological order and det C = 1.
IntMat cartan_matrix(const Quiver& q);

/// Coxeter matrix Phi = -C^t C^{-1}; acts on dimension vectors as the
/// Nakayama translate nu_1.
IntMat coxeter_phi(const Quiver& q);
/// Psi = Phi^{-t} = -C^{-1} C^t; acts on weights.
IntMat coxeter_psi(const Quiver& q);

/// chi(P_i): the i-th column of C.
DimVec projective_dimvec(const IntMat& cartan, int i);
/// chi(I_i): the i-th row of C.
DimVec injective_dimvec(const IntMat& cartan, int i);

/// Euler-Ringel pairing u^t C^{-1} w.
Rat euler_ringel(const Quiver& q, const DimVec& u, const DimVec& w);

/// A scalar per vertex, all in one field.
struct Weight {
  Field field;
  std::vector<Scalar> entries;

  Weight() : field(Field::rationals()) {}
  Weight(Field f, std::vector<Scalar> e) : field(f), entries(std::move(e)) {}

  int size() const { return static_cast<int>(entries.size()); }
  bool sincere() const;
  std::string str() const;  // comma separated exact entries
};

/// Comma-separated entries in the weight-file grammar.
Weight parse_weight(const Field& f, const std::string& csv);

/// v^t d, computed in the weight's field.
Scalar weighted_chi(const Weight& v, const DimVec& d);

/// Matrix action on a weight (lifting the integer matrix into the field).
std::vector<Scalar> apply_int_matrix(const IntMat& m, const std::vector<Scalar>& v);

}  // namespace qha

#endif
