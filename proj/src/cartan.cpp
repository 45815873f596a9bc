// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/cartan.hpp"

#include <sstream>

namespace qha {

std::string dimvec_str(const DimVec& d) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ')';
  return os.str();
}

Int dimvec_sum(const DimVec& d) {
  Int s(0);
  for (const Int& x : d) s += x;
  return s;
}

IntMat cartan_matrix(const Quiver& q) {
  int n = q.size();
  IntMat adj(n, n);
  for (const Arrow& a : q.arrows()) adj.at(a.tail, a.head) += 1;
  // A is nilpotent, so C = I + A + ... + A^{n-1}
  IntMat c = int_identity(n);
  IntMat pw = int_identity(n);
  for (int k = 1; k < n; ++k) {
    pw = pw * adj;
    c = c + pw;
  }
  return c;
}

IntMat coxeter_phi(const Quiver& q) {
  IntMat c = cartan_matrix(q);
  RatMat cinv = rat_inverse(to_rat(c));
  RatMat phi = to_rat(c.transpose()) * cinv;
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j) phi.at(i, j) = -phi.at(i, j);
  return to_int(phi);
}

IntMat coxeter_psi(const Quiver& q) {
  IntMat c = cartan_matrix(q);
  RatMat cinv = rat_inverse(to_rat(c));
  RatMat psi = cinv * to_rat(c.transpose());
  for (int i = 0; i < psi.rows(); ++i)
    for (int j = 0; j < psi.cols(); ++j) psi.at(i, j) = -psi.at(i, j);
  return to_int(psi);
}

DimVec projective_dimvec(const IntMat& cartan, int i) {
  DimVec d(static_cast<size_t>(cartan.rows()));
  for (int j = 0; j < cartan.rows(); ++j) d[static_cast<size_t>(j)] = cartan.at(j, i);
  return d;
}

DimVec injective_dimvec(const IntMat& cartan, int i) {
  DimVec d(static_cast<size_t>(cartan.cols()));
  for (int j = 0; j < cartan.cols(); ++j) d[static_cast<size_t>(j)] = cartan.at(i, j);
  return d;
}

Rat euler_ringel(const Quiver& q, const DimVec& u, const DimVec& w) {
  int n = q.size();
  if (static_cast<int>(u.size()) != n || static_cast<int>(w.size()) != n)
    throw Error(Errc::FieldMismatch, "dimension vector length mismatch");
  RatMat cinv = rat_inverse(to_rat(cartan_matrix(q)));
  Rat acc(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += Rat(u[static_cast<size_t>(i)]) * cinv.at(i, j) * Rat(w[static_cast<size_t>(j)]);
  return acc;
}

bool Weight::sincere() const {
  for (const Scalar& s : entries)
    if (s.is_zero()) return false;
  return true;
}

std::string Weight::str() const {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += entries[i].str();
  }
  return out;
}

Weight parse_weight(const Field& f, const std::string& csv) {
  std::vector<Scalar> entries;
  std::string cur;
  int depth = 0;
  auto flush = [&]() {
    entries.push_back(Scalar::parse(f, cur));
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += ch;
  }
  if (!cur.empty() || entries.empty()) flush();
  return Weight(f, std::move(entries));
}

Scalar weighted_chi(const Weight& v, const DimVec& d) {
  if (v.entries.size() != d.size())
    throw Error(Errc::FieldMismatch, "weight and dimension vector length mismatch");
  Scalar acc = Scalar::zero(v.field);
  for (size_t i = 0; i < d.size(); ++i)
    acc += v.entries[i] * Scalar::from_int(v.field, d[i]);
  return acc;
}

std::vector<Scalar> apply_int_matrix(const IntMat& m, const std::vector<Scalar>& v) {
  if (v.empty()) return {};
  Field f = v.front().field();
  std::vector<Scalar> out(static_cast<size_t>(m.rows()), Scalar::zero(f));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<size_t>(i)] += Scalar::from_int(f, m.at(i, j)) * v[static_cast<size_t>(j)];
  return out;
}

}  // namespace qha
