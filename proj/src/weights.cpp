// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/weights.hpp"

#include <algorithm>

namespace qha {

bool is_sincere(const Weight& v) { return v.sincere(); }

RegularityReport is_regular(const Quiver& q, const Weight& v) {
  TranslationQuiver zq(q);
  if (!zq.cls().dynkin())
    throw Error(Errc::NotDynkin, "regularity is a finite check only for Dynkin quivers");
  if (v.size() != q.size()) throw Error(Errc::FieldMismatch, "weight length mismatch");
  RegularityReport rep;
  rep.sincere = v.sincere();
  rep.regular = true;
  for (const auto& [x, d] : zq.enumerate_indecomposables()) {
    if (weighted_chi(v, d).is_zero()) {
      rep.regular = false;
      rep.witnesses.push_back(d);
    }
  }
  rep.semiregular = rep.regular;  // preprojective = everything here
  return rep;
}

RegularityReport is_semiregular(const Quiver& q, const Weight& v, long depth) {
  TranslationQuiver zq(q);
  if (zq.cls().dynkin()) return is_regular(q, v);
  if (v.size() != q.size()) throw Error(Errc::FieldMismatch, "weight length mismatch");
  RegularityReport rep;
  rep.sincere = v.sincere();
  rep.semiregular = true;
  rep.depth_checked = depth;
  IntMat phi = coxeter_phi(q);
  for (int i = 0; i < q.size(); ++i) {
    // preprojective orbit nu^{-m} P_i
    for (long m = 0; m <= depth; ++m) {
      const DimVec& d = zq.dimvec(ZQVertex{i, m});
      if (weighted_chi(v, d).is_zero()) {
        rep.semiregular = false;
        rep.witnesses.push_back(d);
      }
    }
    // preinjective orbit nu^{m} I_i
    DimVec d = injective_dimvec(zq.cartan(), i);
    for (long m = 0; m <= depth; ++m) {
      if (weighted_chi(v, d).is_zero()) {
        rep.semiregular = false;
        rep.witnesses.push_back(d);
      }
      DimVec next(d.size(), Int(0));
      for (int r = 0; r < static_cast<int>(d.size()); ++r)
        for (int c = 0; c < static_cast<int>(d.size()); ++c)
          next[static_cast<size_t>(r)] += phi.at(r, c) * d[static_cast<size_t>(c)];
      d = std::move(next);
    }
  }
  rep.regular = false;  // infinite type: never claimed from a depth scan
  return rep;
}

std::vector<DimVec> regularity_forms(const Quiver& q) {
  TranslationQuiver zq(q);
  std::vector<DimVec> forms;
  for (const auto& [x, d] : zq.enumerate_indecomposables())
    if (std::find(forms.begin(), forms.end(), d) == forms.end()) forms.push_back(d);
  return forms;
}

bool property_I(const Quiver& q, const Weight& v, const IndecMultiset& m, long n) {
  if (n <= 0) return true;
  TranslationQuiver zq(q);
  auto ls = zq.ladder(m, n - 1);
  for (const auto& layer : ls)
    for (const auto& [x, k] : layer)
      if (weighted_chi(v, zq.dimvec(x)).is_zero()) return false;
  return true;
}

bool property_II(const Quiver& q, const Weight& v, const IndecMultiset& m, const Scalar& lambda,
                 long depth) {
  if (lambda == -Scalar::one(lambda.field()))
    throw Error(Errc::LambdaForbidden, "property (II) excludes lambda = -1");
  if (m.empty()) return true;
  TranslationQuiver zq(q);
  // the ZQ component of any position is all of ZQ: one full Coxeter period
  // settles Dynkin quivers, otherwise scan depth translates around M
  long lo, hi;
  if (zq.cls().dynkin()) {
    lo = 0;
    hi = zq.cls().coxeter_number - 1;
  } else {
    lo = m.begin()->first.power - depth;
    hi = m.rbegin()->first.power + depth;
  }
  for (int i = 0; i < q.size(); ++i)
    for (long p = lo; p <= hi; ++p) {
      Scalar chi_n = weighted_chi(v, zq.dimvec(ZQVertex{i, p}));
      Scalar chi_next = weighted_chi(v, zq.dimvec(ZQVertex{i, p + 1}));
      if (chi_n.is_zero()) return false;
      if (chi_next != lambda * chi_n) return false;
    }
  return true;
}

GeomSeries check_vm(const Scalar& lambda, long n) {
  GeomSeries out;
  out.lambda = lambda;
  Scalar acc = Scalar::zero(lambda.field());
  Scalar pw = Scalar::one(lambda.field());
  for (long m = 1; m <= n; ++m) {
    acc += pw;  // V_m = 1 + ... + lambda^{m-1}
    pw = pw * lambda;
    out.values.push_back(acc);
    if (acc.is_zero()) out.all_nonzero = false;
  }
  return out;
}

EigenWeight dynkin_eigenweight(const Quiver& q, int i0) {
  QuiverClass cls = classify(q);
  if (!cls.dynkin()) throw Error(Errc::NotDynkin, "eigenweight construction needs a Dynkin quiver");
  long h = cls.coxeter_number;
  if (h < 3) throw Error(Errc::DegenerateRank, "the xi construction degenerates for h < 3");

  Field f = Field::cyclotomic(h);
  Scalar zeta = Scalar::zeta(f);
  IntMat c = cartan_matrix(q);
  IntMat psi = coxeter_psi(q);
  RatMat cinv = rat_inverse(to_rat(c));

  // w_0 = C^{-1} chi(P_{i0}) lifted into Q(zeta_h)
  DimVec p0 = projective_dimvec(c, i0);
  std::vector<Scalar> w(static_cast<size_t>(q.size()), Scalar::zero(f));
  for (int r = 0; r < q.size(); ++r) {
    Rat acc(0);
    for (int j = 0; j < q.size(); ++j) acc += cinv.at(r, j) * Rat(p0[static_cast<size_t>(j)]);
    w[static_cast<size_t>(r)] = Scalar::from_rat(f, acc);
  }

  std::vector<Scalar> v(static_cast<size_t>(q.size()), Scalar::zero(f));
  Scalar xi = Scalar::one(f);   // xi_n = 1 + zeta + ... + zeta^n
  Scalar zpow = Scalar::one(f);
  for (long n = 0; n <= h - 2; ++n) {
    for (size_t r = 0; r < v.size(); ++r) v[r] += xi * w[r];
    w = apply_int_matrix(psi, w);
    zpow = zpow * zeta;
    xi += zpow;
  }

  EigenWeight out{Weight(f, v), zeta.pow(-1)};
  // the construction is only accepted if the eigen equation and regularity
  // hold on the nose
  std::vector<Scalar> psiv = apply_int_matrix(psi, out.weight.entries);
  for (size_t r = 0; r < v.size(); ++r)
    if (psiv[r] != out.eigenvalue * v[r])
      throw Error(Errc::DegenerateRank, "eigen equation failed");
  RegularityReport rep = is_regular(q, out.weight);
  if (!rep.regular) throw Error(Errc::DegenerateRank, "constructed weight is not regular");
  return out;
}

EigenWeight an_shortcut_weight(const Quiver& q) {
  QuiverClass cls = classify(q);
  if (!cls.dynkin() || cls.type != DynkinType::A)
    throw Error(Errc::WrongQuiverShape, "shortcut weight needs a directed A_N quiver");
  int n = q.size();
  // directed: arrows k -> k+1 in vertex order
  for (const Arrow& a : q.arrows())
    if (a.head != a.tail + 1)
      throw Error(Errc::WrongQuiverShape, "vertices must be ordered along the path");

  Field f = Field::cyclotomic(n + 1);
  Scalar lambda = Scalar::zeta(f);
  std::vector<Scalar> v;
  for (int k = 1; k <= n; ++k) v.push_back(lambda.pow(n - k));

  EigenWeight out{Weight(f, v), lambda.pow(-1)};
  IntMat psi = coxeter_psi(q);
  std::vector<Scalar> psiv = apply_int_matrix(psi, out.weight.entries);
  for (size_t r = 0; r < psiv.size(); ++r)
    if (psiv[r] != out.eigenvalue * out.weight.entries[r])
      throw Error(Errc::WrongQuiverShape, "eigen equation failed");
  return out;
}

DimVec radical_generator(const Quiver& q) {
  QuiverClass cls = classify(q);
  if (!cls.extended_dynkin())
    throw Error(Errc::NotExtendedDynkin, "the Tits form has a radical only in the affine case");
  auto ker = integer_kernel(tits_form_matrix(q));
  if (ker.size() != 1) throw Error(Errc::NotExtendedDynkin, "radical is not one-dimensional");
  return ker.front();
}

Weight extended_dynkin_semiregular_weight(const Quiver& q, const DimVec& delta) {
  QuiverClass cls = classify(q);
  if (!cls.extended_dynkin()) throw Error(Errc::NotExtendedDynkin, classify(q).name());
  IntMat b = tits_form_matrix(q);
  for (int i = 0; i < q.size(); ++i) {
    Int acc(0);
    for (int j = 0; j < q.size(); ++j) acc += b.at(i, j) * delta[static_cast<size_t>(j)];
    if (acc != 0) throw Error(Errc::NotExtendedDynkin, "delta is not in the radical");
  }
  Field f = Field::rationals();
  RatMat cinv = rat_inverse(to_rat(cartan_matrix(q)));
  std::vector<Scalar> v(static_cast<size_t>(q.size()), Scalar::zero(f));
  for (int r = 0; r < q.size(); ++r) {
    Rat acc(0);
    for (int j = 0; j < q.size(); ++j) acc += cinv.at(r, j) * Rat(delta[static_cast<size_t>(j)]);
    v[static_cast<size_t>(r)] = Scalar::from_rat(f, acc);
  }
  return Weight(f, v);
}

}  // namespace qha
