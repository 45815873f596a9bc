// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_WEIGHTS_HPP
#define QHA_WEIGHTS_HPP

#include "qha/zq.hpp"

namespace qha {

struct RegularityReport {
  bool sincere = false;
  bool regular = false;
  bool semiregular = false;
  /// -1 for a finite (Dynkin) check, otherwise the scanned depth: the verdict
  /// is a certificate up to that many translates, not a proof.
  long depth_checked = -1;
  /// Dimension vectors whose weighted Euler characteristic vanished.
  std::vector<DimVec> witnesses;
};

bool is_sincere(const Weight& v);

/// Finite regularity check over the rh/2 indecomposables; NotDynkin otherwise.
RegularityReport is_regular(const Quiver& q, const Weight& v);

/// chi^v on nu_1^{-m} P_i and nu_1^m I_i for 0 <= m <= depth. Dynkin input
/// delegates to the finite check.
RegularityReport is_semiregular(const Quiver& q, const Weight& v, long depth);

/// The linear forms (as integer coefficient vectors) whose simultaneous
/// nonvanishing characterizes regularity; Dynkin only.
std::vector<DimVec> regularity_forms(const Quiver& q);

/// chi^v != 0 on every indecomposable appearing in L_0..L_{n-1} of M.
bool property_I(const Quiver& q, const Weight& v, const IndecMultiset& m, long n);

/// Constant-ratio condition chi^v(nu^{-1} N) = lambda * chi^v(N) != 0 over the
/// ZQ component of M, one full Coxeter period for Dynkin quivers and
/// |power| <= depth otherwise. lambda = -1 is rejected.
bool property_II(const Quiver& q, const Weight& v, const IndecMultiset& m, const Scalar& lambda,
                 long depth = 12);

struct GeomSeries {
  Scalar lambda;
  std::vector<Scalar> values;  // V_1 .. V_n
  bool all_nonzero = true;
};

/// V_m(lambda) = 1 + lambda + ... + lambda^{m-1} for m = 1..n.
GeomSeries check_vm(const Scalar& lambda, long n);

struct EigenWeight {
  Weight weight;
  Scalar eigenvalue;  // Psi w = eigenvalue * w, verified exactly
};

/// The xi/w construction over Q(zeta_h): v = sum xi_n Psi^n C^{-1} chi(P_i0)
/// with xi_n = 1 + zeta + ... + zeta^n; eigenvalue zeta^{-1}. Requires a
/// Dynkin quiver with h >= 3; the eigen equation and regularity are checked,
/// not assumed.
EigenWeight dynkin_eigenweight(const Quiver& q, int i0);

/// Directed A_N shortcut over Q(zeta_{N+1}): v_k = lambda^{N-k} for
/// k = 1..N, an eigenvector with eigenvalue lambda^{-1}.
EigenWeight an_shortcut_weight(const Quiver& q);

/// Primitive radical generator delta of the Tits form (ExtendedDynkin only).
DimVec radical_generator(const Quiver& q);

/// v = C^{-1} delta: a Psi-fixed semi-regular weight with chi^v(delta) = 0.
Weight extended_dynkin_semiregular_weight(const Quiver& q, const DimVec& delta);

}  // namespace qha

#endif
