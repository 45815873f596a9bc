// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_SCALAR_HPP
#define QHA_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qha/errors.hpp"

namespace qha {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficients of the n-th cyclotomic polynomial, low degree first, monic.
/// Computed by dividing x^n - 1 by the proper cyclotomic divisors.
std::vector<Int> cyclotomic_polynomial(long n);

enum class FieldKind { Rationals, Prime, Cyclotomic };

/// Exact coefficient field: Q, F_p, or Q(zeta_n) = Q[x]/Phi_n(x).
/// Small value type; cyclotomic minimal polynomials are cached globally.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field(FieldKind::Rationals, 0, 0); }
  static Field prime(long p);
  static Field cyclotomic(long n);

  /// Accepts "Q", "Fp(p)", "Q(zeta_n)".
  static Field parse(const std::string& spec);

  FieldKind kind() const { return kind_; }
  long characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
  long conductor() const { return n_; }
  /// Degree over the prime field: 1 except for cyclotomic fields (phi(n)).
  long degree() const;
  const std::vector<Int>& minpoly() const;  // cyclotomic only

  std::string describe() const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_ && n_ == o.n_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  Field(FieldKind k, long p, long n) : kind_(k), p_(p), n_(n) {}

  FieldKind kind_ = FieldKind::Rationals;
  long p_ = 0;
  long n_ = 0;
};

/// One element of a Field. All arithmetic is exact; mixing fields throws
/// FieldMismatch rather than coercing.
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) { init_zero(); }

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, const Int& z);
  static Scalar from_rat(const Field& f, const Rat& q);
  /// Residue class of x in Q[x]/Phi_n; 1 over Q; undefined request over F_p throws.
  static Scalar zeta(const Field& f);

  /// Weight-file entry grammar: a rational `p/q`, an integer, or a
  /// polynomial in `z` such as `z^2 - z + 1` (cyclotomic fields only).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws BadScalar on zero divisor
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact text form: `p/q`, residue, or polynomial in `z`.
  std::string str() const;

  /// Rational value; only for the rationals field.
  const Rat& rat() const;
  /// Residue in [0,p); only for prime fields.
  long residue() const;
  /// Coefficient vector of length deg Phi_n; only for cyclotomic fields.
  const std::vector<Rat>& coeffs() const;

private:
  void init_zero();
  void check_same(const Scalar& o) const;

  Field field_;
  Rat q_;
  long r_ = 0;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qha

#endif
