// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qha/matrix.hpp"

using namespace qha;

namespace {

IntMat random_int_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

// independent rank route: Gauss over Q via the generic Scalar elimination
int rank_rational_gauss(const IntMat& m) {
  Field f = Field::rationals();
  Mat<Scalar> s(m.rows(), m.cols(), Scalar::zero(f));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s.at(i, j) = Scalar::from_int(f, m.at(i, j));
  return rank(s);
}

// evaluate a low-to-high coefficient vector at t
Rat poly_eval(const std::vector<Rat>& c, const Rat& t) {
  Rat acc(0);
  for (size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

}  // namespace

TEST_CASE("determinant and rank basics") {
  IntMat z(3, 4);
  CHECK(rank_bareiss(z) == 0);
  IntMat id = int_identity(3);
  CHECK(det_bareiss(id) == 1);
  CHECK(rank_bareiss(id) == 3);

  IntMat m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 3;
  m.at(1, 0) = 4;
  m.at(1, 1) = 6;
  CHECK(det_bareiss(m) == 0);
  CHECK(rank_bareiss(m) == 1);
}

TEST_CASE("bareiss rank agrees with rational gauss") {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    IntMat m = random_int_matrix(rng, rows, cols, -4, 4);
    CHECK(rank_bareiss(m) == rank_rational_gauss(m));
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(11);
  for (int it = 0; it < 30; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat m = random_int_matrix(rng, n, n, -3, 3);
    if (det_bareiss(m) == 0) continue;
    RatMat inv = rat_inverse(to_rat(m));
    CHECK(to_rat(m) * inv == RatMat::identity(n, Rat(1), Rat(0)));
  }
  IntMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK_THROWS_AS(rat_inverse(to_rat(sing)), Error);
}

TEST_CASE("characteristic polynomial") {
  // (t-1)^3 for the identity
  std::vector<Rat> id3 = char_poly(to_rat(int_identity(3)));
  CHECK(id3 == std::vector<Rat>{Rat(-1), Rat(3), Rat(-3), Rat(1)});

  // cross-check against det(tI - M) at sample points
  std::mt19937 rng(13);
  for (int it = 0; it < 25; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat m = random_int_matrix(rng, n, n, -3, 3);
    std::vector<Rat> cp = char_poly(to_rat(m));
    for (long t : {-2L, 0L, 1L, 3L}) {
      IntMat shifted = m;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shifted.at(i, j) = (i == j ? Int(t) : Int(0)) - m.at(i, j);
      CHECK(poly_eval(cp, Rat(t)) == Rat(det_bareiss(shifted)));
    }
  }
}

TEST_CASE("kernels") {
  IntMat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(0, 2) = 0;
  m.at(1, 0) = 0;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  auto ker = integer_kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<Int>{1, -1, 1});

  // kernel vectors really are in the kernel (generic field route)
  Field f = Field::cyclotomic(4);
  Mat<Scalar> s(2, 2, Scalar::zero(f));
  // [[1, i],[ -i, 1]] has rank 1 over Q(i)
  s.at(0, 0) = Scalar::one(f);
  s.at(0, 1) = Scalar::zeta(f);
  s.at(1, 0) = -Scalar::zeta(f);
  s.at(1, 1) = Scalar::one(f);
  CHECK(rank(s) == 1);
  auto kb = kernel_basis(s);
  REQUIRE(kb.size() == 1);
  for (int i = 0; i < 2; ++i) {
    Scalar acc = Scalar::zero(f);
    for (int j = 0; j < 2; ++j) acc += s.at(i, j) * kb[0][static_cast<size_t>(j)];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("eigenspaces") {
  Field f = Field::rationals();
  IntMat d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  auto e2 = eigenspace(to_scalar(d, f), Scalar::from_int(f, 2));
  REQUIRE(e2.size() == 1);
  CHECK(e2[0][0] == Scalar::one(f));
  CHECK(e2[0][1].is_zero());
  CHECK(eigenspace(to_scalar(d, f), Scalar::from_int(f, 5)).empty());

  // a cyclotomic eigenvalue: the rotation [[0,-1],[1,0]] has eigenvector for i
  Field c4 = Field::cyclotomic(4);
  IntMat rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  auto ei = eigenspace(to_scalar(rot, c4), Scalar::zeta(c4));
  REQUIRE(ei.size() == 1);
  Scalar ratio = ei[0][1] / ei[0][0];
  CHECK(ratio * ratio == -Scalar::one(c4));
}
