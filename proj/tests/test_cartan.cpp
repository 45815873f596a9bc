// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qha/cartan.hpp"

using namespace qha;
using namespace qha::testing;

namespace {

IntMat make(const std::vector<std::vector<long>>& rows) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

Quiver random_acyclic(std::mt19937& rng, int n) {
  // arrows only increase the vertex index, then keep the graph connected
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> as;
  int id = 0;
  for (int i = 1; i < n; ++i)
    as.push_back(Arrow{"t" + std::to_string(id++), static_cast<int>(rng() % i), i});
  for (int extra = static_cast<int>(rng() % 3); extra-- > 0;) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    as.push_back(Arrow{"t" + std::to_string(id++), std::min(a, b), std::max(a, b)});
  }
  return Quiver::from_parts(vs, as);
}

}  // namespace

TEST_CASE("cartan matrix equals brute-force path counts") {
  Quiver a3 = linear_an(3);
  CHECK(cartan_matrix(a3) == make({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(cartan_matrix(linear_an(1)) == make({{1}}));
  CHECK(cartan_matrix(kronecker()) == make({{1, 2}, {0, 1}}));

  std::mt19937 rng(20260809);
  for (int it = 0; it < 20; ++it) {
    Quiver q = random_acyclic(rng, 2 + static_cast<int>(rng() % 5));
    IntMat c = cartan_matrix(q);
    for (int i = 0; i < q.size(); ++i)
      for (int j = 0; j < q.size(); ++j)
        CHECK(c.at(i, j) == count_paths_dfs(q, i, j));
    CHECK(det_bareiss(c) == 1);
  }
  for (const Quiver& q : dynkin_census()) CHECK(det_bareiss(cartan_matrix(q)) == 1);
}

TEST_CASE("coxeter matrices") {
  Quiver a2 = linear_an(2);
  CHECK(coxeter_phi(a2) == make({{-1, 1}, {-1, 0}}));

  for (const Quiver& q : dynkin_census()) {
    QuiverClass cls = classify(q);
    IntMat phi = coxeter_phi(q), psi = coxeter_psi(q);
    int n = q.size();
    // Phi^h = I and 1 is not an eigenvalue of Phi
    CHECK(int_pow(phi, cls.coxeter_number) == int_identity(n));
    CHECK(det_bareiss(phi - int_identity(n)) != 0);
    // sum of Psi^k over a full period vanishes
    IntMat acc(n, n), pw = int_identity(n);
    for (int k = 0; k < cls.coxeter_number; ++k) {
      acc = acc + pw;
      pw = pw * psi;
    }
    CHECK(acc == IntMat(n, n));
    // Psi = C^{-1} Phi C exactly
    IntMat c = cartan_matrix(q);
    CHECK(c * psi == phi * c);
  }
}

TEST_CASE("characteristic polynomial of Psi for directed A_N") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Rat> cp = char_poly(to_rat(coxeter_psi(linear_an(n))));
    REQUIRE(static_cast<int>(cp.size()) == n + 1);
    for (const Rat& c : cp) CHECK(c == 1);  // t^N + ... + t + 1
  }
}

TEST_CASE("weighted Euler characteristic") {
  Field f = Field::rationals();
  Weight ones = parse_weight(f, "1,1,1");
  CHECK(weighted_chi(ones, DimVec{1, 1, 1}).rat() == 3);
  Weight w = parse_weight(f, "3,-1,-1");
  CHECK(weighted_chi(w, DimVec{1, 1, 1}).rat() == 1);
  // chi^v(P_2) on A_3 is v_2 + v_3 whatever v is
  std::mt19937 rng(3);
  for (int it = 0; it < 10; ++it) {
    Rat v1(static_cast<long>(rng() % 19) - 9), v2(static_cast<long>(rng() % 19) - 9),
        v3(static_cast<long>(rng() % 19) - 9);
    Weight v(f, {Scalar::from_rat(f, v1), Scalar::from_rat(f, v2), Scalar::from_rat(f, v3)});
    CHECK(weighted_chi(v, DimVec{0, 1, 1}).rat() == v2 + v3);
  }
  CHECK_THROWS_AS(weighted_chi(ones, DimVec{1, 1}), Error);
}

TEST_CASE("euler-ringel form") {
  Quiver kron = kronecker();
  DimVec delta{1, 1};
  CHECK(euler_ringel(kron, delta, delta) == 0);
  Quiver a2 = linear_an(2);
  CHECK(euler_ringel(a2, DimVec{1, 0}, DimVec{0, 1}) == -1);
  for (const Quiver& q : dynkin_census()) {
    IntMat c = cartan_matrix(q);
    for (int i = 0; i < q.size(); ++i) {
      // <e_i, e_i> = 1: one-vertex modules have no self-extensions
      DimVec e(static_cast<size_t>(q.size()), Int(0));
      e[static_cast<size_t>(i)] = 1;
      CHECK(euler_ringel(q, e, e) == 1);
      // pairing against chi(P_i) reads off path counts: <d, chi P_i> = d_i
      TranslationQuiver zq(q);
      for (const auto& [x, d] : zq.enumerate_indecomposables())
        CHECK(euler_ringel(q, d, projective_dimvec(c, i)) == Rat(d[static_cast<size_t>(i)]));
    }
  }
}

TEST_CASE("projective and injective dim vectors") {
  IntMat c = cartan_matrix(linear_an(3));
  CHECK(projective_dimvec(c, 0) == DimVec{1, 0, 0});
  CHECK(projective_dimvec(c, 1) == DimVec{1, 1, 0});
  CHECK(projective_dimvec(c, 2) == DimVec{1, 1, 1});
  CHECK(injective_dimvec(c, 0) == DimVec{1, 1, 1});
  CHECK(injective_dimvec(c, 1) == DimVec{0, 1, 1});
  CHECK(injective_dimvec(c, 2) == DimVec{0, 0, 1});
}
