// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/matrix.hpp"

#include <algorithm>

namespace qha {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).get_den() != 1) throw Error(Errc::BadScalar, "matrix entry is not integral");
      r.at(i, j) = m.at(i, j).get_num();
    }
  return r;
}

IntMat int_identity(int n) { return IntMat::identity(n, Int(1), Int(0)); }

IntMat int_pow(IntMat base, long e) {
  IntMat r = int_identity(base.rows());
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Bareiss fraction-free elimination; all intermediates are minors.
Int det_bareiss(IntMat m) {
  int n = m.rows();
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by Bareiss' identity
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

int rank_bareiss(IntMat m) {
  int rows = m.rows(), cols = m.cols();
  Int prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (int i = r + 1; i < rows; ++i)
      for (int j = c + 1; j < cols; ++j) {
        Int t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = t / prev;
      }
    for (int i = r + 1; i < rows; ++i) m.at(i, c) = 0;
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

RatMat rat_inverse(const RatMat& m) {
  int n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n, Rat(1), Rat(0));
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error(Errc::BadScalar, "singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(c, j), a.at(piv, j));
        std::swap(inv.at(c, j), inv.at(piv, j));
      }
    Rat d = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) /= d;
      inv.at(c, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> char_poly(const RatMat& m) {
  int n = m.rows();
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[static_cast<size_t>(n)] = 1;
  RatMat mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M*(M_{k-1} + c_{n-k+1} I)
    for (int i = 0; i < n; ++i) mk.at(i, i) += c[static_cast<size_t>(n - k + 1)];
    mk = m * mk;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    c[static_cast<size_t>(n - k)] = -tr / k;
  }
  return c;
}

std::vector<int> rref(Mat<Scalar>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    Scalar d = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * d;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat<Scalar> m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel_basis(const Mat<Scalar>& m) {
  if (m.cols() == 0) return {};
  Field f = m.rows() > 0 ? m.at(0, 0).field() : Field::rationals();
  Mat<Scalar> e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols()), Scalar::zero(f));
    v[static_cast<size_t>(fc)] = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -e.at(static_cast<int>(r), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Scalar>> eigenspace(const Mat<Scalar>& m, const Scalar& lambda) {
  Mat<Scalar> shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
  return kernel_basis(shifted);
}

Mat<Scalar> to_scalar(const IntMat& m, const Field& f) {
  Mat<Scalar> s(m.rows(), m.cols(), Scalar::zero(f));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s.at(i, j) = Scalar::from_int(f, m.at(i, j));
  return s;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& m) {
  Field f = Field::rationals();
  auto ker = kernel_basis(to_scalar(m, f));
  std::vector<std::vector<Int>> out;
  for (const auto& v : ker) {
    Int lcm(1);
    for (const auto& x : v) lcm = lcm * x.rat().get_den() / gcd(lcm, Int(x.rat().get_den()));
    std::vector<Int> w;
    Int g(0);
    for (const auto& x : v) {
      Rat y = x.rat() * Rat(lcm);
      w.push_back(y.get_num());
      g = gcd(g, w.back());
    }
    if (g != 0)
      for (auto& z : w) z /= g;
    for (auto& z : w)
      if (z != 0) {
        if (z < 0)
          for (auto& t : w) t = -t;
        break;
      }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace qha
