// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_MATRIX_HPP
#define QHA_MATRIX_HPP

#include <cassert>
#include <vector>

#include "qha/scalar.hpp"

namespace qha {

/// Dense matrix, row major. Value semantics throughout.
template <class T>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, T fill = T())
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  static Mat identity(int n, const T& one, const T& zero) {
    Mat m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const = default;

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        if (x == T()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<T> r(rows_, T());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
/// Exactness-checked conversion; throws BadScalar on a non-integer entry.
IntMat to_int(const RatMat& m);

IntMat int_identity(int n);
IntMat int_pow(IntMat base, long e);  // e >= 0

Int det_bareiss(IntMat m);
int rank_bareiss(IntMat m);

RatMat rat_inverse(const RatMat& m);  // throws BadScalar if singular

/// Monic characteristic polynomial det(t*I - M), coefficients c[0..n] with
/// c[n] = 1, by the Faddeev-LeVerrier recursion.
std::vector<Rat> char_poly(const RatMat& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat<Scalar>& m);
int rank(Mat<Scalar> m);
/// Basis of the right kernel.
std::vector<std::vector<Scalar>> kernel_basis(const Mat<Scalar>& m);

/// Basis of ker(m - lambda I).
std::vector<std::vector<Scalar>> eigenspace(const Mat<Scalar>& m, const Scalar& lambda);

Mat<Scalar> to_scalar(const IntMat& m, const Field& f);

/// Primitive integer basis of the rational kernel (each vector scaled to
/// coprime integer entries, first nonzero entry positive).
std::vector<std::vector<Int>> integer_kernel(const IntMat& m);

}  // namespace qha

#endif
