#pragma once

#include "flagdegen/core.hpp"

#include <optional>
#include <utility>

namespace flagdegen {

/// Incremental row-echelon form over a field. Tracks how each echelon row
/// is combined from the inserted vectors, so span coordinates come for free.
template <class Scalar>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Eigen::Index ambient) : ambient_(ambient) {}

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Adds v if it is independent of what is already present.
  bool insert(const Vec<Scalar>& v) {
    auto [residual, coeffs] = reduce(v);
    Eigen::Index pivot = first_nonzero(residual);
    if (pivot < 0) return false;
    Scalar lead = residual[pivot];
    Vec<Scalar> combo = Vec<Scalar>::Zero(rank() + 1);
    combo[rank()] = Scalar(1);
    for (Eigen::Index k = 0; k < rank(); ++k) {
      if (coeffs[k] == 0) continue;
      combo.head(combos_[k].size()) -= coeffs[k] * combos_[k];
    }
    rows_.push_back(residual / lead);
    combos_.push_back(combo / lead);
    pivots_.push_back(pivot);
    return true;
  }

  /// Coefficients of v on the inserted vectors, or nothing if v is outside the span.
  std::optional<Vec<Scalar>> coordinates(const Vec<Scalar>& v) const {
    auto [residual, coeffs] = reduce(v);
    if (first_nonzero(residual) >= 0) return std::nullopt;
    Vec<Scalar> out = Vec<Scalar>::Zero(rank());
    for (Eigen::Index k = 0; k < rank(); ++k) {
      if (coeffs[k] == 0) continue;
      out.head(combos_[k].size()) += coeffs[k] * combos_[k];
    }
    return out;
  }

  bool contains(const Vec<Scalar>& v) const { return first_nonzero(reduce(v).first) < 0; }

 private:
  std::pair<Vec<Scalar>, Vec<Scalar>> reduce(Vec<Scalar> v) const {
    Vec<Scalar> coeffs = Vec<Scalar>::Zero(rank());
    for (Eigen::Index k = 0; k < rank(); ++k) {
      const Scalar c = v[pivots_[k]];
      if (c == 0) continue;
      v -= c * rows_[k];
      coeffs[k] = c;
    }
    return {std::move(v), std::move(coeffs)};
  }

  static Eigen::Index first_nonzero(const Vec<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return -1;
  }

  Eigen::Index ambient_;
  std::vector<Vec<Scalar>> rows_;
  std::vector<Vec<Scalar>> combos_;
  std::vector<Eigen::Index> pivots_;
};

/// Rank by fraction-free (Bareiss) elimination; exact for integer entries.
template <class Scalar>
Eigen::Index rank_fraction_free(Mat<Scalar> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Scalar prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

template <class Scalar>
Eigen::Index rank_of(const Mat<Scalar>& a) {
  IncrementalBasis<Scalar> basis(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) basis.insert(a.row(i).transpose());
  return basis.rank();
}

/// Integer matrix with the same rank as a rational one (rows scaled by denominators).
inline IntMat integer_rows(const RatMat& a) {
  IntMat out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) out.row(i) = clear_denominators(a.row(i).transpose()).transpose();
  return out;
}

/// Inverse of a square matrix over a field; nothing if singular.
template <class Scalar>
std::optional<Mat<Scalar>> inverse_of(const Mat<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) aug.row(p).swap(aug.row(c));
    Scalar lead = aug(c, c);
    aug.row(c) /= lead;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      Scalar f = aug(i, c);
      aug.row(i) -= f * aug.row(c);
    }
  }
  return Mat<Scalar>(aug.rightCols(n));
}

template <class Scalar>
Scalar determinant_of(Mat<Scalar> a) {
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Scalar f = a(i, c) / a(c, c);
      a.row(i) -= f * a.row(c);
    }
  }
  return det;
}

template <class To, class From>
Mat<To> cast_matrix(const Mat<From>& a) {
  Mat<To> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = To(a(i, j));
  return out;
}

}  // namespace flagdegen
