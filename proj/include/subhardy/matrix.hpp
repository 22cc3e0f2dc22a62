#pragma once

#include <complex>
#include <vector>

#include "subhardy/symbol.hpp"

namespace subhardy {

// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = cx(1.0, 0.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix adjoint() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cx> a_;
};

// Complex Hermitian matrix; the storage satisfies a(i,j) == conj(a(j,i))
// exactly because every construction path symmetrizes.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n) : m_(n, n) {}

  // Entrywise symmetrization of a square matrix: (a_ij + conj(a_ji))/2,
  // real diagonal.
  static HermitianMatrix symmetrized(const Matrix& raw);
  // Exactness-checked: rejects any raw matrix that is not already Hermitian.
  static HermitianMatrix checked(const Matrix& raw);

  int order() const { return m_.rows(); }
  const cx& operator()(int i, int j) const { return m_.at(i, j); }

  // Sets (i,j) and (j,i) together; diagonal entries keep only the real part.
  void set(int i, int j, cx v);

  double max_abs_diag() const;
  const Matrix& as_matrix() const { return m_; }

 private:
  Matrix m_;
};

}  // namespace subhardy
