#include "subhardy/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace subhardy {

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const cx aik = a.at(i, k);
      if (aik == cx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& raw) {
  if (raw.rows() != raw.cols()) throw std::invalid_argument("symmetrized: matrix must be square");
  const int n = raw.rows();
  HermitianMatrix h(n);
  for (int i = 0; i < n; ++i) {
    h.m_.at(i, i) = cx(raw.at(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cx v = 0.5 * (raw.at(i, j) + std::conj(raw.at(j, i)));
      h.m_.at(i, j) = v;
      h.m_.at(j, i) = std::conj(v);
    }
  }
  return h;
}

HermitianMatrix HermitianMatrix::checked(const Matrix& raw) {
  if (raw.rows() != raw.cols()) throw std::invalid_argument("checked: matrix must be square");
  const int n = raw.rows();
  for (int i = 0; i < n; ++i) {
    if (raw.at(i, i).imag() != 0.0) throw std::invalid_argument("checked: non-real diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (raw.at(i, j) != std::conj(raw.at(j, i))) {
        throw std::invalid_argument("checked: matrix is not Hermitian");
      }
    }
  }
  HermitianMatrix h(n);
  h.m_ = raw;
  return h;
}

void HermitianMatrix::set(int i, int j, cx v) {
  if (i == j) {
    m_.at(i, i) = cx(v.real(), 0.0);
  } else {
    m_.at(i, j) = v;
    m_.at(j, i) = std::conj(v);
  }
}

double HermitianMatrix::max_abs_diag() const {
  double s = 0.0;
  for (int i = 0; i < order(); ++i) s = std::max(s, std::abs(m_.at(i, i).real()));
  return s;
}

}  // namespace subhardy
