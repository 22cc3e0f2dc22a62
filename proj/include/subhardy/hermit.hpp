#pragma once

#include <utility>
#include <vector>

#include "subhardy/matrix.hpp"

namespace subhardy {

// PSD decision for a Hermitian matrix. The tolerance is relative to the
// largest diagonal entry because the kernel Grams scale like
// (1 - |lambda|^2)^-2 and an absolute cutoff would be meaningless across
// rho_max choices.
struct Verdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  std::vector<cx> witness;  // unit vector attaining the minimal Rayleigh quotient; set when !psd
  double tolerance_used = 0.0;
  double scale = 0.0;  // max |diagonal|
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns, unit norm; empty when not requested
};

// Cyclic Jacobi on the real-symmetric embedding [[Re,-Im],[Im,Re]];
// deterministic sweep order, convergence threshold 1e-14 * scale. Eigenvalues
// come out duplicated in the embedding and are deduplicated from a sorted
// pairing.
EigenDecomposition eigen_hermitian(const HermitianMatrix& h, bool want_vectors = true);

std::pair<double, std::vector<cx>> min_eig(const HermitianMatrix& h);

Verdict psd_verdict(const HermitianMatrix& h, double tol_rel = 1e-10);

// lambda_max / lambda_min, +inf when the matrix is singular or indefinite.
double condition_number(const HermitianMatrix& h);

struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;  // descending
};

// One-sided (Hestenes) Jacobi SVD: singular values with high relative
// accuracy, which the rank-one perturbation checks rely on.
RankResult numerical_rank(const Matrix& m, double rel_tol = 1e-8);

struct SvdResult {
  Matrix u_sigma;  // left singular vectors scaled by their singular values
  Matrix v;        // right singular vectors, columns
  std::vector<double> sigma;  // column order of u_sigma/v, not sorted
};

SvdResult svd(const Matrix& m);

// Minimum-norm least squares min_x |A x - b| via the one-sided Jacobi SVD,
// dropping singular values below rel_cut * sigma_max.
std::vector<cx> least_squares(const Matrix& a, const std::vector<cx>& b, double rel_cut = 1e-13);

// PSD square root via the embedded eigendecomposition; negative eigenvalues
// are clamped to zero.
HermitianMatrix sqrtm_psd(const HermitianMatrix& h);

// Minimum-norm least-squares solve of H x = b for Hermitian H using the
// eigendecomposition, cutting eigenvalues below rel_cut * |lambda|_max.
std::vector<cx> solve_hermitian(const HermitianMatrix& h, const std::vector<cx>& b,
                                double rel_cut = 1e-12);

}  // namespace subhardy
