#include "subhardy/hermit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subhardy {

namespace {

// In-place cyclic Jacobi for a real symmetric matrix stored row-major.
// V, when present, accumulates the rotations (columns are eigenvectors).
void jacobi_symmetric(std::vector<double>& a, int n, std::vector<double>* v) {
  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*v)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[static_cast<std::size_t>(i) * n + i]));
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max(scale, std::abs(a[i]));
  if (scale == 0.0) return;

  const double thresh = 1e-14 * scale;
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    off = std::sqrt(off);
    if (off <= thresh) return;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= thresh / (4.0 * n)) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                        : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = akp - s * (akq + tau * akp);
          at(p, k) = at(k, p);
          at(k, q) = akq + s * (akp - tau * akq);
          at(q, k) = at(k, q);
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*v)[static_cast<std::size_t>(k) * n + p];
            double& vkq = (*v)[static_cast<std::size_t>(k) * n + q];
            const double tp = vkp, tq = vkq;
            vkp = tp - s * (tq + tau * tp);
            vkq = tq + s * (tp - tau * tq);
          }
        }
      }
    }
  }
  throw std::runtime_error("jacobi_symmetric: did not converge");
}

std::vector<double> embed(const HermitianMatrix& h) {
  const int n = h.order();
  const int m = 2 * n;
  std::vector<double> e(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cx v = h(i, j);
      e[static_cast<std::size_t>(i) * m + j] = v.real();
      e[static_cast<std::size_t>(i) * m + (j + n)] = -v.imag();
      e[static_cast<std::size_t>(i + n) * m + j] = v.imag();
      e[static_cast<std::size_t>(i + n) * m + (j + n)] = v.real();
    }
  }
  return e;
}

}  // namespace

EigenDecomposition eigen_hermitian(const HermitianMatrix& h, bool want_vectors) {
  const int n = h.order();
  const int m = 2 * n;
  std::vector<double> e = embed(h);
  std::vector<double> v;
  jacobi_symmetric(e, m, want_vectors ? &v : nullptr);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return e[static_cast<std::size_t>(i) * m + i] < e[static_cast<std::size_t>(j) * m + j];
  });

  EigenDecomposition out;
  out.values.reserve(n);
  if (want_vectors) out.vectors = Matrix(n, n);
  // The embedding doubles each eigenvalue; take one from each sorted pair.
  for (int k = 0; k < n; ++k) {
    const int col = order[2 * k];
    out.values.push_back(e[static_cast<std::size_t>(col) * m + col]);
    if (want_vectors) {
      for (int i = 0; i < n; ++i) {
        out.vectors.at(i, k) = cx(v[static_cast<std::size_t>(i) * m + col],
                                  v[static_cast<std::size_t>(i + n) * m + col]);
      }
    }
  }
  return out;
}

std::pair<double, std::vector<cx>> min_eig(const HermitianMatrix& h) {
  const EigenDecomposition d = eigen_hermitian(h, true);
  std::vector<cx> vec(h.order());
  for (int i = 0; i < h.order(); ++i) vec[i] = d.vectors.at(i, 0);
  return {d.values.front(), std::move(vec)};
}

Verdict psd_verdict(const HermitianMatrix& h, double tol_rel) {
  Verdict v;
  v.scale = h.max_abs_diag();
  v.tolerance_used = tol_rel * v.scale;
  const EigenDecomposition values_only = eigen_hermitian(h, false);
  v.min_eigenvalue = values_only.values.front();
  v.psd = v.min_eigenvalue >= -v.tolerance_used;
  if (!v.psd) {
    auto [val, vec] = min_eig(h);
    v.min_eigenvalue = val;
    v.witness = std::move(vec);
  }
  return v;
}

double condition_number(const HermitianMatrix& h) {
  const EigenDecomposition d = eigen_hermitian(h, false);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double v : d.values) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

namespace {

// One-sided Jacobi column orthogonalization; V accumulates the right
// rotations when requested.
void hestenes(Matrix& m, Matrix* v) {
  const int rows = m.rows();
  const int cols = m.cols();
  if (v) *v = Matrix::identity(cols);

  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool converged = true;
    for (int p = 0; p < cols - 1; ++p) {
      for (int q = p + 1; q < cols; ++q) {
        double a = 0.0, b = 0.0;
        cx c(0.0, 0.0);
        for (int k = 0; k < rows; ++k) {
          a += std::norm(m.at(k, p));
          b += std::norm(m.at(k, q));
          c += std::conj(m.at(k, p)) * m.at(k, q);
        }
        if (a == 0.0 || b == 0.0) continue;
        const double cm = std::abs(c);
        if (cm <= 1e-15 * std::sqrt(a * b)) continue;
        converged = false;

        const cx phase = c / cm;
        const double tau = (b - a) / (2.0 * cm);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                      : 1.0 / (tau - std::sqrt(tau * tau + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double sth = t * cth;
        for (int k = 0; k < rows; ++k) {
          const cx xp = m.at(k, p);
          const cx xq = m.at(k, q) * std::conj(phase);
          m.at(k, p) = cth * xp - sth * xq;
          m.at(k, q) = sth * xp + cth * xq;
        }
        if (v) {
          for (int k = 0; k < cols; ++k) {
            const cx xp = v->at(k, p);
            const cx xq = v->at(k, q) * std::conj(phase);
            v->at(k, p) = cth * xp - sth * xq;
            v->at(k, q) = sth * xp + cth * xq;
          }
        }
      }
    }
    if (converged) break;
  }
}

std::vector<double> column_norms(const Matrix& m) {
  std::vector<double> out(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (int k = 0; k < m.rows(); ++k) s += std::norm(m.at(k, j));
    out[j] = std::sqrt(s);
  }
  return out;
}

}  // namespace

RankResult numerical_rank(const Matrix& m_in, double rel_tol) {
  Matrix m = m_in;
  hestenes(m, nullptr);

  RankResult out;
  out.singular_values = column_norms(m);
  std::sort(out.singular_values.begin(), out.singular_values.end(), std::greater<double>());
  const double smax = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  if (smax > 0.0) {
    for (double s : out.singular_values)
      if (s > rel_tol * smax) ++out.rank;
  }
  return out;
}

SvdResult svd(const Matrix& m_in) {
  SvdResult out;
  out.u_sigma = m_in;
  hestenes(out.u_sigma, &out.v);
  out.sigma = column_norms(out.u_sigma);
  return out;
}

std::vector<cx> least_squares(const Matrix& a, const std::vector<cx>& b, double rel_cut) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("least_squares: size mismatch");
  }
  const SvdResult s = svd(a);
  double smax = 0.0;
  for (double x : s.sigma) smax = std::max(smax, x);

  std::vector<cx> x(a.cols(), cx(0.0, 0.0));
  for (int k = 0; k < a.cols(); ++k) {
    if (s.sigma[k] <= rel_cut * smax || s.sigma[k] == 0.0) continue;
    cx proj(0.0, 0.0);
    for (int i = 0; i < a.rows(); ++i) proj += std::conj(s.u_sigma.at(i, k)) * b[i];
    proj /= (s.sigma[k] * s.sigma[k]);  // (u_k^H b)/sigma_k with u_k = col_k/sigma_k
    for (int j = 0; j < a.cols(); ++j) x[j] += proj * s.v.at(j, k);
  }
  return x;
}

HermitianMatrix sqrtm_psd(const HermitianMatrix& h) {
  const int n = h.order();
  const int m = 2 * n;
  std::vector<double> e = embed(h);
  std::vector<double> v;
  jacobi_symmetric(e, m, &v);

  // S = V sqrt(max(D,0)) V^T, assembled in the real embedding and read back
  // out of its complex-structure blocks.
  std::vector<double> root(static_cast<std::size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    const double lam = e[static_cast<std::size_t>(k) * m + k];
    root[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  std::vector<double> s(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const double vik = v[static_cast<std::size_t>(i) * m + k] * root[k];
      if (vik == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        s[static_cast<std::size_t>(i) * m + j] += vik * v[static_cast<std::size_t>(j) * m + k];
      }
    }
  }

  Matrix raw(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = 0.5 * (s[static_cast<std::size_t>(i) * m + j] +
                               s[static_cast<std::size_t>(i + n) * m + (j + n)]);
      const double im = 0.5 * (s[static_cast<std::size_t>(i + n) * m + j] -
                               s[static_cast<std::size_t>(i) * m + (j + n)]);
      raw.at(i, j) = cx(re, im);
    }
  }
  return HermitianMatrix::symmetrized(raw);
}

std::vector<cx> solve_hermitian(const HermitianMatrix& h, const std::vector<cx>& b,
                                double rel_cut) {
  const int n = h.order();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_hermitian: size mismatch");
  const EigenDecomposition d = eigen_hermitian(h, true);
  double lam_max = 0.0;
  for (double lam : d.values) lam_max = std::max(lam_max, std::abs(lam));

  std::vector<cx> x(n, cx(0.0, 0.0));
  for (int k = 0; k < n; ++k) {
    const double lam = d.values[k];
    if (std::abs(lam) <= rel_cut * lam_max) continue;
    cx coef(0.0, 0.0);
    for (int i = 0; i < n; ++i) coef += std::conj(d.vectors.at(i, k)) * b[i];
    coef /= lam;
    for (int i = 0; i < n; ++i) x[i] += coef * d.vectors.at(i, k);
  }
  return x;
}

}  // namespace subhardy
