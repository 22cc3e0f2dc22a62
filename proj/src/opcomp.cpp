#include "subhardy/opcomp.hpp"

#include <cmath>
#include <stdexcept>

namespace subhardy {

std::string space_name(Space s) { return s == Space::hardy ? "hardy" : "bergman"; }

Space space_from_name(const std::string& name) {
  if (name == "hardy") return Space::hardy;
  if (name == "bergman") return Space::bergman;
  throw std::invalid_argument("unknown space: " + name);
}

std::string variant_name(DefectVariant v) {
  switch (v) {
    case DefectVariant::sb:
      return "sb";
    case DefectVariant::sb1_lower:
      return "sb1-lower";
    case DefectVariant::sb1_upper:
      return "sb1-upper";
  }
  return "?";
}

DefectVariant variant_from_name(const std::string& name) {
  if (name == "sb") return DefectVariant::sb;
  if (name == "sb1-lower" || name == "sb1_lower") return DefectVariant::sb1_lower;
  if (name == "sb1-upper" || name == "sb1_upper") return DefectVariant::sb1_upper;
  throw std::invalid_argument("unknown defect variant: " + name);
}

OperatorCompression multiplier_matrix(const AnalyticSymbol& f, int n_max, Space space) {
  if (n_max < 0) throw std::domain_error("multiplier_matrix: N must be >= 0");
  auto [coeffs, tail] = f.truncated_coeffs(n_max);
  OperatorCompression out{space, n_max + 1, Matrix(n_max + 1, n_max + 1), n_max, tail};
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= m; ++n) {
      cx a = coeffs[m - n];
      if (space == Space::bergman) a *= std::sqrt(static_cast<double>(n + 1) / (m + 1));
      out.matrix.at(m, n) = a;
    }
  }
  return out;
}

HermitianMatrix product_compression(const AnalyticSymbol& f, int n_max, Space space) {
  if (n_max < 0) throw std::domain_error("product_compression: N must be >= 0");
  const std::vector<cx> a = f.truncated_coeffs(n_max).first;
  HermitianMatrix out(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= m; ++n) {
      cx acc(0.0, 0.0);
      if (space == Space::hardy) {
        for (int j = 0; j <= n; ++j) acc += a[m - j] * std::conj(a[n - j]);
      } else {
        for (int j = 0; j <= n; ++j) acc += a[m - j] * std::conj(a[n - j]) * static_cast<double>(j + 1);
        acc /= std::sqrt(static_cast<double>(m + 1) * (n + 1));
      }
      out.set(m, n, acc);
    }
  }
  return out;
}

HermitianMatrix defect_compression(const AnalyticSymbol& f, int n_max, Space space,
                                   DefectVariant variant) {
  const HermitianMatrix p1 = product_compression(f, n_max, space);
  const HermitianMatrix p2 = product_compression(f.square(), n_max, space);
  HermitianMatrix out(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= m; ++n) {
      const cx lower = 2.0 * p1(m, n) - p2(m, n);
      cx v;
      switch (variant) {
        case DefectVariant::sb:
          v = (m == n ? cx(1.0, 0.0) : cx(0.0, 0.0)) - 2.0 * p1(m, n) + p2(m, n);
          break;
        case DefectVariant::sb1_lower:
          v = lower;
          break;
        case DefectVariant::sb1_upper:
          v = (m == n ? cx(1.0, 0.0) : cx(0.0, 0.0)) - lower;
          break;
      }
      out.set(m, n, v);
    }
  }
  return out;
}

SymbolFamily symbol_family(const std::string& name) {
  if (name == "rz") {
    return {"rz", [](double r) { return AnalyticSymbol::polynomial({cx(0.0, 0.0), cx(r, 0.0)}); }};
  }
  if (name == "const") {
    return {"const", [](double r) { return AnalyticSymbol::constant(cx(r, 0.0)); }};
  }
  throw std::invalid_argument("unknown symbol family: " + name);
}

ScanResult threshold_scan(const SymbolFamily& family, const std::vector<double>& grid, int n_max,
                          Space space, DefectVariant variant, double tol_rel) {
  ScanResult out;
  auto probe = [&](double r) {
    const Verdict v = psd_verdict(defect_compression(family.make(r), n_max, space, variant), tol_rel);
    return std::make_pair(v.min_eigenvalue, v.psd);
  };

  for (double r : grid) {
    auto [eig, psd] = probe(r);
    out.rows.push_back({r, eig, psd});
  }

  for (std::size_t i = 0; i + 1 < out.rows.size(); ++i) {
    if (out.rows[i].psd == out.rows[i + 1].psd) continue;
    double lo = out.rows[i].r;
    double hi = out.rows[i + 1].r;
    const bool lo_psd = out.rows[i].psd;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      if (probe(mid).second == lo_psd) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.refined_roots.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace subhardy
