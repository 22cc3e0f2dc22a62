#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subhardy/hermit.hpp"
#include "subhardy/matrix.hpp"
#include "subhardy/symbol.hpp"

namespace subhardy {

// Basis convention: hardy compressions live in the orthonormal basis {z^n},
// bergman compressions in {sqrt(n+1) z^n}.
enum class Space { hardy, bergman };
std::string space_name(Space s);
Space space_from_name(const std::string& name);

enum class DefectVariant { sb, sb1_lower, sb1_upper };
std::string variant_name(DefectVariant v);
DefectVariant variant_from_name(const std::string& name);

struct OperatorCompression {
  Space space;
  int order;  // N + 1
  Matrix matrix;
  int symbol_degree_used;
  double truncation_bound;  // 0 for polynomials of degree <= N
};

// P_N M_f P_N: hardy entry (m,n) = a_{m-n}; bergman entry
// (m,n) = a_{m-n} sqrt((n+1)/(m+1)); zero above the diagonal. Exact for any
// analytic symbol given coefficients through degree N.
OperatorCompression multiplier_matrix(const AnalyticSymbol& f, int n_max, Space space);

// P_N (M_f M_f^*) P_N by the closed finite sum; exact, not a product of
// truncations, because the adjoint of an analytic multiplier maps the span of
// the first N+1 basis vectors into itself.
HermitianMatrix product_compression(const AnalyticSymbol& f, int n_max, Space space);

// sb:        I - 2 P(ff*) + P(f^2 f^2*)
// sb1_lower: 2 P(ff*) - P(f^2 f^2*)
// sb1_upper: I - sb1_lower
HermitianMatrix defect_compression(const AnalyticSymbol& f, int n_max, Space space,
                                   DefectVariant variant);

// One-parameter symbol family for threshold scans.
struct SymbolFamily {
  std::string name;
  std::function<AnalyticSymbol(double)> make;
};
// Named families: "rz" (r * z) and "const" (the constant r).
SymbolFamily symbol_family(const std::string& name);

struct ScanRow {
  double r;
  double min_eig;
  bool psd;
};

struct ScanResult {
  std::vector<ScanRow> rows;            // grid order
  std::vector<double> refined_roots;    // one per detected PSD flip, to 1e-6
};

ScanResult threshold_scan(const SymbolFamily& family, const std::vector<double>& grid, int n_max,
                          Space space, DefectVariant variant, double tol_rel = 1e-10);

}  // namespace subhardy
