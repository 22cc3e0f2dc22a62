#pragma once

#include <optional>
#include <string>

#include "subhardy/matrix.hpp"
#include "subhardy/points.hpp"
#include "subhardy/symbol.hpp"

namespace subhardy {

// The kernel families on D x D. In the formulas below w = f(lambda),
// v = f(z) and d = 1 - conj(lambda) z:
//
//   szego                 1/d
//   bergman               1/d^2
//   schur_defect          (1 - conj(w) v) / d
//   schur_defect_squared  (schur_defect)^2, computed by squaring the value
//   sb_defect             (1 - 2 conj(w) v + conj(w)^2 v^2) / d^2
//   sb1_lower             (2 conj(w) v - conj(w)^2 v^2) / d^2
//   sb1_upper             bergman - sb1_lower
//   k_space               (conj(w) v - 1) / d
//   l_space               (2 - conj(w) v) / d
//   h_space               (1 - conj(w) v) / d        (symbol is b, not phi)
//   hb_space              (1 - conj(w) v)^2 / d^2
//   sub_bergman           (1 - conj(w) v) / d^2
//   hb_times_oneminus     (1 - conj(w) v)^2 / d
//
// sb_defect and schur_defect_squared are algebraically equal but follow
// different arithmetic routes, which makes the pair a cross-check.
enum class KernelFamily {
  szego,
  bergman,
  schur_defect,
  schur_defect_squared,
  sb_defect,
  sb1_lower,
  sb1_upper,
  k_space,
  l_space,
  h_space,
  hb_space,
  sub_bergman,
  hb_times_oneminus,
};

// CLI vocabulary; names round-trip through these two.
std::string family_name(KernelFamily f);
KernelFamily family_from_name(const std::string& name);
bool family_needs_symbol(KernelFamily f);

struct KernelSpec {
  KernelFamily family;
  std::optional<AnalyticSymbol> symbol;

  KernelSpec(KernelFamily fam, std::optional<AnalyticSymbol> sym = std::nullopt);
};

// Status of the sampled range assumption attached to a family
// (k_space: |phi| > 1; l_space: 1 < |phi| < sqrt(2)). Sampled with margin,
// never a proof.
enum class RangeFlagStatus { not_applicable, ok, margin, fail };
std::string range_flag_name(RangeFlagStatus s);
RangeFlagStatus check_range_flag(const KernelSpec& spec, const PointSet& pts, double margin = 1e-9);

cx kernel_value(const KernelSpec& spec, const DiskPoint& lambda, const DiskPoint& z);

// Gram matrix entries[i][j] = kernel_value(spec, pts[i], pts[j]),
// Hermitian-symmetrized. Symbol values at the nodes are computed once so the
// entries match kernel_value bit-for-bit.
HermitianMatrix gram(const KernelSpec& spec, const PointSet& pts);

// max over point pairs of |A + B - Target|.
double kernel_sum_residual(const KernelSpec& a, const KernelSpec& b, const KernelSpec& target,
                           const PointSet& pts);

}  // namespace subhardy
