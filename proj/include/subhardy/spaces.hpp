#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subhardy/hermit.hpp"
#include "subhardy/kernels.hpp"
#include "subhardy/points.hpp"

namespace subhardy {

// Finite kernel-section models of the three sub-Hardy spaces. Elements are
// h = sum_i c_i K_{mu_i}, so every inner product is an exact Gram sum; the
// spaces themselves are operator ranges with no computable basis, and kernel
// sections are their canonical dense family.
enum class SectionSpace { k_space, l_space, h_space };
std::string section_space_name(SectionSpace s);
KernelFamily section_family(SectionSpace s);

struct KernelSection {
  SectionSpace space;
  AnalyticSymbol symbol;  // phi for k/l spaces, b for h_space
  PointSet nodes;
  std::vector<cx> coefficients;

  KernelSection(SectionSpace sp, AnalyticSymbol sym, PointSet nds, std::vector<cx> coeffs);

  // Single kernel K_mu as a section.
  static KernelSection kernel_at(SectionSpace sp, const AnalyticSymbol& sym, const DiskPoint& mu);

  KernelSpec spec() const;
  cx eval(const DiskPoint& z) const;
};

// Exact Gram-sum inner product; both sections must live in the same space
// with the same symbol.
cx inner_product(const KernelSection& h, const KernelSection& g);

// A section as an exact rational symbol (evaluable anywhere on the disk,
// including the origin, and backward-shiftable in closed form).
AnalyticSymbol section_as_symbol(const KernelSection& h);

// S*g = (g - g(0))/z for a symbol; exact rational.
AnalyticSymbol sstar(const AnalyticSymbol& g);

// max over pts of |S*(1/phi) + (1/(phi(0) phi)) S*phi|; zero in exact
// arithmetic for invertible phi with phi(0) != 0.
double sstar_reciprocal_identity_residual(const AnalyticSymbol& phi, const PointSet& pts);

enum class AdjointKind { Xstar, Ystar, Zstar };

struct AdjointImage {
  AnalyticSymbol function;  // z h(z) +/- coupling * g(z), exact
  cx coupling;              // the reproducing-trick scalar <h, S*g>
};

// X* on H(b) sections (h_space, symbol b):  X*h = Sh - <h, S*b> b
// Y* on K(phi) sections:                    Y*h = Sh + <h, S*phi> phi
// Z* on L(phi) sections:                    Z*h = Sh - <h, S*phi> phi
AdjointImage apply_adjoint(AdjointKind which, const KernelSection& h);

// Kernel-level form of the multiplication isometry between K(phi) and
// H(1/phi): K_k(lambda, z) = conj(phi(lambda)) K_h(lambda, z) phi(z).
// Requires the sampled |phi| > 1 flag on pts.
double v_isometry_residual(const AnalyticSymbol& phi, const PointSet& pts);

struct RankOneResult {
  int rank = 0;
  std::vector<double> singular_values;
  double sigma_ratio = 0.0;            // sigma_2 / sigma_1 (0 when fewer than 2)
  double proportionality_defect = 0.0; // deviation of columns from multiples of g
  double formula_match = 0.0;          // deviation from the predicted scalar formula
  bool degenerate = false;             // constant phi: both adjoints reduce to Sh
};

// Builds D = V Y* V^{-1} - X* on h_space kernel sections at the given nodes,
// samples it at eval_pts, and checks rank one against the predicted range
// function g(z) = 1 - 1/(conj(phi(0)) phi(z)).
RankOneResult rank_one_perturbation_check(const AnalyticSymbol& phi, const PointSet& nodes,
                                          const PointSet& eval_pts);

struct PairingResult {
  double diagram_residual = 0.0;   // summing then backward shift vs shifting then summing
  double rank_one_residual = 0.0;  // T(Y* ⊕ Z*) - S T against the predicted multiple of phi
};

// Requires the sampled 1 < |phi| < sqrt(2) flag; h1 in k_space, h2 in l_space.
PairingResult pairing_checks(const AnalyticSymbol& phi, const KernelSection& h1,
                             const KernelSection& h2, const PointSet& eval_pts);

struct DecompositionResult {
  double kernel_residual = 0.0;  // k_space + l_space vs szego over pts
  double eq4_residual = 0.0;     // sqrt(I - sqrt(A)^2) vs sqrt(B) at order N (evidence)
  double eq5_residual = 0.0;     // roles of A and B swapped (evidence)
};

// A = 2I - P, B = P - I with P the hardy compression of M_phi M_phi^*.
// The matrix identities hold exactly at operator level; at compression level
// square roots only approximately commute with compression, so those two
// residuals are evidence, not verdicts.
DecompositionResult hardy_decomposition_check(const AnalyticSymbol& phi, const PointSet& pts,
                                              int n_max);

struct NonextremeEvidence {
  double sup_modulus = 0.0;  // sampled sup |b|
  bool nonextreme = false;   // sup |b| < 1 - margin (sufficient condition only)
};

// Sampled sufficient check that b is nonextreme in the unit ball of the
// bounded analytic functions: a strict sup-norm bound below one. Constants
// are decided exactly.
NonextremeEvidence nonextreme_evidence(const AnalyticSymbol& b, const PointSet& pts,
                                       double margin = 1e-9);

struct InvarianceEvidence {
  double relative_residual = 0.0;
  double condition_number = 0.0;  // of the refined Gram
};

// Backward-shift invariance evidence: S*h interpolated by kernel sections on
// a refined node set, residual measured on eval_pts relative to max |S*h|.
InvarianceEvidence shift_invariance_evidence(const KernelSection& h, const PointSet& refined,
                                             const PointSet& eval_pts);

}  // namespace subhardy
