#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subhardy/hermit.hpp"
#include "subhardy/kernels.hpp"
#include "subhardy/opcomp.hpp"
#include "subhardy/points.hpp"

namespace subhardy {

// Sampled decisions on an open disk cannot certify strict inequalities; the
// three-valued label makes that explicit. margin_fail means the sampled
// extremum landed inside the margin band around the decision boundary.
enum class TriState { yes, no, margin_fail };
std::string tristate_name(TriState t);

struct ModulusLabels {
  TriState schur = TriState::no;           // sup |f| <= 1
  TriState inverse_schur = TriState::no;   // inf |f| > 1
  TriState sqrt2_bounded = TriState::no;   // sup |f| <= sqrt(2)
  double max_modulus = 0.0;
  double min_modulus = 0.0;
  bool exact_constant = false;             // decided by exact arithmetic, not sampling
  std::vector<std::string> notes;
};

// Constants are decided exactly; everything else is a sampled decision over
// pts with the given margin. A unimodular constant is a Schur member with a
// degenerate (identically zero) defect kernel, noted as such.
ModulusLabels classify_modulus(const AnalyticSymbol& f, const PointSet& pts, double margin = 1e-9);

struct Membership {
  Verdict sb;         // gram(sb_defect) PSD?
  Verdict sb1_lower;  // gram(sb1_lower) PSD?
  Verdict sb1_upper;  // gram(sb1_upper) PSD?
};

Membership kernel_membership(const AnalyticSymbol& f, const PointSet& pts, double tol_rel = 1e-10);

struct BoundaryWitness {
  double det = 0.0;
  bool disproves = false;  // det certifiably negative
};

// The 2x2 determinant pinned at a point where |f(lambda0)| = 1; a negative
// value certifies that the sb defect kernel is not PSD. Throws when
// |f(lambda0)| is not unimodular within 1e-9.
BoundaryWitness boundary_witness(const AnalyticSymbol& f, const DiskPoint& lambda0,
                                 const DiskPoint& mu);

struct EscalationResult {
  Verdict verdict;            // the non-PSD witness when found
  std::string stage;          // "base", "random50", "random100", "boundary", "inconclusive"
  bool inconclusive = false;  // PSD persisted through every stage
};

// Non-PSD search for the sb defect kernel: the caller's verdict, then 50 and
// 100 seeded random points, then a targeted 2x2 boundary witness near a
// sampled unimodular point. PSD persistence is reported as inconclusive,
// never as membership.
EscalationResult escalate_nonpsd(const AnalyticSymbol& f, const Verdict& base, double tol_rel = 1e-10);

struct ClassLabel {
  ModulusLabels modulus;
  Verdict sb_member;
  std::pair<Verdict, Verdict> sb1_member;
  Verdict compression_sb;         // bergman defect compression evidence at order N
  Verdict compression_sb1_lower;
  Verdict compression_sb1_upper;
  int compression_order = 0;
  bool consistent = true;
  double margin = 0.0;
  std::string escalation_stage;   // empty when no escalation ran
  std::vector<std::string> caveats;
};

// Combines the modulus route, the kernel-positivity route and bergman
// compressions at order N, and checks the two routes against each other.
ClassLabel consistency_report(const AnalyticSymbol& f, const PointSet& pts, int n_max,
                              double margin = 1e-9, double tol_rel = 1e-10);

}  // namespace subhardy
