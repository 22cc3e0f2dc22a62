#include "subhardy/classify.hpp"

#include <cmath>
#include <numbers>

namespace subhardy {

std::string tristate_name(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::margin_fail:
      return "margin-fail";
  }
  return "?";
}

ModulusLabels classify_modulus(const AnalyticSymbol& f, const PointSet& pts, double margin) {
  ModulusLabels out;
  const double sqrt2 = std::sqrt(2.0);

  if (f.is_constant()) {
    const double m = std::abs(f.constant_value());
    out.exact_constant = true;
    out.max_modulus = m;
    out.min_modulus = m;
    out.schur = m <= 1.0 ? TriState::yes : TriState::no;
    out.inverse_schur = m > 1.0 ? TriState::yes : TriState::no;
    out.sqrt2_bounded = m <= sqrt2 + margin ? TriState::yes : TriState::no;
    if (std::abs(m - 1.0) <= 1e-12) {
      out.notes.push_back("unimodular constant: defect kernel is identically zero");
    }
    return out;
  }

  if (pts.size() == 0) throw std::domain_error("classify_modulus: point set must be nonempty");
  double mx = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  for (const auto& p : pts.points) {
    const double m = std::abs(f(p));
    mx = std::max(mx, m);
    mn = std::min(mn, m);
  }
  out.max_modulus = mx;
  out.min_modulus = mn;

  if (mx <= 1.0 - margin) {
    out.schur = TriState::yes;
  } else if (mx > 1.0 + margin) {
    out.schur = TriState::no;
  } else {
    out.schur = TriState::margin_fail;
  }

  if (mn > 1.0 + margin) {
    out.inverse_schur = TriState::yes;
  } else if (mn <= 1.0 - margin) {
    out.inverse_schur = TriState::no;
  } else {
    out.inverse_schur = TriState::margin_fail;
  }

  // The sqrt(2) bound is a closed inequality, so a sampled maximum within
  // the margin counts as yes, with a caveat.
  if (mx <= sqrt2 + margin) {
    out.sqrt2_bounded = TriState::yes;
    if (mx >= sqrt2 - margin) out.notes.push_back("sampled maximum within margin of sqrt(2)");
  } else {
    out.sqrt2_bounded = TriState::no;
  }
  out.notes.push_back("sampled decision");
  return out;
}

Membership kernel_membership(const AnalyticSymbol& f, const PointSet& pts, double tol_rel) {
  Membership out;
  out.sb = psd_verdict(gram(KernelSpec(KernelFamily::sb_defect, f), pts), tol_rel);
  out.sb1_lower = psd_verdict(gram(KernelSpec(KernelFamily::sb1_lower, f), pts), tol_rel);
  out.sb1_upper = psd_verdict(gram(KernelSpec(KernelFamily::sb1_upper, f), pts), tol_rel);
  return out;
}

BoundaryWitness boundary_witness(const AnalyticSymbol& f, const DiskPoint& lambda0,
                                 const DiskPoint& mu) {
  const double m0 = std::abs(f(lambda0));
  if (std::abs(m0 - 1.0) > 1e-9) {
    throw std::domain_error("boundary_witness: |f(lambda0)| must be 1 within 1e-9");
  }
  const KernelSpec spec(KernelFamily::sb_defect, f);
  const cx k00 = kernel_value(spec, lambda0, lambda0);
  const cx k01 = kernel_value(spec, lambda0, mu);
  const cx k10 = kernel_value(spec, mu, lambda0);
  const cx k11 = kernel_value(spec, mu, mu);

  BoundaryWitness out;
  out.det = (k00 * k11 - k01 * k10).real();
  const double scale = std::max({std::abs(k00) * std::abs(k11), std::abs(k01) * std::abs(k10), 1e-30});
  out.disproves = out.det < -1e-12 * scale;
  return out;
}

namespace {

// Radial bisection for a point with |f| = 1 along a ray that straddles the
// unit modulus level.
std::optional<DiskPoint> find_unimodular_point(const AnalyticSymbol& f) {
  constexpr int kAngles = 64;
  constexpr int kRadii = 12;
  constexpr double kRho = 0.9;
  for (int k = 0; k < kAngles; ++k) {
    const double th = 2.0 * std::numbers::pi * k / kAngles;
    const cx dir(std::cos(th), std::sin(th));
    double prev_r = 0.0;
    double prev_m = std::abs(f.eval_unchecked(cx(0.0, 0.0)));
    for (int j = 1; j <= kRadii; ++j) {
      const double r = kRho * j / kRadii;
      const double m = std::abs(f.eval_unchecked(r * dir));
      if ((prev_m - 1.0) * (m - 1.0) < 0.0) {
        double lo = prev_r, hi = r;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double mm = std::abs(f.eval_unchecked(mid * dir));
          if ((prev_m - 1.0) * (mm - 1.0) < 0.0) {
            hi = mid;
          } else {
            lo = mid;
          }
          if (hi - lo < 1e-13) break;
        }
        const cx z = 0.5 * (lo + hi) * dir;
        if (std::abs(std::abs(f.eval_unchecked(z)) - 1.0) <= 1e-9) return DiskPoint(z);
      }
      prev_r = r;
      prev_m = m;
    }
  }
  return std::nullopt;
}

}  // namespace

EscalationResult escalate_nonpsd(const AnalyticSymbol& f, const Verdict& base, double tol_rel) {
  EscalationResult out;
  if (!base.psd) {
    out.verdict = base;
    out.stage = "base";
    return out;
  }
  const KernelSpec spec(KernelFamily::sb_defect, f);

  const Verdict v50 = psd_verdict(gram(spec, random_points(50, 0.9, 1001)), tol_rel);
  if (!v50.psd) {
    out.verdict = v50;
    out.stage = "random50";
    return out;
  }
  const Verdict v100 = psd_verdict(gram(spec, random_points(100, 0.9, 1002)), tol_rel);
  if (!v100.psd) {
    out.verdict = v100;
    out.stage = "random100";
    return out;
  }

  if (auto lambda0 = find_unimodular_point(f)) {
    const PointSet probes = polar_grid(3, 8, 0.8);
    for (const auto& mu : probes.points) {
      if (std::abs(mu.value() - lambda0->value()) < 1e-6) continue;
      const BoundaryWitness bw = boundary_witness(f, *lambda0, mu);
      if (bw.disproves) {
        PointSet pair;
        pair.rho_max = 0.95;
        pair.points = {*lambda0, mu};
        out.verdict = psd_verdict(gram(spec, pair), tol_rel);
        if (!out.verdict.psd) {
          out.stage = "boundary";
          return out;
        }
      }
    }
  }

  out.verdict = v100;
  out.stage = "inconclusive";
  out.inconclusive = true;
  return out;
}

ClassLabel consistency_report(const AnalyticSymbol& f, const PointSet& pts, int n_max,
                              double margin, double tol_rel) {
  ClassLabel out;
  out.margin = margin;
  out.modulus = classify_modulus(f, pts, margin);
  for (const auto& n : out.modulus.notes) out.caveats.push_back(n);

  Membership mem = kernel_membership(f, pts, tol_rel);

  const bool crossing =
      out.modulus.schur == TriState::no && out.modulus.inverse_schur == TriState::no;
  if (crossing && mem.sb.psd) {
    const EscalationResult esc = escalate_nonpsd(f, mem.sb, tol_rel);
    out.escalation_stage = esc.stage;
    mem.sb = esc.verdict;
    if (esc.inconclusive) {
      out.caveats.push_back("inconclusive - refine sampling");
    } else {
      out.caveats.push_back("escalated non-PSD search: " + esc.stage);
    }
  }
  out.sb_member = mem.sb;
  out.sb1_member = {mem.sb1_lower, mem.sb1_upper};

  out.compression_order = n_max;
  out.compression_sb = psd_verdict(defect_compression(f, n_max, Space::bergman, DefectVariant::sb), tol_rel);
  out.compression_sb1_lower =
      psd_verdict(defect_compression(f, n_max, Space::bergman, DefectVariant::sb1_lower), tol_rel);
  out.compression_sb1_upper =
      psd_verdict(defect_compression(f, n_max, Space::bergman, DefectVariant::sb1_upper), tol_rel);
  out.caveats.push_back(
      "compression PSD is necessary evidence only; compression non-PSD is a disproof");

  const bool any_margin_fail = out.modulus.schur == TriState::margin_fail ||
                               out.modulus.inverse_schur == TriState::margin_fail ||
                               out.modulus.sqrt2_bounded == TriState::margin_fail;
  if (any_margin_fail) {
    out.caveats.push_back("margin-fail: consistency deferred");
    out.consistent = true;
    return out;
  }

  const bool in_schur = out.modulus.schur == TriState::yes;
  const bool in_inverse = out.modulus.inverse_schur == TriState::yes;
  const bool in_sqrt2 = out.modulus.sqrt2_bounded == TriState::yes;
  const bool predicted_sb = in_schur || in_inverse;
  const bool predicted_sb1 = in_schur || (in_inverse && in_sqrt2);

  bool consistent = (mem.sb.psd == predicted_sb) &&
                    ((mem.sb1_lower.psd && mem.sb1_upper.psd) == predicted_sb1);
  // A predicted member must also survive the compression disproof route.
  if (predicted_sb && !out.compression_sb.psd) consistent = false;
  if (predicted_sb1 && !(out.compression_sb1_lower.psd && out.compression_sb1_upper.psd)) {
    consistent = false;
  }
  out.consistent = consistent;
  return out;
}

}  // namespace subhardy
