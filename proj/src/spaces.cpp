#include "subhardy/spaces.hpp"

#include <cmath>
#include <stdexcept>

#include "subhardy/opcomp.hpp"

namespace subhardy {

std::string section_space_name(SectionSpace s) {
  switch (s) {
    case SectionSpace::k_space:
      return "k_space";
    case SectionSpace::l_space:
      return "l_space";
    case SectionSpace::h_space:
      return "h_space";
  }
  return "?";
}

KernelFamily section_family(SectionSpace s) {
  switch (s) {
    case SectionSpace::k_space:
      return KernelFamily::k_space;
    case SectionSpace::l_space:
      return KernelFamily::l_space;
    case SectionSpace::h_space:
      return KernelFamily::h_space;
  }
  throw std::logic_error("unreachable section space");
}

KernelSection::KernelSection(SectionSpace sp, AnalyticSymbol sym, PointSet nds,
                             std::vector<cx> coeffs)
    : space(sp), symbol(std::move(sym)), nodes(std::move(nds)), coefficients(std::move(coeffs)) {
  if (nodes.size() != coefficients.size()) {
    throw std::invalid_argument("KernelSection: one coefficient per node required");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].value() == nodes[j].value()) {
        throw std::invalid_argument("KernelSection: nodes must be distinct");
      }
    }
  }
}

KernelSection KernelSection::kernel_at(SectionSpace sp, const AnalyticSymbol& sym,
                                       const DiskPoint& mu) {
  PointSet nodes;
  nodes.points = {mu};
  nodes.rho_max = std::max(0.9, std::abs(mu.value()));
  return KernelSection(sp, sym, nodes, {cx(1.0, 0.0)});
}

KernelSpec KernelSection::spec() const { return KernelSpec(section_family(space), symbol); }

cx KernelSection::eval(const DiskPoint& z) const {
  const KernelSpec sp = spec();
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    acc += coefficients[i] * kernel_value(sp, nodes[i], z);
  }
  return acc;
}

cx inner_product(const KernelSection& h, const KernelSection& g) {
  if (h.space != g.space || !(h.symbol == g.symbol)) {
    throw std::invalid_argument("inner_product: sections live in different spaces");
  }
  const KernelSpec sp = h.spec();
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      acc += h.coefficients[i] * std::conj(g.coefficients[j]) *
             kernel_value(sp, h.nodes[i], g.nodes[j]);
    }
  }
  return acc;
}

namespace {

// Kernel K_mu as a symbol in z. The numerators are affine in the symbol and
// the denominator is the zero-free linear factor 1 - conj(mu) z.
AnalyticSymbol kernel_symbol(SectionSpace space, const AnalyticSymbol& sym, const DiskPoint& mu) {
  const cx w = sym(mu);
  const AnalyticSymbol szego_factor =
      AnalyticSymbol::rational({cx(1.0, 0.0)}, {cx(1.0, 0.0), -std::conj(mu.value())});
  switch (space) {
    case SectionSpace::k_space:
      return (AnalyticSymbol::scale(std::conj(w), sym) + AnalyticSymbol::constant(cx(-1.0, 0.0))) *
             szego_factor;
    case SectionSpace::l_space:
      return (AnalyticSymbol::constant(cx(2.0, 0.0)) + AnalyticSymbol::scale(-std::conj(w), sym)) *
             szego_factor;
    case SectionSpace::h_space:
      return (AnalyticSymbol::constant(cx(1.0, 0.0)) + AnalyticSymbol::scale(-std::conj(w), sym)) *
             szego_factor;
  }
  throw std::logic_error("unreachable section space");
}

void require_flag(const AnalyticSymbol& phi, const PointSet& pts, bool bounded_by_sqrt2,
                  const std::string& op) {
  const KernelSpec spec(bounded_by_sqrt2 ? KernelFamily::l_space : KernelFamily::k_space, phi);
  if (check_range_flag(spec, pts) == RangeFlagStatus::fail) {
    throw FlagError(op + ": sampled range flag failed for the symbol");
  }
}

}  // namespace

AnalyticSymbol section_as_symbol(const KernelSection& h) {
  AnalyticSymbol acc = AnalyticSymbol::constant(cx(0.0, 0.0));
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    acc = acc + AnalyticSymbol::scale(h.coefficients[i],
                                      kernel_symbol(h.space, h.symbol, h.nodes[i]));
  }
  return acc;
}

AnalyticSymbol sstar(const AnalyticSymbol& g) { return g.backward_shift(); }

double sstar_reciprocal_identity_residual(const AnalyticSymbol& phi, const PointSet& pts) {
  const cx phi0 = phi.eval_unchecked(cx(0.0, 0.0));
  if (phi0 == cx(0.0, 0.0)) {
    throw std::domain_error("sstar identity: phi(0) must be nonzero");
  }
  const AnalyticSymbol lhs = sstar(phi.reciprocal());
  const AnalyticSymbol sphi = sstar(phi);
  double residual = 0.0;
  for (const auto& p : pts.points) {
    const cx z = p.value();
    const cx rhs = lhs.eval_unchecked(z) +
                   sphi.eval_unchecked(z) / (phi0 * phi.eval_unchecked(z));
    residual = std::max(residual, std::abs(rhs));
  }
  return residual;
}

AdjointImage apply_adjoint(AdjointKind which, const KernelSection& h) {
  const SectionSpace expected = which == AdjointKind::Xstar   ? SectionSpace::h_space
                                : which == AdjointKind::Ystar ? SectionSpace::k_space
                                                              : SectionSpace::l_space;
  if (h.space != expected) {
    throw std::invalid_argument("apply_adjoint: section lives in the wrong space");
  }

  // <h, S*g> for h = sum c_i K_{mu_i} via the reproducing property.
  const AnalyticSymbol sg = sstar(h.symbol);
  cx coupling(0.0, 0.0);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    coupling += h.coefficients[i] * std::conj(sg.eval_unchecked(h.nodes[i].value()));
  }
  const cx sign = which == AdjointKind::Ystar ? cx(1.0, 0.0) : cx(-1.0, 0.0);

  AnalyticSymbol result = AnalyticSymbol::identity() * section_as_symbol(h) +
                          AnalyticSymbol::scale(sign * coupling, h.symbol);
  return {std::move(result), coupling};
}

double v_isometry_residual(const AnalyticSymbol& phi, const PointSet& pts) {
  require_flag(phi, pts, false, "v_isometry_residual");
  const AnalyticSymbol b = phi.reciprocal();
  const KernelSpec k(KernelFamily::k_space, phi);
  const KernelSpec h(KernelFamily::h_space, b);

  double residual = 0.0;
  for (const auto& lam : pts.points) {
    for (const auto& z : pts.points) {
      const cx lhs = kernel_value(k, lam, z);
      const cx rhs = std::conj(phi(lam)) * kernel_value(h, lam, z) * phi(z);
      residual = std::max(residual, std::abs(lhs - rhs));
    }
  }
  return residual;
}

RankOneResult rank_one_perturbation_check(const AnalyticSymbol& phi, const PointSet& nodes,
                                          const PointSet& eval_pts) {
  RankOneResult out;
  if (phi.is_constant()) {
    out.degenerate = true;
    return out;
  }
  require_flag(phi, nodes, false, "rank_one_perturbation_check");
  require_flag(phi, eval_pts, false, "rank_one_perturbation_check");
  const cx phi0 = phi.eval_unchecked(cx(0.0, 0.0));
  if (phi0 == cx(0.0, 0.0)) {
    throw std::domain_error("rank_one_perturbation_check: phi(0) must be nonzero");
  }

  const AnalyticSymbol b = phi.reciprocal();
  const AnalyticSymbol sb = sstar(b);
  const AnalyticSymbol sphi = sstar(phi);
  const AnalyticSymbol identity = AnalyticSymbol::identity();

  const int n = static_cast<int>(nodes.size());
  const int m = static_cast<int>(eval_pts.size());
  Matrix d(m, n);
  std::vector<cx> predicted_scalar(n);

  for (int i = 0; i < n; ++i) {
    const DiskPoint& mu = nodes[i];
    const KernelSection hi = KernelSection::kernel_at(SectionSpace::h_space, b, mu);
    const AnalyticSymbol hi_sym = section_as_symbol(hi);

    // X* h_i = S h_i - <h_i, S*(1/phi)> (1/phi), scalar by reproducing.
    const cx t = std::conj(sb.eval_unchecked(mu.value()));
    const AnalyticSymbol xstar = identity * hi_sym + AnalyticSymbol::scale(-t, b);

    // V Y* V^{-1} h_i with V^{-1} h = phi h and V u = u / phi. The Y*
    // coupling <phi h_i, S*phi>_{K(phi)} converts to an H(1/phi) inner
    // product through (1/phi) S*phi = -phi(0) S*(1/phi).
    const cx s = -std::conj(phi0 * sb.eval_unchecked(mu.value()));
    const AnalyticSymbol ystar_of_phih =
        identity * (phi * hi_sym) + AnalyticSymbol::scale(s, phi);
    const AnalyticSymbol vyv = ystar_of_phih * b;

    // The displayed scalar via the independent route: phi h_i is the K(phi)
    // kernel at mu scaled by 1/conj(phi(mu)), so the K(phi) reproducing
    // trick applies directly.
    predicted_scalar[i] = std::conj(sphi.eval_unchecked(mu.value())) / std::conj(phi(mu));

    for (int e = 0; e < m; ++e) {
      const cx z = eval_pts[e].value();
      d.at(e, i) = vyv.eval_unchecked(z) - xstar.eval_unchecked(z);
    }
  }

  const RankResult rr = numerical_rank(d);
  out.rank = rr.rank;
  out.singular_values = rr.singular_values;
  if (rr.singular_values.size() >= 2 && rr.singular_values[0] > 0.0) {
    out.sigma_ratio = rr.singular_values[1] / rr.singular_values[0];
  }

  // Predicted range function g(z) = 1 - 1/(conj(phi(0)) phi(z)).
  std::vector<cx> g(m);
  double gg = 0.0;
  for (int e = 0; e < m; ++e) {
    g[e] = cx(1.0, 0.0) - cx(1.0, 0.0) / (std::conj(phi0) * phi(eval_pts[e]));
    gg += std::norm(g[e]);
  }
  for (int i = 0; i < n; ++i) {
    cx proj(0.0, 0.0);
    for (int e = 0; e < m; ++e) proj += std::conj(g[e]) * d.at(e, i);
    const cx alpha = proj / gg;
    for (int e = 0; e < m; ++e) {
      out.proportionality_defect =
          std::max(out.proportionality_defect, std::abs(d.at(e, i) - alpha * g[e]));
      out.formula_match =
          std::max(out.formula_match, std::abs(d.at(e, i) - predicted_scalar[i] * g[e]));
    }
  }
  return out;
}

PairingResult pairing_checks(const AnalyticSymbol& phi, const KernelSection& h1,
                             const KernelSection& h2, const PointSet& eval_pts) {
  if (h1.space != SectionSpace::k_space || h2.space != SectionSpace::l_space) {
    throw std::invalid_argument("pairing_checks: need h1 in k_space and h2 in l_space");
  }
  require_flag(phi, eval_pts, true, "pairing_checks");

  const AnalyticSymbol h1s = section_as_symbol(h1);
  const AnalyticSymbol h2s = section_as_symbol(h2);

  PairingResult out;

  // Commuting diagram: summing first then applying the backward shift equals
  // applying the restricted shifts and then summing.
  const AnalyticSymbol lhs = sstar(h1s + h2s);
  const AnalyticSymbol rhs1 = sstar(h1s);
  const AnalyticSymbol rhs2 = sstar(h2s);
  for (const auto& p : eval_pts.points) {
    const cx z = p.value();
    out.diagram_residual = std::max(
        out.diagram_residual,
        std::abs(lhs.eval_unchecked(z) - (rhs1.eval_unchecked(z) + rhs2.eval_unchecked(z))));
  }

  // T(Y* ⊕ Z*)(h1 ⊕ h2) - S T (h1 ⊕ h2) against
  // (<h1, S*phi>_K - <h2, S*phi>_L) phi.
  const AdjointImage y = apply_adjoint(AdjointKind::Ystar, h1);
  const AdjointImage zz = apply_adjoint(AdjointKind::Zstar, h2);
  const cx sigma = y.coupling - zz.coupling;
  for (const auto& p : eval_pts.points) {
    const cx z = p.value();
    const cx left = y.function.eval_unchecked(z) + zz.function.eval_unchecked(z) -
                    z * (h1s.eval_unchecked(z) + h2s.eval_unchecked(z));
    const cx right = sigma * phi.eval_unchecked(z);
    out.rank_one_residual = std::max(out.rank_one_residual, std::abs(left - right));
  }
  return out;
}

DecompositionResult hardy_decomposition_check(const AnalyticSymbol& phi, const PointSet& pts,
                                              int n_max) {
  require_flag(phi, pts, true, "hardy_decomposition_check");
  DecompositionResult out;
  out.kernel_residual =
      kernel_sum_residual(KernelSpec(KernelFamily::k_space, phi),
                          KernelSpec(KernelFamily::l_space, phi), KernelSpec(KernelFamily::szego), pts);

  const HermitianMatrix p = product_compression(phi, n_max, Space::hardy);
  const int n = p.order();
  Matrix a_raw(n, n), b_raw(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cx pij = p(i, j);
      const cx id = (i == j) ? cx(1.0, 0.0) : cx(0.0, 0.0);
      a_raw.at(i, j) = 2.0 * id - pij;
      b_raw.at(i, j) = pij - id;
    }
  }
  const HermitianMatrix sa = sqrtm_psd(HermitianMatrix::symmetrized(a_raw));
  const HermitianMatrix sb = sqrtm_psd(HermitianMatrix::symmetrized(b_raw));

  auto complementary_root = [&](const HermitianMatrix& s) {
    const Matrix prod = s.as_matrix() * s.as_matrix();
    Matrix raw(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        raw.at(i, j) = ((i == j) ? cx(1.0, 0.0) : cx(0.0, 0.0)) - prod.at(i, j);
    return sqrtm_psd(HermitianMatrix::symmetrized(raw));
  };
  auto max_abs_diff = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
    return d;
  };

  out.eq4_residual = max_abs_diff(complementary_root(sa), sb);
  out.eq5_residual = max_abs_diff(complementary_root(sb), sa);
  return out;
}

NonextremeEvidence nonextreme_evidence(const AnalyticSymbol& b, const PointSet& pts,
                                       double margin) {
  NonextremeEvidence out;
  if (b.is_constant()) {
    out.sup_modulus = std::abs(b.constant_value());
    out.nonextreme = out.sup_modulus < 1.0;
    return out;
  }
  for (const auto& p : pts.points) out.sup_modulus = std::max(out.sup_modulus, std::abs(b(p)));
  out.nonextreme = out.sup_modulus < 1.0 - margin;
  return out;
}

InvarianceEvidence shift_invariance_evidence(const KernelSection& h, const PointSet& refined,
                                             const PointSet& eval_pts) {
  const AnalyticSymbol u = sstar(section_as_symbol(h));
  const KernelSpec spec = h.spec();

  // Least-squares fit of S*h by kernel sections at the refined nodes,
  // measured in sampled values on eval_pts. The refined Gram is numerically
  // rank-deficient for analytic kernels, so the fit goes through the SVD
  // rather than the Gram system.
  const int m = static_cast<int>(eval_pts.size());
  const int k = static_cast<int>(refined.size());
  Matrix a(m, k);
  std::vector<cx> b(m);
  for (int e = 0; e < m; ++e) {
    for (int j = 0; j < k; ++j) a.at(e, j) = kernel_value(spec, refined[j], eval_pts[e]);
    b[e] = u.eval_unchecked(eval_pts[e].value());
  }
  const std::vector<cx> coef = least_squares(a, b);
  const KernelSection projected(h.space, h.symbol, refined, coef);

  double num = 0.0, den = 0.0;
  for (const auto& p : eval_pts.points) {
    const cx uz = u.eval_unchecked(p.value());
    num = std::max(num, std::abs(projected.eval(p) - uz));
    den = std::max(den, std::abs(uz));
  }
  InvarianceEvidence out;
  out.relative_residual = den > 0.0 ? num / den : num;
  out.condition_number = condition_number(gram(spec, refined));
  return out;
}

}  // namespace subhardy
