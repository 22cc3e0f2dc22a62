#include <doctest.h>

#include <cmath>

#include "subhardy/classify.hpp"
#include "subhardy/spaces.hpp"
#include "test_util.hpp"

using namespace subhardy;

namespace {

DiskPoint dp(double re, double im = 0.0) { return DiskPoint(cx(re, im)); }

KernelSection random_section(SectionSpace space, const AnalyticSymbol& sym, const PointSet& nodes,
                             std::uint64_t seed) {
  detail::SplitMix64 rng(seed);
  std::vector<cx> coeffs(nodes.size());
  for (auto& c : coeffs) c = cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1);
  return KernelSection(space, sym, nodes, coeffs);
}

}  // namespace

TEST_CASE("inner product examples") {
  SUBCASE("K_0 in K(phi) for constant phi = 2") {
    const auto phi = AnalyticSymbol::constant(cx(2, 0));
    const auto h = KernelSection::kernel_at(SectionSpace::k_space, phi, dp(0));
    CHECK(inner_product(h, h) == cx(3, 0));
  }
  SUBCASE("K_0 in L(phi) for phi = 1.2") {
    const auto phi = AnalyticSymbol::constant(cx(1.2, 0));
    const auto h = KernelSection::kernel_at(SectionSpace::l_space, phi, dp(0));
    CHECK(inner_product(h, h).real() == doctest::Approx(0.56).epsilon(1e-14));
  }
  SUBCASE("norms of random sections are nonnegative") {
    const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
    const PointSet nodes = random_points(6, 0.7, 41);
    for (int s = 0; s < 100; ++s) {
      const KernelSection h = random_section(SectionSpace::k_space, phi, nodes, 600 + s);
      const cx n = inner_product(h, h);
      CHECK(n.real() >= -1e-10);
      CHECK(std::abs(n.imag()) <= 1e-12 * std::max(1.0, n.real()));
    }
  }
  SUBCASE("space mismatch is rejected") {
    const auto phi = AnalyticSymbol::constant(cx(1.2, 0));
    const auto a = KernelSection::kernel_at(SectionSpace::k_space, phi, dp(0));
    const auto b = KernelSection::kernel_at(SectionSpace::l_space, phi, dp(0));
    CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
  }
}

TEST_CASE("backward shift of symbols") {
  SUBCASE("linear symbol") {
    const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
    const auto s = sstar(phi);
    CHECK(s.is_constant());
    CHECK(s.constant_value() == cx(0.1, 0));
  }
  SUBCASE("constants shift to zero") {
    CHECK(sstar(AnalyticSymbol::constant(cx(3, 1))).constant_value() == cx(0, 0));
  }
  SUBCASE("reciprocal identity on 50 points") {
    const auto phi = AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)});
    CHECK(sstar_reciprocal_identity_residual(phi, random_points(50, 0.9, 9)) < 1e-12);
  }
}

TEST_CASE("adjoint formulas") {
  const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
  SUBCASE("Y* on K_0 matches the hand-expanded polynomial") {
    const auto h = KernelSection::kernel_at(SectionSpace::k_space, phi, dp(0));
    const AdjointImage img = apply_adjoint(AdjointKind::Ystar, h);
    CHECK(img.coupling == cx(0.1, 0));
    // (Y*h)(z) = 0.12 + 0.45 z + 0.12 z^2
    for (double z : {0.0, 0.25, 0.5, -0.3}) {
      const double expected = 0.12 + 0.45 * z + 0.12 * z * z;
      CHECK(img.function.eval_unchecked(cx(z, 0)).real() ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
  SUBCASE("constant phi kills the coupling term") {
    const auto c = AnalyticSymbol::constant(cx(2, 0));
    const auto h = KernelSection::kernel_at(SectionSpace::k_space, c, dp(0.2));
    const AdjointImage img = apply_adjoint(AdjointKind::Ystar, h);
    CHECK(img.coupling == cx(0, 0));
    const cx z(0.4, 0.1);
    CHECK(std::abs(img.function.eval_unchecked(z) - z * h.eval(DiskPoint(z))) < 1e-14);
  }
  SUBCASE("X* with constant symbol reduces to multiplication by z") {
    const auto b = AnalyticSymbol::constant(cx(0.5, 0));  // 1/phi for phi = 2
    const auto h = KernelSection::kernel_at(SectionSpace::h_space, b, dp(0));
    const AdjointImage img = apply_adjoint(AdjointKind::Xstar, h);
    CHECK(img.coupling == cx(0, 0));
    const cx z(0.3, -0.2);
    CHECK(std::abs(img.function.eval_unchecked(z) - z * h.eval(DiskPoint(z))) < 1e-14);
  }
  SUBCASE("wrong space is rejected") {
    const auto h = KernelSection::kernel_at(SectionSpace::k_space, phi, dp(0));
    CHECK_THROWS_AS(apply_adjoint(AdjointKind::Zstar, h), std::invalid_argument);
  }
}

TEST_CASE("multiplication isometry at kernel level") {
  SUBCASE("constant phi = 2 at the origin") {
    const auto phi = AnalyticSymbol::constant(cx(2, 0));
    PointSet one;
    one.points = {dp(0)};
    CHECK(v_isometry_residual(phi, one) < 1e-15);
  }
  SUBCASE("canonical symbols on grids") {
    const PointSet pts = random_points(20, 0.9, 5);
    for (const auto& phi :
         {AnalyticSymbol::constant(cx(2, 0)), AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)}),
          AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)})}) {
      CHECK(v_isometry_residual(phi, pts) < 1e-12);
    }
  }
  SUBCASE("flag failure raises") {
    const PointSet pts = random_points(10, 0.9, 6);
    CHECK_THROWS_AS(v_isometry_residual(AnalyticSymbol::identity(), pts), FlagError);
  }
}

TEST_CASE("section-level isometry via coefficient conversion") {
  const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
  const auto b = phi.reciprocal();
  const PointSet nodes = random_points(8, 0.7, 31);
  const KernelSection h = random_section(SectionSpace::k_space, phi, nodes, 77);

  std::vector<cx> converted(h.coefficients.size());
  for (std::size_t i = 0; i < converted.size(); ++i) {
    converted[i] = h.coefficients[i] * std::conj(phi(nodes[i]));
  }
  const KernelSection vh(SectionSpace::h_space, b, nodes, converted);
  const cx a = inner_product(h, h);
  const cx c = inner_product(vh, vh);
  CHECK(std::abs(a - c) <= 1e-10 * std::max(1.0, std::abs(a)));
}

TEST_CASE("rank one perturbation of the restricted shift") {
  const PointSet nodes = random_points(12, 0.7, 11);
  const PointSet evals = random_points(30, 0.7, 12);
  SUBCASE("constant phi is degenerate with rank zero") {
    const RankOneResult r =
        rank_one_perturbation_check(AnalyticSymbol::constant(cx(2, 0)), nodes, evals);
    CHECK(r.degenerate);
    CHECK(r.rank == 0);
  }
  SUBCASE("canonical nonconstant symbols have rank exactly one") {
    for (const auto& phi : {AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)}),
                            AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)})}) {
      const RankOneResult r = rank_one_perturbation_check(phi, nodes, evals);
      CHECK(r.rank == 1);
      CHECK(r.sigma_ratio < 1e-8);
      CHECK(r.proportionality_defect < 1e-9);
      CHECK(r.formula_match < 1e-9);
    }
  }
  SUBCASE("rank never exceeds one") {
    detail::SplitMix64 rng(55);
    for (int k = 0; k < 8; ++k) {
      // Random inverse-Schur symbols c + dz with |c| - |d| > 1.05.
      const double cmod = 1.3 + rng.uniform01();
      const double dmod = (cmod - 1.06) * rng.uniform01();
      const auto phi = AnalyticSymbol::polynomial(
          {testutil::random_unit_scaled(rng, 1.0) * (cmod / 1.0), cx(dmod, 0)});
      const ModulusLabels m = classify_modulus(phi, nodes);
      if (m.inverse_schur != TriState::yes) continue;
      const RankOneResult r = rank_one_perturbation_check(phi, nodes, evals);
      CHECK(r.rank <= 1);
    }
  }
}

TEST_CASE("pairing checks") {
  const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
  const PointSet evals = random_points(30, 0.8, 5);
  SUBCASE("zero sections give zero residuals") {
    PointSet n1;
    n1.points = {dp(0)};
    const KernelSection h1(SectionSpace::k_space, phi, n1, {cx(0, 0)});
    PointSet n2;
    n2.points = {dp(0.3)};
    const KernelSection h2(SectionSpace::l_space, phi, n2, {cx(0, 0)});
    const PairingResult r = pairing_checks(phi, h1, h2, evals);
    CHECK(r.diagram_residual == 0.0);
    CHECK(r.rank_one_residual == 0.0);
  }
  SUBCASE("canonical sections") {
    const auto h1 = KernelSection::kernel_at(SectionSpace::k_space, phi, dp(0));
    const auto h2 = KernelSection::kernel_at(SectionSpace::l_space, phi, dp(0.3));
    const PairingResult r = pairing_checks(phi, h1, h2, evals);
    CHECK(r.diagram_residual < 1e-12);
    CHECK(r.rank_one_residual < 1e-10);
  }
  SUBCASE("flag failure raises") {
    const auto big = AnalyticSymbol::constant(cx(2, 0));
    const auto h1 = KernelSection::kernel_at(SectionSpace::k_space, big, dp(0));
    const auto h2 = KernelSection::kernel_at(SectionSpace::l_space, big, dp(0.3));
    CHECK_THROWS_AS(pairing_checks(big, h1, h2, evals), FlagError);
  }
}

TEST_CASE("hardy decomposition check") {
  SUBCASE("constant phi = 1.2 at order 32 is exact scalar arithmetic") {
    const auto phi = AnalyticSymbol::constant(cx(1.2, 0));
    const DecompositionResult r = hardy_decomposition_check(phi, random_points(20, 0.9, 77), 32);
    CHECK(r.kernel_residual < 1e-12);
    CHECK(r.eq4_residual < 1e-12);
    CHECK(r.eq5_residual < 1e-12);
  }
  SUBCASE("nonconstant phi stays within the evidence tolerance") {
    const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
    const DecompositionResult r = hardy_decomposition_check(phi, random_points(20, 0.9, 78), 32);
    CHECK(r.kernel_residual < 1e-12);
    CHECK(r.eq4_residual < 1e-8);
    CHECK(r.eq5_residual < 1e-8);
  }
}

TEST_CASE("reproducing property against multi-node sections") {
  const auto phi = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
  const PointSet nodes = random_points(8, 0.7, 31);
  const PointSet other = random_points(5, 0.7, 32);
  const KernelSection h = random_section(SectionSpace::k_space, phi, nodes, 57);
  const KernelSection g = random_section(SectionSpace::k_space, phi, other, 58);
  // <h, g> = sum_j conj(d_j) h(nu_j) by the reproducing property.
  cx expected(0, 0);
  for (std::size_t j = 0; j < other.size(); ++j) {
    expected += std::conj(g.coefficients[j]) * h.eval(other[j]);
  }
  const cx got = inner_product(h, g);
  CHECK(std::abs(got - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
  // Conditioning is reported alongside the check.
  CHECK(condition_number(gram(h.spec(), nodes)) > 1.0);
}

TEST_CASE("nonextremeness evidence by sampled sup norm") {
  const PointSet pts = polar_grid(4, 16, 0.9);
  // Reciprocals of the canonical symbols stay strictly inside the unit ball.
  for (const auto& phi : {AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)}),
                          AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)})}) {
    const NonextremeEvidence ne = nonextreme_evidence(phi.reciprocal(), pts);
    CHECK(ne.nonextreme);
    CHECK(ne.sup_modulus < 1.0);
  }
  // A Blaschke factor has sampled sup below one but a unimodular constant
  // does not pass the sufficient condition.
  CHECK(nonextreme_evidence(AnalyticSymbol::blaschke(cx(0.5, 0)), pts).nonextreme);
  CHECK_FALSE(nonextreme_evidence(AnalyticSymbol::constant(cx(0, 1)), pts).nonextreme);
  CHECK(nonextreme_evidence(AnalyticSymbol::constant(cx(0.3, 0)), pts).nonextreme);
}

TEST_CASE("backward shift invariance evidence") {
  const PointSet nodes = polar_grid(2, 6, 0.7);
  const PointSet evals = polar_grid(3, 10, 0.6);
  for (const auto& phi : {AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)}),
                          AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)})}) {
    const KernelSection h = random_section(SectionSpace::k_space, phi, nodes, 91);
    const PointSet refined = random_points(3 * static_cast<int>(nodes.size()), 0.7, 21);
    const InvarianceEvidence ev = shift_invariance_evidence(h, refined, evals);
    CHECK(ev.relative_residual < 1e-6);
    CHECK(ev.condition_number > 1.0);
  }
}
