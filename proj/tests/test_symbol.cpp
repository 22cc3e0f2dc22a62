#include <doctest.h>

#include <cmath>

#include "subhardy/symbol.hpp"
#include "test_util.hpp"

using namespace subhardy;

namespace {
DiskPoint dp(double re, double im = 0.0) { return DiskPoint(cx(re, im)); }
}  // namespace

TEST_CASE("disk point rejects the boundary and outside") {
  CHECK_NOTHROW(DiskPoint(cx(0.999, 0.0)));
  CHECK_THROWS_AS(DiskPoint(cx(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(DiskPoint(cx(0.8, 0.7)), std::domain_error);
}

TEST_CASE("eval examples") {
  CHECK(AnalyticSymbol::identity()(dp(0.0)) == cx(0.0, 0.0));
  CHECK(std::abs(AnalyticSymbol::blaschke(cx(0.5, 0.0))(dp(0.5))) == 0.0);
  const auto f = AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)});
  CHECK(f(dp(0.0)) == cx(2.0, 0.0));
}

TEST_CASE("square examples") {
  const auto z2 = AnalyticSymbol::identity().square();
  CHECK(z2(dp(0.3)).real() == doctest::Approx(0.09).epsilon(1e-15));
  CHECK(z2(dp(0.3)).imag() == 0.0);

  const auto c = AnalyticSymbol::constant(cx(1.2, 0.0)).square();
  CHECK(c.constant_value().real() == doctest::Approx(1.44).epsilon(1e-15));

  const auto p = AnalyticSymbol::polynomial({cx(1, 0), cx(1, 0)}).square();
  const auto coeffs = p.truncated_coeffs(2).first;
  CHECK(coeffs[0] == cx(1, 0));
  CHECK(coeffs[1] == cx(2, 0));
  CHECK(coeffs[2] == cx(1, 0));
}

TEST_CASE("square then eval equals eval then square") {
  detail::SplitMix64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const auto f = testutil::random_symbol_of_kind(rng, k);
    const auto f2 = f.square();
    for (int j = 0; j < 5; ++j) {
      const DiskPoint p(testutil::random_unit_scaled(rng, 0.9));
      const cx a = f2(p);
      const cx b = f(p) * f(p);
      CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("reciprocal examples") {
  CHECK(AnalyticSymbol::constant(cx(2, 0)).reciprocal().constant_value() == cx(0.5, 0.0));

  const auto r = AnalyticSymbol::polynomial({cx(2, 0), cx(1, 0)}).reciprocal();
  const auto [coeffs, tail] = r.truncated_coeffs(8);
  for (int k = 0; k <= 8; ++k) {
    const double expected = std::pow(-1.0, k) / std::pow(2.0, k + 1);
    CHECK(coeffs[k].real() == doctest::Approx(expected).epsilon(1e-13));
    CHECK(coeffs[k].imag() == 0.0);
  }

  CHECK_THROWS_AS(AnalyticSymbol::blaschke(cx(0.5, 0)).reciprocal(), NotInvertibleError);
}

TEST_CASE("reciprocal roundtrip on 100 seeded points") {
  detail::SplitMix64 rng(21);
  const auto candidates = {
      AnalyticSymbol::constant(cx(2, 0)),
      AnalyticSymbol::polynomial({cx(2, 0), cx(1, 0)}),
      AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)}),
      AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)}),
  };
  for (const auto& f : candidates) {
    const auto g = f * f.reciprocal();
    for (int k = 0; k < 100; ++k) {
      const DiskPoint p(testutil::random_unit_scaled(rng, 0.9));
      CHECK(std::abs(g(p) - cx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("truncated coefficients and tail bounds") {
  SUBCASE("polynomial rz") {
    const auto f = AnalyticSymbol::polynomial({cx(0, 0), cx(0.8, 0)});
    const auto [c, tail] = f.truncated_coeffs(3);
    CHECK(c == std::vector<cx>{cx(0, 0), cx(0.8, 0), cx(0, 0), cx(0, 0)});
    CHECK(tail == 0.0);
  }
  SUBCASE("geometric series 4/(2+z)") {
    const auto f = AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)});
    const auto [c, tail] = f.truncated_coeffs(2);
    CHECK(c[0] == cx(2, 0));
    CHECK(c[1].real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(c[2].real() == doctest::Approx(0.5).epsilon(1e-14));
    // Independent geometric-series oracle: sum_{k>=3} 2 * 2^-k.
    double oracle = 0.0;
    for (int k = 3; k < 200; ++k) oracle += 2.0 * std::pow(2.0, -k);
    CHECK(tail == doctest::Approx(oracle).epsilon(1e-9));
  }
  SUBCASE("dropped polynomial coefficients") {
    const auto f = AnalyticSymbol::polynomial({cx(1, 0), cx(1, 0)});
    const auto [c, tail] = f.truncated_coeffs(0);
    CHECK(c.size() == 1);
    CHECK(c[0] == cx(1, 0));
    CHECK(tail == 1.0);
  }
}

TEST_CASE("tail bound dominates the evaluation error at rho 0.9") {
  detail::SplitMix64 rng(31);
  for (int k = 0; k < 60; ++k) {
    const auto f = testutil::random_symbol_of_kind(rng, k);
    const int degree = 4 + static_cast<int>(rng.next() % 8);
    const auto [coeffs, tail] = f.truncated_coeffs(degree);
    for (int j = 0; j < 4; ++j) {
      const DiskPoint p(testutil::random_unit_scaled(rng, 0.9));
      cx partial(0, 0);
      cx zk(1, 0);
      for (const auto& a : coeffs) {
        partial += a * zk;
        zk *= p.value();
      }
      const double err = std::abs(f(p) - partial);
      CHECK(err <= tail * std::pow(0.9, degree + 1) + 1e-12);
    }
  }
}

TEST_CASE("backward shift") {
  // (4/(2+z) - 2)/z = -2/(2+z)
  const auto f = AnalyticSymbol::rational({cx(4, 0)}, {cx(2, 0), cx(1, 0)});
  const auto s = f.backward_shift();
  CHECK(s(dp(0.0)) == cx(-1.0, 0.0));
  CHECK(std::abs(s(dp(0.5)) - cx(-0.8, 0.0)) < 1e-15);

  const auto lin = AnalyticSymbol::polynomial({cx(1.2, 0), cx(0.1, 0)});
  CHECK(lin.backward_shift().is_constant());
  CHECK(lin.backward_shift().constant_value() == cx(0.1, 0.0));

  CHECK(AnalyticSymbol::constant(cx(5, 1)).backward_shift().constant_value() == cx(0, 0));
}

TEST_CASE("rational constructor rejects disk zeros of the denominator") {
  CHECK_THROWS_AS(AnalyticSymbol::rational({cx(1, 0)}, {cx(0.5, 0), cx(1, 0)}), std::domain_error);
  // Boundary zero rejected conservatively.
  CHECK_THROWS_AS(AnalyticSymbol::rational({cx(1, 0)}, {cx(1, 0), cx(1, 0)}), std::domain_error);
  CHECK_NOTHROW(AnalyticSymbol::rational({cx(1, 0)}, {cx(1.05, 0), cx(1, 0)}));
}

TEST_CASE("blaschke parameter must be inside the disk") {
  CHECK_THROWS_AS(AnalyticSymbol::blaschke(cx(1.5, 0)), std::domain_error);
  CHECK_THROWS_AS(AnalyticSymbol::blaschke(cx(1.0, 0)), std::domain_error);
}

TEST_CASE("flattened equality identifies equal functions") {
  const auto a = AnalyticSymbol::polynomial({cx(1, 0), cx(2, 0)});
  const auto b = AnalyticSymbol::constant(cx(1, 0)) +
                 AnalyticSymbol::scale(cx(2, 0), AnalyticSymbol::identity());
  CHECK(a(dp(0.3)) == b(dp(0.3)));
  // Different flatten paths need not be bitwise equal, but the same path is.
  CHECK(a == a);
  CHECK(b == b);
}
