#include "subhardy/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace subhardy {

DiskPoint::DiskPoint(cx v) : v_(v) {
  if (!(std::abs(v) < 1.0)) {
    throw std::domain_error("DiskPoint: |z| must be < 1");
  }
}

namespace poly {

std::vector<cx> trim(std::vector<cx> p) {
  while (p.size() > 1 && p.back() == cx(0.0, 0.0)) p.pop_back();
  if (p.empty()) p.push_back(cx(0.0, 0.0));
  return p;
}

std::vector<cx> add(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(std::max(a.size(), b.size()), cx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

std::vector<cx> mul(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(a.size() + b.size() - 1, cx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

std::vector<cx> scaled(cx s, const std::vector<cx>& a) {
  std::vector<cx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return trim(std::move(out));
}

cx eval(const std::vector<cx>& p, cx z) {
  cx acc(0.0, 0.0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

bool zero_free_closed_disk(const std::vector<cx>& p) {
  const std::vector<cx> q = trim(p);
  if (q.size() == 1) return q[0] != cx(0.0, 0.0);

  constexpr int kSamples = 4096;
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  std::vector<double> args(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / kSamples;
    const cx v = eval(q, cx(std::cos(th), std::sin(th)));
    min_abs = std::min(min_abs, std::abs(v));
    max_abs = std::max(max_abs, std::abs(v));
    args[k] = std::arg(v);
  }
  if (!(min_abs > 1e-9 * max_abs)) return false;  // conservative rejection

  double winding = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    double d = args[(k + 1) % kSamples] - args[k];
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    winding += d;
  }
  const long turns = std::lround(winding / (2.0 * std::numbers::pi));
  return turns == 0;
}

std::vector<cx> roots(const std::vector<cx>& p_in) {
  std::vector<cx> p = trim(p_in);
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) throw std::runtime_error("poly::roots: degree must be >= 1");
  // Monic normalization.
  for (auto& c : p) c /= p.back();

  std::vector<cx> x(deg);
  for (int k = 0; k < deg; ++k) x[k] = std::pow(cx(0.4, 0.9), k + 1);

  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < deg; ++j) {
      cx denom(1.0, 0.0);
      for (int k = 0; k < deg; ++k)
        if (k != j) denom *= (x[j] - x[k]);
      const cx step = eval(p, x[j]) / denom;
      x[j] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(x[j])));
    }
    if (max_step < 1e-14) break;
  }

  double coeff_scale = 0.0;
  for (const auto& c : p) coeff_scale = std::max(coeff_scale, std::abs(c));
  for (const auto& r : x) {
    const double residual = std::abs(eval(p, r));
    const double local = coeff_scale * std::pow(1.0 + std::abs(r), deg);
    if (!(residual <= 1e-6 * local)) {
      throw std::runtime_error("poly::roots: Durand-Kerner did not converge");
    }
  }
  return x;
}

}  // namespace poly

struct AnalyticSymbol::Node {
  Kind kind;
  std::vector<cx> coeffs;  // polynomial coefficients / rational numerator
  std::vector<cx> den;     // rational denominator
  cx value{0.0, 0.0};      // constant / blaschke parameter / scale factor
  NodePtr left, right;
};

AnalyticSymbol AnalyticSymbol::polynomial(std::vector<cx> coeffs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::polynomial;
  n->coeffs = poly::trim(std::move(coeffs));
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol AnalyticSymbol::constant(cx c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = c;
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol AnalyticSymbol::blaschke(cx a) {
  if (!(std::abs(a) < 1.0)) {
    throw std::domain_error("blaschke factor requires |a| < 1");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::blaschke_factor;
  n->value = a;
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol AnalyticSymbol::rational(std::vector<cx> numer, std::vector<cx> denom) {
  numer = poly::trim(std::move(numer));
  denom = poly::trim(std::move(denom));
  if (!poly::zero_free_closed_disk(denom)) {
    throw std::domain_error("rational symbol: denominator has a zero on the closed disk");
  }
  if (denom.size() == 1) {
    // Constant denominator: fold into the numerator.
    std::vector<cx> folded = poly::scaled(cx(1.0, 0.0) / denom[0], numer);
    if (folded.size() == 1) return constant(folded[0]);
    return polynomial(std::move(folded));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::rational;
  n->coeffs = std::move(numer);
  n->den = std::move(denom);
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol AnalyticSymbol::identity() {
  return polynomial({cx(0.0, 0.0), cx(1.0, 0.0)});
}

AnalyticSymbol AnalyticSymbol::scale(cx s, const AnalyticSymbol& f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::scale;
  n->value = s;
  n->left = f.node_;
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol operator+(const AnalyticSymbol& a, const AnalyticSymbol& b) {
  auto n = std::make_shared<AnalyticSymbol::Node>();
  n->kind = AnalyticSymbol::Kind::sum;
  n->left = a.node_;
  n->right = b.node_;
  return AnalyticSymbol(std::move(n));
}

AnalyticSymbol operator*(const AnalyticSymbol& a, const AnalyticSymbol& b) {
  auto n = std::make_shared<AnalyticSymbol::Node>();
  n->kind = AnalyticSymbol::Kind::product;
  n->left = a.node_;
  n->right = b.node_;
  return AnalyticSymbol(std::move(n));
}

cx AnalyticSymbol::eval_unchecked(cx z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::polynomial:
      return poly::eval(n.coeffs, z);
    case Kind::constant:
      return n.value;
    case Kind::blaschke_factor:
      return (z - n.value) / (cx(1.0, 0.0) - std::conj(n.value) * z);
    case Kind::rational:
      return poly::eval(n.coeffs, z) / poly::eval(n.den, z);
    case Kind::sum:
      return AnalyticSymbol(n.left).eval_unchecked(z) + AnalyticSymbol(n.right).eval_unchecked(z);
    case Kind::product:
      return AnalyticSymbol(n.left).eval_unchecked(z) * AnalyticSymbol(n.right).eval_unchecked(z);
    case Kind::scale:
      return n.value * AnalyticSymbol(n.left).eval_unchecked(z);
  }
  throw std::logic_error("unreachable symbol kind");
}

AnalyticSymbol AnalyticSymbol::square() const {
  const Node& n = *node_;
  if (n.kind == Kind::polynomial) return polynomial(poly::mul(n.coeffs, n.coeffs));
  if (n.kind == Kind::constant) return constant(n.value * n.value);
  return (*this) * (*this);
}

RationalForm AnalyticSymbol::flatten() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::polynomial:
      return {n.coeffs, {cx(1.0, 0.0)}};
    case Kind::constant:
      return {{n.value}, {cx(1.0, 0.0)}};
    case Kind::blaschke_factor:
      return {{-n.value, cx(1.0, 0.0)}, {cx(1.0, 0.0), -std::conj(n.value)}};
    case Kind::rational:
      return {n.coeffs, n.den};
    case Kind::sum: {
      const RationalForm a = AnalyticSymbol(n.left).flatten();
      const RationalForm b = AnalyticSymbol(n.right).flatten();
      return {poly::add(poly::mul(a.num, b.den), poly::mul(b.num, a.den)),
              poly::mul(a.den, b.den)};
    }
    case Kind::product: {
      const RationalForm a = AnalyticSymbol(n.left).flatten();
      const RationalForm b = AnalyticSymbol(n.right).flatten();
      return {poly::mul(a.num, b.num), poly::mul(a.den, b.den)};
    }
    case Kind::scale: {
      RationalForm a = AnalyticSymbol(n.left).flatten();
      a.num = poly::scaled(n.value, a.num);
      return a;
    }
  }
  throw std::logic_error("unreachable symbol kind");
}

AnalyticSymbol AnalyticSymbol::reciprocal() const {
  RationalForm f = flatten();
  if (!poly::zero_free_closed_disk(f.num)) {
    throw NotInvertibleError("reciprocal: symbol has a zero on the closed disk");
  }
  return rational(std::move(f.den), std::move(f.num));
}

AnalyticSymbol AnalyticSymbol::backward_shift() const {
  RationalForm f = flatten();
  const cx f0 = poly::eval(f.num, cx(0.0, 0.0)) / poly::eval(f.den, cx(0.0, 0.0));
  // (p - f0 q) vanishes at 0; dividing by z shifts coefficients down.
  std::vector<cx> r = poly::add(f.num, poly::scaled(-f0, f.den));
  if (r.size() == 1) return constant(cx(0.0, 0.0));
  r.erase(r.begin());
  return rational(std::move(r), std::move(f.den));
}

std::pair<std::vector<cx>, double> AnalyticSymbol::truncated_coeffs(int degree) const {
  if (degree < 0) throw std::domain_error("truncated_coeffs: degree must be >= 0");
  const RationalForm f = flatten();
  const int den_deg = static_cast<int>(f.den.size()) - 1;

  auto series = [&](int upto) {
    std::vector<cx> c(upto + 1, cx(0.0, 0.0));
    for (int k = 0; k <= upto; ++k) {
      cx acc = (k < static_cast<int>(f.num.size())) ? f.num[k] : cx(0.0, 0.0);
      for (int j = 1; j <= std::min<int>(k, den_deg); ++j) acc -= f.den[j] * c[k - j];
      c[k] = acc / f.den[0];
    }
    return c;
  };

  if (den_deg == 0) {
    // Polynomial: the dropped tail is an exact coefficient sum.
    std::vector<cx> c = series(degree);
    double tail = 0.0;
    for (int k = degree + 1; k < static_cast<int>(f.num.size()); ++k)
      tail += std::abs(f.num[k] / f.den[0]);
    return {std::move(c), tail};
  }

  // Geometric tail from the nearest pole radius R: |a_k| <= C R^-k with C
  // taken as the maximum of |a_k| R^k over a long coefficient window.
  const std::vector<cx> pole = poly::roots(f.den);
  double radius = std::numeric_limits<double>::infinity();
  for (const auto& r : pole) radius = std::min(radius, std::abs(r));
  if (!(radius > 1.0)) {
    throw std::runtime_error("truncated_coeffs: pole radius estimate not outside the disk");
  }

  const int window = degree + 128;
  std::vector<cx> c = series(window);
  double growth = 0.0;
  double rk = 1.0;
  for (int k = 0; k <= window; ++k) {
    growth = std::max(growth, std::abs(c[k]) * rk);
    rk *= radius;
  }
  const double tail = growth * std::pow(radius, -degree) / (radius - 1.0);
  c.resize(degree + 1);
  return {std::move(c), tail};
}

bool AnalyticSymbol::is_constant() const {
  const RationalForm f = flatten();
  return f.num.size() == 1 && f.den.size() == 1;
}

cx AnalyticSymbol::constant_value() const {
  const RationalForm f = flatten();
  if (f.num.size() != 1 || f.den.size() != 1) {
    throw std::logic_error("constant_value on a nonconstant symbol");
  }
  return f.num[0] / f.den[0];
}

AnalyticSymbol::Kind AnalyticSymbol::kind() const { return node_->kind; }
const std::vector<cx>& AnalyticSymbol::poly_coeffs() const { return node_->coeffs; }
cx AnalyticSymbol::scalar() const { return node_->value; }
const std::vector<cx>& AnalyticSymbol::rational_num() const { return node_->coeffs; }
const std::vector<cx>& AnalyticSymbol::rational_den() const { return node_->den; }
const AnalyticSymbol AnalyticSymbol::left() const { return AnalyticSymbol(node_->left); }
const AnalyticSymbol AnalyticSymbol::right() const { return AnalyticSymbol(node_->right); }

bool operator==(const AnalyticSymbol& a, const AnalyticSymbol& b) {
  const RationalForm fa = a.flatten();
  const RationalForm fb = b.flatten();
  return fa.num == fb.num && fa.den == fb.den;
}

}  // namespace subhardy
