#include "subhardy/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace subhardy {

namespace {

struct FamilyName {
  KernelFamily family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {KernelFamily::szego, "szego"},
    {KernelFamily::bergman, "bergman"},
    {KernelFamily::schur_defect, "schur_defect"},
    {KernelFamily::schur_defect_squared, "schur_defect_squared"},
    {KernelFamily::sb_defect, "sb_defect"},
    {KernelFamily::sb1_lower, "sb1_lower"},
    {KernelFamily::sb1_upper, "sb1_upper"},
    {KernelFamily::k_space, "k_space"},
    {KernelFamily::l_space, "l_space"},
    {KernelFamily::h_space, "h_space"},
    {KernelFamily::hb_space, "hb_space"},
    {KernelFamily::sub_bergman, "sub_bergman"},
    {KernelFamily::hb_times_oneminus, "hb_times_oneminus"},
};

// Pointwise kernel from precomputed symbol values w = f(lambda), v = f(z).
cx value_from(KernelFamily fam, cx lambda, cx z, cx w, cx v) {
  const cx one(1.0, 0.0);
  const cx d = one - std::conj(lambda) * z;
  const cx wv = std::conj(w) * v;
  switch (fam) {
    case KernelFamily::szego:
      return one / d;
    case KernelFamily::bergman:
      return one / (d * d);
    case KernelFamily::schur_defect:
      return (one - wv) / d;
    case KernelFamily::schur_defect_squared: {
      const cx s = (one - wv) / d;
      return s * s;
    }
    case KernelFamily::sb_defect:
      return (one - 2.0 * wv + std::conj(w * w) * (v * v)) / (d * d);
    case KernelFamily::sb1_lower:
      return (2.0 * wv - std::conj(w * w) * (v * v)) / (d * d);
    case KernelFamily::sb1_upper:
      return one / (d * d) - (2.0 * wv - std::conj(w * w) * (v * v)) / (d * d);
    case KernelFamily::k_space:
      return (wv - one) / d;
    case KernelFamily::l_space:
      return (2.0 - wv) / d;
    case KernelFamily::h_space:
      return (one - wv) / d;
    case KernelFamily::hb_space: {
      const cx t = one - wv;
      return (t * t) / (d * d);
    }
    case KernelFamily::sub_bergman:
      return (one - wv) / (d * d);
    case KernelFamily::hb_times_oneminus: {
      const cx t = one - wv;
      return (t * t) / d;
    }
  }
  throw std::logic_error("unreachable kernel family");
}

}  // namespace

std::string family_name(KernelFamily f) {
  for (const auto& e : kNames)
    if (e.family == f) return e.name;
  throw std::logic_error("unknown kernel family");
}

KernelFamily family_from_name(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.family;
  throw std::invalid_argument("unknown kernel family: " + name);
}

bool family_needs_symbol(KernelFamily f) {
  return f != KernelFamily::szego && f != KernelFamily::bergman;
}

KernelSpec::KernelSpec(KernelFamily fam, std::optional<AnalyticSymbol> sym)
    : family(fam), symbol(std::move(sym)) {
  if (family_needs_symbol(family) && !symbol.has_value()) {
    throw std::invalid_argument("kernel family " + family_name(family) + " requires a symbol");
  }
  if (!family_needs_symbol(family) && symbol.has_value()) {
    throw std::invalid_argument("kernel family " + family_name(family) + " takes no symbol");
  }
}

std::string range_flag_name(RangeFlagStatus s) {
  switch (s) {
    case RangeFlagStatus::not_applicable:
      return "not_applicable";
    case RangeFlagStatus::ok:
      return "ok";
    case RangeFlagStatus::margin:
      return "margin";
    case RangeFlagStatus::fail:
      return "fail";
  }
  return "?";
}

RangeFlagStatus check_range_flag(const KernelSpec& spec, const PointSet& pts, double margin) {
  const bool lower = spec.family == KernelFamily::k_space || spec.family == KernelFamily::l_space;
  const bool upper = spec.family == KernelFamily::l_space;
  if (!lower && !upper) return RangeFlagStatus::not_applicable;

  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (const auto& p : pts.points) {
    const double m = std::abs((*spec.symbol)(p));
    min_mod = std::min(min_mod, m);
    max_mod = std::max(max_mod, m);
  }

  RangeFlagStatus status = RangeFlagStatus::ok;
  if (lower) {
    if (min_mod <= 1.0 - margin) return RangeFlagStatus::fail;
    if (min_mod <= 1.0 + margin) status = RangeFlagStatus::margin;
  }
  if (upper) {
    const double sqrt2 = std::sqrt(2.0);
    if (max_mod >= sqrt2 + margin) return RangeFlagStatus::fail;
    if (max_mod >= sqrt2 - margin) status = RangeFlagStatus::margin;
  }
  return status;
}

cx kernel_value(const KernelSpec& spec, const DiskPoint& lambda, const DiskPoint& z) {
  cx w(0.0, 0.0), v(0.0, 0.0);
  if (spec.symbol) {
    w = (*spec.symbol)(lambda);
    v = (*spec.symbol)(z);
  }
  return value_from(spec.family, lambda.value(), z.value(), w, v);
}

HermitianMatrix gram(const KernelSpec& spec, const PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  if (n == 0) throw std::domain_error("gram: point set must be nonempty");

  std::vector<cx> values(n);
  if (spec.symbol) {
    for (int i = 0; i < n; ++i) values[i] = (*spec.symbol)(pts[i]);
  }

  Matrix raw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      raw.at(i, j) = value_from(spec.family, pts[i].value(), pts[j].value(), values[i], values[j]);
  return HermitianMatrix::symmetrized(raw);
}

double kernel_sum_residual(const KernelSpec& a, const KernelSpec& b, const KernelSpec& target,
                           const PointSet& pts) {
  double residual = 0.0;
  for (const auto& p : pts.points) {
    for (const auto& q : pts.points) {
      const cx s = kernel_value(a, p, q) + kernel_value(b, p, q) - kernel_value(target, p, q);
      residual = std::max(residual, std::abs(s));
    }
  }
  return residual;
}

}  // namespace subhardy
