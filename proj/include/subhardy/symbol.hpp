#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "subhardy/errors.hpp"

namespace subhardy {

using cx = std::complex<double>;

// A point strictly inside the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(cx v);
  cx value() const { return v_; }

 private:
  cx v_;
};

// Flattened p/q representation of a symbol. The denominator is trimmed,
// nonempty, and zero-free on the closed unit disk by construction.
struct RationalForm {
  std::vector<cx> num;
  std::vector<cx> den;
};

// A bounded analytic function on the disk built from polynomials, Blaschke
// factors, constants, disk-zero-free rationals, and their sums, products and
// scalings. Every member of the class is an exact rational function, so
// evaluation, squaring, reciprocals and Taylor coefficients never involve
// series truncation of the representation itself.
//
// Symbols are immutable after construction; all operations are pure.
class AnalyticSymbol {
 public:
  enum class Kind { polynomial, blaschke_factor, constant, rational, sum, product, scale };

  // Constructors reject invalid data: |a| >= 1 for a Blaschke factor, a
  // rational denominator with a zero on the closed disk.
  static AnalyticSymbol polynomial(std::vector<cx> coeffs);
  static AnalyticSymbol constant(cx c);
  static AnalyticSymbol blaschke(cx a);
  static AnalyticSymbol rational(std::vector<cx> numer, std::vector<cx> denom);
  static AnalyticSymbol identity();  // the symbol z
  static AnalyticSymbol scale(cx s, const AnalyticSymbol& f);

  friend AnalyticSymbol operator+(const AnalyticSymbol& a, const AnalyticSymbol& b);
  friend AnalyticSymbol operator*(const AnalyticSymbol& a, const AnalyticSymbol& b);

  // Exact recursive evaluation of the expression tree.
  cx operator()(const DiskPoint& p) const { return eval_unchecked(p.value()); }
  // Unchecked variant used internally for boundary grids; the symbol class is
  // analytic across the closed disk so this is well defined.
  cx eval_unchecked(cx z) const;

  // Pointwise square; polynomials are squared by coefficient convolution.
  AnalyticSymbol square() const;

  // Exact rational reciprocal. Throws NotInvertibleError when the symbol has
  // a zero on the closed disk.
  AnalyticSymbol reciprocal() const;

  // (f(z) - f(0))/z as an exact rational symbol, evaluable at z = 0 where it
  // takes the value f'(0).
  AnalyticSymbol backward_shift() const;

  // Taylor coefficients a_0..a_D at the origin plus a bound on the dropped
  // ell^1 tail sum_{k>D} |a_k|. Exact (tail 0) once D covers a polynomial;
  // for proper rationals the bound comes from the nearest pole radius.
  std::pair<std::vector<cx>, double> truncated_coeffs(int degree) const;

  RationalForm flatten() const;

  // Degree-zero flattened form, i.e. the symbol is a constant function.
  bool is_constant() const;
  cx constant_value() const;  // valid when is_constant()

  // Structure accessors for the canonical printer.
  Kind kind() const;
  const std::vector<cx>& poly_coeffs() const;       // polynomial
  cx scalar() const;                                // constant c / blaschke a / scale factor
  const std::vector<cx>& rational_num() const;      // rational
  const std::vector<cx>& rational_den() const;      // rational
  const AnalyticSymbol left() const;                // sum/product/scale child
  const AnalyticSymbol right() const;               // sum/product second child

  // Semantic equality: identical flattened rational forms, coefficientwise.
  friend bool operator==(const AnalyticSymbol& a, const AnalyticSymbol& b);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit AnalyticSymbol(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

namespace poly {

// Dense polynomial helpers over complex coefficients, index = degree.
std::vector<cx> trim(std::vector<cx> p);
std::vector<cx> add(const std::vector<cx>& a, const std::vector<cx>& b);
std::vector<cx> mul(const std::vector<cx>& a, const std::vector<cx>& b);
std::vector<cx> scaled(cx s, const std::vector<cx>& a);
cx eval(const std::vector<cx>& p, cx z);

// Conservative certificate that p has no zero on the closed unit disk:
// 4096 boundary samples (minimum modulus must clear a relative threshold)
// plus a winding-number count that must be zero.
bool zero_free_closed_disk(const std::vector<cx>& p);

// All roots via Durand-Kerner; throws std::runtime_error when the residual
// check fails. Used only for tail-bound pole radii, never for verdicts.
std::vector<cx> roots(const std::vector<cx>& p);

}  // namespace poly

}  // namespace subhardy
