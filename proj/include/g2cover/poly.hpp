#pragma once

#include <utility>
#include <vector>

#include "g2cover/field.hpp"

namespace g2c {

/// Dense univariate polynomial with ascending coefficients and stripped
/// trailing zeros. The zero polynomial has degree -1 (sentinel).
class Polynomial {
 public:
  explicit Polynomial(const Field& f) : field_(f) {}
  Polynomial(const Field& f, std::vector<Fe> coeffs);

  static Polynomial zero(const Field& f) { return Polynomial(f); }
  static Polynomial constant(const Fe& c) { return Polynomial(c.field(), {c}); }
  static Polynomial x(const Field& f) { return Polynomial(f, {Fe::zero(f), Fe::one(f)}); }
  /// x - r
  static Polynomial linear_root(const Fe& r) { return Polynomial(r.field(), {-r, Fe::one(r.field())}); }
  static Polynomial from_ints(const Field& f, const std::vector<long>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i (zero beyond the degree).
  Fe coeff(int i) const;
  const std::vector<Fe>& coeffs() const { return c_; }
  const Fe& leading() const;
  Polynomial monic() const;

  Fe eval(const Fe& v) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Fe& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;

 private:
  void strip();

  Field field_;
  std::vector<Fe> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Exact division with remainder; throws division_by_zero on zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);

Polynomial derivative(const Polynomial& f);

/// Monic gcd; gcd(a, 0) = monic(a). Throws both_zero when both vanish.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Resultant of the honest-degree polynomials (Euclidean algorithm).
Fe resultant(const Polynomial& f, const Polynomial& g);

/// Resultant-based discriminant; zero iff f has a repeated root in the
/// algebraic closure (valid in every supported characteristic).
/// Throws constant_polynomial for deg f < 1.
Fe discriminant(const Polynomial& f);

/// True iff f has no repeated root in the algebraic closure.
bool is_squarefree(const Polynomial& f);

/// Homogeneous bivariate form of declared degree d: coefficients of
/// x1^i x0^(d-i) for i = 0..d. The declared degree may exceed the honest
/// degree of the chart polynomial F(1, x); the difference is the
/// multiplicity of the root at infinity (0 : 1).
class BinaryForm {
 public:
  BinaryForm(const Field& f, int degree, std::vector<Fe> coeffs);

  /// x0^(d - deg f) * homogenization of f; requires d >= deg f.
  static BinaryForm homogenize(const Polynomial& f, int degree);
  /// c1*x1 + c0*x0
  static BinaryForm linear(const Fe& c0, const Fe& c1);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const;

  Fe coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Fe>& coeffs() const { return c_; }

  /// Dehomogenization F(1, x), the chart holding all finite roots.
  Polynomial chart_x0() const;
  /// Dehomogenization F(x, 1), the chart holding the root at infinity at 0.
  Polynomial chart_x1() const;
  /// Multiplicity of the root at (0 : 1).
  int infinity_multiplicity() const;

  Fe eval(const Fe& x0, const Fe& x1) const;
  Fe eval(const ProjPoint& p) const { return eval(p.x0(), p.x1()); }

  /// Partial derivatives, forms of declared degree d - 1.
  BinaryForm d_x0() const;
  BinaryForm d_x1() const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Fe& s, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

  std::string str() const;

 private:
  Field field_;
  int degree_;
  std::vector<Fe> c_;
};

/// Form gcd including the factor x0^min of the roots at infinity; the finite
/// part is monic. Throws both_zero when both forms vanish.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// Exact form division (the divisor must divide).
BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b);

bool is_squarefree(const BinaryForm& f);

/// Roots found in the base field with multiplicities, plus the degree of the
/// residual factor that does not split over the base field.
struct RootSplit {
  std::vector<std::pair<ProjPoint, int>> roots;
  int residual_degree = 0;

  int total_multiplicity() const;
};

/// All base-field roots with multiplicities. Over F_p by exhaustive residue
/// scan; over Q by rational-root search bounded at 512-bit coefficients.
std::vector<std::pair<ProjPoint, int>> roots_in_field(const Polynomial& f);
/// Same, and reports the root at infinity when the form degenerates.
std::vector<std::pair<ProjPoint, int>> roots_in_field(const BinaryForm& f);

RootSplit split_roots(const Polynomial& f);
RootSplit split_roots(const BinaryForm& f);

}  // namespace g2c
