#pragma once

#include "g2cover/poly.hpp"

namespace g2c {

/// Raised when a map is constructed from forms sharing a factor while the
/// caller demanded coprime inputs; carries the offending gcd.
class CommonFactorError : public Error {
 public:
  explicit CommonFactorError(BinaryForm g)
      : Error(errc::common_factor, "numerator and denominator share " + g.str()),
        gcd_(std::move(g)) {}

  const BinaryForm& common() const { return gcd_; }

 private:
  BinaryForm gcd_;
};

/// Invertible degree-1 self-map of P^1:
/// (x0 : x1) -> (a*x0 + b*x1 : c*x0 + d*x1), with nonzero determinant.
class Mobius {
 public:
  Mobius(const Fe& a, const Fe& b, const Fe& c, const Fe& d);

  static Mobius identity(const Field& f);
  /// x -> x - w on affine values, i.e. (x0 : x1) -> (x0 : x1 - w*x0).
  static Mobius subtract(const Fe& w);

  const Fe& a() const { return a_; }
  const Fe& b() const { return b_; }
  const Fe& c() const { return c_; }
  const Fe& d() const { return d_; }

  ProjPoint apply(const ProjPoint& p) const;

 private:
  Fe a_, b_, c_, d_;
};

/// Degree-d self-map of P^1 held as a coprime numerator/denominator pair of
/// binary forms with equal declared degree; the affine action is
/// x -> N(x)/D(x).
class RationalSelfMap {
 public:
  enum class Coprime { reduce, require };

  /// Removes common factors (mode reduce) or throws CommonFactorError
  /// (mode require). Throws zero_denominator when den vanishes.
  static RationalSelfMap make(const BinaryForm& num, const BinaryForm& den,
                              Coprime mode = Coprime::reduce);

  int degree() const { return num_.degree(); }
  const BinaryForm& numerator() const { return num_; }
  const BinaryForm& denominator() const { return den_; }
  const Field& field() const { return num_.field(); }

  ProjPoint evaluate(const ProjPoint& p) const;
  ProjPoint operator()(const ProjPoint& p) const { return evaluate(p); }

  /// t applied to the output of the map.
  RationalSelfMap post_compose(const Mobius& t) const;
  /// t applied to the input of the map.
  RationalSelfMap pre_compose(const Mobius& t) const;

  /// Homogeneous Jacobian dN/dx0*dD/dx1 - dN/dx1*dD/dx0, declared degree
  /// 2d-2. Uniformly captures ramification at infinity.
  BinaryForm jacobian_form() const;

  /// Zero divisor of the Jacobian split over the base field; throws
  /// inseparable_map when the Jacobian vanishes identically.
  RootSplit critical_divisor() const;

  /// Images of the critical points found in the base field (deduplicated,
  /// sorted).
  std::vector<ProjPoint> branch_points() const;

  /// Solutions of map(P) = q with multiplicity; total degree d counting the
  /// residual factor.
  RootSplit fiber(const ProjPoint& q) const;

  /// Equality as maps of P^1 (cross-multiplied form identity).
  friend bool same_map(const RationalSelfMap& a, const RationalSelfMap& b);

 private:
  RationalSelfMap(BinaryForm num, BinaryForm den)
      : num_(std::move(num)), den_(std::move(den)) {}

  BinaryForm num_, den_;
};

}  // namespace g2c
