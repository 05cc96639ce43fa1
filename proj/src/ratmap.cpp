#include "g2cover/ratmap.hpp"

#include <algorithm>

namespace g2c {

Mobius::Mobius(const Fe& a, const Fe& b, const Fe& c, const Fe& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if ((a * d - b * c).is_zero())
    throw Error(errc::bad_argument, "Mobius transformation needs nonzero determinant");
}

Mobius Mobius::identity(const Field& f) {
  return Mobius(Fe::one(f), Fe::zero(f), Fe::zero(f), Fe::one(f));
}

Mobius Mobius::subtract(const Fe& w) {
  const Field& f = w.field();
  return Mobius(Fe::one(f), Fe::zero(f), -w, Fe::one(f));
}

ProjPoint Mobius::apply(const ProjPoint& p) const {
  return ProjPoint::of(a_ * p.x0() + b_ * p.x1(), c_ * p.x0() + d_ * p.x1());
}

RationalSelfMap RationalSelfMap::make(const BinaryForm& num, const BinaryForm& den,
                                      Coprime mode) {
  if (num.field() != den.field())
    throw Error(errc::descriptor_mismatch, "map components over different fields");
  if (num.degree() != den.degree())
    throw Error(errc::bad_argument, "map components need equal declared degrees");
  if (den.is_zero()) throw Error(errc::zero_denominator, "map with zero denominator");
  if (num.is_zero() && num.degree() >= 1)
    throw Error(errc::bad_argument,
                "zero numerator of positive degree vanishes with the denominator");

  if (num.is_zero() || num.degree() == 0) return RationalSelfMap(num, den);

  BinaryForm common = gcd(num, den);
  if (common.degree() > 0) {
    if (mode == Coprime::require) throw CommonFactorError(common);
    return RationalSelfMap(exact_divide(num, common), exact_divide(den, common));
  }
  return RationalSelfMap(num, den);
}

ProjPoint RationalSelfMap::evaluate(const ProjPoint& p) const {
  // coprimality keeps (den, num) away from (0, 0)
  return ProjPoint::of(den_.eval(p), num_.eval(p));
}

RationalSelfMap RationalSelfMap::post_compose(const Mobius& t) const {
  BinaryForm den = t.a() * den_ + t.b() * num_;
  BinaryForm num = t.c() * den_ + t.d() * num_;
  return make(num, den);
}

namespace {

BinaryForm form_pow(const BinaryForm& f, int e) {
  BinaryForm acc = BinaryForm(f.field(), 0, {Fe::one(f.field())});
  for (int i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

// F(t0(x0,x1), t1(x0,x1)) for degree-1 forms t0, t1
BinaryForm substitute_linear(const BinaryForm& f, const BinaryForm& t0, const BinaryForm& t1) {
  const int d = f.degree();
  std::vector<Fe> zero(static_cast<size_t>(d) + 1, Fe::zero(f.field()));
  BinaryForm acc(f.field(), d, zero);
  for (int i = 0; i <= d; ++i)
    acc = acc + f.coeff(i) * (form_pow(t1, i) * form_pow(t0, d - i));
  return acc;
}

}  // namespace

RationalSelfMap RationalSelfMap::pre_compose(const Mobius& t) const {
  BinaryForm t0 = BinaryForm::linear(t.a(), t.b());
  BinaryForm t1 = BinaryForm::linear(t.c(), t.d());
  return make(substitute_linear(num_, t0, t1), substitute_linear(den_, t0, t1));
}

BinaryForm RationalSelfMap::jacobian_form() const {
  if (degree() < 1) throw Error(errc::bad_argument, "Jacobian of a constant map");
  return num_.d_x0() * den_.d_x1() - num_.d_x1() * den_.d_x0();
}

RootSplit RationalSelfMap::critical_divisor() const {
  BinaryForm j = jacobian_form();
  if (j.is_zero()) throw Error(errc::inseparable_map, "identically vanishing Jacobian");
  if (j.degree() == 0) return RootSplit{};
  return split_roots(j);
}

std::vector<ProjPoint> RationalSelfMap::branch_points() const {
  std::vector<ProjPoint> out;
  for (const auto& [p, m] : critical_divisor().roots) out.push_back(evaluate(p));
  std::sort(out.begin(), out.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return ProjPoint::cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RootSplit RationalSelfMap::fiber(const ProjPoint& q) const {
  BinaryForm level = q.x1() * den_ - q.x0() * num_;
  if (level.is_zero())
    throw Error(errc::bad_argument, "fiber of a constant map over its own value");
  return split_roots(level);
}

bool same_map(const RationalSelfMap& a, const RationalSelfMap& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace g2c
