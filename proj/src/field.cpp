#include "g2cover/field.hpp"

namespace g2c {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::forbidden_characteristic: return "ForbiddenCharacteristic";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::descriptor_mismatch: return "DescriptorMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::both_zero: return "BothZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::constant_polynomial: return "ConstantPolynomial";
    case errc::unsupported_for_rationals: return "UnsupportedForRationals";
    case errc::common_factor: return "CommonFactor";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::inseparable_map: return "InseparableMap";
    case errc::bad_lambda: return "BadLambda";
    case errc::degree_drop: return "DegreeDrop";
    case errc::not_in_moduli: return "NotInModuli";
    case errc::singular_sextic: return "SingularSextic";
    case errc::rationals_unsupported: return "RationalsUnsupported";
    case errc::io_failure: return "IoFailure";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

bool is_prime_trial_division(const mpz_class& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  mpz_class d = 5;
  while (d * d <= n) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
    d += 6;
  }
  return true;
}

Field Field::prime(const mpz_class& p) {
  if (p == 2 || p == 3)
    throw Error(errc::forbidden_characteristic,
                "characteristic " + p.get_str() + " is not supported");
  if (!is_prime_trial_division(p))
    throw Error(errc::non_prime_modulus, p.get_str() + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "F_" + p_.get_str();
}

void Fe::require_same(const Fe& a, const Fe& b) {
  if (a.field_ != b.field_)
    throw Error(errc::descriptor_mismatch,
                a.field_.str() + " vs " + b.field_.str());
}

Fe Fe::of(const Field& f, const mpz_class& n) {
  if (f.is_rationals()) return Fe(f, mpq_class(n));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), f.modulus().get_mpz_t());
  return Fe(f, mpq_class(r));
}

Fe Fe::of_fraction(const Field& f, const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw Error(errc::division_by_zero, "fraction with zero denominator");
  if (f.is_rationals()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Fe(f, q);
  }
  return of(f, n) / of(f, d);
}

Fe Fe::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return of(f, mpz_class(text));
    return of_fraction(f, mpz_class(text.substr(0, slash)),
                       mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(errc::bad_argument, "cannot parse field element '" + text + "'");
  }
}

Fe Fe::operator-() const {
  if (field_.is_rationals()) return Fe(field_, -v_);
  return of(field_, -v_.get_num());
}

Fe operator+(const Fe& a, const Fe& b) {
  Fe::require_same(a, b);
  if (a.field_.is_rationals()) return Fe(a.field_, a.v_ + b.v_);
  return Fe::of(a.field_, a.v_.get_num() + b.v_.get_num());
}

Fe operator-(const Fe& a, const Fe& b) {
  Fe::require_same(a, b);
  if (a.field_.is_rationals()) return Fe(a.field_, a.v_ - b.v_);
  return Fe::of(a.field_, a.v_.get_num() - b.v_.get_num());
}

Fe operator*(const Fe& a, const Fe& b) {
  Fe::require_same(a, b);
  if (a.field_.is_rationals()) return Fe(a.field_, a.v_ * b.v_);
  return Fe::of(a.field_, a.v_.get_num() * b.v_.get_num());
}

Fe operator/(const Fe& a, const Fe& b) {
  Fe::require_same(a, b);
  return a * b.inverse();
}

Fe Fe::inverse() const {
  if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
  if (field_.is_rationals()) return Fe(field_, 1 / v_);
  // mpz_invert runs the extended Euclidean algorithm.
  mpz_class r;
  mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), field_.modulus().get_mpz_t());
  return Fe(field_, mpq_class(r));
}

Fe Fe::pow(unsigned long e) const {
  if (field_.is_prime()) {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), v_.get_num().get_mpz_t(), e, field_.modulus().get_mpz_t());
    return Fe(field_, mpq_class(r));
  }
  Fe acc = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Fe& a, const Fe& b) {
  Fe::require_same(a, b);
  return a.v_ == b.v_;
}

int Fe::cmp(const Fe& a, const Fe& b) {
  require_same(a, b);
  return ::cmp(a.v_, b.v_);
}

std::string Fe::str() const {
  if (field_.is_prime() || v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ProjPoint ProjPoint::of(const Fe& x0, const Fe& x1) {
  if (x0.field() != x1.field())
    throw Error(errc::descriptor_mismatch, "projective coordinates from different fields");
  if (x0.is_zero() && x1.is_zero())
    throw Error(errc::zero_vector, "(0 : 0) is not a point of P^1");
  if (x0.is_zero()) return infinity(x0.field());
  return affine(x1 / x0);
}

const Fe& ProjPoint::value() const {
  if (is_infinity())
    throw Error(errc::bad_argument, "the point at infinity has no affine value");
  return x1_;
}

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0;
  if (a.is_infinity()) return 1;
  if (b.is_infinity()) return -1;
  return Fe::cmp(a.value(), b.value());
}

}  // namespace g2c
