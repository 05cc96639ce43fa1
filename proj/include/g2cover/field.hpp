#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "g2cover/errors.hpp"

namespace g2c {

/// Base-field descriptor: the rationals, or a prime field F_p with p >= 5.
/// Characteristics 2 and 3 are rejected at construction.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(const mpz_class& p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime() const { return kind_ == Kind::prime; }

  /// Modulus of a prime field; 0 for the rationals.
  const mpz_class& modulus() const { return p_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string str() const;

 private:
  Field(Kind k, const mpz_class& p) : kind_(k), p_(p) {}

  Kind kind_;
  mpz_class p_;
};

/// Deterministic trial-division primality test; intended for desk-scale moduli.
bool is_prime_trial_division(const mpz_class& n);

/// Exact scalar: a reduced fraction over Q, or a residue in [0, p) over F_p.
/// Values are immutable in spirit; every operation returns a fresh canonical
/// element. Mixing elements of different fields throws descriptor_mismatch.
class Fe {
 public:
  /// Zero of the rationals; placeholder so containers work.
  Fe() : field_(Field::rationals()), v_(0) {}

  static Fe zero(const Field& f) { return of(f, 0); }
  static Fe one(const Field& f) { return of(f, 1); }
  static Fe of(const Field& f, long n) { return of(f, mpz_class(n)); }
  static Fe of(const Field& f, const mpz_class& n);
  /// Image of the fraction n/d; over F_p this divides by d (mod p).
  static Fe of_fraction(const Field& f, const mpz_class& n, const mpz_class& d);
  /// Parses "a" or "a/b" (decimal, optional sign).
  static Fe parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  /// Numerator of the canonical value (the residue itself over F_p).
  const mpz_class& num() const { return v_.get_num(); }
  /// Denominator of the canonical value (always 1 over F_p).
  const mpz_class& den() const { return v_.get_den(); }

  Fe operator-() const;
  friend Fe operator+(const Fe& a, const Fe& b);
  friend Fe operator-(const Fe& a, const Fe& b);
  friend Fe operator*(const Fe& a, const Fe& b);
  friend Fe operator/(const Fe& a, const Fe& b);
  Fe& operator+=(const Fe& b) { return *this = *this + b; }
  Fe& operator-=(const Fe& b) { return *this = *this - b; }
  Fe& operator*=(const Fe& b) { return *this = *this * b; }
  Fe& operator/=(const Fe& b) { return *this = *this / b; }

  Fe inverse() const;
  Fe pow(unsigned long e) const;

  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  /// Total order for deterministic sorting: residue order over F_p,
  /// numeric order over Q.
  static int cmp(const Fe& a, const Fe& b);

  /// "a/b" or "a" over Q; the residue in decimal over F_p.
  std::string str() const;

 private:
  Fe(const Field& f, const mpq_class& v) : field_(f), v_(v) {}

  static void require_same(const Fe& a, const Fe& b);

  Field field_;
  mpq_class v_;  // canonical: reduced with positive denominator; residue/1 over F_p
};

/// Point of P^1 over the base field, canonicalized to (1 : x) or (0 : 1).
/// The affine value of (1 : x) is x; (0 : 1) is the point at infinity.
class ProjPoint {
 public:
  /// Canonicalizes (x0 : x1); throws zero_vector on (0, 0).
  static ProjPoint of(const Fe& x0, const Fe& x1);
  static ProjPoint affine(const Fe& value) { return ProjPoint(Fe::one(value.field()), value); }
  static ProjPoint infinity(const Field& f) { return ProjPoint(Fe::zero(f), Fe::one(f)); }

  const Fe& x0() const { return x0_; }
  const Fe& x1() const { return x1_; }
  const Field& field() const { return x0_.field(); }

  bool is_infinity() const { return x0_.is_zero(); }
  /// Affine value; only valid for finite points.
  const Fe& value() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.x0_ == b.x0_ && a.x1_ == b.x1_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  /// Finite points in value order, infinity last.
  static int cmp(const ProjPoint& a, const ProjPoint& b);

  std::string str() const { return is_infinity() ? "inf" : x1_.str(); }

 private:
  ProjPoint(const Fe& x0, const Fe& x1) : x0_(x0), x1_(x1) {}

  Fe x0_, x1_;
};

}  // namespace g2c
