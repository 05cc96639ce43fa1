#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2cover/ratmap.hpp"

namespace g2c {

/// Verdict of the moduli-membership test for a parameter value p1.
enum class Membership { in_moduli, excluded_base_point, excluded_z, excluded_infinity };

const char* membership_name(Membership m);

class NotInModuliError : public Error {
 public:
  explicit NotInModuliError(Membership verdict)
      : Error(errc::not_in_moduli, membership_name(verdict)), verdict_(verdict) {}

  Membership verdict() const { return verdict_; }

 private:
  Membership verdict_;
};

/// Elliptic curve y^2 = x(x-1)(x-lambda) with lambda outside {0, 1}; its
/// 2-torsion sits over the x-coordinates 0, 1, lambda, and the origin over
/// infinity.
struct LegendreCurve {
  Fe lambda;

  static LegendreCurve make(const Fe& lambda);

  std::vector<Fe> two_torsion_x() const;
};

/// Everything derived from one (lambda, p1): the cubic denominator g, the
/// shifted-map constants, and the fourth ramification data delta, mu, zeta.
/// No admissibility filtering happens here.
struct CoverParams {
  Fe lambda;
  Fe p1;
  Polynomial g;   // monic cubic, denominator of the cover map
  Fe g_at_one;    // lambda*(1 - p1), the derived value of g at 1
  Fe p2;          // p1 - 2
  ProjPoint p3;   // (2*p1 - 3)/(p1 - 2), infinity at p1 = 2
  ProjPoint delta;  // fourth critical point p1*(p1 - 2)/(2*p1 - 3)
  ProjPoint mu;     // coresidual point p1 - 2*delta
  ProjPoint zeta;   // fourth branch point, infinity exactly on the Z locus
  Fe z_value;       // (lambda-1)*(2*p1-3)^3 + p1^3*(p1-2)
  Fe scale_u;             // numerator scale of the cover map (= lambda)
  Fe scale_shift_one;     // numerator scale after shifting the target by 1
  Fe scale_shift_lambda;  // numerator scale after shifting the target by lambda
  ProjPoint scale_shift_zeta;  // numerator scale after shifting by zeta

  Fe g0() const { return g.coeff(0); }
  Fe g1() const { return g.coeff(1); }
  Fe g2() const { return g.coeff(2); }
  const Field& field() const { return lambda.field(); }
};

/// Fills every derived field; throws bad_lambda for lambda in {0, 1}.
CoverParams derive_params(const Fe& lambda, const Fe& p1);

Membership membership(const Fe& lambda, const ProjPoint& p1);
Membership membership(const Fe& lambda, const Fe& p1);

/// The degree-3 cover x -> lambda*(x - p1)*x^2 / g(x) with u(0) = 0,
/// u(1) = 1, u(inf) = lambda. Throws degree_drop at p1 in {1, 2}.
RationalSelfMap build_cover_u(const CoverParams& cp);

/// Genus-2 curve y^2 = sextic together with the degree-3 cover of the
/// Legendre curve: (x, y) -> (X0 : X1 : sign * Ynum * y / X0).
struct Genus2Cover {
  CoverParams params;
  BinaryForm sextic;  // degree-6 form, right side of the curve equation
  RationalSelfMap u;
  Polynomial x0_coord;  // X0 = g
  Polynomial x1_coord;  // X1 = lambda*(x - p1)*x^2
  Polynomial y_cofactor;  // Ynum = lambda*(lambda-1)*x*(x-1)
  int sign = +1;
};

/// Builds the curve for an in-moduli parameter; singular_sextic signals an
/// internal inconsistency and is unreachable for admissible inputs.
Genus2Cover build_curve(const CoverParams& cp);
Genus2Cover build_cover_map(const CoverParams& cp, int sign);

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  void add(const std::string& name, bool ok);
  void add_skipped(const std::string& name, const std::string& why);
  void merge(const CheckReport& other);
};

/// Exact coefficient-by-coefficient verification of the closed-form
/// identities behind the parameter derivation. Holds for every lambda
/// outside {0, 1} and finite p1; a false entry is a bug.
CheckReport verify_identities(const CoverParams& cp);

/// The degree-10 function-field identity of the cover coordinates; the sign
/// does not enter (the Y coordinate appears squared).
bool verify_function_field(const CoverParams& cp, int sign = +1);

/// Commutativity of the covering square: the x-coordinates of the cover map
/// reproduce u.
bool verify_diagram(const CoverParams& cp);

/// Certifies the direct image of the Weierstrass divisor: three points over
/// the origin, one over each nontrivial 2-torsion point.
CheckReport verify_normalization(const CoverParams& cp);

/// Certifies the ramification pattern of u: divisor degree 4 with support
/// {0, 1, inf, delta} and fourth branch point zeta = u(delta) = u(mu).
CheckReport verify_ramification(const CoverParams& cp);

/// The quartic whose roots are the degenerate parameter values, with its
/// discriminant, base-field roots, and the closed-form certification that
/// it always has four distinct roots.
struct ZReport {
  Fe lambda;
  Polynomial quartic;  // monic degree 4
  Fe disc;
  std::vector<std::pair<Fe, int>> roots;
  bool sigma_prime_identity = false;
  bool zeta_tilde_criticals = false;
  bool quartic_nonzero_at_criticals = false;

  bool all_passed() const {
    return sigma_prime_identity && zeta_tilde_criticals && quartic_nonzero_at_criticals &&
           !disc.is_zero();
  }
};

ZReport z_locus(const Fe& lambda);

/// Value of the Z quartic at p1 (shared by membership and enumeration).
Fe z_quartic_value(const Fe& lambda, const Fe& p1);

/// The cubic denominator for (lambda, p1) without the rest of the record.
Polynomial derive_cubic(const Fe& lambda, const Fe& p1);

}  // namespace g2c
