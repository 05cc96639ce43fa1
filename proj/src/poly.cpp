#include "g2cover/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2c {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(errc::descriptor_mismatch, a.str() + " vs " + b.str());
}

}  // namespace

Polynomial::Polynomial(const Field& f, std::vector<Fe> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  for (const Fe& c : c_) require_same_field(field_, c.field());
  strip();
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<long>& coeffs) {
  std::vector<Fe> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(Fe::of(f, v));
  return Polynomial(f, std::move(c));
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fe Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Fe::zero(field_);
  return c_[static_cast<size_t>(i)];
}

const Fe& Polynomial::leading() const {
  if (is_zero()) throw Error(errc::zero_polynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Fe Polynomial::eval(const Fe& v) const {
  require_same_field(field_, v.field());
  Fe acc = Fe::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Fe> c;
  c.reserve(c_.size());
  for (const Fe& v : c_) c.push_back(-v);
  return Polynomial(field_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Fe> c(std::max(a.c_.size(), b.c_.size()), Fe::zero(a.field_));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field_);
  std::vector<Fe> c(a.c_.size() + b.c_.size() - 1, Fe::zero(a.field_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Fe& s, const Polynomial& a) {
  std::vector<Fe> c;
  c.reserve(a.c_.size());
  for (const Fe& v : a.c_) c.push_back(s * v);
  return Polynomial(a.field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    os << coeff(i).str();
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
  Polynomial r = a;
  std::vector<Fe> q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
                    Fe::zero(a.field()));
  Fe inv_lead = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Fe factor = r.leading() * inv_lead;
    q[static_cast<size_t>(shift)] = factor;
    std::vector<Fe> sub(static_cast<size_t>(shift), Fe::zero(a.field()));
    for (const Fe& c : b.coeffs()) sub.push_back(factor * c);
    r = r - Polynomial(a.field(), std::move(sub));
  }
  return {Polynomial(a.field(), std::move(q)), r};
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial::zero(f.field());
  std::vector<Fe> c;
  c.reserve(static_cast<size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) c.push_back(Fe::of(f.field(), i) * f.coeff(i));
  return Polynomial(f.field(), std::move(c));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(errc::both_zero, "gcd(0, 0) is undefined");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x.monic();
}

Fe resultant(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.field(), g.field());
  const Field& k = f.field();
  if (f.is_zero() || g.is_zero()) return Fe::zero(k);
  if (g.degree() == 0) return g.leading().pow(static_cast<unsigned long>(f.degree()));
  if (f.degree() == 0) return f.leading().pow(static_cast<unsigned long>(g.degree()));
  if (f.degree() < g.degree()) {
    Fe r = resultant(g, f);
    return (f.degree() * g.degree()) % 2 ? -r : r;
  }
  Polynomial rem = divmod(f, g).remainder;
  if (rem.is_zero()) return Fe::zero(k);
  Fe swap_sign = (f.degree() * g.degree()) % 2 ? -Fe::one(k) : Fe::one(k);
  Fe scale = g.leading().pow(static_cast<unsigned long>(f.degree() - rem.degree()));
  return swap_sign * scale * resultant(g, rem);
}

Fe discriminant(const Polynomial& f) {
  int n = f.degree();
  if (n < 1) throw Error(errc::constant_polynomial, "discriminant needs degree >= 1");
  Polynomial fp = derivative(f);
  Fe res = Fe::zero(f.field());
  if (!fp.is_zero()) {
    // the Sylvester convention declares deg f' = n - 1; pad with lc(f) powers
    Fe pad = f.leading().pow(static_cast<unsigned long>(n - 1 - fp.degree()));
    res = pad * resultant(f, fp);
  }
  Fe out = res / f.leading();
  return (static_cast<long>(n) * (n - 1) / 2) % 2 ? -out : out;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "squarefreeness of the zero polynomial");
  if (f.degree() == 0) return true;
  bool by_gcd = gcd(f, derivative(f)).degree() == 0;
  if (f.field().is_prime() && f.degree() >= f.field().modulus()) {
    // small characteristic: consult the characteristic-robust discriminant too
    bool by_disc = !discriminant(f).is_zero();
    if (by_disc != by_gcd)
      throw std::logic_error("squarefreeness criteria disagree on " + f.str());
  }
  return by_gcd;
}

BinaryForm::BinaryForm(const Field& f, int degree, std::vector<Fe> coeffs)
    : field_(f), degree_(degree), c_(std::move(coeffs)) {
  if (degree_ < 0 || c_.size() != static_cast<size_t>(degree_) + 1)
    throw Error(errc::bad_argument, "binary form needs degree+1 coefficients");
  for (const Fe& c : c_) require_same_field(field_, c.field());
}

BinaryForm BinaryForm::homogenize(const Polynomial& f, int degree) {
  if (degree < std::max(f.degree(), 0))
    throw Error(errc::bad_argument, "declared degree below honest degree");
  std::vector<Fe> c;
  c.reserve(static_cast<size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) c.push_back(f.coeff(i));
  return BinaryForm(f.field(), degree, std::move(c));
}

BinaryForm BinaryForm::linear(const Fe& c0, const Fe& c1) {
  return BinaryForm(c0.field(), 1, {c0, c1});
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Fe& c) { return c.is_zero(); });
}

Polynomial BinaryForm::chart_x0() const { return Polynomial(field_, c_); }

Polynomial BinaryForm::chart_x1() const {
  std::vector<Fe> rev(c_.rbegin(), c_.rend());
  return Polynomial(field_, std::move(rev));
}

int BinaryForm::infinity_multiplicity() const {
  if (is_zero()) throw Error(errc::zero_polynomial, "zero form has no root structure");
  return degree_ - chart_x0().degree();
}

Fe BinaryForm::eval(const Fe& x0, const Fe& x1) const {
  require_same_field(field_, x0.field());
  require_same_field(field_, x1.field());
  // Horner in x1 with x0 factored in per step
  Fe acc = c_[static_cast<size_t>(degree_)];
  for (int i = degree_ - 1; i >= 0; --i) acc = acc * x1 + c_[static_cast<size_t>(i)] * x0.pow(static_cast<unsigned long>(degree_ - i));
  return acc;
}

BinaryForm BinaryForm::d_x0() const {
  if (degree_ < 1) throw Error(errc::bad_argument, "derivative of a degree-0 form");
  std::vector<Fe> c;
  c.reserve(static_cast<size_t>(degree_));
  for (int i = 0; i <= degree_ - 1; ++i)
    c.push_back(Fe::of(field_, degree_ - i) * c_[static_cast<size_t>(i)]);
  return BinaryForm(field_, degree_ - 1, std::move(c));
}

BinaryForm BinaryForm::d_x1() const {
  if (degree_ < 1) throw Error(errc::bad_argument, "derivative of a degree-0 form");
  std::vector<Fe> c;
  c.reserve(static_cast<size_t>(degree_));
  for (int j = 0; j <= degree_ - 1; ++j)
    c.push_back(Fe::of(field_, j + 1) * c_[static_cast<size_t>(j) + 1]);
  return BinaryForm(field_, degree_ - 1, std::move(c));
}

BinaryForm BinaryForm::operator-() const {
  std::vector<Fe> c;
  c.reserve(c_.size());
  for (const Fe& v : c_) c.push_back(-v);
  return BinaryForm(field_, degree_, std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field_, b.field_);
  if (a.degree_ != b.degree_)
    throw Error(errc::bad_argument, "form addition needs equal declared degrees");
  std::vector<Fe> c;
  c.reserve(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
  return BinaryForm(a.field_, a.degree_, std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Fe> c(a.c_.size() + b.c_.size() - 1, Fe::zero(a.field_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return BinaryForm(a.field_, a.degree_ + b.degree_, std::move(c));
}

BinaryForm operator*(const Fe& s, const BinaryForm& a) {
  std::vector<Fe> c;
  c.reserve(a.c_.size());
  for (const Fe& v : a.c_) c.push_back(s * v);
  return BinaryForm(a.field_, a.degree_, std::move(c));
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.field_ == b.field_ && a.degree_ == b.degree_ && a.c_ == b.c_;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  os << "[deg " << degree_ << "]";
  for (const Fe& c : c_) os << " " << c.str();
  return os.str();
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(errc::both_zero, "gcd(0, 0) is undefined");
  if (a.is_zero() || b.is_zero()) {
    const BinaryForm& f = a.is_zero() ? b : a;
    Polynomial g = f.chart_x0().monic();
    return BinaryForm::homogenize(g, g.degree() + f.infinity_multiplicity());
  }
  Polynomial g = gcd(a.chart_x0(), b.chart_x0());
  int e = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
  return BinaryForm::homogenize(g, g.degree() + e);
}

BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b) {
  auto qr = divmod(a.chart_x0(), b.chart_x0());
  int e = a.infinity_multiplicity() - b.infinity_multiplicity();
  if (!qr.remainder.is_zero() || e < 0)
    throw std::logic_error("exact_divide: divisor does not divide");
  return BinaryForm::homogenize(qr.quotient, qr.quotient.degree() + e);
}

bool is_squarefree(const BinaryForm& f) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "squarefreeness of the zero form");
  // the two charts jointly see every root of the form, including infinity
  return is_squarefree(f.chart_x0()) && is_squarefree(f.chart_x1());
}

int RootSplit::total_multiplicity() const {
  int total = residual_degree;
  for (const auto& [p, m] : roots) total += m;
  return total;
}

namespace {

// multiplicity of the known root r, dividing it out of f
int multiplicity_at(Polynomial& f, const Fe& r) {
  Polynomial lin = Polynomial::linear_root(r);
  int m = 0;
  while (true) {
    DivMod qr = divmod(f, lin);
    if (!qr.remainder.is_zero()) break;
    f = qr.quotient;
    ++m;
  }
  return m;
}

constexpr unsigned kRationalRootBitBound = 512;
constexpr unsigned long kTrialDivisionCap = 1ul << 26;

std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> factors;
  auto take = [&](const mpz_class& d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  };
  take(2);
  take(3);
  mpz_class d = 5;
  while (d * d <= n) {
    if (d > kTrialDivisionCap)
      throw Error(errc::unsupported_for_rationals,
                  "coefficient too large to factor for the rational-root search");
    take(d);
    take(d + 2);
    d += 6;
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > (1u << 20))
      throw Error(errc::unsupported_for_rationals, "too many divisor candidates");
  }
  return divs;
}

std::vector<std::pair<Fe, int>> roots_over_rationals(const Polynomial& f) {
  const Field& k = f.field();
  for (const Fe& c : f.coeffs())
    if (mpz_sizeinbase(c.num().get_mpz_t(), 2) > kRationalRootBitBound ||
        mpz_sizeinbase(c.den().get_mpz_t(), 2) > kRationalRootBitBound)
      throw Error(errc::unsupported_for_rationals,
                  "coefficient exceeds the 512-bit rational-root bound");

  Polynomial work = f;
  std::vector<std::pair<Fe, int>> out;

  int at_zero = multiplicity_at(work, Fe::zero(k));
  if (at_zero) out.emplace_back(Fe::zero(k), at_zero);
  if (work.degree() < 1) return out;

  // integer model: clear denominators, then candidates are +-(p/q) with
  // p | constant term and q | leading term
  mpz_class lcm_den = 1;
  for (const Fe& c : work.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  mpz_class a0 = work.coeff(0).num() * (lcm_den / work.coeff(0).den());
  mpz_class an = work.leading().num() * (lcm_den / work.leading().den());

  std::set<std::pair<mpz_class, mpz_class>> seen;
  for (const mpz_class& p : positive_divisors(abs(a0)))
    for (const mpz_class& q : positive_divisors(abs(an))) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (!seen.insert({p / g, q / g}).second) continue;
      for (int sign : {1, -1}) {
        Fe cand = Fe::of_fraction(k, sign * p, q);
        if (!work.eval(cand).is_zero()) continue;
        int m = multiplicity_at(work, cand);
        out.emplace_back(cand, m);
      }
    }
  return out;
}

std::vector<std::pair<Fe, int>> roots_over_prime_field(const Polynomial& f) {
  const Field& k = f.field();
  Polynomial work = f;
  std::vector<std::pair<Fe, int>> out;

  // word-sized moduli: run the exhaustive scan on machine integers
  if (mpz_sizeinbase(k.modulus().get_mpz_t(), 2) <= 31) {
    const unsigned long p = k.modulus().get_ui();
    std::vector<unsigned long> c;
    c.reserve(f.coeffs().size());
    for (const Fe& v : f.coeffs()) c.push_back(v.num().get_ui());
    for (unsigned long r = 0; r < p; ++r) {
      unsigned long acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * r + *it) % p;
      if (acc != 0) continue;
      Fe cand = Fe::of(k, static_cast<long>(r));
      out.emplace_back(cand, multiplicity_at(work, cand));
    }
    return out;
  }

  for (mpz_class r = 0; r < k.modulus(); ++r) {
    Fe cand = Fe::of(k, r);
    if (!f.eval(cand).is_zero()) continue;
    out.emplace_back(cand, multiplicity_at(work, cand));
  }
  return out;
}

}  // namespace

std::vector<std::pair<ProjPoint, int>> roots_in_field(const Polynomial& f) {
  return split_roots(f).roots;
}

std::vector<std::pair<ProjPoint, int>> roots_in_field(const BinaryForm& f) {
  return split_roots(f).roots;
}

RootSplit split_roots(const Polynomial& f) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "roots of the zero polynomial");
  std::vector<std::pair<Fe, int>> found =
      f.field().is_prime() ? roots_over_prime_field(f) : roots_over_rationals(f);
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return Fe::cmp(a.first, b.first) < 0; });
  RootSplit out;
  int split = 0;
  for (const auto& [r, m] : found) {
    out.roots.emplace_back(ProjPoint::affine(r), m);
    split += m;
  }
  out.residual_degree = f.degree() - split;
  return out;
}

RootSplit split_roots(const BinaryForm& f) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "roots of the zero form");
  RootSplit out = split_roots(f.chart_x0());
  int at_inf = f.infinity_multiplicity();
  if (at_inf > 0) out.roots.emplace_back(ProjPoint::infinity(f.field()), at_inf);
  return out;
}

}  // namespace g2c
