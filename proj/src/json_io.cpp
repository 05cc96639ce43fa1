#include "g2cover/json_io.hpp"

#include "g2cover/moduli.hpp"

namespace g2c {

namespace {

nlohmann::json mpz_json(const mpz_class& n) {
  if (n.fits_slong_p()) return static_cast<long>(n.get_si());
  return n.get_str();  // beyond 64 bits, fall back to a decimal string
}

}  // namespace

nlohmann::json to_json(const Fe& v) {
  if (v.field().is_rationals()) return v.str();
  return nlohmann::json{{"residue", mpz_json(v.num())}, {"p", mpz_json(v.field().modulus())}};
}

nlohmann::json to_json(const ProjPoint& p) {
  if (p.is_infinity()) return "inf";
  return to_json(p.value());
}

nlohmann::json to_json(const Polynomial& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Fe& c : f.coeffs()) coeffs.push_back(to_json(c));
  return nlohmann::json{{"coeffs", coeffs}};
}

nlohmann::json to_json(const BinaryForm& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Fe& c : f.coeffs()) coeffs.push_back(to_json(c));
  return nlohmann::json{{"coeffs", coeffs}, {"degree", f.degree()}};
}

nlohmann::json to_json(const RationalSelfMap& m) {
  return nlohmann::json{{"num", to_json(m.numerator())},
                        {"den", to_json(m.denominator())},
                        {"deg", m.degree()}};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json out = nlohmann::json::object();
  for (const CheckResult& c : r.checks)
    out[c.name] = c.skipped ? nlohmann::json("skipped") : nlohmann::json(c.passed);
  return out;
}

nlohmann::json cover_record(const Genus2Cover& cover, const CheckReport& checks) {
  const CoverParams& cp = cover.params;
  return nlohmann::json{
      {"lambda", to_json(cp.lambda)},
      {"p1", to_json(cp.p1)},
      {"g", to_json(cp.g)},
      {"p2", to_json(cp.p2)},
      {"p3", to_json(cp.p3)},
      {"delta", to_json(cp.delta)},
      {"mu", to_json(cp.mu)},
      {"zeta", to_json(cp.zeta)},
      {"membership", membership_name(membership(cp.lambda, cp.p1))},
      {"sextic", to_json(cover.sextic)},
      {"cover",
       nlohmann::json{{"X0", to_json(cover.x0_coord)},
                      {"X1", to_json(cover.x1_coord)},
                      {"Ynum", to_json(cover.y_cofactor)},
                      {"sign", cover.sign}}},
      {"checks", to_json(checks)}};
}

nlohmann::json to_json(const ZReport& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& [root, mult] : r.roots)
    roots.push_back(nlohmann::json{{"root", to_json(root)}, {"multiplicity", mult}});
  return nlohmann::json{
      {"lambda", to_json(r.lambda)},
      {"quartic", to_json(r.quartic)},
      {"discriminant", to_json(r.disc)},
      {"roots", roots},
      {"checks",
       nlohmann::json{{"sigma_prime_identity", r.sigma_prime_identity},
                      {"zeta_tilde_criticals", r.zeta_tilde_criticals},
                      {"quartic_nonzero_at_criticals", r.quartic_nonzero_at_criticals},
                      {"discriminant_nonzero", !r.disc.is_zero()}}}};
}

nlohmann::json to_json(const ModuliReport& r) {
  auto residues = [](const std::vector<Fe>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Fe& x : xs) arr.push_back(mpz_json(x.num()));
    return arr;
  };
  return nlohmann::json{{"p", mpz_json(r.field.modulus())},
                        {"lambda", mpz_json(r.lambda.num())},
                        {"count", r.count()},
                        {"z_roots", residues(r.z_roots)},
                        {"admissible", residues(r.admissible)},
                        {"degenerate", residues(r.degenerate)}};
}

nlohmann::json to_json(const FamilyFiber& fiber) {
  nlohmann::json out = cover_record(fiber.cover, fiber.checks);
  out["degenerate_ramification"] = fiber.degenerate;
  out["all_passed"] = fiber.all_passed();
  return out;
}

}  // namespace g2c
