#include "g2cover/moduli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "g2cover/json_io.hpp"

namespace g2c {

ModuliReport enumerate_moduli(const Fe& lambda) {
  const Field& k = lambda.field();
  if (k.is_rationals())
    throw Error(errc::rationals_unsupported, "enumeration requires a finite field");
  if (lambda.is_zero() || lambda.is_one())
    throw Error(errc::bad_lambda, "lambda = " + lambda.str());

  const Fe one = Fe::one(k), two = Fe::of(k, 2);
  // the count formula needs 1 and 2 outside Z
  if (z_quartic_value(lambda, one) != -lambda)
    throw std::logic_error("Z quartic at 1 differs from -lambda");
  if (z_quartic_value(lambda, two) != lambda - one)
    throw std::logic_error("Z quartic at 2 differs from lambda - 1");

  ModuliReport report{k, lambda, {}, {}, {}};
  for (mpz_class r = 0; r < k.modulus(); ++r) {
    Fe t = Fe::of(k, r);
    if (t == one || t == two) continue;
    bool quartic_nonzero = !z_quartic_value(lambda, t).is_zero();
    bool cubic_squarefree = is_squarefree(derive_cubic(lambda, t));
    if (quartic_nonzero != cubic_squarefree)
      throw std::logic_error("membership criteria disagree at p1 = " + t.str());
    (quartic_nonzero ? report.admissible : report.z_roots).push_back(t);
  }

  if (mpz_class(report.count()) + report.z_roots.size() + 2 != k.modulus())
    throw std::logic_error("moduli count does not match p - 2 - |Z|");

  for (const Fe& t : {Fe::zero(k), Fe::of(k, 3), Fe::of_fraction(k, 3, 2)}) {
    bool admissible = false;
    for (const Fe& a : report.admissible) admissible = admissible || a == t;
    if (!admissible)
      throw std::logic_error("degenerate parameter " + t.str() + " not admissible");
    report.degenerate.push_back(t);
  }
  std::sort(report.degenerate.begin(), report.degenerate.end(),
            [](const Fe& a, const Fe& b) { return Fe::cmp(a, b) < 0; });
  return report;
}

std::vector<ModuliReport> census(const Field& field) {
  if (field.is_rationals())
    throw Error(errc::rationals_unsupported, "census requires a finite field");
  std::vector<Fe> lambdas;
  for (mpz_class r = 2; r < field.modulus(); ++r) lambdas.push_back(Fe::of(field, r));
  return census(field, lambdas);
}

std::vector<ModuliReport> census(const Field& field, const std::vector<Fe>& lambdas) {
  std::vector<ModuliReport> out;
  out.reserve(lambdas.size());
  for (const Fe& lambda : lambdas) {
    if (lambda.field() != field)
      throw Error(errc::descriptor_mismatch, "lambda outside the census field");
    out.push_back(enumerate_moduli(lambda));
  }
  return out;
}

FamilyFiber family_fiber(const Fe& lambda, const Fe& p1) {
  Membership verdict = membership(lambda, p1);
  if (verdict != Membership::in_moduli) throw NotInModuliError(verdict);

  CoverParams cp = derive_params(lambda, p1);
  Genus2Cover cover = build_cover_map(cp, +1);

  CheckReport checks = verify_identities(cp);
  checks.add("function_field", verify_function_field(cp));
  checks.add("diagram", verify_diagram(cp));
  checks.merge(verify_normalization(cp));
  checks.merge(verify_ramification(cp));

  const Field& k = lambda.field();
  bool degenerate = p1 == Fe::zero(k) || p1 == Fe::of(k, 3) || p1 == Fe::of_fraction(k, 3, 2);
  return FamilyFiber{std::move(cover), std::move(checks), degenerate};
}

std::string reports_to_json(const std::vector<ModuliReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ModuliReport& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ModuliReport>& reports) {
  std::ostringstream os;
  os << "lambda,p,count,z_roots,degenerate\n";
  for (const ModuliReport& r : reports) {
    os << r.lambda.str() << "," << r.field.modulus().get_str() << "," << r.count() << ",";
    for (size_t i = 0; i < r.z_roots.size(); ++i) os << (i ? ";" : "") << r.z_roots[i].str();
    os << ",";
    for (size_t i = 0; i < r.degenerate.size(); ++i) os << (i ? ";" : "") << r.degenerate[i].str();
    os << "\n";
  }
  return os.str();
}

void export_reports(const std::vector<ModuliReport>& reports, ExportFormat format,
                    const std::string& path) {
  std::string payload =
      format == ExportFormat::json ? reports_to_json(reports) : reports_to_csv(reports);
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_failure, "cannot open " + path + " for writing");
  out << payload;
  out.flush();
  if (!out) throw Error(errc::io_failure, "write to " + path + " failed");
}

}  // namespace g2c
