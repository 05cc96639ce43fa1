#pragma once

#include "g2cover/cover.hpp"

namespace g2c {

/// Census of the admissible parameter values for one lambda over a prime
/// field: everything except {1, 2} and the roots of the Z quartic.
struct ModuliReport {
  Field field;
  Fe lambda;
  std::vector<Fe> z_roots;
  std::vector<Fe> admissible;
  std::vector<Fe> degenerate;  // admissible points with a merged branch point

  long count() const { return static_cast<long>(admissible.size()); }
};

/// Exhaustive enumeration over the residues of a prime field. Every residue
/// is cross-checked against the squarefreeness criterion for the cubic; a
/// disagreement is a bug and throws logic_error.
ModuliReport enumerate_moduli(const Fe& lambda);

/// One report per lambda (all residues outside {0, 1}, or the given list),
/// in ascending residue order.
std::vector<ModuliReport> census(const Field& field);
std::vector<ModuliReport> census(const Field& field, const std::vector<Fe>& lambdas);

/// One fully verified member of the universal family.
struct FamilyFiber {
  Genus2Cover cover;
  CheckReport checks;
  bool degenerate = false;

  bool all_passed() const { return checks.all_passed(); }
};

FamilyFiber family_fiber(const Fe& lambda, const Fe& p1);

enum class ExportFormat { json, csv };

std::string reports_to_json(const std::vector<ModuliReport>& reports);
std::string reports_to_csv(const std::vector<ModuliReport>& reports);

/// Writes a byte-stable export; "-" writes to standard output.
void export_reports(const std::vector<ModuliReport>& reports, ExportFormat format,
                    const std::string& path);

}  // namespace g2c
