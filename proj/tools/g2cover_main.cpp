// Command-line front end: construction, verification, Z-locus analysis,
// moduli enumeration and universal-family emission for the genus-2 degree-3
// covers of an elliptic curve in Legendre form.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 domain error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "g2cover/json_io.hpp"
#include "g2cover/moduli.hpp"
#include "g2cover/rng.hpp"

namespace {

struct FieldSpec {
  std::string field;          // "rational" or empty
  std::uint64_t p = 0;        // prime modulus, 0 when unset

  void attach(CLI::App* cmd, bool prime_only = false) {
    if (!prime_only)
      cmd->add_option("--field", field, "base field: rational")
          ->check(CLI::IsMember({"rational"}));
    cmd->add_option("--p", p, "prime modulus of the base field (p >= 5)");
  }

  g2c::Field resolve() const {
    if ((field == "rational") == (p != 0))
      throw CLI::ValidationError("field", "choose exactly one of --field rational or --p P");
    if (p != 0) return g2c::Field::prime(mpz_class(static_cast<unsigned long>(p)));
    return g2c::Field::rationals();
  }
};

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw g2c::Error(g2c::errc::io_failure, "cannot open " + out_path);
  out << payload;
  out.flush();
  if (!out) throw g2c::Error(g2c::errc::io_failure, "write to " + out_path + " failed");
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

// Sampling for the randomized suite. Over F_p: lambda uniform outside
// {0, 1}, p1 uniform over all residues. Over Q: numerators in [-20, 20],
// denominators in [1, 20], lambda redrawn while it hits {0, 1}.
g2c::Fe sample_lambda(g2c::Lcg64& rng, const g2c::Field& k) {
  if (k.is_prime()) {
    std::uint64_t span = k.modulus().get_ui() - 2;
    return g2c::Fe::of(k, mpz_class(2 + rng.below(span)));
  }
  while (true) {
    g2c::Fe v = g2c::Fe::of_fraction(k, rng.range(-20, 20), rng.range(1, 20));
    if (!v.is_zero() && !v.is_one()) return v;
  }
}

g2c::Fe sample_p1(g2c::Lcg64& rng, const g2c::Field& k) {
  if (k.is_prime()) return g2c::Fe::of(k, mpz_class(rng.below(k.modulus().get_ui())));
  return g2c::Fe::of_fraction(k, rng.range(-20, 20), rng.range(1, 20));
}

int run_verify(const g2c::Field& k, long trials, std::uint64_t seed) {
  g2c::Lcg64 rng(seed);
  long identity_failures = 0, verification_failures = 0;
  long in_moduli = 0, excluded = 0, skipped_p3 = 0;

  for (long i = 0; i < trials; ++i) {
    g2c::Fe lambda = sample_lambda(rng, k);
    g2c::Fe p1 = sample_p1(rng, k);
    g2c::CoverParams cp = g2c::derive_params(lambda, p1);

    for (const g2c::CheckResult& c : g2c::verify_identities(cp).checks) {
      if (c.skipped)
        ++skipped_p3;
      else if (!c.passed)
        ++identity_failures;
    }

    if (g2c::membership(lambda, p1) != g2c::Membership::in_moduli) {
      ++excluded;
      continue;
    }
    ++in_moduli;
    bool ok = g2c::verify_function_field(cp) && g2c::verify_diagram(cp) &&
              g2c::verify_normalization(cp).all_passed() &&
              g2c::verify_ramification(cp).all_passed();
    if (!ok) ++verification_failures;
  }

  nlohmann::json summary{{"field", k.str()},
                         {"trials", trials},
                         {"seed", seed},
                         {"identity_failures", identity_failures},
                         {"verification_failures", verification_failures},
                         {"in_moduli", in_moduli},
                         {"excluded", excluded},
                         {"p3_checks_skipped", skipped_p3},
                         {"ok", identity_failures + verification_failures == 0}};
  std::cout << dump(summary);
  return identity_failures + verification_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-2 degree-3 covers of a Legendre curve, exactly"};
  app.require_subcommand(1);

  FieldSpec params_field, verify_field, zlocus_field, moduli_field, family_field;
  std::string lambda_text, p1_text, format = "json", out_path;
  long trials = 200;
  std::uint64_t seed = 0;

  CLI::App* params_cmd =
      app.add_subcommand("params", "derived parameters, curve and cover for one (lambda, p1)");
  params_field.attach(params_cmd);
  params_cmd->add_option("--lambda", lambda_text, "lambda, as 'a' or 'a/b'")->required();
  params_cmd->add_option("--p1", p1_text, "parameter p1, as 'a' or 'a/b'")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized exact identity and cover verification sweep");
  verify_field.attach(verify_cmd);
  verify_cmd->add_option("--trials", trials, "number of random (lambda, p1) samples");
  verify_cmd->add_option("--seed", seed, "PRNG seed");

  CLI::App* zlocus_cmd = app.add_subcommand("zlocus", "degenerate-locus quartic report for lambda");
  zlocus_field.attach(zlocus_cmd);
  zlocus_cmd->add_option("--lambda", lambda_text, "lambda")->required();

  CLI::App* moduli_cmd = app.add_subcommand("moduli", "enumerate admissible p1 over F_p");
  moduli_field.attach(moduli_cmd, /*prime_only=*/true);
  moduli_cmd->add_option("--lambda", lambda_text, "lambda")->required();
  moduli_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  moduli_cmd->add_option("--out", out_path, "output path ('-' for stdout)");

  CLI::App* family_cmd =
      app.add_subcommand("family", "emit verified universal-family fibers");
  family_field.attach(family_cmd);
  family_cmd->add_option("--lambda", lambda_text, "lambda")->required();
  family_cmd->add_option("--p1", p1_text, "single parameter value; sweeps all admissible if omitted");
  family_cmd->add_option("--out", out_path, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (params_cmd->parsed()) {
      g2c::Field k = params_field.resolve();
      g2c::Fe lambda = g2c::Fe::parse(k, lambda_text);
      g2c::Fe p1 = g2c::Fe::parse(k, p1_text);
      g2c::FamilyFiber fiber = g2c::family_fiber(lambda, p1);
      std::cout << dump(g2c::cover_record(fiber.cover, fiber.checks));
      return fiber.all_passed() ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      g2c::Field k = verify_field.resolve();
      if (trials <= 0) throw CLI::ValidationError("trials", "must be positive");
      return run_verify(k, trials, seed);
    }

    if (zlocus_cmd->parsed()) {
      g2c::Field k = zlocus_field.resolve();
      g2c::ZReport report = g2c::z_locus(g2c::Fe::parse(k, lambda_text));
      std::cout << dump(g2c::to_json(report));
      return report.all_passed() ? 0 : 1;
    }

    if (moduli_cmd->parsed()) {
      if (moduli_field.p == 0)
        throw CLI::ValidationError("moduli", "enumeration requires --p P");
      g2c::Field k = g2c::Field::prime(mpz_class(static_cast<unsigned long>(moduli_field.p)));
      std::vector<g2c::ModuliReport> reports = {
          g2c::enumerate_moduli(g2c::Fe::parse(k, lambda_text))};
      emit(format == "csv" ? g2c::reports_to_csv(reports) : dump(g2c::to_json(reports[0])),
           out_path);
      return 0;
    }

    if (family_cmd->parsed()) {
      g2c::Field k = family_field.resolve();
      g2c::Fe lambda = g2c::Fe::parse(k, lambda_text);
      if (!p1_text.empty()) {
        g2c::FamilyFiber fiber = g2c::family_fiber(lambda, g2c::Fe::parse(k, p1_text));
        emit(dump(g2c::to_json(fiber)), out_path);
        return fiber.all_passed() ? 0 : 1;
      }
      // sweep needs a finite parameter line
      g2c::ModuliReport report = g2c::enumerate_moduli(lambda);
      nlohmann::json fibers = nlohmann::json::array();
      bool all_ok = true;
      for (const g2c::Fe& p1 : report.admissible) {
        g2c::FamilyFiber fiber = g2c::family_fiber(lambda, p1);
        all_ok = all_ok && fiber.all_passed();
        fibers.push_back(g2c::to_json(fiber));
      }
      emit(dump(fibers), out_path);
      return all_ok ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const g2c::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
