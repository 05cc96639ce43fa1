#pragma once

#include <json.hpp>

#include "g2cover/cover.hpp"

namespace g2c {

struct ModuliReport;
struct FamilyFiber;

// JSON encodings. Rationals appear as "a/b" strings ("a" for integers),
// prime-field elements as {"residue": n, "p": p}, the point at infinity as
// the string "inf". nlohmann::json orders keys alphabetically, which keeps
// every dump byte-stable.

nlohmann::json to_json(const Fe& v);
nlohmann::json to_json(const ProjPoint& p);
nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const BinaryForm& f);
nlohmann::json to_json(const RationalSelfMap& m);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const ZReport& r);
nlohmann::json to_json(const ModuliReport& r);

/// The full per-(lambda, p1) record: parameters, curve, cover and check
/// results.
nlohmann::json cover_record(const Genus2Cover& cover, const CheckReport& checks);
nlohmann::json to_json(const FamilyFiber& fiber);

}  // namespace g2c
