#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fibercalc/scene.hpp"

namespace fibercalc {

// Builders for "fibercalc-report/1" documents. Object keys are sorted and
// every number is an exact integer; halves are {"num": k, "den": 2}.
nlohmann::json invariants_report(const Scene& scene);
nlohmann::json family_table_report(const FiberedFamily& fam, std::int64_t n_from, std::int64_t n_to);
nlohmann::json alexander_report(const Scene& scene);
nlohmann::json certify_report(const FiberedFamily& fam, std::int64_t n, std::optional<std::int64_t> cl0);
nlohmann::json bound_report(std::int64_t chi, std::int64_t hopf, std::optional<std::int64_t> budget);

// Compact single-line serialization followed by '\n'.
std::string canonical_dump(const nlohmann::json& report);
// Human-readable rendering of any report built above.
std::string render_text(const nlohmann::json& report);

nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(HalfInteger h);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntPolynomial& p);

}  // namespace fibercalc
