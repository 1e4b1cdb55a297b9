#pragma once

// Verification reports and JSON serialization of library values.

#include "charbasis/alternating.hpp"
#include "charbasis/partition.hpp"
#include "charbasis/scalar.hpp"
#include "charbasis/symmetric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace charbasis {

inline constexpr const char* kSchema = "charbasis/1";

struct VerificationReport {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  nlohmann::json witnesses = nlohmann::json::object();
  std::vector<VerificationReport> subreports;
  double runtime_ms = 0.0;
};

/// Report as JSON. Runtime is omitted unless requested so that identical
/// runs serialize to identical bytes.
nlohmann::json to_json(const VerificationReport& report, bool with_runtime = false);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const QuadValue& v);

/// Exact integers are written as JSON numbers when they fit in 64 bits and
/// as decimal strings otherwise.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const Rational& v);

nlohmann::json table_to_json(const CharacterTable& table);
nlohmann::json table_to_json(const std::vector<AltCharacter>& table, int n);

/// CSV: header "label,<class>,<class>,..." with canonical partition text.
std::string table_to_csv(const CharacterTable& table);
std::string table_to_csv(const std::vector<AltCharacter>& table, int n);

CharacterTable table_from_json(const nlohmann::json& j);

}  // namespace charbasis
