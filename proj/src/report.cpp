#include "charbasis/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace charbasis {

namespace {

using json = nlohmann::json;

std::string class_text(const AltClass& c) {
  switch (c.tag) {
    case SplitTag::Plus: return to_text(c.cycle_type) + "(+)";
    case SplitTag::Minus: return to_text(c.cycle_type) + "(-)";
    case SplitTag::None: break;
  }
  return to_text(c.cycle_type);
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return v.at("text").get<std::string>();
  return v.dump();
}

std::string csv_from(const json& table) {
  std::ostringstream out;
  out << "label";
  for (const auto& c : table.at("classes")) out << ',' << c.get<std::string>();
  out << '\n';
  for (const auto& row : table.at("characters")) {
    out << row.at("label").get<std::string>();
    for (const auto& v : row.at("values")) out << ',' << csv_cell(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace

json to_json(const VerificationReport& report, bool with_runtime) {
  json j = json::object();
  j["schema"] = kSchema;
  j["claim"] = report.claim;
  j["params"] = report.params;
  j["passed"] = report.passed;
  j["witnesses"] = report.witnesses;
  json subs = json::array();
  for (const auto& s : report.subreports) {
    json sj = to_json(s, with_runtime);
    sj.erase("schema");
    subs.push_back(std::move(sj));
  }
  j["subreports"] = std::move(subs);
  if (with_runtime) j["runtime_ms"] = report.runtime_ms;
  return j;
}

json to_json(const Partition& p) { return to_text(p); }

json to_json(const QuadValue& v) {
  if (v.is_integer()) return to_json(v.integral());
  return {{"a", to_json(v.a())}, {"b", to_json(v.b())}, {"radicand", v.delta()}, {"text", to_text(v)}};
}

json to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json to_json(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return to_json(BigInt(v.get_num()));
  return v.get_str();
}

json table_to_json(const CharacterTable& table) {
  json j;
  j["schema"] = kSchema;
  j["group"] = "S_n";
  j["n"] = table.n;
  json classes = json::array();
  for (const auto& c : table.classes) classes.push_back(to_text(c));
  j["classes"] = std::move(classes);
  json chars = json::array();
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    json values = json::array();
    for (Eigen::Index c = 0; c < table.values.cols(); ++c)
      values.push_back(to_json(table.values(static_cast<Eigen::Index>(i), c)));
    chars.push_back({{"label", to_text(table.labels[i])}, {"values", std::move(values)}});
  }
  j["characters"] = std::move(chars);
  return j;
}

json table_to_json(const std::vector<AltCharacter>& table, int n) {
  json j;
  j["schema"] = kSchema;
  j["group"] = "A_n";
  j["n"] = n;
  json classes = json::array();
  if (!table.empty())
    for (const auto& c : table.front().classes) classes.push_back(class_text(c));
  j["classes"] = std::move(classes);
  json chars = json::array();
  for (const auto& rho : table) {
    json values = json::array();
    for (const auto& v : rho.values) values.push_back(to_json(v));
    chars.push_back({{"label", to_text(rho.label)}, {"values", std::move(values)}});
  }
  j["characters"] = std::move(chars);
  return j;
}

std::string table_to_csv(const CharacterTable& table) { return csv_from(table_to_json(table)); }

std::string table_to_csv(const std::vector<AltCharacter>& table, int n) {
  return csv_from(table_to_json(table, n));
}

CharacterTable table_from_json(const json& j) {
  if (j.value("group", "") != "S_n") throw std::invalid_argument("table_from_json: not an S_n table");
  CharacterTable t;
  t.n = j.at("n").get<int>();
  for (const auto& c : j.at("classes")) t.classes.push_back(parse_partition(c.get<std::string>()));
  const auto& chars = j.at("characters");
  t.values.resize(static_cast<Eigen::Index>(chars.size()), static_cast<Eigen::Index>(t.classes.size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    t.labels.push_back(parse_partition(chars[i].at("label").get<std::string>()));
    const auto& values = chars[i].at("values");
    if (values.size() != t.classes.size()) throw std::invalid_argument("table_from_json: ragged row");
    for (std::size_t c = 0; c < values.size(); ++c) {
      const auto& v = values[c];
      t.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          v.is_string() ? BigInt(v.get<std::string>()) : BigInt(static_cast<long>(v.get<std::int64_t>()));
    }
  }
  return t;
}

}  // namespace charbasis
