#include "gpe/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpe {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "json-lines") return OutputFormat::JsonLines;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "human") return OutputFormat::Human;
  throw std::invalid_argument("unknown format: " + s);
}

json provenance(const std::string& command, i64 p, int e, const PolyFp& modulus,
                i64 seed) {
  return json{{"type", "provenance"}, {"command", command},   {"p", p},
              {"e", e},               {"modulus", poly_to_text(modulus)},
              {"seed", seed},         {"version", kVersion}};
}

json field_record(const FqField& field) {
  json mats = json::array();
  for (const auto& m : field.structure_matrices()) mats.push_back(mat_to_text(m));
  return json{{"type", "field"},
              {"p", field.p()},
              {"e", field.e()},
              {"modulus", poly_to_text(field.modulus())},
              {"structure_matrices", mats}};
}

std::string subspace_to_text(const SubspaceFp& s) {
  if (s.dim() == 0) return "0";
  return mat_to_text(s.basis());
}

SubspaceFp subspace_from_text(i64 p, int ambient, const std::string& text) {
  if (text == "0") return SubspaceFp(ambient, p);
  MatFp m = mat_from_text(p, text);
  if (m.cols() != ambient)
    throw std::invalid_argument("subspace_from_text: ambient mismatch");
  return SubspaceFp::from_span(m);
}

json family_record(const FamilyMember& m, const SubspaceFp& label) {
  return json{{"type", "member"},
              {"N", subspace_to_text(m.N)},
              {"a", poly_to_text(m.a)},
              {"label", subspace_to_text(label)},
              {"complement", {m.complement.first, m.complement.second}}};
}

json classification_record(const Classification& c) {
  json orbits = json::array();
  for (const auto& o : c.orbits)
    orbits.push_back(json{{"label", subspace_to_text(o.label)},
                          {"size", o.size},
                          {"a_coeffs", poly_to_text(o.a)}});
  return json{{"type", "classification"},
              {"p", c.p},
              {"e", c.e},
              {"member_count", c.member_count},
              {"class_count", c.class_count},
              {"burnside_count", c.burnside_count},
              {"orbits", orbits}};
}

json fingerprint_record(const Fingerprint& f) {
  json classes = json::array();
  for (const auto& [size, count] : f.classes)
    classes.push_back(json{{"size", size}, {"count", count}});
  return json{{"order", f.order},       {"d", f.d},
              {"derived", f.derived},   {"center", f.center},
              {"exponent", f.exponent}, {"classes", classes}};
}

json profile_records(const ProfileReport& r) {
  json rows = json::array();
  for (const auto& [f, count] : r.classes) {
    json row = fingerprint_record(f);
    row["type"] = "profile-class";
    row["basis"] = r.basis;
    row["count"] = count;
    rows.push_back(row);
  }
  return rows;
}

namespace {

void emit_csv(std::ostream& os, const std::vector<json>& records) {
  // union of scalar keys over all records, in first-seen order
  std::vector<std::string> keys;
  auto scalar = [](const json& v) { return !v.is_object() && !v.is_array(); };
  for (const auto& rec : records)
    for (auto it = rec.begin(); it != rec.end(); ++it)
      if (scalar(it.value()) &&
          std::find(keys.begin(), keys.end(), it.key()) == keys.end())
        keys.push_back(it.key());
  for (size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& rec : records) {
    for (size_t i = 0; i < keys.size(); ++i) {
      if (i) os << ',';
      auto it = rec.find(keys[i]);
      if (it != rec.end() && scalar(*it)) {
        if (it->is_string())
          os << '"' << it->get<std::string>() << '"';
        else
          os << it->dump();
      }
    }
    os << '\n';
  }
}

void emit_human(std::ostream& os, const std::vector<json>& records) {
  for (const auto& rec : records) {
    bool first = true;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (it.key() == "type") continue;
      if (!first) os << "  ";
      first = false;
      os << it.key() << '=' << it->dump();
    }
    os << '\n';
  }
}

}  // namespace

void emit_records(std::ostream& os, const std::vector<json>& records,
                  OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::JsonLines:
      for (const auto& rec : records) os << rec.dump() << '\n';
      break;
    case OutputFormat::Csv:
      emit_csv(os, records);
      break;
    case OutputFormat::Human:
      emit_human(os, records);
      break;
  }
}

}  // namespace gpe
