#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpe/isotest.hpp"
#include "gpe/profile.hpp"

#include <json.hpp>

namespace gpe {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { JsonLines, Csv, Human };
OutputFormat parse_format(const std::string& s);  // throws on unknown

// Every report starts with a provenance record: {p, e, modulus, seed,
// version, command}. Reports are deterministic for fixed inputs.
nlohmann::json provenance(const std::string& command, i64 p, int e,
                          const PolyFp& modulus, i64 seed);

nlohmann::json field_record(const FqField& field);
nlohmann::json family_record(const FamilyMember& m, const SubspaceFp& label);
nlohmann::json classification_record(const Classification& c);
nlohmann::json profile_records(const ProfileReport& r);
nlohmann::json fingerprint_record(const Fingerprint& f);

std::string subspace_to_text(const SubspaceFp& s);
SubspaceFp subspace_from_text(i64 p, int ambient, const std::string& text);

// Render a stream of records in the requested format. json-lines prints one
// record per line; csv flattens scalar fields with a header row; human is a
// readable rendering of the same records.
void emit_records(std::ostream& os, const std::vector<nlohmann::json>& records,
                  OutputFormat fmt);

}  // namespace gpe
