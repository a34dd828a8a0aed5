#pragma once
// JSON serialization of witness certificates and verification reports.
// nlohmann::json with ordered (sorted) keys gives a canonical encoding.

#include <json.hpp>
#include <string>

#include "witness.hpp"

namespace epiwit {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

json cert_to_json(const Certificate& c);
Certificate cert_from_json(const json& j);
json report_to_json(const Report& r);

// sorted keys, two-space indent, trailing newline, LF
std::string canonical_dump(const json& j);

}  // namespace epiwit
