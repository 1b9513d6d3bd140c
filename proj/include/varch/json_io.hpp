#pragma once

// JSON readers/writers for the file formats the CLI and the tests speak:
// arrangements (geometric or covector form), apartments, q-assignments.
// Every malformed document surfaces as InputError.

#include <json.hpp>

#include <string>

#include "varch/arrangement.hpp"
#include "varch/polynomial.hpp"

namespace varch {

using Json = nlohmann::json;

Arrangement arrangement_from_json(const Json& doc);
Apartment apartment_from_json(const Json& doc);
QAssignment qassignment_from_json(const Json& doc);

Arrangement load_arrangement(const std::string& path);
Apartment load_apartment(const std::string& path);
QAssignment load_qassignment(const std::string& path);

// "1,3" -> {1,3}; "" -> the empty flat.  Indices are sorted and deduplicated.
Flat parse_flat(const std::string& text);

Json json_from_file(const std::string& path);

}  // namespace varch
