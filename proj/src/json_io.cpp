#include "varch/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace varch {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

std::string require_string(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

Rational rational_field(const Json& j, const std::string& what) {
  return parse_rational(require_string(j, what));
}

}  // namespace

Json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
  return doc;
}

Arrangement arrangement_from_json(const Json& doc) {
  if (!doc.is_object()) bad("arrangement document must be an object");
  const std::string type = require_string(doc.value("type", Json("")), "type");
  if (type == "geometric") {
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) bad("geometric input needs an integer dim");
    Geometry g;
    g.dim = doc["dim"].get<int>();
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
      bad("geometric input needs a hyperplanes array");
    }
    for (const Json& h : doc["hyperplanes"]) {
      if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() || !h.contains("offset")) {
        bad("each hyperplane needs a normal array and an offset");
      }
      Hyperplane hp;
      for (const Json& c : h["normal"]) hp.normal.push_back(rational_field(c, "normal entry"));
      hp.offset = rational_field(h["offset"], "offset");
      g.hyperplanes.push_back(std::move(hp));
    }
    return Arrangement::from_geometry(std::move(g));
  }
  if (type == "covectors") {
    if (!doc.contains("m") || !doc["m"].is_number_integer()) bad("covector input needs an integer m");
    const int m = doc["m"].get<int>();
    const std::string mode_text = require_string(doc.value("mode", Json("")), "mode");
    Mode mode;
    if (mode_text == "full") {
      mode = Mode::full;
    } else if (mode_text == "chambers_only") {
      mode = Mode::chambers_only;
    } else {
      bad("mode must be \"full\" or \"chambers_only\"");
    }
    if (!doc.contains("faces") || !doc["faces"].is_array()) bad("covector input needs a faces array");
    std::vector<SignVector> faces;
    for (const Json& f : doc["faces"]) faces.push_back(require_string(f, "face"));
    return Arrangement::from_covectors(m, mode, faces);
  }
  bad("type must be \"geometric\" or \"covectors\"");
}

Apartment apartment_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("constraints") || !doc["constraints"].is_object()) {
    bad("apartment document needs a constraints object");
  }
  Apartment k;
  for (const auto& [key, value] : doc["constraints"].items()) {
    int h = 0;
    try {
      std::size_t used = 0;
      h = std::stoi(key, &used);
      if (used != key.size()) bad("constraint key '" + key + "' is not an integer");
    } catch (const std::exception&) {
      bad("constraint key '" + key + "' is not an integer");
    }
    if (h < 1) bad("constraint key '" + key + "' must be a hyperplane index >= 1");
    const std::string sign = require_string(value, "constraint value");
    if (sign.size() != 1 || (sign[0] != '+' && sign[0] != '-')) {
      bad("constraint value for hyperplane " + key + " must be \"+\" or \"-\"");
    }
    k.constraints[h] = sign[0];
  }
  return k;
}

QAssignment qassignment_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("q") || !doc["q"].is_array()) {
    bad("q document needs a q array");
  }
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const Json& entry : doc["q"]) {
    if (!entry.is_array() || entry.size() != 2) {
      bad("each q entry must be a [plus, minus] pair");
    }
    pairs.emplace_back(rational_field(entry[0], "q value"), rational_field(entry[1], "q value"));
  }
  return QAssignment(std::move(pairs));
}

Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(json_from_file(path));
}

Apartment load_apartment(const std::string& path) {
  return apartment_from_json(json_from_file(path));
}

QAssignment load_qassignment(const std::string& path) {
  return qassignment_from_json(json_from_file(path));
}

Flat parse_flat(const std::string& text) {
  Flat out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(pos, comma - pos);
    if (piece.empty()) bad("empty index in flat '" + text + "'");
    for (char c : piece) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        bad("flat indices must be positive integers, got '" + piece + "'");
      }
    }
    const int h = std::stoi(piece);
    if (h < 1) bad("flat indices are 1-based");
    out.hyperplanes.push_back(h);
    pos = comma + 1;
  }
  std::sort(out.hyperplanes.begin(), out.hyperplanes.end());
  out.hyperplanes.erase(std::unique(out.hyperplanes.begin(), out.hyperplanes.end()),
                        out.hyperplanes.end());
  return out;
}

}  // namespace varch
