#include "zariski/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "zariski/error.hpp"

namespace zariski {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Parse, message); }

void require_keys(const json& node, const std::string& where,
                  std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required) {
  if (!node.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail("unknown key \"" + key + "\" in " + where);
  }
  for (const char* r : required) {
    if (!node.contains(r)) fail("missing key \"" + std::string(r) + "\" in " + where);
  }
}

std::string get_string(const json& node, const std::string& where) {
  if (!node.is_string()) fail(where + " must be a string");
  return node.get<std::string>();
}

long get_integer(const json& node, const std::string& where) {
  if (!node.is_number_integer()) fail(where + " must be an integer");
  if (node.is_number_unsigned() &&
      node.get<unsigned long long>() >
          static_cast<unsigned long long>(std::numeric_limits<long>::max())) {
    fail(where + " is out of range");
  }
  return node.get<long>();
}

const json& array_at(const json& node, const char* key, const std::string& where) {
  const json& value = node.at(key);
  if (!value.is_array()) fail("\"" + std::string(key) + "\" in " + where + " must be an array");
  return value;
}

}  // namespace

QDivisor parse_divisor(const nlohmann::json& node, const std::string& where) {
  if (!node.is_object()) fail(where + " must be an object of label -> rational");
  QDivisor d;
  for (const auto& [label, value] : node.items()) {
    const std::string at = where + "[\"" + label + "\"]";
    if (value.is_string()) {
      try {
        d.set(label, parse_rational(value.get<std::string>()));
      } catch (const Error& e) {
        fail(at + ": " + e.detail());
      }
    } else if (value.is_number_integer()) {
      d.set(label, Rational(get_integer(value, at)));
    } else {
      fail(at + " must be a rational string or an integer");
    }
  }
  return d;
}

nlohmann::json divisor_json(const QDivisor& d) {
  json out = json::object();
  for (const auto& [label, value] : d.terms()) out[label] = to_string(value);
  return out;
}

ConfigDocument parse_config(const nlohmann::json& doc) {
  require_keys(doc, "configuration", {"exceptional", "edges", "strict_transforms", "divisor", "G"},
               {"exceptional"});
  ConfigDocument result;
  const json& exceptional = array_at(doc, "exceptional", "configuration");
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    const std::string where = "exceptional[" + std::to_string(i) + "]";
    const json& node = exceptional[i];
    require_keys(node, where, {"name", "self_intersection", "genus"},
                 {"name", "self_intersection"});
    ExceptionalCurve curve;
    curve.label = get_string(node["name"], where + ".name");
    curve.self_intersection = get_integer(node["self_intersection"], where + ".self_intersection");
    if (node.contains("genus")) curve.genus = get_integer(node["genus"], where + ".genus");
    result.config.exceptional.push_back(std::move(curve));
  }
  if (doc.contains("edges")) {
    const json& edges = array_at(doc, "edges", "configuration");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const json& node = edges[i];
      if (!node.is_array() || node.size() != 3) {
        fail(where + " must be [nameA, nameB, multiplicity]");
      }
      result.config.edges.push_back({get_string(node[0], where + "[0]"),
                                     get_string(node[1], where + "[1]"),
                                     get_integer(node[2], where + "[2]")});
    }
  }
  if (doc.contains("strict_transforms")) {
    const json& strict = array_at(doc, "strict_transforms", "configuration");
    for (std::size_t i = 0; i < strict.size(); ++i) {
      const std::string where = "strict_transforms[" + std::to_string(i) + "]";
      const json& node = strict[i];
      require_keys(node, where, {"name", "meets"}, {"name"});
      StrictTransform transform;
      transform.label = get_string(node["name"], where + ".name");
      if (node.contains("meets")) {
        const json& meets = node["meets"];
        if (!meets.is_object()) fail(where + ".meets must be an object");
        for (const auto& [label, value] : meets.items()) {
          transform.meets[label] = get_integer(value, where + ".meets[\"" + label + "\"]");
        }
      }
      result.config.strict_transforms.push_back(std::move(transform));
    }
  }
  if (doc.contains("divisor")) result.divisor = parse_divisor(doc["divisor"], "divisor");
  if (doc.contains("G")) result.g = parse_divisor(doc["G"], "G");
  return result;
}

ConfigDocument parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return buffer.str();
}

ConfigDocument load_config(const std::filesystem::path& path) {
  return parse_config_text(read_file(path));
}

nlohmann::json emit_config(const ConfigDocument& doc) {
  json out = json::object();
  json exceptional = json::array();
  for (const auto& curve : doc.config.exceptional) {
    exceptional.push_back(
        {{"name", curve.label}, {"self_intersection", curve.self_intersection}, {"genus", curve.genus}});
  }
  out["exceptional"] = exceptional;
  json edges = json::array();
  for (const auto& edge : doc.config.edges) edges.push_back(json::array({edge.a, edge.b, edge.multiplicity}));
  out["edges"] = edges;
  json strict = json::array();
  for (const auto& transform : doc.config.strict_transforms) {
    json meets = json::object();
    for (const auto& [label, number] : transform.meets) meets[label] = number;
    strict.push_back({{"name", transform.label}, {"meets", meets}});
  }
  out["strict_transforms"] = strict;
  out["divisor"] = divisor_json(doc.divisor);
  if (doc.g) {
    json g = json::object();
    for (const auto& [label, value] : doc.g->terms()) {
      // G is integral in every valid file; keep exactness for anything else.
      if (is_integral(value) && value >= std::numeric_limits<long>::min() &&
          value <= std::numeric_limits<long>::max()) {
        g[label] = boost::multiprecision::numerator(value).convert_to<long>();
      } else {
        g[label] = to_string(value);
      }
    }
    out["G"] = g;
  }
  return out;
}

QDivisor load_g_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON in G file: ") + e.what());
  }
  if (doc.is_object() && doc.contains("exceptional")) {
    const ConfigDocument config = parse_config(doc);
    if (!config.g) fail("G file " + path.string() + " has no \"G\" key");
    return *config.g;
  }
  if (doc.is_object() && doc.size() == 1 && doc.contains("G") && doc["G"].is_object()) {
    return parse_divisor(doc["G"], "G");
  }
  return parse_divisor(doc, "G");
}

}  // namespace zariski
