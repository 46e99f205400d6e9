#include "haefliger/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "haefliger/error.hpp"

namespace haefliger {

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    long long den = 1;
    if (slash != std::string::npos) {
      const std::string rest = text.substr(slash + 1);
      den = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
    if (den == 0) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
}

namespace io {

namespace {

template <typename T>
T field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  try {
    return obj.at(name).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::ParseError, std::string("field '") + name + "' has the wrong type");
  }
}

int level_field(const json& obj, const char* name) {
  const int v = field<int>(obj, name);
  if (v != 0 && v != 1) throw Error(ErrorKind::ParseError, std::string("field '") + name + "' must be 0 or 1");
  return v;
}

}  // namespace

CrossingDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "diagram must be a JSON object");
  RawDiagram raw;
  raw.k = field<int>(j, "k");
  raw.m = field<int>(j, "m");

  std::set<LiftPair> keys;
  if (j.contains("lk")) {
    if (!j["lk"].is_array()) throw Error(ErrorKind::ParseError, "'lk' must be an array");
    for (const auto& e : j["lk"]) {
      LkEntry entry{{field<int>(e, "i"), level_field(e, "ei")},
                    {field<int>(e, "j"), level_field(e, "ej")},
                    field<int>(e, "value")};
      raw.lk.push_back(entry);
      if (!keys.insert(make_lift_pair(entry.a, entry.b)).second) {
        // Let validation report conflicting values; identical restatements are still rejected.
        validate_diagram(raw);
        throw Error(ErrorKind::ParseError, "duplicate linking key");
      }
    }
  }
  std::set<LiftId> lifts;
  if (j.contains("writhe")) {
    if (!j["writhe"].is_array()) throw Error(ErrorKind::ParseError, "'writhe' must be an array");
    for (const auto& w : j["writhe"]) {
      WritheEntry entry{{field<int>(w, "i"), level_field(w, "e")}, field<int>(w, "value")};
      raw.writhe.push_back(entry);
      if (!lifts.insert(entry.lift).second) {
        validate_diagram(raw);
        throw Error(ErrorKind::ParseError, "duplicate writhe key");
      }
    }
  }
  return validate_diagram(raw);
}

json diagram_to_json(const CrossingDiagram& d) {
  json lk = json::array();
  for (const auto& [key, value] : d.lk_entries()) {
    lk.push_back({{"i", key.first.crossing},
                  {"ei", key.first.level},
                  {"j", key.second.crossing},
                  {"ej", key.second.level},
                  {"value", value}});
  }
  json writhe = json::array();
  for (const auto& [lift, value] : d.writhe_entries())
    writhe.push_back({{"i", lift.crossing}, {"e", lift.level}, {"value", value}});
  return {{"k", d.k()}, {"m", d.m()}, {"lk", lk}, {"writhe", writhe}};
}

std::vector<PolyCurve> curves_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw Error(ErrorKind::ParseError, "curve file needs a 'components' array");
  std::vector<PolyCurve> out;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw Error(ErrorKind::ParseError, "component must be an array of points");
    std::vector<Vec3> vertices;
    for (const auto& p : comp) {
      if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number())
        throw Error(ErrorKind::ParseError, "point must be [x, y, z]");
      vertices.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    out.emplace_back(std::move(vertices));
  }
  return out;
}

json curves_to_json(const std::vector<PolyCurve>& curves) {
  json comps = json::array();
  for (const auto& c : curves) {
    json pts = json::array();
    for (const auto& v : c.vertices()) pts.push_back({v.x, v.y, v.z});
    comps.push_back(std::move(pts));
  }
  return {{"components", comps}};
}

json rational_to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

}  // namespace io
}  // namespace haefliger
