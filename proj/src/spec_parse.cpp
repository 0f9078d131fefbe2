#include "spec_parse.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace blochcomp::spec {

using fn::AnalyticMap;
using geom::Complex;
using geom::DiskPoint;
using nlohmann::json;

namespace {

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex{j[0].get<double>(), j[1].get<double>()};
  throw ParseError(where + ": expected a complex number as [re, im]");
}

DiskPoint parse_disk_point(const json& j, const std::string& where) {
  const Complex z = parse_complex(j, where);
  const auto p = DiskPoint::try_make(z);
  if (!p) throw ParseError(where + ": point must lie strictly inside the unit disk");
  return *p;
}

std::vector<Complex> parse_complex_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where + ": missing required field \"" + key + "\"");
  return *it;
}

AnalyticMap parse_node(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": map node must be an object");
  const std::string type = require_field(j, "type", where).get<std::string>();
  const std::string here = where + "/" + type;
  try {
    if (type == "poly") {
      return AnalyticMap::polynomial(
          parse_complex_list(require_field(j, "coeffs", here), here + "/coeffs"));
    }
    if (type == "moebius") {
      Complex rotation{1.0, 0.0};
      if (j.contains("rotation"))
        rotation = parse_complex(j["rotation"], here + "/rotation");
      return AnalyticMap::moebius(
          parse_disk_point(require_field(j, "a", here), here + "/a"), rotation);
    }
    if (type == "blaschke") {
      const json& zeros_j = require_field(j, "zeros", here);
      if (!zeros_j.is_array()) throw ParseError(here + "/zeros: expected an array");
      std::vector<DiskPoint> zeros;
      for (std::size_t i = 0; i < zeros_j.size(); ++i)
        zeros.push_back(parse_disk_point(
            zeros_j[i], here + "/zeros[" + std::to_string(i) + "]"));
      Complex rotation{1.0, 0.0};
      if (j.contains("rotation"))
        rotation = parse_complex(j["rotation"], here + "/rotation");
      return AnalyticMap::blaschke(std::move(zeros), rotation);
    }
    if (type == "series") {
      auto coeffs =
          parse_complex_list(require_field(j, "coeffs", here), here + "/coeffs");
      int degree = static_cast<int>(coeffs.size()) - 1;
      if (j.contains("degree")) degree = j["degree"].get<int>();
      return AnalyticMap::power_series(std::move(coeffs), degree);
    }
    if (type == "scale") {
      return AnalyticMap::scale(
          parse_node(require_field(j, "inner", here), here + "/inner"),
          parse_complex(require_field(j, "factor", here), here + "/factor"));
    }
    if (type == "compose") {
      return AnalyticMap::compose(
          parse_node(require_field(j, "outer", here), here + "/outer"),
          parse_node(require_field(j, "inner", here), here + "/inner"));
    }
    if (type == "product") {
      return AnalyticMap::product(
          parse_node(require_field(j, "left", here), here + "/left"),
          parse_node(require_field(j, "right", here), here + "/right"));
    }
    if (type == "affine") {
      const json& terms_j = require_field(j, "terms", here);
      if (!terms_j.is_array()) throw ParseError(here + "/terms: expected an array");
      std::vector<std::pair<Complex, AnalyticMap>> terms;
      for (std::size_t i = 0; i < terms_j.size(); ++i) {
        const std::string tw = here + "/terms[" + std::to_string(i) + "]";
        const json& t = terms_j[i];
        if (!t.is_object()) throw ParseError(tw + ": expected an object");
        terms.emplace_back(parse_complex(require_field(t, "weight", tw), tw),
                           parse_node(require_field(t, "map", tw), tw + "/map"));
      }
      return AnalyticMap::affine(std::move(terms));
    }
    if (type == "extremal") {
      const double alpha = require_field(j, "alpha", here).get<double>();
      return AnalyticMap::extremal(
          parse_disk_point(require_field(j, "a", here), here + "/a"), alpha);
    }
    if (type == "boundary_power") {
      return AnalyticMap::boundary_power(
          parse_complex(require_field(j, "omega", here), here + "/omega"),
          require_field(j, "beta", here).get<double>());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(here + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(here + ": " + e.what());
  }
  throw ParseError(where + ": unknown node type \"" + type + "\"");
}

}  // namespace

MapSpecDocument parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spec: root must be an object");

  MapSpecDocument doc;
  doc.source_text = text;
  if (j.contains("alpha")) {
    if (!j["alpha"].is_number() || !(j["alpha"].get<double>() > 0.0))
      throw ParseError("spec/alpha: must be a number > 0");
    doc.alpha = j["alpha"].get<double>();
  }
  if (j.contains("map")) {
    doc.map = parse_node(j["map"], "spec/map");
    doc.map_is_extremal =
        j["map"].is_object() && j["map"].value("type", "") == "extremal";
  }
  if (j.contains("h")) doc.h = parse_node(j["h"], "spec/h");
  if (j.contains("g")) doc.g = parse_node(j["g"], "spec/g");
  if (j.contains("budget")) {
    const json& b = j["budget"];
    if (!b.is_object()) throw ParseError("spec/budget: must be an object");
    if (b.contains("kmax")) doc.budget.k_max = b["kmax"].get<int>();
    if (b.contains("rel_tol")) doc.budget.rel_tol = b["rel_tol"].get<double>();
    if (b.contains("profile_kmax"))
      doc.budget.profile_k_max = b["profile_kmax"].get<int>();
  }
  if (!doc.map && !doc.h && !doc.g)
    throw ParseError("spec: document needs a \"map\" or harmonic components");
  return doc;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace blochcomp::spec
