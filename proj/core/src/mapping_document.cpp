#include "polyharm/mapping_document.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxTruncation = 1u << 20;

std::size_t read_count(const json& node, const std::string& path, std::size_t min_value) {
  if (!node.is_number_integer()) throw DocumentError("expected an integer", path);
  const auto v = node.get<long long>();
  if (v < static_cast<long long>(min_value) || v > static_cast<long long>(kMaxTruncation))
    throw DocumentError("integer out of range (minimum " + std::to_string(min_value) + ")", path);
  return static_cast<std::size_t>(v);
}

double read_real(const json& node, const std::string& path) {
  if (!node.is_number()) throw DocumentError("expected a number", path);
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw DocumentError("coefficient is not finite", path);
  return v;
}

void read_coefficients(const json& list, const std::string& path, std::size_t order,
                       PowerSeries& out) {
  if (!list.is_array()) throw DocumentError("expected an array of [j, re, im] triples", path);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const auto& t = list[i];
    if (!t.is_array() || t.size() != 3) throw DocumentError("expected a [j, re, im] triple", at);
    const std::size_t j = read_count(t[0], at + "/0", 1);
    if (j > order)
      throw DocumentError("degree " + std::to_string(j) + " exceeds truncation " +
                              std::to_string(order),
                          at + "/0");
    if (!seen.insert(j).second)
      throw DocumentError("duplicate coefficient for degree " + std::to_string(j), at);
    out.set(j, Complex{read_real(t[1], at + "/1"), read_real(t[2], at + "/2")});
  }
}

// One [j,re,im] triple per line; the number formatting is nlohmann's shortest round-trip form.
void write_coefficients(std::string& out, const char* key, const PowerSeries& s, bool last) {
  out += "      \"";
  out += key;
  out += "\": [";
  bool first = true;
  for (std::size_t j = 1; j <= s.order(); ++j) {
    const Complex c = s.coeff(j);
    // -0.0 is kept so that the round trip is bit-exact
    if (c.real() == 0.0 && c.imag() == 0.0 && !std::signbit(c.real()) && !std::signbit(c.imag()))
      continue;
    out += first ? "\n        " : ",\n        ";
    out += json::array({j, c.real(), c.imag()}).dump();
    first = false;
  }
  out += first ? "]" : "\n      ]";
  out += last ? "\n" : ",\n";
}

}  // namespace

MappingDocument parse_mapping_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), "");
  }
  if (!doc.is_object()) throw DocumentError("top level must be an object", "");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "p" && key != "truncation" && key != "layers")
      throw DocumentError("unknown key '" + key + "'", "/" + key);

  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw DocumentError("expected a string", "/name");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("p")) throw DocumentError("missing required field", "/p");
  const std::size_t p = read_count(doc["p"], "/p", 1);
  const std::size_t order =
      doc.contains("truncation") ? read_count(doc["truncation"], "/truncation", 1) : kDefaultTruncation;
  if (!doc.contains("layers")) throw DocumentError("missing required field", "/layers");
  const auto& layers_node = doc["layers"];
  if (!layers_node.is_array()) throw DocumentError("expected an array", "/layers");

  std::vector<HarmonicLayer> layers(p, HarmonicLayer{PowerSeries(order), PowerSeries(order)});
  std::vector<bool> seen(p, false);
  bool explicit_unit = false;
  for (std::size_t i = 0; i < layers_node.size(); ++i) {
    const std::string at = "/layers/" + std::to_string(i);
    const auto& node = layers_node[i];
    if (!node.is_object()) throw DocumentError("expected an object", at);
    for (const auto& [key, value] : node.items())
      if (key != "k" && key != "analytic" && key != "anti_analytic")
        throw DocumentError("unknown key '" + key + "'", at + "/" + key);
    if (!node.contains("k")) throw DocumentError("missing required field", at + "/k");
    const std::size_t k = read_count(node["k"], at + "/k", 1);
    if (k > p)
      throw DocumentError("layer index " + std::to_string(k) + " exceeds p = " + std::to_string(p),
                          at + "/k");
    if (seen[k - 1]) throw DocumentError("duplicate layer " + std::to_string(k), at + "/k");
    seen[k - 1] = true;
    auto& layer = layers[k - 1];
    if (node.contains("analytic")) read_coefficients(node["analytic"], at + "/analytic", order, layer.analytic);
    if (node.contains("anti_analytic"))
      read_coefficients(node["anti_analytic"], at + "/anti_analytic", order, layer.anti_analytic);
    if (k == 1 && node.contains("analytic"))
      for (const auto& t : node["analytic"])
        if (t[0].get<long long>() == 1) explicit_unit = true;
  }

  if (explicit_unit) {
    if (layers[0].analytic.coeff(1) != Complex{1.0, 0.0})
      throw DocumentError("normalization requires a_{1,1} = [1, 1.0, 0.0]", "/layers");
  } else {
    layers[0].analytic.set(1, 1.0);
  }
  if (std::abs(layers[0].anti_analytic.coeff(1)) >= 1.0)
    throw DocumentError("anti-analytic unit coefficient out of range", "/layers");

  return MappingDocument{std::move(name), PolyharmonicMap(std::move(layers))};
}

PolyharmonicMap parse_spec(std::string_view text) { return parse_mapping_document(text).map; }

std::string serialize_mapping(const LayeredSeries& f, const std::optional<std::string>& name) {
  std::string out = "{\n";
  if (name) out += "  \"name\": " + json(*name).dump() + ",\n";
  out += "  \"p\": " + std::to_string(f.degree()) + ",\n";
  out += "  \"truncation\": " + std::to_string(f.order()) + ",\n";
  out += "  \"layers\": [\n";
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    out += "    {\n      \"k\": " + std::to_string(k) + ",\n";
    write_coefficients(out, "analytic", f.layer(k).analytic, false);
    write_coefficients(out, "anti_analytic", f.layer(k).anti_analytic, true);
    out += k == f.degree() ? "    }\n" : "    },\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace polyharm
