#include "isojac/family_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace isojac {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(where + ": expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw Error(where + ": unknown key \"" + key + "\"");
}

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw Error(where + ": rationals must be decimal strings");
}

std::vector<Rational> coords_of(const json& v, const std::string& where) {
  if (v.is_array()) {
    std::vector<Rational> out;
    for (const auto& c : v) out.push_back(rational_of(c, where));
    return out;
  }
  return {rational_of(v, where)};
}

int int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(where + ": expected an integer");
  return v.get<int>();
}

CorrPoly poly_of(const json& v, const TowerPtr& field, const std::string& where) {
  if (!v.is_array()) throw Error(where + ": expected a list of terms");
  CorrPoly p(field);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    reject_unknown(v[i], {"e1", "e2", "et", "coeff"}, at);
    if (!v[i].contains("coeff")) throw Error(at + ": missing coeff");
    Monomial m{v[i].contains("e1") ? int_of(v[i]["e1"], at) : 0, v[i].contains("e2") ? int_of(v[i]["e2"], at) : 0,
               v[i].contains("et") ? int_of(v[i]["et"], at) : 0};
    if (m.x1 < 0 || m.x2 < 0 || m.t < 0) throw Error(at + ": negative exponent");
    auto c = coords_of(v[i]["coeff"], at);
    if (c.size() > static_cast<std::size_t>(field->degree())) throw Error(at + ": too many coordinates");
    p.add_term(m, field->element(std::move(c)));
  }
  return p;
}

json coords_json(const std::vector<Rational>& c) {
  json out = json::array();
  for (const auto& q : c) out.push_back(q.get_str());
  return out;
}

json poly_json(const CorrPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"e1", m.x1}, {"e2", m.x2}, {"et", m.t}, {"coeff", coords_json(c.coords())}});
  return out;
}

}  // namespace

FamilySpec parse_family_json(const std::string& text, const std::string& provenance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed family file: ") + e.what());
  }
  reject_unknown(doc, {"id", "n", "field", "cm", "names", "A", "f", "sign_of_g", "expected"}, "family");
  for (const char* key : {"n", "field", "A", "expected"})
    if (!doc.contains(key)) throw Error(std::string("family: missing key \"") + key + "\"");

  FamilySpec s;
  s.provenance = provenance;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) throw Error("family.id: expected a string");
    s.id = doc["id"].get<std::string>();
  }
  s.n = int_of(doc["n"], "family.n");
  if (s.n < 2) throw Error("family.n must be at least 2");

  if (!doc["field"].is_array()) throw Error("family.field: expected a list of steps");
  std::vector<TowerStep> steps;
  for (std::size_t k = 0; k < doc["field"].size(); ++k) {
    const json& step = doc["field"][k];
    const std::string at = "family.field[" + std::to_string(k) + "]";
    if (!step.is_array()) throw Error(at + ": expected a coefficient list");
    TowerStep ts;
    for (const auto& c : step) ts.coeffs.push_back(coords_of(c, at));
    steps.push_back(std::move(ts));
  }
  const bool cm = doc.contains("cm") ? doc["cm"].get<bool>() : true;
  std::vector<std::string> names;
  if (doc.contains("names"))
    for (const auto& nm : doc["names"]) names.push_back(nm.get<std::string>());
  s.field = make_field(std::move(steps), cm, std::move(names));

  s.A = poly_of(doc["A"], s.field, "family.A");
  if (doc.contains("f")) s.f = poly_of(doc["f"], s.field, "family.f");
  if (doc.contains("sign_of_g")) {
    s.sign_of_g = int_of(doc["sign_of_g"], "family.sign_of_g");
    if (s.sign_of_g != 1 && s.sign_of_g != -1) throw Error("family.sign_of_g must be 1 or -1");
  }

  const json& ex = doc["expected"];
  reject_unknown(ex, {"m", "kernel_template", "e", "nu", "tau_sign", "simplicity_set"}, "family.expected");
  if (ex.contains("m")) {
    const Rational m = rational_of(ex["m"], "family.expected.m");
    if (!is_integer(m) || sgn(m) <= 0) throw Error("family.expected.m must be a positive integer");
    s.expected.m = m.get_num();
  }
  if (ex.contains("kernel_template")) s.expected.kernel_template = ex["kernel_template"].get<std::string>();
  if (ex.contains("e")) s.expected.e = int_of(ex["e"], "family.expected.e");
  if (ex.contains("nu")) {
    s.expected.nu = ex["nu"].get<std::string>();
    if (s.expected.nu != "d" && s.expected.nu != "d-1") throw Error("family.expected.nu must be \"d\" or \"d-1\"");
  }
  if (ex.contains("tau_sign")) {
    s.expected.tau_sign = int_of(ex["tau_sign"], "family.expected.tau_sign");
    if (*s.expected.tau_sign != 1 && *s.expected.tau_sign != -1)
      throw Error("family.expected.tau_sign must be 1 or -1");
  }
  if (ex.contains("simplicity_set")) s.expected.simplicity_set = ex["simplicity_set"].get<std::string>();
  return s;
}

FamilySpec read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open family data file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_json(buf.str(), "file:" + path);
}

std::string family_to_json(const FamilySpec& spec, int indent) {
  json doc;
  if (!spec.id.empty()) doc["id"] = spec.id;
  doc["n"] = spec.n;
  json field = json::array();
  for (const auto& step : spec.field->steps()) {
    json coeffs = json::array();
    for (const auto& c : step.coeffs) coeffs.push_back(coords_json(c));
    field.push_back(coeffs);
  }
  doc["field"] = field;
  doc["cm"] = spec.field->has_cm();
  doc["names"] = spec.field->names();
  if (spec.A) doc["A"] = poly_json(*spec.A);
  if (spec.f) doc["f"] = poly_json(*spec.f);
  doc["sign_of_g"] = spec.sign_of_g;
  json ex = json::object();
  if (spec.expected.m) ex["m"] = spec.expected.m->get_str();
  if (!spec.expected.kernel_template.empty()) ex["kernel_template"] = spec.expected.kernel_template;
  if (spec.expected.e) ex["e"] = *spec.expected.e;
  if (!spec.expected.nu.empty()) ex["nu"] = spec.expected.nu;
  if (spec.expected.tau_sign) ex["tau_sign"] = *spec.expected.tau_sign;
  if (!spec.expected.simplicity_set.empty()) ex["simplicity_set"] = spec.expected.simplicity_set;
  doc["expected"] = ex;
  return doc.dump(indent) + "\n";
}

}  // namespace isojac
