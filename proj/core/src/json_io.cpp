#include <symprod/json_io.hpp>

#include <stdexcept>

namespace symprod {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

long parse_long_key(const std::string& key, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(key, &used);
  } catch (const std::exception&) {
    bad(std::string("bad ") + what + " key '" + key + "'");
  }
  if (used != key.size()) bad(std::string("bad ") + what + " key '" + key + "'");
  return v;
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) bad("rational must be a string");
  return rational_from_string(j.get<std::string>());
}

json laurent_to_json(const LaurentY& f) {
  json out = json::object();
  for (const auto& [e, c] : f.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

LaurentY laurent_from_json(const json& j) {
  if (j.is_string()) return laurent_from_string(j.get<std::string>());
  if (!j.is_object()) bad("laurent value must be an exponent map or expression string");
  LaurentY f;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) bad("laurent coefficient must be a rational string");
    f.set(parse_long_key(key, "exponent"), rational_from_string(value.get<std::string>()));
  }
  return f;
}

json laurent_scalar_to_json(const LaurentY& f) {
  if (f.is_constant()) return to_string(f.coeff(0));
  return laurent_to_json(f);
}

LaurentY laurent_scalar_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('y') == std::string::npos) return LaurentY(rational_from_string(s));
    return laurent_from_string(s);
  }
  return laurent_from_json(j);
}

json partition_to_json(const Partition& lambda) {
  json out = json::array();
  for (int p : lambda.parts()) out.push_back(p);
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) bad("partition must be an array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

json permutation_to_json(const Permutation& sigma) {
  json out = json::object();
  out["n"] = sigma.degree();
  out["cycles"] = sigma.cycle_string();
  return out;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("cycles"))
    bad("permutation must be {\"n\": int, \"cycles\": string}");
  return permutation_from_cycles(j.at("cycles").get<std::string>(), j.at("n").get<int>());
}

json class_function_to_json(const ClassFunction& f) {
  json values = json::object();
  for (const auto& [lambda, v] : f.values()) values[lambda.str()] = to_string(v);
  json out = json::object();
  out["n"] = f.n();
  out["values"] = std::move(values);
  return out;
}

ClassFunction class_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values"))
    bad("class function must be {\"n\": int, \"values\": {...}}");
  std::map<Partition, Rational> values;
  for (const auto& [key, value] : j.at("values").items())
    values.emplace(partition_from_string(key), rational_from_string(value.get<std::string>()));
  return ClassFunction(j.at("n").get<int>(), std::move(values));
}

json symfunc_to_json(const SymFunc& f) {
  json out = json::object();
  for (const auto& [mono, c] : f.terms()) out[mono.str()] = to_string(c);
  return out;
}

json ysymfunc_to_json(const YSymFunc& f) {
  json out = json::object();
  for (const auto& [mono, c] : f.terms()) out[mono.str()] = laurent_scalar_to_json(c);
  return out;
}

json graded_class_to_json(const GradedClass& c) {
  json comps = json::object();
  for (const auto& [i, v] : c.components()) comps[std::to_string(i)] = laurent_scalar_to_json(v);
  json out = json::object();
  out["kind"] = kind_name(c.kind());
  out["components"] = std::move(comps);
  out["label"] = c.label();
  return out;
}

GradedClass graded_class_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("components"))
    bad("graded class must be {\"kind\", \"components\", \"label\"}");
  ClassKind kind = kind_from_name(j.at("kind").get<std::string>());
  std::map<int, LaurentY> comps;
  for (const auto& [key, value] : j.at("components").items())
    comps.emplace(static_cast<int>(parse_long_key(key, "degree")),
                  laurent_scalar_from_json(value));
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : "c";
  return GradedClass(kind, std::move(comps), std::move(label));
}

json generator_to_json(const Generator& g) {
  json out = json::object();
  out["family"] = family_name(g.family);
  out["r"] = g.r;
  out["label"] = g.payload.label();
  return out;
}

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  for (const auto& g : m) out.push_back(generator_to_json(g));
  return out;
}

json element_to_json(const FreeAlgElement& x) {
  json out = json::object();
  for (const auto& [mono, c] : x.terms()) {
    // Pure scalars (single p-empty term) collapse to the scalar form.
    const auto& terms = c.terms();
    if (terms.size() == 1 && terms.begin()->first.empty())
      out[monomial_key(mono)] = laurent_scalar_to_json(terms.begin()->second);
    else
      out[monomial_key(mono)] = ysymfunc_to_json(c);
  }
  return out;
}

json bigraded_to_json(const oracle::BigradedSpace& w) {
  json out = json::object();
  for (const auto& [ip, dim] : w.dims())
    out[std::to_string(ip.first) + "," + std::to_string(ip.second)] = dim;
  return out;
}

oracle::BigradedSpace bigraded_from_json(const json& j) {
  if (!j.is_object()) bad("bigraded space must be an object");
  std::map<std::pair<int, int>, int> dims;
  for (const auto& [key, value] : j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) bad("bigraded key must be \"i,p\"");
    int i = static_cast<int>(parse_long_key(key.substr(0, comma), "bigraded i"));
    int p = static_cast<int>(parse_long_key(key.substr(comma + 1), "bigraded p"));
    if (!value.is_number_integer()) bad("bigraded dimension must be an integer");
    dims[{i, p}] = value.get<int>();
  }
  return oracle::BigradedSpace(std::move(dims));
}

namespace {

template <class R, class Fn>
json series_json(const TruncSeries<R>& s, Fn&& coeff_to_json) {
  json coeffs = json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(coeff_to_json(s.coeff(k)));
  json out = json::object();
  out["order"] = s.order();
  out["coeffs"] = std::move(coeffs);
  return out;
}

}  // namespace

json series_to_json(const TruncSeries<LaurentY>& s) {
  return series_json(s, [](const LaurentY& c) { return laurent_to_json(c); });
}

json series_to_json(const TruncSeries<Rational>& s) {
  return series_json(s, [](const Rational& c) { return rational_to_json(c); });
}

json series_to_json(const TruncSeries<FreeAlgElement>& s) {
  return series_json(s, [](const FreeAlgElement& c) { return element_to_json(c); });
}

}  // namespace symprod
