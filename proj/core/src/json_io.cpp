#include "qskein/json_io.hpp"

#include <string>
#include <vector>

#include "qskein/errors.hpp"

namespace qskein {

using nlohmann::json;

namespace {

json encode_coeffs(const std::vector<Integer>& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(x.get_str());
  return a;
}

std::vector<Integer> decode_coeffs(const json& a) {
  if (!a.is_array()) throw InvalidParams("coeffs must be an array");
  std::vector<Integer> c;
  c.reserve(a.size());
  for (const auto& x : a) {
    if (x.is_number_integer()) {
      c.emplace_back(std::to_string(x.get<long long>()));
    } else if (x.is_string()) {
      Integer v;
      if (v.set_str(x.get<std::string>(), 10) != 0) throw InvalidParams("bad integer '" + x.get<std::string>() + "'");
      c.push_back(v);
    } else {
      throw InvalidParams("coefficient must be a decimal string or integer");
    }
  }
  return c;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidParams(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidParams(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

json to_json(const LaurentPoly& f) {
  return {{"variable", f.variable()}, {"min_exp", f.min_exp()}, {"coeffs", encode_coeffs(f.coeffs())}};
}

json to_json(const RationalFn& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const TruncatedSeries& f) {
  return {{"variable", "q"}, {"shift", f.shift()}, {"order", f.order()}, {"coeffs", encode_coeffs(f.coeffs())}};
}

json to_json(const ExpansionTerm& t) {
  return {{"i", t.i}, {"coeff", to_json(t.coeff)}, {"top_label", t.top_label}, {"bottom_label", t.bottom_label}};
}

LaurentPoly poly_from_json(const json& j) {
  std::string var = "A";
  if (j.is_object() && j.contains("variable")) var = j.at("variable").get<std::string>();
  return LaurentPoly(int_field(j, "min_exp"), decode_coeffs(field(j, "coeffs")), var);
}

RationalFn rational_from_json(const json& j) {
  return RationalFn(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

TruncatedSeries series_from_json(const json& j) {
  return TruncatedSeries::from_terms(int_field(j, "shift"), decode_coeffs(field(j, "coeffs")), int_field(j, "order"));
}

ExpansionTerm term_from_json(const json& j) {
  return {int_field(j, "i"), rational_from_json(field(j, "coeff")), int_field(j, "top_label"),
          int_field(j, "bottom_label")};
}

}  // namespace qskein
