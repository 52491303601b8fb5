#pragma once

#include <nlohmann/json.hpp>

#include "qskein/bubble.hpp"
#include "qskein/laurent_poly.hpp"
#include "qskein/rational_fn.hpp"
#include "qskein/series.hpp"

namespace qskein {

// JSON encodings. Coefficients are decimal strings so that arbitrary
// precision survives any JSON reader.
//   LaurentPoly     {"variable": "A", "min_exp": e, "coeffs": ["1", "0", "-2"]}
//   RationalFn      {"num": <poly>, "den": <poly>}
//   TruncatedSeries {"variable": "q", "shift": s, "order": o, "coeffs": [...]}
//   ExpansionTerm   {"i": i, "coeff": <rational>, "top_label": t, "bottom_label": b}
// Decoding throws InvalidParams on malformed input.

nlohmann::json to_json(const LaurentPoly& f);
nlohmann::json to_json(const RationalFn& f);
nlohmann::json to_json(const TruncatedSeries& f);
nlohmann::json to_json(const ExpansionTerm& t);

LaurentPoly poly_from_json(const nlohmann::json& j);
RationalFn rational_from_json(const nlohmann::json& j);
TruncatedSeries series_from_json(const nlohmann::json& j);
ExpansionTerm term_from_json(const nlohmann::json& j);

}  // namespace qskein
