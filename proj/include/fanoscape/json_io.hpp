#pragma once

#include <string>

#include <json.hpp>

#include "fanoscape/grading.hpp"
#include "fanoscape/laurent.hpp"
#include "fanoscape/polytope.hpp"
#include "fanoscape/wps.hpp"

namespace fanoscape {

using Json = nlohmann::ordered_json;

/// Reads and parses a whole JSON document. IoError / ParseError.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// Integers that fit in a long are written as numbers, others as strings.
Json to_json(const LatticeVector& v);

/// {"dim": n, "vertices": [[...], ...]}
Json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

/// {"order": N, "coeffs": ["1", "0", ...]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// {"num": [1, 0, 0, 0, -1], "den": [1, 1, 1, 1, 1]}
Json to_json(const RationalGeneratingFunction& h);

/// {"n": 3, "terms": [{"e": [...], "c": "3/2"}, ...]} in exponent order.
Json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"weights": [...], "degree": d, "genus": g, "quasismooth": b, "terminal": b}
Json to_json(const HypersurfaceCandidate& c);
HypersurfaceCandidate candidate_from_json(const Json& j);

}  // namespace fanoscape
