#include "fanoscape/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fanoscape/errors.hpp"

namespace fanoscape {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

// Accepts JSON integers and decimal strings.
Integer as_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError(std::string(what) + " is not an integer");
    return z;
  }
  throw ParseError(std::string(what) + " must be an integer");
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(std::string(what) + " must be a rational string");
}

LatticeVector as_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  LatticeVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = as_integer(j[i], what);
  return v;
}

}  // namespace

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v.coords()) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json to_json(const LatticePolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

LatticePolytope polytope_from_json(const Json& j) {
  const long dim = as_long(field(j, "dim"), "dim");
  const Json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) throw ParseError("vertices must be a nonempty array");
  std::vector<LatticeVector> pts;
  for (const auto& v : verts) {
    pts.push_back(as_vector(v, "vertex"));
    if (static_cast<long>(pts.back().dim()) != dim)
      throw ParseError("vertex length does not match dim");
  }
  return convex_hull(pts);
}

Json to_json(const TruncatedSeries& s) {
  Json j;
  j["order"] = s.order();
  Json c = Json::array();
  for (const auto& x : s.coefficients()) c.push_back(x.get_str());
  j["coeffs"] = std::move(c);
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  const long order = as_long(field(j, "order"), "order");
  const Json& c = field(j, "coeffs");
  if (!c.is_array() || static_cast<long>(c.size()) != order)
    throw ParseError("coeffs must be an array of length order");
  std::vector<Rational> coeffs;
  for (const auto& x : c) coeffs.push_back(as_rational(x, "coefficient"));
  return TruncatedSeries(std::move(coeffs));
}

Json to_json(const RationalGeneratingFunction& h) {
  Json j;
  Json num = Json::array();
  for (const auto& x : h.numerator()) {
    if (x.fits_slong_p()) num.push_back(x.get_si());
    else num.push_back(x.get_str());
  }
  j["num"] = std::move(num);
  j["den"] = h.denominator();
  return j;
}

Json to_json(const LaurentPolynomial& f) {
  Json j;
  j["n"] = f.num_variables();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["e"] = to_json(e);
    t["c"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  const long n = as_long(field(j, "n"), "n");
  if (n < 1) throw ParseError("n must be positive");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  LaurentPolynomial f(static_cast<std::size_t>(n));
  for (const auto& t : terms) {
    LatticeVector e = as_vector(field(t, "e"), "exponent");
    if (static_cast<long>(e.dim()) != n) throw ParseError("exponent length does not match n");
    f.add_term(e, as_rational(field(t, "c"), "coefficient"));
  }
  return f;
}

Json to_json(const HypersurfaceCandidate& c) {
  const auto qs = is_quasismooth(c);
  Json j;
  j["weights"] = c.weights;
  j["degree"] = c.degree;
  j["genus"] = candidate_invariants(c).genus;
  j["quasismooth"] = qs.verdict;
  j["terminal"] = qs.verdict && is_terminal(c).verdict;
  return j;
}

HypersurfaceCandidate candidate_from_json(const Json& j) {
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw ParseError("weights must be an array");
  std::vector<long> weights;
  for (const auto& x : w) weights.push_back(as_long(x, "weight"));
  return HypersurfaceCandidate::make(weights, as_long(field(j, "degree"), "degree"));
}

}  // namespace fanoscape
