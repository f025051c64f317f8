#pragma once

// JSON text formats shared by the library and the command-line tool.
//
// Ideal document:
//   {"n_vars": 2,
//    "generators": [[{"coeff": "1/1", "exponents": [1, 0]}, ...], ...]}
// Corpus document:
//   {"ideals": [<ideal document>, ...]}
// Biform document (entry (alpha, beta) multiplies conj(z^alpha) * z^beta):
//   {"n_vars": 2, "d": 1,
//    "terms": [{"alpha": [1, 0], "beta": [0, 1],
//               "coeff": {"re": "1/1", "im": "0/1"}}, ...]}
//   A term whose mirror (beta, alpha) is absent is completed with the
//   conjugate coefficient; when both are present they must be conjugate.
//
// Rationals are always written "p/q" in lowest terms with q > 0.
// Arbitrary-precision integers are written as decimal strings.

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "macaulay/hermitian.hpp"
#include "macaulay/ideal.hpp"

namespace macaulay::io {

using json = nlohmann::json;

/// Malformed input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(\s*/\s*([0-9]+))?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw FormatError("malformed rational \"" + text + "\"");
  Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
  Integer den = match[3].matched ? Integer(match[3].str()) : Integer(1);
  if (sgn(den) == 0) throw FormatError("zero denominator in \"" + text + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer parse_integer(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+$)");
  if (!std::regex_match(text, pattern)) throw FormatError("malformed integer \"" + text + "\"");
  return Integer(text.front() == '+' ? text.substr(1) : text);
}

inline std::string format_integer(const Integer& x) { return x.get_str(); }

namespace detail {

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

inline int positive_int(const json& obj, const char* key, int min) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < min || v.get<long long>() > 1000)
    throw FormatError(std::string("field \"") + key + "\" must be an integer >= " + std::to_string(min));
  return v.get<int>();
}

inline Monomial parse_exponents(const json& v, int n_vars) {
  if (!v.is_array() || static_cast<int>(v.size()) != n_vars)
    throw FormatError("exponent list must have n_vars = " + std::to_string(n_vars) + " entries");
  std::vector<int> e;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1000)
      throw FormatError("exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return Monomial(std::move(e));
}

inline Rational parse_rational_field(const json& v) {
  if (!v.is_string()) throw FormatError("rationals must be strings \"p/q\"");
  return parse_rational(v.get<std::string>());
}

inline json exponents_json(const Monomial& m) { return json(m.exponents); }

}  // namespace detail

inline RationalPoly parse_generator(const json& terms, int n_vars) {
  if (!terms.is_array() || terms.empty()) throw FormatError("a generator must be a nonempty list of terms");
  int degree = -1;
  std::vector<std::pair<Monomial, Rational>> parsed;
  for (const auto& t : terms) {
    Monomial m = detail::parse_exponents(detail::field(t, "exponents"), n_vars);
    if (degree < 0) degree = m.degree();
    if (m.degree() != degree) throw FormatError("generator is not homogeneous");
    parsed.emplace_back(std::move(m), detail::parse_rational_field(detail::field(t, "coeff")));
  }
  if (degree == 0) throw FormatError("degree-0 generators are not accepted (the ideal would be the whole ring)");
  RationalPoly g(n_vars, degree);
  for (const auto& [m, c] : parsed) g.add_term(m, c);
  if (g.is_zero()) throw FormatError("generator is zero");
  return g;
}

inline RationalIdeal parse_ideal(const json& doc) {
  const int n_vars = detail::positive_int(doc, "n_vars", 1);
  const json& gens = detail::field(doc, "generators");
  if (!gens.is_array()) throw FormatError("\"generators\" must be a list");
  RationalIdeal ideal;
  ideal.n_vars = n_vars;
  for (const auto& g : gens) ideal.generators.push_back(parse_generator(g, n_vars));
  return ideal;
}

inline json poly_json(const RationalPoly& g) {
  json terms = json::array();
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it)
    terms.push_back({{"coeff", format_rational(it->second)}, {"exponents", detail::exponents_json(it->first)}});
  return terms;
}

inline json ideal_json(const RationalIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(poly_json(g));
  return {{"n_vars", ideal.n_vars}, {"generators", gens}};
}

inline json corpus_json(const std::vector<RationalIdeal>& ideals) {
  json list = json::array();
  for (const auto& i : ideals) list.push_back(ideal_json(i));
  return {{"ideals", list}};
}

/// Accepts an ideal document, a corpus document, or a report whose
/// "inputs" carry either.
inline std::vector<RationalIdeal> parse_ideals(const json& doc) {
  if (doc.is_object() && doc.contains("inputs") && doc.at("inputs").is_object()) {
    const json& inputs = doc.at("inputs");
    if (inputs.contains("ideals")) return parse_ideals(json{{"ideals", inputs.at("ideals")}});
    if (inputs.contains("ideal")) return parse_ideals(inputs.at("ideal"));
  }
  if (doc.is_object() && doc.contains("ideals")) {
    const json& list = doc.at("ideals");
    if (!list.is_array()) throw FormatError("\"ideals\" must be a list");
    std::vector<RationalIdeal> out;
    for (const auto& d : list) out.push_back(parse_ideal(d));
    return out;
  }
  return {parse_ideal(doc)};
}

inline json gaussian_json(const GaussianRational& c) {
  return {{"re", format_rational(c.re)}, {"im", format_rational(c.im)}};
}

inline GaussianRational parse_gaussian(const json& v) {
  if (v.is_string()) return GaussianRational(parse_rational(v.get<std::string>()));
  return {detail::parse_rational_field(detail::field(v, "re")), detail::parse_rational_field(detail::field(v, "im"))};
}

inline HermitianBiform parse_biform(const json& doc) {
  if (doc.is_object() && doc.contains("inputs") && doc.at("inputs").is_object() &&
      doc.at("inputs").contains("biform"))
    return parse_biform(doc.at("inputs").at("biform"));
  const int n_vars = detail::positive_int(doc, "n_vars", 1);
  const int d = detail::positive_int(doc, "d", 0);
  const json& terms = detail::field(doc, "terms");
  if (!terms.is_array()) throw FormatError("\"terms\" must be a list");
  std::vector<BiformTerm> parsed;
  for (const auto& t : terms) {
    BiformTerm term{detail::parse_exponents(detail::field(t, "alpha"), n_vars),
                    detail::parse_exponents(detail::field(t, "beta"), n_vars),
                    parse_gaussian(detail::field(t, "coeff"))};
    if (term.alpha.degree() != d || term.beta.degree() != d)
      throw FormatError("biform term exponents must both have degree d = " + std::to_string(d));
    parsed.push_back(std::move(term));
  }
  try {
    return biform_from_terms(n_vars, d, hermitian_completion(parsed));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline json biform_json(const HermitianBiform& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"alpha", detail::exponents_json(t.alpha)},
                     {"beta", detail::exponents_json(t.beta)},
                     {"coeff", gaussian_json(t.coeff)}});
  return {{"n_vars", f.n_vars()}, {"d", f.half_degree()}, {"terms", terms}};
}

inline json complex_poly_json(const ComplexPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"coeff", gaussian_json(it->second)}, {"exponents", detail::exponents_json(it->first)}});
  return terms;
}

}  // namespace macaulay::io
