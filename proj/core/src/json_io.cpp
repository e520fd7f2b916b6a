#include "ztau/json_io.hpp"

#include <algorithm>

#include "ztau/error.hpp"

namespace ztau::json {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) parse_error(std::string("missing key '") + key + "'");
    return 0.0;
  }
  const json& v = j.at(key);
  if (!v.is_number()) parse_error(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

json big_integer(const mpz_class& z) {
  if (z.fits_ulong_p()) return json(static_cast<std::uint64_t>(z.get_ui()));
  return json(z.get_str());
}

mpz_class big_integer_from(const json& j, const char* key) {
  const json& v = member(j, key);
  if (v.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return mpz_class(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  parse_error(std::string("'") + key + "' must be an integer");
}

const json& terms_array(const json& j) {
  const json& terms = member(j, "terms");
  if (!terms.is_array()) parse_error("'terms' must be an array");
  return terms;
}

}  // namespace

json to_json(const MultiIndex& n) { return json(n.to_dense()); }

MultiIndex multiindex_from_json(const json& j) {
  if (!j.is_array()) parse_error("multi-index must be an array of integers");
  std::vector<MultiIndex::Exponent> dense;
  dense.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_error("multi-index entries must be integers");
    dense.push_back(v.get<MultiIndex::Exponent>());
  }
  return MultiIndex::from_dense(dense);
}

std::vector<std::pair<MultiIndex, Complex>> tau_sorted_terms(const FourierSeries& f) {
  std::vector<std::pair<MultiIndex, Complex>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first) == std::strong_ordering::less;
  });
  return terms;
}

json to_json(const FourierSeries& f) {
  json terms = json::array();
  for (const auto& [n, c] : tau_sorted_terms(f))
    terms.push_back({{"index", to_json(n)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"terms", terms}};
}

FourierSeries series_from_json(const json& j) {
  FourierSeries f;
  for (const auto& t : terms_array(j)) {
    MultiIndex n = multiindex_from_json(member(t, "index"));
    f.add_term(n, Complex(number(t, "re", true), number(t, "im", false)));
  }
  return f;
}

json to_json(const DirichletSeries& d) {
  json terms = json::array();
  for (const auto& [q, b] : d.terms())
    terms.push_back({{"num", big_integer(q.num())},
                     {"den", big_integer(q.den())},
                     {"re", b.real()},
                     {"im", b.imag()}});
  return {{"terms", terms}};
}

DirichletSeries dirichlet_from_json(const json& j) {
  DirichletSeries d;
  for (const auto& t : terms_array(j)) {
    OrdinalRational q(big_integer_from(t, "num"), big_integer_from(t, "den"));
    d.add_term(q, Complex(number(t, "re", true), number(t, "im", false)));
  }
  return d;
}

std::vector<MultiIndex> support_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("support") ? j.at("support") : j;
  if (!list.is_array()) parse_error("support must be an array of multi-indices");
  std::vector<MultiIndex> out;
  out.reserve(list.size());
  for (const auto& v : list) out.push_back(multiindex_from_json(v));
  return out;
}

}  // namespace ztau::json
