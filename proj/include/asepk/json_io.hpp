#pragma once

#include <json.hpp>

#include "asepk/hecke.hpp"
#include "asepk/simulator.hpp"
#include "asepk/stationary.hpp"
#include "asepk/verify.hpp"

namespace asepk {

using Json = nlohmann::json;

Json rational_json(const Rational& x);  // "p/q" or "p"

// {"dim", "factors", "entries": [{"r", "c", "num", "den"}]} with row-major entries.
Json sparse_to_json(const SparseMatrix<Rational>& m);
SparseMatrix<Rational> sparse_from_json(const Json& j);

// Coefficient as {"num", "den"}; symbolic-q coefficients carry polynomial strings in q.
void coefficient_fields(Json& term, const Rational& c);
void coefficient_fields(Json& term, const UniRatFun& c);

template <class K>
Json poly_to_json(const LaurentPoly<K>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t{{"exp", e}};
    coefficient_fields(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

LaurentPoly<Rational> poly_from_json(const Json& j);

template <class K>
Json family_to_json(const Composition& lambda, const PolyFamily<K>& fam) {
  Json members = Json::object();
  for (const auto& [mu, f] : fam) members[to_csv(mu)] = poly_to_json(f);
  return Json{{"lambda", lambda}, {"members", std::move(members)}};
}

Json weights_to_json(const Weights& w);
Json verification_to_json(const VerificationReport& rep);

// {"sector", "weights", "Z", "theorem_thZK", "factorisation", "scale_anchor"}.
Json stationary_report(const StationaryState& st, const Rational& scale_anchor, bool theorem, bool factorisation);

// {"tv", "counts", "seed"}; counts are occupation fractions keyed by configuration.
Json simulation_to_json(const EmpiricalDistribution& emp, double tv);

}  // namespace asepk
