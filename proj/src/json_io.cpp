#include "asepk/json_io.hpp"

#include <algorithm>
#include <tuple>

namespace asepk {

namespace {

Rational coefficient_from(const Json& t) {
  Rational num = parse_rational(t.at("num").get<std::string>());
  Rational den = parse_rational(t.at("den").get<std::string>());
  require(den != 0, ErrorKind::Usage, "zero denominator in JSON");
  return num / den;
}

}  // namespace

Json rational_json(const Rational& x) { return to_string(x); }

Json sparse_to_json(const SparseMatrix<Rational>& m) {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> cells;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) cells.emplace_back(r, c, v);
  std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  Json entries = Json::array();
  for (const auto& [r, c, v] : cells)
    entries.push_back({{"r", r}, {"c", c}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
  return Json{{"dim", m.rows()}, {"factors", m.factors()}, {"entries", std::move(entries)}};
}

SparseMatrix<Rational> sparse_from_json(const Json& j) {
  auto dim = j.at("dim").get<std::size_t>();
  SparseMatrix<Rational> m(dim, j.at("factors").get<std::vector<std::size_t>>());
  for (const auto& e : j.at("entries")) {
    auto r = e.at("r").get<std::size_t>(), c = e.at("c").get<std::size_t>();
    require(r < dim && c < dim, ErrorKind::Usage, "matrix entry out of range");
    m.add_to(r, c, coefficient_from(e));
  }
  return m;
}

void coefficient_fields(Json& term, const Rational& c) {
  term["num"] = c.get_num().get_str();
  term["den"] = c.get_den().get_str();
}

void coefficient_fields(Json& term, const UniRatFun& c) {
  if (c.is_constant()) {
    coefficient_fields(term, c.constant_value());
    return;
  }
  term["num"] = to_string(c.num());
  term["den"] = to_string(c.den());
}

LaurentPoly<Rational> poly_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  LaurentPoly<Rational> p(vars);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    require(e.size() == vars.size(), ErrorKind::Usage, "exponent length does not match variables");
    p.add_term(e, coefficient_from(t));
  }
  return p;
}

Json weights_to_json(const Weights& w) {
  Json out = Json::object();
  for (const auto& [mu, v] : w) out[to_csv(mu)] = rational_json(v);
  return out;
}

Json verification_to_json(const VerificationReport& rep) {
  Json point = Json::object();
  for (const auto& [k, v] : rep.point) point[k] = rational_json(v);
  return Json{{"identity", rep.name},     {"pass", rep.passed},         {"seed", rep.seed},
              {"points", rep.points},     {"resamples", rep.resamples}, {"residual_nnz", rep.residual_nnz},
              {"point", std::move(point)}, {"detail", rep.detail}};
}

Json stationary_report(const StationaryState& st, const Rational& scale_anchor, bool theorem, bool factorisation) {
  return Json{{"sector", st.sector},
              {"weights", weights_to_json(st.weights)},
              {"Z", rational_json(st.Z)},
              {"theorem_thZK", theorem ? "pass" : "fail"},
              {"factorisation", factorisation ? "pass" : "fail"},
              {"scale_anchor", rational_json(scale_anchor)}};
}

Json simulation_to_json(const EmpiricalDistribution& emp, double tv) {
  Json counts = Json::object();
  for (const auto& [mu, p] : emp.probabilities()) counts[to_csv(mu)] = p;
  return Json{{"tv", tv}, {"counts", std::move(counts)}, {"seed", emp.seed}};
}

}  // namespace asepk
