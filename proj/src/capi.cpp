#include "asepk/asepk.h"

#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "asepk/json_io.hpp"

struct asepk_model {
  asepk::ModelSpec spec;
  std::optional<asepk::Rational> q;
};

struct asepk_result {
  std::string json;
  bool passed = false;
};

namespace {

using namespace asepk;

thread_local std::string last_error;

asepk_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return ASEPK_ERR_USAGE;
    case ErrorKind::Structural: return ASEPK_ERR_STRUCTURAL;
    case ErrorKind::Pole: return ASEPK_ERR_POLE;
    case ErrorKind::LimitUndefined: return ASEPK_ERR_LIMIT_UNDEFINED;
    case ErrorKind::Degenerate: return ASEPK_ERR_DEGENERATE;
    case ErrorKind::Internal: return ASEPK_ERR_INTERNAL;
  }
  return ASEPK_ERR_INTERNAL;
}

asepk_status guarded(const std::function<void()>& body) {
  last_error.clear();
  try {
    body();
    return ASEPK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return ASEPK_ERR_USAGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return ASEPK_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ASEPK_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::Usage, std::string("null argument: ") + what);
}

void emit(asepk_result** out, const Json& j, bool passed) {
  *out = new asepk_result{j.dump(2), passed};
}

asepk_status run(const asepk_model* m, asepk_result** out, const std::function<void(const ModelSpec&)>& body) {
  if (!m || !out) {
    last_error = "null argument";
    return ASEPK_ERR_NULL_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    m->spec.validate();
    body(m->spec);
  });
}

Composition composition_arg(const char* csv, const ModelSpec& spec) {
  need(csv, "composition");
  Composition c = parse_composition(csv);
  require(static_cast<int>(c.size()) == spec.n, ErrorKind::Usage, "composition " + std::string(csv) + " needs " + std::to_string(spec.n) + " entries");
  return c;
}

void symbolic_q_only(const asepk_model* m) {
  require(!m->q.has_value(), ErrorKind::Usage, "stationary paths take q symbolic and specialise to q = 1; drop --q");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

template <class K>
Json spectral_json(const std::vector<K>& ys) {
  Json out = Json::array();
  for (const auto& y : ys) {
    Json c = Json::object();
    coefficient_fields(c, y);
    out.push_back(std::move(c));
  }
  return out;
}

template <class K>
void nonsymmetric_into(const HeckeContext<K>& ctx, const Composition& lambda, asepk_result** out) {
  LaurentPoly<K> E = nonsymmetric_E(lambda, ctx);
  Json j{{"lambda", lambda}, {"polynomial", poly_to_json(E)}, {"spectral", spectral_json(ctx.spectral(lambda))}};
  emit(out, j, true);
}

template <class K>
void koornwinder_into(const HeckeContext<K>& ctx, const Composition& lambda, asepk_result** out) {
  PolyFamily<K> fam = f_family(dominant(lambda), ctx);
  auto failures = component_relation_failures(fam, ctx);
  Json j = family_to_json(dominant(lambda), fam);
  j["symmetric"] = poly_to_json(symmetrise(fam, ctx));
  j["relation_failures"] = strings(failures);
  emit(out, j, failures.empty());
}

HeckeContext<UniRatFun> symbolic_context(const ModelSpec& s) {
  return HeckeContext<UniRatFun>(s.n, UniRatFun::variable(), s.t, s.a, s.b, s.c, s.d);
}

HeckeContext<Rational> rational_context(const ModelSpec& s, const Rational& q) {
  return HeckeContext<Rational>(s.n, q, s.t, s.a, s.b, s.c, s.d);
}

}  // namespace

extern "C" {

const char* asepk_last_error(void) { return last_error.c_str(); }

const char* asepk_status_name(asepk_status s) {
  switch (s) {
    case ASEPK_OK: return "ok";
    case ASEPK_ERR_USAGE: return "usage";
    case ASEPK_ERR_STRUCTURAL: return "structural";
    case ASEPK_ERR_POLE: return "pole";
    case ASEPK_ERR_LIMIT_UNDEFINED: return "limit_undefined";
    case ASEPK_ERR_DEGENERATE: return "degenerate";
    case ASEPK_ERR_INTERNAL: return "internal";
    case ASEPK_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

asepk_status asepk_model_new(asepk_model** out) {
  if (!out) return ASEPK_ERR_NULL_ARGUMENT;
  *out = new asepk_model{};
  return ASEPK_OK;
}

void asepk_model_free(asepk_model* m) { delete m; }

asepk_status asepk_model_set_size(asepk_model* m, int n, int r) {
  if (!m) return ASEPK_ERR_NULL_ARGUMENT;
  return guarded([&] {
    require(n >= 1 && r >= 1, ErrorKind::Usage, "n and r must be positive");
    m->spec.n = n;
    m->spec.r = r;
  });
}

asepk_status asepk_model_set_param(asepk_model* m, const char* name, const char* value) {
  if (!m || !name) return ASEPK_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::string key(name);
    if (key == "q") {
      if (value) m->q = parse_rational(value);
      else m->q.reset();
      return;
    }
    need(value, name);
    Rational v = parse_rational(value);
    if (key == "t") m->spec.t = v;
    else if (key == "a") m->spec.a = v;
    else if (key == "b") m->spec.b = v;
    else if (key == "c") m->spec.c = v;
    else if (key == "d") m->spec.d = v;
    else fail(ErrorKind::Usage, "unknown parameter " + key);
  });
}

asepk_status asepk_model_set_cutoffs(asepk_model* m, int rl, int rr) {
  if (!m) return ASEPK_ERR_NULL_ARGUMENT;
  return guarded([&] {
    require(rl >= 0 && rr >= 0, ErrorKind::Usage, "cutoffs must be nonnegative");
    m->spec.rL = rl;
    m->spec.rR = rr;
  });
}

asepk_status asepk_model_set_convention(asepk_model* m, const char* convention) {
  if (!m || !convention) return ASEPK_ERR_NULL_ARGUMENT;
  return guarded([&] { m->spec.convention = parse_convention(convention); });
}

const char* asepk_result_json(const asepk_result* res) { return res ? res->json.c_str() : ""; }
int asepk_result_passed(const asepk_result* res) { return res && res->passed ? 1 : 0; }
void asepk_result_free(asepk_result* res) { delete res; }

asepk_status asepk_build_generator(const asepk_model* m, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    SparseMatrix<Rational> L = generator_from_blocks(s);
    bool agree = L == generator_from_rates(s) && L == generator_from_transfer(s);
    bool stochastic = true;
    for (const auto& v : L.column_sums()) stochastic = stochastic && v == 0;
    Json j = sparse_to_json(L);
    j["constructions_agree"] = agree;
    j["zero_column_sums"] = stochastic;
    Rates rt = boundary_rates(s);
    j["nonnegative_rates"] = rt.alpha >= 0 && rt.beta >= 0 && rt.gamma >= 0 && rt.delta >= 0 && s.t >= 0;
    emit(out, j, agree && stochastic);
  });
}

asepk_status asepk_transfer(const asepk_model* m, const char* w, const char* const* x, size_t nx, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    need(w, "w");
    std::vector<Rational> xs(static_cast<std::size_t>(s.n), Rational(1));
    if (x) {
      require(nx == xs.size(), ErrorKind::Usage, "need one inhomogeneity per site");
      for (std::size_t k = 0; k < nx; ++k) {
        need(x[k], "x");
        xs[k] = parse_rational(x[k]);
      }
    }
    DualKPair duals(s);
    SparseMatrix<Rational> T = transfer_matrix<Rational>(s, duals, parse_rational(w), xs);
    emit(out, sparse_to_json(T), true);
  });
}

asepk_status asepk_verify(const asepk_model* m, const char* suite, uint64_t seed, int points, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    std::string name = suite ? suite : "all";
    std::vector<std::string> names;
    if (name == "all") names = identity_names();
    else if (name == "core") names = core_identity_names();
    else names = split(name);
    for (const auto& id : names)
      require(std::find(identity_names().begin(), identity_names().end(), id) != identity_names().end(), ErrorKind::Usage,
              "unknown identity " + id);
    VerifyOptions opts;
    opts.seed = seed;
    if (points > 0) opts.points = points;
    Json reports = Json::array();
    bool all = true;
    for (const auto& rep : verify_suite(names, s, opts)) {
      all = all && rep.passed;
      reports.push_back(verification_to_json(rep));
    }
    emit(out, Json{{"seed", seed}, {"pass", all}, {"reports", std::move(reports)}}, all);
  });
}

asepk_status asepk_nonsymmetric(const asepk_model* m, const char* lambda, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    Composition lam = composition_arg(lambda, s);
    if (m->q) nonsymmetric_into(rational_context(s, *m->q), lam, out);
    else nonsymmetric_into(symbolic_context(s), lam, out);
  });
}

asepk_status asepk_koornwinder(const asepk_model* m, const char* lambda, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    Composition lam = composition_arg(lambda, s);
    if (m->q) koornwinder_into(rational_context(s, *m->q), lam, out);
    else koornwinder_into(symbolic_context(s), lam, out);
  });
}

asepk_status asepk_stationary(const asepk_model* m, const char* sector, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    symbolic_q_only(m);
    Composition lam = composition_arg(sector, s);
    TheoremReport rep = theorem_check(s, lam);
    FactorisationReport fac = factorisation_check(s, lam, false);
    emit(out, stationary_report(rep.hecke.state, rep.hecke.scale_anchor, rep.theorem, fac.normalisation_holds), rep.hecke.stationary);
  });
}

asepk_status asepk_theorem(const asepk_model* m, const char* sector, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    symbolic_q_only(m);
    Composition lam = composition_arg(sector, s);
    TheoremReport rep = theorem_check(s, lam);
    FactorisationReport fac = factorisation_check(s, lam, false);
    Json j = stationary_report(rep.hecke.state, rep.hecke.scale_anchor, rep.theorem, fac.normalisation_holds);
    j["K_at_one"] = rational_json(rep.hecke.K_at_one);
    j["oracle_agrees"] = rep.oracle_agrees;
    j["stationary"] = rep.hecke.stationary;
    j["qkz_failures"] = strings(rep.hecke.qkz_failures);
    j["relation_failures"] = strings(rep.hecke.relation_failures);
    j["detail"] = rep.detail;
    emit(out, j, rep.theorem);
  });
}

asepk_status asepk_factorise(const asepk_model* m, const char* lambda, int check_polynomial, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    symbolic_q_only(m);
    Composition lam = composition_arg(lambda, s);
    FactorisationReport rep = factorisation_check(s, lam, check_polynomial != 0);
    Json factors = Json::array();
    for (const auto& z : rep.column_factors) factors.push_back(rational_json(z));
    Json j{{"lambda", rep.lambda},
           {"Z", rational_json(rep.Z)},
           {"product", rational_json(rep.product)},
           {"column_factors", std::move(factors)},
           {"factorisation", rep.normalisation_holds ? "pass" : "fail"}};
    if (rep.polynomial_holds) j["polynomial"] = *rep.polynomial_holds ? "pass" : "fail";
    emit(out, j, rep.normalisation_holds && rep.polynomial_holds.value_or(true));
  });
}

asepk_status asepk_generalised(const asepk_model* m, const char* sector, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    symbolic_q_only(m);
    Composition lam = composition_arg(sector, s);
    GeneralisedReport rep = generalised_stationary(s, lam);
    Json j{{"sector", rep.sector},
           {"weights", weights_to_json(rep.state.weights)},
           {"Z", rational_json(rep.state.Z)},
           {"stationary", rep.stationary},
           {"oracle_agrees", rep.oracle_agrees},
           {"relation_failures", strings(rep.relation_failures)},
           {"qkz_failures", strings(rep.qkz_failures)}};
    if (rep.constant_formula) j["constant_formula"] = *rep.constant_formula ? "pass" : "fail";
    emit(out, j, rep.passed());
  });
}

void asepk_sim_options_default(asepk_sim_options* opts) {
  if (!opts) return;
  SimConfig d;
  *opts = asepk_sim_options{d.events, d.burn_in, d.seed, d.thin, d.trajectories, d.batches, nullptr, nullptr, nullptr, nullptr, nullptr, 0.0};
}

asepk_status asepk_simulate(const asepk_model* m, const char* sector, const asepk_sim_options* opts, asepk_result** out) {
  return run(m, out, [&](const ModelSpec& s) {
    need(opts, "options");
    SimConfig cfg;
    cfg.spec = s;
    cfg.sector = composition_arg(sector, s);
    cfg.initial = opts->initial ? composition_arg(opts->initial, s) : cfg.sector;
    cfg.events = opts->events;
    cfg.burn_in = opts->burn_in;
    cfg.seed = opts->seed;
    cfg.thin = opts->thin;
    cfg.trajectories = opts->trajectories;
    cfg.batches = opts->batches;
    Rates rates = boundary_rates(s);
    const char* given[] = {opts->alpha, opts->beta, opts->gamma, opts->delta};
    Rational* slots[] = {&rates.alpha, &rates.beta, &rates.gamma, &rates.delta};
    bool overridden = false;
    for (int k = 0; k < 4; ++k)
      if (given[k]) {
        *slots[k] = parse_rational(given[k]);
        overridden = true;
      }
    cfg.rates = rates;
    EmpiricalDistribution emp = simulate(cfg);
    StationaryState exact = nullspace_stationary(s, cfg.sector, generator_from_rates(s, rates));
    double tv = tv_distance(emp, exact);
    double bound = tv_noise_bound(emp);
    auto audit = rate_audit(s, rates, overridden ? generator_from_rates(s, rates) : generator_from_blocks(s));
    Json j = simulation_to_json(emp, tv);
    j["tv_bound_3sigma"] = bound;
    j["events"] = emp.events;
    j["rate_audit"] = audit.empty() ? "pass" : "fail";
    bool ok = audit.empty() && (opts->tolerance > 0 ? tv <= opts->tolerance : tv <= bound);
    emit(out, j, ok);
  });
}

}  // extern "C"
