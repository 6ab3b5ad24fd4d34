// Command-line front end. Talks to the library only through asepk.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asepk/asepk.h"

namespace {

struct Common {
  int n = 1, r = 1, rl = 0, rr = 0;
  std::string t = "1/2", a = "-3", b = "-5", c = "1/3", d = "1/5";
  std::optional<std::string> q;
  std::string convention = "magnitude";
  std::uint64_t seed = 1;
  std::string out;
};

struct Extra {
  std::string sector;
  std::string suite = "all";
  int points = 0;
  std::string w = "2/3";
  std::vector<std::string> x;
  bool polynomial = false;
  std::uint64_t events = 1000000, burn_in = 10000, thin = 1;
  int trajectories = 4, batches = 20;
  std::string initial;
  std::optional<std::string> alpha, beta, gamma, delta;
  double tolerance = 0;
};

using ModelPtr = std::unique_ptr<asepk_model, decltype(&asepk_model_free)>;
using ResultPtr = std::unique_ptr<asepk_result, decltype(&asepk_result_free)>;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  return out;
}

int report_error(asepk_status st) {
  std::string msg = asepk_last_error();
  std::cerr << "asepk: " << asepk_status_name(st) << ": " << msg << "\n";
  std::cout << "{\"error\": {\"status\": \"" << asepk_status_name(st) << "\", \"message\": \"" << json_escape(msg) << "\"}}\n";
  return st == ASEPK_ERR_USAGE || st == ASEPK_ERR_NULL_ARGUMENT ? 1 : 2;
}

asepk_status build_model(const Common& o, asepk_model** out) {
  asepk_status st = asepk_model_new(out);
  if (st != ASEPK_OK) return st;
  const std::pair<const char*, const std::string*> params[] = {{"t", &o.t}, {"a", &o.a}, {"b", &o.b}, {"c", &o.c}, {"d", &o.d}};
  if ((st = asepk_model_set_size(*out, o.n, o.r)) != ASEPK_OK) return st;
  for (const auto& [name, value] : params)
    if ((st = asepk_model_set_param(*out, name, value->c_str())) != ASEPK_OK) return st;
  if (o.q && (st = asepk_model_set_param(*out, "q", o.q->c_str())) != ASEPK_OK) return st;
  if ((st = asepk_model_set_cutoffs(*out, o.rl, o.rr)) != ASEPK_OK) return st;
  return asepk_model_set_convention(*out, o.convention.c_str());
}

int dispatch(const std::string& cmd, const Common& o, const Extra& e) {
  asepk_model* raw = nullptr;
  asepk_status st = build_model(o, &raw);
  ModelPtr model(raw, asepk_model_free);
  if (st != ASEPK_OK) return report_error(st);

  auto need_sector = [&]() -> const char* {
    if (e.sector.empty()) return nullptr;
    return e.sector.c_str();
  };
  if (cmd != "build-generator" && cmd != "transfer" && cmd != "verify" && e.sector.empty()) {
    std::cerr << "asepk: " << cmd << " needs --sector\n";
    return 1;
  }

  asepk_result* res = nullptr;
  if (cmd == "build-generator") st = asepk_build_generator(model.get(), &res);
  else if (cmd == "transfer") {
    std::vector<const char*> xs;
    for (const auto& v : e.x) xs.push_back(v.c_str());
    st = asepk_transfer(model.get(), e.w.c_str(), xs.empty() ? nullptr : xs.data(), xs.size(), &res);
  } else if (cmd == "verify") st = asepk_verify(model.get(), e.suite.c_str(), o.seed, e.points, &res);
  else if (cmd == "nonsymmetric") st = asepk_nonsymmetric(model.get(), need_sector(), &res);
  else if (cmd == "koornwinder") st = asepk_koornwinder(model.get(), need_sector(), &res);
  else if (cmd == "stationary") st = asepk_stationary(model.get(), need_sector(), &res);
  else if (cmd == "theorem") st = asepk_theorem(model.get(), need_sector(), &res);
  else if (cmd == "factorise") st = asepk_factorise(model.get(), need_sector(), e.polynomial ? 1 : 0, &res);
  else if (cmd == "generalised") st = asepk_generalised(model.get(), need_sector(), &res);
  else if (cmd == "simulate") {
    asepk_sim_options so;
    asepk_sim_options_default(&so);
    so.events = e.events;
    so.burn_in = e.burn_in;
    so.seed = o.seed;
    so.thin = e.thin;
    so.trajectories = e.trajectories;
    so.batches = e.batches;
    so.initial = e.initial.empty() ? nullptr : e.initial.c_str();
    so.alpha = e.alpha ? e.alpha->c_str() : nullptr;
    so.beta = e.beta ? e.beta->c_str() : nullptr;
    so.gamma = e.gamma ? e.gamma->c_str() : nullptr;
    so.delta = e.delta ? e.delta->c_str() : nullptr;
    so.tolerance = e.tolerance;
    st = asepk_simulate(model.get(), need_sector(), &so, &res);
  }
  ResultPtr result(res, asepk_result_free);
  if (st != ASEPK_OK) return report_error(st);

  std::string text = asepk_result_json(result.get());
  std::cout << text << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "asepk: cannot write " << o.out << "\n";
      return 1;
    }
    f << text << "\n";
  }
  return asepk_result_passed(result.get()) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and stochastic checks for the multispecies open boundary exclusion process"};
  app.require_subcommand(1);
  Common o;
  Extra e;

  app.add_option("--n", o.n, "number of sites")->check(CLI::PositiveNumber);
  app.add_option("--r", o.r, "rank (species labels -r..r)")->check(CLI::PositiveNumber);
  app.add_option("--t", o.t, "bulk parameter t, exact fraction");
  app.add_option("--a", o.a, "left boundary parameter a");
  app.add_option("--b", o.b, "right boundary parameter b");
  app.add_option("--c", o.c, "left boundary parameter c");
  app.add_option("--d", o.d, "right boundary parameter d");
  app.add_option("--q", o.q, "rational q (default symbolic)");
  app.add_option("--rl", o.rl, "left cutoff");
  app.add_option("--rr", o.rr, "right cutoff");
  app.add_option("--convention", o.convention, "boundary pairing")->check(CLI::IsMember({"magnitude", "mirror"}));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--out", o.out, "also write the JSON report here");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build-generator", "generator L as a sparse operator"},
      {"transfer", "transfer matrix T(w; x)"},
      {"verify", "exact identity suite at seeded random points"},
      {"nonsymmetric", "non-symmetric eigenpolynomial E_lambda"},
      {"koornwinder", "f-family and symmetric polynomial K_lambda"},
      {"stationary", "stationary weights of a sector"},
      {"theorem", "normalisation against K_lambda(1^n; q=1)"},
      {"factorise", "normalisation factorisation over columns"},
      {"generalised", "stationary state with boundary cutoffs"},
      {"simulate", "Gillespie simulation against the exact state"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--sector,--lambda", e.sector, "comma-separated integers, e.g. 1,0");
    if (name == "verify") {
      sub->add_option("--suite", e.suite, "all, core, or comma-separated identity names");
      sub->add_option("--points", e.points, "sampled points per identity");
    }
    if (name == "transfer") {
      sub->add_option("--w", e.w, "spectral parameter");
      sub->add_option("--x", e.x, "inhomogeneities, one per site")->delimiter(',');
    }
    if (name == "factorise") sub->add_flag("--polynomial", e.polynomial, "also check the identity in x");
    if (name == "simulate") {
      sub->add_option("--events", e.events, "recorded events over all trajectories");
      sub->add_option("--burn-in", e.burn_in, "events discarded per trajectory");
      sub->add_option("--thin", e.thin, "record every k-th holding interval");
      sub->add_option("--trajectories", e.trajectories, "independent trajectories")->check(CLI::PositiveNumber);
      sub->add_option("--batches", e.batches, "batches per trajectory")->check(CLI::PositiveNumber);
      sub->add_option("--initial", e.initial, "initial configuration");
      sub->add_option("--alpha", e.alpha, "exact rate override");
      sub->add_option("--beta", e.beta, "exact rate override");
      sub->add_option("--gamma", e.gamma, "exact rate override");
      sub->add_option("--delta", e.delta, "exact rate override");
      sub->add_option("--tolerance", e.tolerance, "pass threshold on TV (default: 3 sigma batch bound)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }
  return dispatch(app.get_subcommands().front()->get_name(), o, e);
}
