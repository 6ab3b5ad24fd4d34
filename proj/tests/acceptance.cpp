// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "asepk/rng.hpp"
#include "asepk/simulator.hpp"
#include "asepk/stationary.hpp"
#include "asepk/verify.hpp"
#include "test_util.hpp"

using namespace asepk;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using P = LaurentPoly<Rational>;

// Random generic point: q, t and the four boundary parameters.
struct Point {
  Rational q, t, a, b, c, d;
};

Point draw_point(CounterRng& rng) {
  auto pick = [&] {
    Rational v(0);
    while (v == 0 || v == 1 || v == -1) v = rng.rational(9, 7);
    return v;
  };
  return Point{pick(), pick(), pick(), pick(), pick(), pick()};
}

ModelSpec spec_at(int n, int r, const Point& p) {
  ModelSpec s;
  s.n = n;
  s.r = r;
  s.t = p.t;
  s.a = p.a;
  s.b = p.b;
  s.c = p.c;
  s.d = p.d;
  return s;
}

// Runs body at fresh points until it completes without a pole or degeneracy.
template <class F>
void at_generic_point(CounterRng& rng, int& resamples, F body) {
  for (int tries = 0;; ++tries) {
    Point p = draw_point(rng);
    try {
      body(p);
      return;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal || e.kind() == ErrorKind::Usage || tries > 50) throw;
      ++resamples;
    }
  }
}

P apply_word(const HeckeContext<Rational>& h, const std::vector<int>& word, P f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = h.T(*it, f);
  return f;
}

void criterion1(Outcome& o) {
  testutil::Rng prng(101);
  CounterRng rng(1);
  int resamples = 0;
  for (int n : {2, 3}) {
    at_generic_point(rng, resamples, [&](const Point& p) {
      HeckeContext<Rational> h(n, p.q, p.t, p.a, p.b, p.c, p.d);
      for (int trial = 0; trial < 20; ++trial) {
        P f = testutil::random_poly(prng, h.vars(), 5, 3);
        for (int i = 0; i <= n; ++i) {
          P tf = h.T(i, f);
          P quad = h.T(i, tf);
          quad += tf.scaled(1 - h.t_param(i));
          quad -= f.scaled(h.t_param(i));
          o.require(quad.is_zero(), "quadratic T_" + std::to_string(i));
        }
        o.require(apply_word(h, {0, 1, 0, 1}, f) == apply_word(h, {1, 0, 1, 0}, f), "braid 0");
        o.require(apply_word(h, {n, n - 1, n, n - 1}, f) == apply_word(h, {n - 1, n, n - 1, n}, f), "braid n");
        for (int i = 1; i + 1 < n; ++i)
          o.require(apply_word(h, {i, i + 1, i}, f) == apply_word(h, {i + 1, i, i + 1}, f), "braid i");
        for (int i = 0; i <= n; ++i)
          for (int j = i + 2; j <= n; ++j) o.require(apply_word(h, {i, j}, f) == apply_word(h, {j, i}, f), "far commute");
      }
    });
  }
  o.note << "n=2,3; 20 random Laurent polynomials each; quadratic, braid_0/i/n, far commutation";
}

void criterion2(Outcome& o) {
  const std::vector<std::string> names = {"ybe",       "braid",    "unitarity", "crossing",       "refl_left",
                                          "refl_right", "refl_dual_left", "refl_dual_right", "exch_bulk", "exch_left",
                                          "exch_right", "dual_form", "crossing_pair"};
  VerifyOptions opts;
  opts.seed = 7;
  opts.points = 20;
  int checks = 0;
  for (int r : {1, 2})
    for (int n : {2, 3}) {
      ModelSpec s;
      s.n = n;
      s.r = r;
      for (const auto& rep : verify_suite(names, s, opts)) {
        o.require(rep.passed, rep.name + " n=" + std::to_string(n) + " r=" + std::to_string(r) + " " + rep.detail);
        ++checks;
      }
    }
  o.note << checks << " identity runs x 20 points, r=1,2, n=2,3";
}

void criterion3(Outcome& o) {
  VerifyOptions opts;
  opts.seed = 11;
  opts.points = 10;
  for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    ModelSpec s;
    s.n = n;
    s.r = r;
    auto rep = verify_identity("commute", s, opts);
    o.require(rep.passed, "commute n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  o.note << "[T(w1),T(w2)]=0 at 10 points for (n,r)=(2,1),(3,1),(2,2)";
}

void criterion4(Outcome& o) {
  CounterRng rng(4);
  int resamples = 0;
  for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{4, 1}, std::pair{2, 2}}) {
    at_generic_point(rng, resamples, [&](const Point& p) {
      ModelSpec s = spec_at(n, r, p);
      SparseMatrix<Rational> L = generator_from_blocks(s);
      o.require(L == generator_from_transfer(s), "L vs (1-t)/2 T'(1) n=" + std::to_string(n));
      for (const auto& v : L.column_sums()) o.require(v == 0, "column sum");
    });
  }
  o.note << "direct-block L equals (1-t)/2 T'(1) for n=2,3,4 r=1 and n=2 r=2";
}

void criterion5(Outcome& o) {
  CounterRng rng(5);
  int resamples = 0, eigen = 0, tione = 0, tnone_ok = 0, tnone_printed_fail = 0;
  for (int n : {1, 2, 3}) {
    std::vector<Composition> lams;
    Composition c(static_cast<std::size_t>(n), -2);
    while (true) {
      lams.push_back(c);
      std::size_t k = 0;
      while (k < c.size() && c[k] == 2) c[k++] = -2;
      if (k == c.size()) break;
      ++c[k];
    }
    for (int pt = 0; pt < 3; ++pt) {
      at_generic_point(rng, resamples, [&](const Point& p) {
        HeckeContext<Rational> h(n, p.q, p.t, p.a, p.b, p.c, p.d);
        std::map<Composition, P> E;
        for (const auto& lam : lams) E.emplace(lam, nonsymmetric_E(lam, h));
        for (const auto& lam : lams) {
          const P& e = E.at(lam);
          std::vector<Rational> y = h.spectral(lam);
          o.require(e.coeff(lam) == 1, "monic " + to_csv(lam));
          for (int i = 1; i <= n; ++i)
            o.require(h.Y(i, e) == e.scaled(y[static_cast<std::size_t>(i - 1)]), "Y_" + std::to_string(i) + " on " + to_csv(lam));
          ++eigen;
          for (int i = 1; i < n; ++i) {
            if (lam[static_cast<std::size_t>(i - 1)] >= lam[static_cast<std::size_t>(i)]) continue;
            Rational tu = h.t() * y[static_cast<std::size_t>(i)] / y[static_cast<std::size_t>(i - 1)];
            o.require(E.at(apply_generator(lam, i)).scaled(h.t()) == h.baxterised(i, tu, e), "T_i recursion " + to_csv(lam));
            ++tione;
          }
          if (lam.back() < 0) {
            Rational yn = y.back();
            Rational num = 1 - h.tn() + h.tn() * (1 - h.t0()) / yn;
            P lhs = E.at(apply_generator(lam, n)).scaled(h.tn());
            P printed = h.T(n, e);
            printed += e.scaled(num / (h.t0() * h.tn() / (yn * yn) - 1));
            P corrected = h.T(n, e);
            corrected += e.scaled(num / (1 - h.t0() * h.tn() / (yn * yn)));
            if (lhs == corrected) ++tnone_ok;
            if (!(lhs == printed)) ++tnone_printed_fail;
            o.require(lhs == printed, "T_n recursion as printed fails at " + to_csv(lam) +
                                          (lhs == corrected ? " (holds with denominator 1 - t0 tn y_n^-2)" : " (corrected form also fails)"));
          }
        }
      });
    }
  }
  o.note << eigen << " eigen checks, " << tione << " T_i recursions hold; T_n recursion: printed form fails "
         << tnone_printed_fail << " cases, sign-corrected form holds in " << tnone_ok << "; resamples " << resamples;
}

void criterion6(Outcome& o) {
  CounterRng rng(6);
  int resamples = 0, runs = 0;
  for (int r : {1, 2})
    for (int n = 1; n <= 4; ++n) {
      ModelSpec base;
      base.n = n;
      base.r = r;
      for (const auto& lam : all_sectors(base)) {
        for (int pt = 0; pt < 5; ++pt) {
          at_generic_point(rng, resamples, [&](const Point& p) {
            TheoremReport rep = theorem_check(spec_at(n, r, p), lam);
            o.require(rep.hecke.stationary, "L Psi = 0 for " + to_csv(lam));
            o.require(rep.oracle_agrees, "oracle agreement for " + to_csv(lam));
            o.require(rep.theorem, "Z = K(1^n) for " + to_csv(lam) + " " + rep.detail);
          });
          ++runs;
        }
      }
    }
  // The conventions differ only for r >= 2; the mirror pairing is not a solution of the reflection equations there.
  ModelSpec mirror = spec_at(2, 2, Point{Rational(1), make_rational(1, 3), Rational(-2), make_rational(-7, 3), make_rational(3, 5),
                                          make_rational(2, 9)});
  mirror.convention = Convention::Mirror;
  VerifyOptions opts;
  opts.points = 3;
  bool mirror_refl = verify_identity("refl_left", mirror, opts).passed && verify_identity("refl_right", mirror, opts).passed;
  bool mirror_stat = hecke_stationary(mirror, {2, 1}, false).stationary;
  o.note << runs << " sector/point runs (n<=4, r<=2, magnitude pairing); resamples " << resamples
         << "; mirror pairing at r=2: reflection equations " << (mirror_refl ? "hold" : "fail") << ", L Psi = 0 "
         << (mirror_stat ? "holds" : "fails") << " (excluded)";
}

void criterion7(Outcome& o) {
  CounterRng rng(7);
  int resamples = 0;
  for (const Composition& lam : {Composition{1, 1}, Composition{2, 1}, Composition{2, 2}, Composition{2, 1, 0}}) {
    for (int pt = 0; pt < 5; ++pt) {
      at_generic_point(rng, resamples, [&](const Point& p) {
        FactorisationReport rep = factorisation_check(spec_at(static_cast<int>(lam.size()), 2, p), lam, true);
        o.require(rep.normalisation_holds, "Z factorisation " + to_csv(lam));
        o.require(rep.polynomial_holds.value_or(false), "polynomial factorisation " + to_csv(lam));
      });
    }
  }
  o.note << "(1,1),(2,1),(2,2),(2,1,0) at 5 points, normalisation and polynomial identity; resamples " << resamples;
}

void criterion8(Outcome& o) {
  CounterRng rng(8);
  int resamples = 0, runs = 0, pure = 0;
  for (auto [rL, rR] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}})
    for (int n = 1; n <= 3; ++n) {
      ModelSpec base;
      base.n = n;
      base.r = 2;
      base.rL = rL;
      base.rR = rR;
      for (const auto& lam : all_sectors(base)) {
        at_generic_point(rng, resamples, [&](const Point& p) {
          ModelSpec s = spec_at(n, 2, p);
          s.rL = rL;
          s.rR = rR;
          GeneralisedReport rep = generalised_stationary(s, lam);
          std::string tag = to_csv(lam) + " (rL,rR)=(" + std::to_string(rL) + "," + std::to_string(rR) + ")";
          o.require(rep.relation_failures.empty(), "component relations " + tag);
          o.require(rep.qkz_failures.empty(), "exchange relations " + tag);
          o.require(rep.stationary, "stationarity " + tag);
          o.require(rep.oracle_agrees, "oracle " + tag);
          if (rep.constant_formula) {
            ++pure;
            o.require(*rep.constant_formula, "pure-constant formula " + tag);
          }
        });
        ++runs;
      }
    }
  o.note << runs << " sectors, n<=3, r=2; pure-constant formula checked in " << pure << "; resamples " << resamples;
}

void criterion9(Outcome& o) {
  auto run = [&](int n, const Composition& lam, double tol, std::uint64_t events) {
    SimConfig cfg;
    cfg.spec.n = n;
    cfg.spec.r = 1;
    cfg.spec.t = make_rational(1, 2);
    cfg.rates = Rates{Rational(1), Rational(1), make_rational(1, 2), make_rational(1, 2)};
    cfg.initial = lam;
    cfg.events = events;
    cfg.seed = 20240901;
    o.require(rate_audit(cfg.spec, *cfg.rates, generator_from_rates(cfg.spec, *cfg.rates)).empty(), "rate audit");
    StationaryState exact = nullspace_stationary(cfg.spec, lam, generator_from_rates(cfg.spec, *cfg.rates));
    EmpiricalDistribution emp = simulate(cfg);
    double tv = tv_distance(emp, exact), bound = tv_noise_bound(emp);
    o.require(tv <= tol, "tv " + std::to_string(tv) + " for " + to_csv(lam));
    o.note << to_csv(lam) << ": tv=" << tv << " (3sd " << bound << "); ";
  };
  run(2, {1, 0}, 0.01, 1000000);
  for (int k = 0; k <= 5; ++k) {
    Composition lam(5, 0);
    for (int i = 0; i < k; ++i) lam[static_cast<std::size_t>(i)] = 1;
    run(5, lam, 0.02, 4000000);
  }
  ModelSpec s;
  s.n = 5;
  o.require(rate_audit(s, boundary_rates(s), generator_from_blocks(s)).empty(), "rate audit against block generator");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Hecke relations", criterion1},
      {"lattice identities", criterion2},
      {"transfer matrix commutativity", criterion3},
      {"generator identity", criterion4},
      {"non-symmetric eigenproblem and recursions", criterion5},
      {"stationarity and normalisation theorem", criterion6},
      {"factorisation of the normalisation", criterion7},
      {"generalised boundaries", criterion8},
      {"stochastic cross-check", criterion9}};
  bool all = true;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s [%.1fs] %s\n", k, name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.note.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
