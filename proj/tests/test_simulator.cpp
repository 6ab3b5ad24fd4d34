#include <doctest.h>

#include "asepk/simulator.hpp"
#include "test_util.hpp"

using namespace asepk;

namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

// alpha = beta = 1, gamma = delta = 1/2, t = 1/2; not reachable from rational (a, c).
SimConfig reference(int n, Composition initial) {
  SimConfig cfg;
  cfg.spec.n = n;
  cfg.spec.r = 1;
  cfg.spec.t = Q(1, 2);
  cfg.rates = Rates{Q(1), Q(1), Q(1, 2), Q(1, 2)};
  cfg.initial = std::move(initial);
  cfg.seed = 2024;
  return cfg;
}

StationaryState exact_for(const SimConfig& cfg) {
  return nullspace_stationary(cfg.spec, dominant(cfg.initial), generator_from_rates(cfg.spec, *cfg.rates));
}

}  // namespace

TEST_CASE("tv distance basics") {
  Distribution p{{{1, 0}, 1.0}}, u{{{1, 0}, 0.5}, {{0, 1}, 0.5}};
  CHECK(tv_distance(p, p) == 0);
  CHECK(tv_distance(p, u) == doctest::Approx(0.5));
  CHECK(tv_distance(u, p) == doctest::Approx(0.5));
}

TEST_CASE("single state sector gives a point mass") {
  SimConfig cfg = reference(2, {1, 1});
  cfg.spec.rL = 1;
  cfg.spec.rR = 1;
  cfg.sector = {1, 1};
  EmpiricalDistribution emp = simulate(cfg);
  CHECK(emp.probabilities() == Distribution{{{1, 1}, 1.0}});
  StationaryState exact = nullspace_stationary(cfg.spec, {1, 1}, generator_from_rates(cfg.spec, *cfg.rates));
  CHECK(tv_distance(emp, exact) == 0);
}

TEST_CASE("absorbing state is reported") {
  SimConfig cfg = reference(1, {1});
  cfg.rates = Rates{Q(0), Q(1), Q(1), Q(0)};
  cfg.events = 1000;
  CHECK_THROWS_AS(simulate(cfg), Error);
}

TEST_CASE("rates audit against the generator") {
  for (auto conv : {Convention::Magnitude, Convention::Mirror})
    for (auto [n, r, rL, rR] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 0, 0}, {3, 1, 0, 0}, {2, 2, 0, 0}, {3, 2, 1, 0}, {2, 2, 1, 1}}) {
      ModelSpec s;
      s.n = n;
      s.r = r;
      s.rL = rL;
      s.rR = rR;
      s.convention = conv;
      CAPTURE(n);
      CAPTURE(r);
      CHECK(rate_audit(s, boundary_rates(s), generator_from_blocks(s)).empty());
    }
  SimConfig cfg = reference(3, {1, 0, 0});
  CHECK(rate_audit(cfg.spec, *cfg.rates, generator_from_rates(cfg.spec, *cfg.rates)).empty());
  Rates off = *cfg.rates;
  off.beta = Q(2);
  CHECK_FALSE(rate_audit(cfg.spec, off, generator_from_rates(cfg.spec, *cfg.rates)).empty());
}

TEST_CASE("simulation is deterministic given the seed") {
  SimConfig cfg = reference(2, {1, 0});
  cfg.events = 20000;
  EmpiricalDistribution a = simulate(cfg), b = simulate(cfg);
  CHECK(a.counts == b.counts);
  CHECK(a.total_time == b.total_time);
  cfg.seed = 7;
  CHECK(simulate(cfg).counts != a.counts);
  cfg.initial = {2, 0};
  CHECK_THROWS_AS(simulate(cfg), Error);
}

TEST_CASE("two-site reference sector") {
  SimConfig cfg = reference(2, {1, 0});
  StationaryState exact = exact_for(cfg);
  EmpiricalDistribution emp = simulate(cfg);
  double tv = tv_distance(emp, exact);
  MESSAGE("n=2 tv " << tv << " bound " << tv_noise_bound(emp));
  CHECK(tv <= 0.01);
  CHECK(tv <= tv_noise_bound(emp));
  double sum = 0;
  for (const auto& [mu, p] : emp.probabilities()) sum += p;
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("five-site single-species sectors") {
  for (const Composition& lam : {Composition{1, 0, 0, 0, 0}, Composition{1, 1, 0, 0, 0}, Composition{1, 1, 1, 1, 1}}) {
    SimConfig cfg = reference(5, lam);
    cfg.events = 4000000;
    StationaryState exact = exact_for(cfg);
    EmpiricalDistribution emp = simulate(cfg);
    double tv = tv_distance(emp, exact);
    MESSAGE("n=5 " << to_csv(lam) << " tv " << tv << " bound " << tv_noise_bound(emp));
    CHECK(tv <= 0.02);
  }
}

TEST_CASE("reversed dynamics against the transformed exact state") {
  // Bulk rates 1 and t exchanged, time rescaled by 1/t, boundary rates swapped and rescaled.
  SimConfig cfg = reference(3, {1, 0, 0});
  Rational t = cfg.spec.t;
  cfg.spec.t = 1 / t;
  cfg.rates = Rates{Q(1, 2) / t, Q(1, 2) / t, Q(1) / t, Q(1) / t};
  StationaryState exact = exact_for(cfg);
  EmpiricalDistribution emp = simulate(cfg);
  CHECK(tv_distance(emp, exact) <= 0.01);
}

TEST_CASE("error shrinks with more events") {
  int improved = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SimConfig cfg = reference(3, {1, 0, 0});
    cfg.seed = seed;
    cfg.events = 10000;
    StationaryState exact = exact_for(cfg);
    double small = tv_distance(simulate(cfg), exact);
    cfg.events = 1000000;
    double large = tv_distance(simulate(cfg), exact);
    if (large < small) ++improved;
  }
  CHECK(improved >= 4);
}
