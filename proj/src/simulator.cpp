#include "asepk/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <thread>
#include <unordered_map>

#include "asepk/rng.hpp"

namespace asepk {

namespace {

struct Exits {
  std::vector<std::size_t> targets;
  std::vector<double> cumulative;
  double total = 0;
};

struct Trajectory {
  std::map<std::size_t, double> occupation;
  std::vector<std::map<std::size_t, double>> batches;
};

class Walker {
 public:
  Walker(const ModelSpec& spec, const Rates& rates) : spec_(spec), rates_(rates) {}

  const Exits& exits(std::size_t state) {
    auto it = cache_.find(state);
    if (it != cache_.end()) return it->second;
    Exits e;
    for (const auto& tr : enabled_transitions(spec_, rates_, config_from_index(state, spec_.n, spec_.r))) {
      double v = tr.rate.get_d();
      if (v == 0) continue;
      e.total += v;
      e.targets.push_back(config_index(tr.target, spec_.r));
      e.cumulative.push_back(e.total);
    }
    if (e.total <= 0)
      fail(ErrorKind::Degenerate, "absorbing state " + to_csv(config_from_index(state, spec_.n, spec_.r)));
    return cache_.emplace(state, std::move(e)).first->second;
  }

 private:
  const ModelSpec& spec_;
  const Rates& rates_;
  std::unordered_map<std::size_t, Exits> cache_;
};

Trajectory run_trajectory(const SimConfig& cfg, const Rates& rates, std::uint64_t stream, std::uint64_t events) {
  Walker walker(cfg.spec, rates);
  CounterRng rng(cfg.seed, stream);
  std::size_t state = config_index(cfg.initial, cfg.spec.r);
  Trajectory out;
  const auto nb = static_cast<std::uint64_t>(std::max(1, cfg.batches));
  out.batches.resize(nb);
  const std::uint64_t thin = std::max<std::uint64_t>(1, cfg.thin);
  const std::uint64_t per_batch = std::max<std::uint64_t>(1, events / nb);

  auto step = [&](std::uint64_t k, bool record) {
    const Exits& e = walker.exits(state);
    double hold = -std::log1p(-rng.uniform01()) / e.total;
    if (record && k % thin == 0) {
      out.occupation[state] += hold;
      out.batches[std::min(nb - 1, k / per_batch)][state] += hold;
    }
    double u = rng.uniform01() * e.total;
    auto pick = std::upper_bound(e.cumulative.begin(), e.cumulative.end(), u) - e.cumulative.begin();
    state = e.targets[std::min(static_cast<std::size_t>(pick), e.targets.size() - 1)];
  };
  for (std::uint64_t k = 0; k < cfg.burn_in; ++k) step(k, false);
  for (std::uint64_t k = 0; k < events; ++k) step(k, true);
  return out;
}

Distribution to_distribution(const std::map<std::size_t, double>& occ, const ModelSpec& spec) {
  double total = 0;
  for (const auto& [s, v] : occ) total += v;
  Distribution out;
  if (total <= 0) return out;
  for (const auto& [s, v] : occ) out.emplace(config_from_index(s, spec.n, spec.r), v / total);
  return out;
}

}  // namespace

Distribution EmpiricalDistribution::probabilities() const {
  Distribution out;
  if (total_time <= 0) return out;
  for (const auto& [mu, v] : counts) out.emplace(mu, v / total_time);
  return out;
}

std::vector<Transition> enabled_transitions(const ModelSpec& spec, const Rates& rates, const Composition& mu) {
  std::vector<Transition> out;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    if (mu[i] == mu[i + 1]) continue;
    Composition nu = mu;
    std::swap(nu[i], nu[i + 1]);
    out.push_back({nu, mu[i] < mu[i + 1] ? Rational(1) : spec.t});
  }
  for (const auto& mv : boundary_moves(spec, rates, mu)) {
    Composition nu = mu;
    nu[mv.pos] = mv.label;
    out.push_back({nu, mv.rate});
  }
  return out;
}

std::vector<std::string> rate_audit(const ModelSpec& spec, const Rates& rates, const SparseMatrix<Rational>& L) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < spec.config_dim(); ++j) {
    Composition mu = config_from_index(j, spec.n, spec.r);
    std::map<std::size_t, Rational> sim;
    Rational exit(0);
    for (const auto& tr : enabled_transitions(spec, rates, mu)) {
      sim[config_index(tr.target, spec.r)] += tr.rate;
      exit += tr.rate;
    }
    std::set<std::size_t> rows;
    for (const auto& [i, v] : L.column(j)) rows.insert(i);
    for (const auto& [i, v] : sim) rows.insert(i);
    for (std::size_t i : rows) {
      Rational want = i == j ? Rational(-exit) : (sim.count(i) ? sim.at(i) : Rational(0));
      if (L.get(i, j) != want)
        out.push_back(to_csv(mu) + " -> " + to_csv(config_from_index(i, spec.n, spec.r)) + ": simulator " +
                      to_string(want) + ", generator " + to_string(L.get(i, j)));
    }
  }
  return out;
}

EmpiricalDistribution simulate(const SimConfig& cfg) {
  cfg.spec.validate();
  require(static_cast<int>(cfg.initial.size()) == cfg.spec.n, ErrorKind::Usage, "initial configuration has the wrong length");
  require(cfg.trajectories >= 1, ErrorKind::Usage, "need at least one trajectory");
  Rates rates = cfg.rates.value_or(boundary_rates(cfg.spec));
  for (const Rational* v : {&rates.alpha, &rates.beta, &rates.gamma, &rates.delta})
    require(*v >= 0, ErrorKind::Usage, "boundary rates must be nonnegative");
  require(cfg.spec.t >= 0, ErrorKind::Usage, "bulk rate t must be nonnegative");

  Composition sector = cfg.sector;
  if (sector.empty()) {
    require(cfg.spec.rL == 0 && cfg.spec.rR == 0, ErrorKind::Usage, "declare the sector when cutoffs are nonzero");
    sector = dominant(cfg.initial);
  }
  auto states = sector_states(cfg.spec, sector);
  require(std::find(states.begin(), states.end(), cfg.initial) != states.end(), ErrorKind::Usage,
          "initial configuration " + to_csv(cfg.initial) + " is not in sector " + to_csv(sector));

  EmpiricalDistribution out;
  out.seed = cfg.seed;
  out.events = cfg.events;
  if (states.size() == 1) {
    out.counts.emplace(cfg.initial, 1.0);
    out.total_time = 1.0;
    return out;
  }

  const auto T = static_cast<std::uint64_t>(cfg.trajectories);
  std::vector<Trajectory> runs(T);
  std::vector<std::exception_ptr> errors(T);
  std::vector<std::thread> pool;
  for (std::uint64_t k = 0; k < T; ++k) {
    std::uint64_t share = cfg.events / T + (k < cfg.events % T ? 1 : 0);
    pool.emplace_back([&, k, share] {
      try {
        runs[k] = run_trajectory(cfg, rates, k, share);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::map<std::size_t, double> merged;
  for (const auto& run : runs) {
    for (const auto& [s, v] : run.occupation) merged[s] += v;
    for (const auto& b : run.batches)
      if (!b.empty()) out.batch_probabilities.push_back(to_distribution(b, cfg.spec));
  }
  for (const auto& [s, v] : merged) {
    out.counts.emplace(config_from_index(s, cfg.spec.n, cfg.spec.r), v);
    out.total_time += v;
  }
  return out;
}

Distribution normalised(const StationaryState& exact) {
  require(exact.Z != 0, ErrorKind::Degenerate, "stationary state has zero normalisation");
  Distribution out;
  for (const auto& [mu, w] : exact.weights) out.emplace(mu, Rational(w / exact.Z).get_d());
  return out;
}

double tv_distance(const Distribution& p, const Distribution& q) {
  double acc = 0;
  for (const auto& [mu, v] : p) {
    auto it = q.find(mu);
    acc += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [mu, v] : q)
    if (!p.count(mu)) acc += std::abs(v);
  return acc / 2;
}

double tv_distance(const EmpiricalDistribution& emp, const StationaryState& exact) {
  for (const auto& [mu, v] : emp.counts)
    require(exact.weights.count(mu) > 0, ErrorKind::Structural, "simulated state " + to_csv(mu) + " is outside the sector");
  return tv_distance(emp.probabilities(), normalised(exact));
}

double tv_noise_bound(const EmpiricalDistribution& emp) {
  const auto& bs = emp.batch_probabilities;
  if (bs.size() < 2) return 0;
  std::set<Composition> support;
  for (const auto& b : bs)
    for (const auto& [mu, v] : b) support.insert(mu);
  const auto B = static_cast<double>(bs.size());
  double acc = 0;
  for (const auto& mu : support) {
    double mean = 0, sq = 0;
    for (const auto& b : bs) {
      auto it = b.find(mu);
      double v = it == b.end() ? 0.0 : it->second;
      mean += v;
      sq += v * v;
    }
    mean /= B;
    double var = std::max(0.0, (sq / B - mean * mean) * B / (B - 1));
    acc += 3 * std::sqrt(var / B);
  }
  return acc / 2;
}

}  // namespace asepk
