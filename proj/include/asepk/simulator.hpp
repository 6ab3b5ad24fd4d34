#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asepk/lattice.hpp"
#include "asepk/stationary.hpp"

namespace asepk {

struct SimConfig {
  ModelSpec spec;
  std::optional<Rates> rates;  // exact boundary rates; boundary_rates(spec) when unset
  Composition sector;          // declared sector (dominant form); empty means the sector of `initial`
  Composition initial;
  std::uint64_t events = 1000000;  // recorded events, summed over trajectories
  std::uint64_t burn_in = 10000;   // per trajectory
  std::uint64_t seed = 1;
  std::uint64_t thin = 1;
  int trajectories = 4;
  int batches = 20;  // per trajectory
};

using Distribution = std::map<Composition, double>;

struct EmpiricalDistribution {
  Distribution counts;  // occupation time
  double total_time = 0;
  std::vector<Distribution> batch_probabilities;
  std::uint64_t seed = 0;
  std::uint64_t events = 0;

  Distribution probabilities() const;
};

struct Transition {
  Composition target;
  Rational rate;
};

// Moves enabled in mu: bulk swaps at rate 1 (ascent) or t (descent), boundary flips.
std::vector<Transition> enabled_transitions(const ModelSpec& spec, const Rates& rates, const Composition& mu);

// Compares enabled_transitions against the columns of L for every configuration.
// Returns one line per disagreeing entry.
std::vector<std::string> rate_audit(const ModelSpec& spec, const Rates& rates, const SparseMatrix<Rational>& L);

// Gillespie simulation with occupation-time averaging. Trajectory k draws from
// CounterRng(seed, k); results are merged in trajectory order.
EmpiricalDistribution simulate(const SimConfig& cfg);

Distribution normalised(const StationaryState& exact);

// Half the l1 distance over the union of supports.
double tv_distance(const Distribution& p, const Distribution& q);
// Throws Structural when the empirical support leaves the exact state's support.
double tv_distance(const EmpiricalDistribution& emp, const StationaryState& exact);

// 3 sigma half-width on the TV distance from batch means: 1/2 sum_mu 3 sd_mu / sqrt(B).
double tv_noise_bound(const EmpiricalDistribution& emp);

}  // namespace asepk
