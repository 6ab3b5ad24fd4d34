#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asepk/field.hpp"

namespace asepk {

using Composition = std::vector<int>;

// A signed permutation given as a word in s_1..s_n (s_n negates the last entry).
// Applying `word` left to right to the source composition yields the target.
// The target satisfies target[i] = sign_vector[i] * source[permutation[i]].
struct SignedWord {
  std::vector<int> word;
  std::vector<int> sign_vector;
  std::vector<int> permutation;  // 0-based
  int length() const { return static_cast<int>(word.size()); }
  int minus_count() const;
};

struct Antidominant {
  Composition delta;
  SignedWord word;  // word applied to delta gives the input
};

struct SpectralData {
  std::vector<int> rho;
  std::vector<int> eps;
};

std::string to_csv(const Composition& c);
Composition parse_composition(const std::string& csv);

// s_g for g in 1..n-1 swaps entries g, g+1 (1-based); s_n negates the last entry.
// With a cutoff, s_n only acts when |last| > cutoff.
Composition apply_generator(const Composition& c, int g, std::optional<int> cutoff = std::nullopt);
Composition apply_word(const Composition& c, const std::vector<int>& word, std::optional<int> cutoff = std::nullopt);

std::set<Composition> orbit(const Composition& lambda, std::optional<int> deformed_rR = std::nullopt);

// Partial sums of lambda - mu all nonnegative.
bool dominance_leq(const Composition& mu, const Composition& lambda);
// Weakly decreasing reordering of absolute values.
Composition dominant(const Composition& lambda);
// lambda >= mu in the order: lambda^+ > mu^+, or equal dominant parts and lambda >= mu.
bool succeq(const Composition& lambda, const Composition& mu);

// Shortest word (lexicographically least among shortest) from `from` to `to`.
SignedWord shortest_word(const Composition& from, const Composition& to, std::optional<int> cutoff = std::nullopt);

// Weakly increasing nonpositive representative; with a cutoff only entries of
// modulus > cutoff are made negative (deformed action).
Composition antidominant_form(const Composition& lambda, std::optional<int> cutoff = std::nullopt);
Antidominant antidominant(const Composition& lambda, std::optional<int> cutoff = std::nullopt);

SpectralData spectral_data(const Composition& lambda);

// y_i(lambda) = q^{lambda_i} t^{n-i+rho_i} (t0 tn)^{eps_i}.
template <class K>
std::vector<K> spectral_values(const Composition& lambda, const K& q, const K& t, const K& t0, const K& tn) {
  SpectralData s = spectral_data(lambda);
  const int n = static_cast<int>(lambda.size());
  std::vector<K> y;
  K t0tn = t0 * tn;
  for (int k = 0; k < n; ++k) {
    K v = ipow(q, lambda[static_cast<std::size_t>(k)]) * ipow(t, n - 1 - k + s.rho[static_cast<std::size_t>(k)]);
    if (s.eps[static_cast<std::size_t>(k)]) v = v * t0tn;
    y.push_back(v);
  }
  return y;
}

// (mu^c, mu^pi): entries with |mu_i| <= rL kept in order / zeroed in place.
std::pair<Composition, Composition> mu_split(const Composition& mu, int rL);

Composition conjugate(const Composition& partition);

}  // namespace asepk
