#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asepk/hecke.hpp"
#include "asepk/lattice.hpp"

namespace asepk {

using Weights = std::map<Composition, Rational>;

struct StationaryState {
  Composition sector;
  Weights weights;
  Rational Z;
  std::string provenance;  // "hecke", "nullspace" or "product"
};

// States of the sector through lambda: the W_0 orbit, deformed with cutoff
// min(rL, rR) when either cutoff is nonzero.
std::vector<Composition> sector_states(const ModelSpec& spec, const Composition& lambda);

// Distinct sectors on n sites with labels bounded by r, one dominant
// representative each.
std::vector<Composition> all_sectors(const ModelSpec& spec);

// Exact null vector of the sector block of L (fraction-free elimination on the
// unique recurrent class), normalised so the antidominant component is 1.
// Throws Degenerate when the null space is not one-dimensional.
StationaryState nullspace_stationary(const ModelSpec& spec, const Composition& lambda);
// Same, for a caller-supplied generator on the full configuration space.
StationaryState nullspace_stationary(const ModelSpec& spec, const Composition& lambda, const SparseMatrix<Rational>& L);

// Largest entry of |L w| restricted to nothing: true iff L w = 0 exactly.
bool is_stationary(const SparseMatrix<Rational>& L, const ModelSpec& spec, const Weights& w);

// Hecke context with the sign map used by the stationary pipeline: lattice
// (a, b, c, d) enter the polynomial representation as (-a, -b, -c, -d), q symbolic.
HeckeContext<UniRatFun> stationary_context(const ModelSpec& spec);

// f_mu(1^n) at q = 1 for every member of the family.
Weights weights_at_one(const PolyFamily<UniRatFun>& fam);

// Exchange relations R_i Psi = s_i Psi, K_0(x_1) Psi = s_0 Psi, K_n(x_n) Psi = s_n Psi
// checked as polynomial identities in x (denominators cleared). The K_0 relation
// uses the q-deformed boundary matrix. Returns one entry per failing component.
std::vector<std::string> qkz_failures(const PolyFamily<UniRatFun>& fam, const HeckeContext<UniRatFun>& ctx,
                                      const ModelSpec& spec);
std::vector<std::string> qkz_failures_at_q1(const PolyFamily<Rational>& fam, const ModelSpec& spec);

PolyFamily<Rational> specialise_family_q1(const PolyFamily<UniRatFun>& fam);

struct HeckeStationary {
  StationaryState state;
  Rational K_at_one;  // K_lambda(1^n; q=1) from the symmetrised family
  Rational scale_anchor;  // E_delta(1^n) at q = 1
  std::vector<std::string> qkz_failures;
  std::vector<std::string> relation_failures;
  bool stationary = false;
};

// Stationary weights from the f-family at x = 1^n, q -> 1 (rL = rR = 0 only).
HeckeStationary hecke_stationary(const ModelSpec& spec, const Composition& lambda, bool check_qkz = true);

struct EigenvalueRecord {
  Composition sector;
  std::vector<std::pair<Rational, Rational>> values;  // (w, Lambda(w))
  bool left_eigenvector = false;
};

// <theta| = sum of the sector's bra vectors; checks <theta| T(w) = Lambda(w) <theta|
// at x = 1^n for each w and records Lambda (Lambda(1) = 1 is included).
EigenvalueRecord sector_eigenvalue(const ModelSpec& spec, const Composition& lambda, const std::vector<Rational>& ws);

struct TheoremReport {
  Composition sector;
  HeckeStationary hecke;
  StationaryState oracle;  // rescaled by the anchor
  bool oracle_agrees = false;
  bool theorem = false;  // Z = K_lambda(1^n; q=1), L Psi = 0, and agreement with the oracle
  std::string detail;
};

TheoremReport theorem_check(const ModelSpec& spec, const Composition& lambda);

struct FactorisationReport {
  Composition lambda;
  Rational Z, product;
  std::vector<Rational> column_factors;
  bool normalisation_holds = false;
  std::optional<bool> polynomial_holds;  // set when the x-identity was checked
};

// Z_lambda against prod_i Z_{1^{lambda'_i}} on the same n sites; with
// check_polynomial also K_lambda(x; q=1) against the product of column polynomials.
FactorisationReport factorisation_check(const ModelSpec& spec, const Composition& lambda, bool check_polynomial);

struct GeneralisedReport {
  Composition sector;
  StationaryState state;
  std::vector<std::string> relation_failures;
  std::vector<std::string> qkz_failures;
  bool stationary = false;
  bool oracle_agrees = false;
  std::optional<bool> constant_formula;  // set in the pure-constant case
  bool passed() const {
    return relation_failures.empty() && qkz_failures.empty() && stationary && oracle_agrees && constant_formula.value_or(true);
  }
};

// Product-formula state for generalised boundaries (rR <= rL).
GeneralisedReport generalised_stationary(const ModelSpec& spec, const Composition& lambda);

// True when the two weight maps have the same support and a constant ratio.
bool proportional(const Weights& a, const Weights& b);

}  // namespace asepk
