#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asepk/lattice.hpp"

namespace asepk {

struct VerificationReport {
  std::string name;
  bool passed = false;
  std::uint64_t seed = 0;
  int points = 0;               // sampled points actually checked
  int resamples = 0;            // points rejected because they hit a pole
  std::size_t residual_nnz = 0; // summed over all points
  std::vector<std::pair<std::string, Rational>> point;  // first failing point, else the last one
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int points = 20;
  bool randomise_params = true;  // draw t, a, b, c, d as well as the spectral parameters
  int max_resamples = 200;
};

// Model identities followed by the extra consistency checks, in suite order.
const std::vector<std::string>& identity_names();
const std::vector<std::string>& core_identity_names();

VerificationReport verify_identity(const std::string& name, const ModelSpec& spec, const VerifyOptions& opts);
std::vector<VerificationReport> verify_suite(const std::vector<std::string>& names, const ModelSpec& spec,
                                             const VerifyOptions& opts);

}  // namespace asepk
