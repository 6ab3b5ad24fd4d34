#include "asepk/lattice.hpp"

#include <cstdlib>

namespace asepk {

std::string to_string(Convention c) { return c == Convention::Magnitude ? "magnitude" : "mirror"; }

Convention parse_convention(const std::string& s) {
  if (s == "magnitude") return Convention::Magnitude;
  if (s == "mirror") return Convention::Mirror;
  fail(ErrorKind::Usage, "unknown convention '" + s + "' (expected magnitude or mirror)");
}

std::size_t ModelSpec::config_dim() const {
  std::size_t N = 1;
  for (int k = 0; k < n; ++k) N *= static_cast<std::size_t>(local_dim());
  return N;
}

void ModelSpec::validate() const {
  require(n >= 1, ErrorKind::Usage, "n must be at least 1");
  require(r >= 1, ErrorKind::Usage, "r must be at least 1");
  require(rL >= 0 && rL <= r && rR >= 0 && rR <= r, ErrorKind::Usage, "cutoffs must lie in [0, r]");
}

int partner(const ModelSpec& spec, int i) { return spec.convention == Convention::Magnitude ? i : spec.r + 1 - i; }

Rates boundary_rates(const ModelSpec& spec) {
  Rational one(1), omt = one - spec.t;
  Rational hl = (one + spec.a) * (one + spec.c), hr = (one + spec.b) * (one + spec.d);
  Rates out;
  out.alpha = checked_div(-spec.a * spec.c * omt, hl);
  out.gamma = checked_div(omt, hl);
  out.beta = checked_div(-spec.b * spec.d * omt, hr);
  out.delta = checked_div(omt, hr);
  return out;
}

namespace {

bool rational_sqrt(const Rational& v, Rational& out) {
  if (v < 0) return false;
  mpz_class n = v.get_num(), d = v.get_den();
  mpz_class sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

}  // namespace

std::pair<Rational, Rational> inverse_rates(const Rational& alpha, const Rational& gamma, const Rational& t) {
  require(!is_zero(gamma), ErrorKind::Usage, "gamma must be nonzero to invert the rate map");
  Rational one(1);
  Rational s = checked_div(one - t + alpha - gamma, gamma);
  Rational p = checked_div(-alpha, gamma);
  Rational disc = s * s - 4 * p, root;
  require(rational_sqrt(disc, root), ErrorKind::Usage, "boundary parameters are irrational for these rates");
  Rational lo = (s - root) / 2, hi = (s + root) / 2;
  return {lo, hi};
}

std::size_t config_index(const Composition& mu, int r) {
  const auto D = static_cast<std::size_t>(2 * r + 1);
  std::size_t idx = 0;
  for (int m : mu) {
    require(std::abs(m) <= r, ErrorKind::Usage, "label exceeds the rank");
    idx = idx * D + static_cast<std::size_t>(m + r);
  }
  return idx;
}

Composition config_from_index(std::size_t index, int n, int r) {
  const auto D = static_cast<std::size_t>(2 * r + 1);
  Composition mu(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    mu[static_cast<std::size_t>(k)] = static_cast<int>(index % D) - r;
    index /= D;
  }
  return mu;
}

SparseMatrix<UniRatFun> dual_k_symbolic(Side side, const ModelSpec& spec) {
  const auto D = static_cast<std::size_t>(spec.local_dim());
  const std::vector<std::size_t> dims{D, D};
  UniRatFun x = UniRatFun::variable();
  UniRatFun t(spec.t);
  SparseMatrix<UniRatFun> rt = r_tilde(x * x, t, spec.r);
  SparseMatrix<UniRatFun> p = permutation<UniRatFun>(spec.r);
  SparseMatrix<UniRatFun> id = SparseMatrix<UniRatFun>::identity(D);
  if (side == Side::Left) return partial_trace(kron(id, k0_matrix(x, spec)) * rt * p, dims, 1);
  return partial_trace(kron(kn_matrix(x.inverse(), spec), id) * rt * p, dims, 0);
}

namespace {

void add_transition(SparseMatrix<Rational>& L, std::size_t from, std::size_t to, const Rational& rate) {
  L.add_to(to, from, rate);
  L.add_to(from, from, -rate);
}

void add_bulk(SparseMatrix<Rational>& L, const ModelSpec& spec) {
  const std::size_t N = spec.config_dim();
  for (std::size_t j = 0; j < N; ++j) {
    Composition mu = config_from_index(j, spec.n, spec.r);
    for (int i = 0; i + 1 < spec.n; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (mu[k] == mu[k + 1]) continue;
      Composition nu = mu;
      std::swap(nu[k], nu[k + 1]);
      add_transition(L, j, config_index(nu, spec.r), mu[k] < mu[k + 1] ? Rational(1) : spec.t);
    }
  }
}

}  // namespace

std::vector<BoundaryMove> boundary_moves(const ModelSpec& spec, const Rates& rt, const Composition& mu) {
  std::vector<BoundaryMove> out;
  const std::size_t last = mu.size() - 1;
  for (int i = 1; i <= spec.r; ++i) {
    int p = partner(spec, i);
    if (i > spec.rL) {
      if (mu.front() == -i) out.push_back({0, p, rt.alpha});
      if (mu.front() == p) out.push_back({0, -i, rt.gamma});
    }
    if (i > spec.rR) {
      if (mu.back() == p) out.push_back({last, -i, rt.beta});
      if (mu.back() == -i) out.push_back({last, p, rt.delta});
    }
  }
  return out;
}

SparseMatrix<Rational> generator_from_rates(const ModelSpec& spec) { return generator_from_rates(spec, boundary_rates(spec)); }

SparseMatrix<Rational> generator_from_rates(const ModelSpec& spec, const Rates& rt) {
  spec.validate();
  const std::size_t N = spec.config_dim();
  SparseMatrix<Rational> L(N, std::vector<std::size_t>(static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.local_dim())));
  add_bulk(L, spec);
  for (std::size_t j = 0; j < N; ++j) {
    Composition mu = config_from_index(j, spec.n, spec.r);
    for (const auto& [pos, label, rate] : boundary_moves(spec, rt, mu)) {
      Composition nu = mu;
      nu[pos] = label;
      add_transition(L, j, config_index(nu, spec.r), rate);
    }
  }
  return L;
}

SparseMatrix<Rational> generator_from_blocks(const ModelSpec& spec) {
  spec.validate();
  const std::size_t N = spec.config_dim();
  const auto D = static_cast<std::size_t>(spec.local_dim());
  std::vector<std::size_t> dims(static_cast<std::size_t>(spec.n), D);
  SparseMatrix<Rational> L(N, dims);
  add_bulk(L, spec);
  using Du = Dual<Rational>;
  Du w = Du::variable(Rational(1));
  Rational half = (Rational(1) - spec.t) / 2;
  auto left = k0_matrix(w, spec).map([&](const Du& v) { return Rational(half * v.deriv()); });
  auto right = kn_matrix(w, spec).map([&](const Du& v) { return Rational(-half * v.deriv()); });
  L += embed(left, dims, {0});
  L += embed(right, dims, {static_cast<std::size_t>(spec.n - 1)});
  return L;
}

SparseMatrix<Rational> generator_from_transfer(const ModelSpec& spec) {
  spec.validate();
  using Du = Dual<Rational>;
  DualKPair duals(spec);
  std::vector<Du> x(static_cast<std::size_t>(spec.n), Du(Rational(1)));
  auto T = transfer_matrix<Du>(spec, duals, Du::variable(Rational(1)), x);
  Rational half = (Rational(1) - spec.t) / 2;
  return T.map([&](const Du& v) { return Rational(half * v.deriv()); });
}

}  // namespace asepk
