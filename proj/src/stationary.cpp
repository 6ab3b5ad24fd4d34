#include "asepk/stationary.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace asepk {

namespace {

std::optional<int> cutoff_of(const ModelSpec& spec) {
  if (spec.rL == 0 && spec.rR == 0) return std::nullopt;
  return std::min(spec.rL, spec.rR);
}

Composition anchor_of(const ModelSpec& spec, const Composition& lambda) {
  return antidominant_form(lambda, cutoff_of(spec));
}

// Strongly connected components (Tarjan); returns the component id per vertex.
std::vector<int> scc(const std::vector<std::vector<std::size_t>>& adj, int& count) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on(n, false);
  std::vector<std::size_t> stack;
  int next = 0;
  count = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

// One-dimensional kernel of a square rational matrix by Bareiss elimination
// on integer rows followed by rational back substitution.
std::vector<Rational> kernel_vector(const std::vector<std::vector<Rational>>& A) {
  const std::size_t m = A.size();
  std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (const auto& v : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < m; ++j) M[i][j] = A[i][j].get_num() * (l / A[i][j].get_den());
  }
  std::vector<std::size_t> pivot_col;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t p = row;
    while (p < m && M[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        mpz_class v = M[row][col] * M[i][j] - M[i][col] * M[row][j];
        mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][col] = 0;
    }
    prev = M[row][col];
    pivot_col.push_back(col);
    ++row;
  }
  const std::size_t rank = pivot_col.size();
  if (rank + 1 != m) {
    fail(ErrorKind::Degenerate, "null space of the sector block has dimension " + std::to_string(m - rank));
  }
  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(m, Rational(0));
  x[free_col] = 1;
  for (std::size_t k = rank; k-- > 0;) {
    std::size_t c = pivot_col[k];
    Rational s = 0;
    for (std::size_t j = c + 1; j < m; ++j) {
      if (M[k][j] != 0) s += Rational(M[k][j]) * x[j];
    }
    x[c] = -s / Rational(M[k][c]);
  }
  return x;
}

LaurentPoly<Rational> specialise_q1(const LaurentPoly<UniRatFun>& p) {
  return p.map_coeffs([](const UniRatFun& c) { return c.at_one(); });
}

template <class K>
K sum_of_coefficients(const LaurentPoly<K>& p) {
  K s(Rational(0));
  for (const auto& [e, c] : p.terms()) s = s + c;
  return s;
}

// Boundary matrices written as K0(x) = I + (q - x^2)/h0(x) M and
// Kn(x) = I + (1 - x^2)/hn(x) N; recovered from the lattice matrices at one
// regular point x*, indexed by (row label, column label).
template <class K>
using LabelMatrix = std::map<std::pair<int, int>, K>;

// (K - I) / f keyed by (row label, column label); the diagonal is read even where K is zero.
template <class K>
LabelMatrix<K> offset_labels(const SparseMatrix<K>& k, const K& f, int r) {
  LabelMatrix<K> out;
  auto put = [&](std::size_t i, std::size_t j, const K& w) {
    if (!is_zero(w)) out.emplace(std::make_pair(static_cast<int>(i) - r, static_cast<int>(j) - r), checked_div(w, f));
  };
  for (std::size_t j = 0; j < k.cols(); ++j) {
    put(j, j, k.get(j, j) - K(Rational(1)));
    for (const auto& [i, v] : k.column(j))
      if (i != j) put(i, j, v);
  }
  return out;
}

template <class K>
LabelMatrix<K> k0_offset(const ModelSpec& spec, const K& q, bool deformed) {
  for (long xs = 2;; ++xs) {
    K x{Rational(xs)};
    K h = (x + K(spec.a)) * (x + K(spec.c));
    if (is_zero(h)) continue;
    K f = checked_div(q - x * x, h);
    auto k = deformed ? k0_matrix<K>(x, spec, q) : k0_matrix<K>(x, spec);
    return offset_labels(k, f, spec.r);
  }
}

template <class K>
LabelMatrix<K> kn_offset(const ModelSpec& spec) {
  const K one(Rational(1));
  for (long xs = 2;; ++xs) {
    K x{Rational(xs)};
    K h = (K(spec.b) * x + one) * (K(spec.d) * x + one);
    if (is_zero(h)) continue;
    K f = checked_div(one - x * x, h);
    auto k = kn_matrix<K>(x, spec);
    return offset_labels(k, f, spec.r);
  }
}

template <class K>
std::vector<std::string> qkz_impl(const PolyFamily<K>& fam, const HeckeContext<K>& ctx, const ModelSpec& spec, bool deformed) {
  using P = LaurentPoly<K>;
  const int n = ctx.n();
  const auto& vars = ctx.vars();
  const K one(Rational(1));
  std::vector<std::string> bad;
  auto unit = [&](std::size_t idx, int pw) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[idx] = pw;
    return e;
  };
  const Exponent z(static_cast<std::size_t>(n), 0);
  auto member = [&](const Composition& mu) {
    auto it = fam.find(mu);
    return it == fam.end() ? P(vars) : it->second;
  };
  auto boundary = [&](std::size_t site, const P& h, const P& pre, const LabelMatrix<K>& M, int g, const std::string& name) {
    for (const auto& [mu, f] : fam) {
      P lhs = h * f;
      P comb(vars);
      int label = mu[site];
      for (const auto& [key, v] : M) {
        if (key.first != label) continue;
        Composition nu = mu;
        nu[site] = key.second;
        comb += member(nu).scaled(v);
      }
      lhs += pre * comb;
      lhs -= h * ctx.s(g, f);
      if (!lhs.is_zero()) bad.push_back(name + " at " + to_csv(mu));
    }
  };

  P h0(vars);
  h0.add_term(unit(0, 2), one);
  h0.add_term(unit(0, 1), K(Rational(spec.a + spec.c)));
  h0.add_term(z, K(Rational(spec.a * spec.c)));
  P pre0(vars);
  pre0.add_term(unit(0, 2), K(Rational(-1)));
  pre0.add_term(z, ctx.q());
  boundary(0, h0, pre0, k0_offset<K>(spec, ctx.q(), deformed), 0, "K0");

  const auto u = static_cast<std::size_t>(n - 1);
  P hn(vars);
  hn.add_term(unit(u, 2), K(Rational(spec.b * spec.d)));
  hn.add_term(unit(u, 1), K(Rational(spec.b + spec.d)));
  hn.add_term(z, one);
  P pren(vars);
  pren.add_term(unit(u, 2), K(Rational(-1)));
  pren.add_term(z, one);
  boundary(u, hn, pren, kn_offset<K>(spec), n, "Kn");

  // R_p(x_{p+1}/x_p) with every entry multiplied by t x_p - x_{p+1}.
  const K t(spec.t);
  for (int p = 0; p + 1 < n; ++p) {
    auto i = static_cast<std::size_t>(p);
    P den(vars), bp(vars), bm(vars);
    den.add_term(unit(i, 1), t);
    den.add_term(unit(i + 1, 1), -one);
    bp.add_term(unit(i, 1), t);
    bp.add_term(unit(i + 1, 1), -t);
    bm.add_term(unit(i, 1), one);
    bm.add_term(unit(i + 1, 1), -one);
    P cp = den - bp, cm = den - bm;
    for (const auto& [mu, f] : fam) {
      int A = mu[i], B = mu[i + 1];
      P g = member(apply_generator(mu, p + 1));
      P lhs(vars);
      if (A == B) lhs = den * f;
      if (A < B) lhs = cm * f + bp * g;
      if (A > B) lhs = bm * g + cp * f;
      lhs -= den * ctx.s(p + 1, f);
      if (!lhs.is_zero()) bad.push_back("R" + std::to_string(p + 1) + " at " + to_csv(mu));
    }
  }
  return bad;
}

Weights scale(const Weights& w, const Rational& s) {
  Weights out;
  for (const auto& [mu, v] : w) out.emplace(mu, v * s);
  return out;
}

Rational total(const Weights& w) {
  Rational z = 0;
  for (const auto& [mu, v] : w) z += v;
  return z;
}

}  // namespace

std::vector<Composition> sector_states(const ModelSpec& spec, const Composition& lambda) {
  require(static_cast<int>(lambda.size()) == spec.n, ErrorKind::Usage, "sector length does not match n");
  for (int v : lambda) require(std::abs(v) <= spec.r, ErrorKind::Usage, "sector label exceeds the rank");
  auto orb = orbit(lambda, cutoff_of(spec));
  return {orb.begin(), orb.end()};
}

std::vector<Composition> all_sectors(const ModelSpec& spec) {
  const int lo = -cutoff_of(spec).value_or(0);
  std::vector<Composition> out;
  Composition c(static_cast<std::size_t>(spec.n), spec.r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int top) {
    if (k == c.size()) {
      out.push_back(c);
      return;
    }
    for (int v = top; v >= lo; --v) {
      c[k] = v;
      rec(k + 1, v);
    }
  };
  rec(0, spec.r);
  return out;
}

bool is_stationary(const SparseMatrix<Rational>& L, const ModelSpec& spec, const Weights& w) {
  SparseVector<Rational> v;
  for (const auto& [mu, x] : w) {
    if (!is_zero(x)) v.emplace(config_index(mu, spec.r), x);
  }
  return L.apply(v).empty();
}

StationaryState nullspace_stationary(const ModelSpec& spec, const Composition& lambda) {
  spec.validate();
  return nullspace_stationary(spec, lambda, generator_from_blocks(spec));
}

StationaryState nullspace_stationary(const ModelSpec& spec, const Composition& lambda, const SparseMatrix<Rational>& L) {
  std::vector<Composition> states = sector_states(spec, lambda);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < states.size(); ++k) local.emplace(config_index(states[k], spec.r), k);

  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::size_t j = config_index(states[k], spec.r);
    for (const auto& [i, v] : L.column(j)) {
      if (i == j) continue;
      auto it = local.find(i);
      if (it == local.end()) fail(ErrorKind::Degenerate, "generator leaks out of sector " + to_csv(lambda));
      adj[k].push_back(it->second);
    }
  }
  int ncomp = 0;
  std::vector<int> comp = scc(adj, ncomp);
  std::vector<bool> closed(static_cast<std::size_t>(ncomp), true);
  for (std::size_t k = 0; k < states.size(); ++k)
    for (std::size_t w : adj[k])
      if (comp[w] != comp[k]) closed[static_cast<std::size_t>(comp[k])] = false;
  int recurrent = -1, nclosed = 0;
  for (int c = 0; c < ncomp; ++c)
    if (closed[static_cast<std::size_t>(c)]) {
      recurrent = c;
      ++nclosed;
    }
  if (nclosed != 1) fail(ErrorKind::Degenerate, "sector has " + std::to_string(nclosed) + " recurrent classes");

  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < states.size(); ++k)
    if (comp[k] == recurrent) members.push_back(k);
  std::vector<std::vector<Rational>> A(members.size(), std::vector<Rational>(members.size(), Rational(0)));
  for (std::size_t b = 0; b < members.size(); ++b) {
    std::size_t j = config_index(states[members[b]], spec.r);
    for (std::size_t a = 0; a < members.size(); ++a) A[a][b] = L.get(config_index(states[members[a]], spec.r), j);
  }
  std::vector<Rational> x = kernel_vector(A);

  StationaryState out;
  out.sector = lambda;
  out.provenance = "nullspace";
  for (const auto& mu : states) out.weights.emplace(mu, Rational(0));
  for (std::size_t b = 0; b < members.size(); ++b) out.weights[states[members[b]]] = x[b];
  Rational norm = out.weights.at(anchor_of(spec, lambda));
  if (is_zero(norm)) {
    for (const auto& [mu, v] : out.weights)
      if (!is_zero(v)) {
        norm = v;
        break;
      }
  }
  out.weights = scale(out.weights, 1 / norm);
  out.Z = total(out.weights);
  return out;
}

HeckeContext<UniRatFun> stationary_context(const ModelSpec& spec) {
  return HeckeContext<UniRatFun>(spec.n, UniRatFun::variable(), UniRatFun(spec.t), UniRatFun(Rational(-spec.a)),
                                 UniRatFun(Rational(-spec.b)), UniRatFun(Rational(-spec.c)), UniRatFun(Rational(-spec.d)));
}

Weights weights_at_one(const PolyFamily<UniRatFun>& fam) {
  Weights w;
  for (const auto& [mu, f] : fam) w.emplace(mu, sum_of_coefficients(f).at_one());
  return w;
}

PolyFamily<Rational> specialise_family_q1(const PolyFamily<UniRatFun>& fam) {
  PolyFamily<Rational> out;
  for (const auto& [mu, f] : fam) out.emplace(mu, specialise_q1(f));
  return out;
}

std::vector<std::string> qkz_failures(const PolyFamily<UniRatFun>& fam, const HeckeContext<UniRatFun>& ctx,
                                      const ModelSpec& spec) {
  return qkz_impl(fam, ctx, spec, true);
}

std::vector<std::string> qkz_failures_at_q1(const PolyFamily<Rational>& fam, const ModelSpec& spec) {
  HeckeContext<Rational> ctx(spec.n, Rational(1), spec.t, -spec.a, -spec.b, -spec.c, -spec.d);
  return qkz_impl(fam, ctx, spec, false);
}

HeckeStationary hecke_stationary(const ModelSpec& spec, const Composition& lambda, bool check_qkz) {
  spec.validate();
  require(spec.rL == 0 && spec.rR == 0, ErrorKind::Usage, "hecke_stationary needs rL = rR = 0; use generalised_stationary");
  sector_states(spec, lambda);
  HeckeContext<UniRatFun> ctx = stationary_context(spec);
  PolyFamily<UniRatFun> fam = f_family(lambda, ctx, spec.n <= 3);

  HeckeStationary out;
  out.relation_failures = component_relation_failures(fam, ctx);
  out.state.sector = lambda;
  out.state.provenance = "hecke";
  out.state.weights = weights_at_one(fam);
  out.state.Z = total(out.state.weights);
  out.K_at_one = sum_of_coefficients(symmetrise(fam, ctx)).at_one();
  out.scale_anchor = out.state.weights.at(anchor_of(spec, lambda));
  if (check_qkz) {
    out.qkz_failures = qkz_failures(fam, ctx, spec);
    for (auto& s : qkz_failures_at_q1(specialise_family_q1(fam), spec)) out.qkz_failures.push_back("q=1 " + s);
  }
  out.stationary = is_stationary(generator_from_blocks(spec), spec, out.state.weights);
  return out;
}

EigenvalueRecord sector_eigenvalue(const ModelSpec& spec, const Composition& lambda, const std::vector<Rational>& ws) {
  EigenvalueRecord rec;
  rec.sector = lambda;
  rec.left_eigenvector = true;
  std::vector<Composition> states = sector_states(spec, lambda);
  std::set<std::size_t> in;
  for (const auto& mu : states) in.insert(config_index(mu, spec.r));
  DualKPair duals(spec);
  std::vector<Rational> points = ws;
  if (std::find(points.begin(), points.end(), Rational(1)) == points.end()) points.insert(points.begin(), Rational(1));
  std::vector<Rational> x(static_cast<std::size_t>(spec.n), Rational(1));
  for (const auto& w : points) {
    SparseMatrix<Rational> T = transfer_matrix<Rational>(spec, duals, w, x);
    std::optional<Rational> lambda_w;
    for (std::size_t j = 0; j < T.cols(); ++j) {
      Rational s = 0;
      for (const auto& [i, v] : T.column(j))
        if (in.count(i)) s += v;
      if (!in.count(j)) {
        if (!is_zero(s)) rec.left_eigenvector = false;
        continue;
      }
      if (!lambda_w) lambda_w = s;
      if (s != *lambda_w) rec.left_eigenvector = false;
    }
    rec.values.emplace_back(w, lambda_w.value_or(Rational(0)));
  }
  return rec;
}

bool proportional(const Weights& a, const Weights& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> ratio;
  for (const auto& [mu, x] : a) {
    auto it = b.find(mu);
    if (it == b.end()) return false;
    const Rational& y = it->second;
    if (is_zero(x) || is_zero(y)) {
      if (!(is_zero(x) && is_zero(y))) return false;
      continue;
    }
    Rational r = x / y;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

TheoremReport theorem_check(const ModelSpec& spec, const Composition& lambda) {
  TheoremReport rep;
  rep.sector = lambda;
  rep.hecke = hecke_stationary(spec, lambda, spec.n <= 3);
  try {
    rep.oracle = nullspace_stationary(spec, lambda);
    rep.oracle.weights = scale(rep.oracle.weights, rep.hecke.scale_anchor);
    rep.oracle.Z = total(rep.oracle.weights);
    rep.oracle_agrees = rep.oracle.weights == rep.hecke.state.weights;
  } catch (const Error& e) {
    rep.detail = std::string("null-space oracle: ") + e.what();
  }
  const bool z_matches = rep.hecke.state.Z == rep.hecke.K_at_one;
  rep.theorem = z_matches && rep.oracle_agrees && rep.hecke.stationary && rep.hecke.qkz_failures.empty() &&
                rep.hecke.relation_failures.empty();
  if (!rep.theorem && rep.detail.empty()) {
    rep.detail = std::string(z_matches ? "" : "Z differs from K(1^n); ") + (rep.hecke.stationary ? "" : "L Psi != 0; ") +
                 (rep.oracle_agrees ? "" : "weights disagree with the null-space oracle; ") +
                 (rep.hecke.qkz_failures.empty() ? "" : "exchange relations fail; ") +
                 (rep.hecke.relation_failures.empty() ? "" : "component relations fail; ");
  }
  return rep;
}

namespace {

struct SymmetricAtOne {
  LaurentPoly<Rational> K;
  Rational Z;
};

SymmetricAtOne symmetric_at_one(const ModelSpec& spec, const Composition& lambda) {
  HeckeContext<UniRatFun> ctx = stationary_context(spec);
  PolyFamily<UniRatFun> fam = f_family(lambda, ctx);
  SymmetricAtOne out;
  out.K = specialise_q1(symmetrise(fam, ctx));
  out.Z = sum_of_coefficients(out.K);
  return out;
}

}  // namespace

FactorisationReport factorisation_check(const ModelSpec& spec, const Composition& lambda, bool check_polynomial) {
  spec.validate();
  require(static_cast<int>(lambda.size()) == spec.n, ErrorKind::Usage, "partition length does not match n");
  Composition part = conjugate(lambda);  // validates the partition
  FactorisationReport rep;
  rep.lambda = lambda;
  SymmetricAtOne whole = symmetric_at_one(spec, lambda);
  rep.Z = whole.Z;
  rep.product = 1;
  LaurentPoly<Rational> prod = LaurentPoly<Rational>::constant(x_vars(spec.n), Rational(1));
  for (int k : part) {
    Composition col(static_cast<std::size_t>(spec.n), 0);
    for (int i = 0; i < k; ++i) col[static_cast<std::size_t>(i)] = 1;
    SymmetricAtOne c = symmetric_at_one(spec, col);
    rep.column_factors.push_back(c.Z);
    rep.product *= c.Z;
    if (check_polynomial) prod = prod * c.K;
  }
  rep.normalisation_holds = rep.Z == rep.product;
  if (check_polynomial) rep.polynomial_holds = prod == whole.K;
  return rep;
}

GeneralisedReport generalised_stationary(const ModelSpec& spec, const Composition& lambda) {
  spec.validate();
  require(spec.rR <= spec.rL, ErrorKind::Usage, "generalised boundaries need rR <= rL");
  for (int v : lambda) require(v >= -spec.rR, ErrorKind::Usage, "generalised dominant weight has an entry below -rR");
  GeneralisedReport rep;
  rep.sector = lambda;
  std::vector<Composition> states = sector_states(spec, lambda);

  Composition lpi = mu_split(lambda, spec.rL).second;
  HeckeContext<UniRatFun> ctx = stationary_context(spec);
  PolyFamily<UniRatFun> base = f_family(dominant(lpi), ctx);
  const Rational t = spec.t, ttn = spec.t / spec.tn();

  auto prefactor = [&](const Composition& mu) {
    auto [mc, mpi] = mu_split(mu, spec.rL);
    if (mc.empty()) return Rational(1);
    SignedWord w = shortest_word(mc, antidominant_form(mc, spec.rR), spec.rR);
    return Rational(ipow(t, -w.length()) * ipow(ttn, w.minus_count()));
  };
  PolyFamily<UniRatFun> fam;
  for (const auto& mu : states) {
    Composition mpi = mu_split(mu, spec.rL).second;
    fam.emplace(mu, base.at(mpi).scaled(UniRatFun(prefactor(mu))));
  }
  rep.relation_failures = component_relation_failures(fam, ctx, spec.rL, spec.rR);
  if (spec.n <= 3) {
    rep.qkz_failures = qkz_failures(fam, ctx, spec);
    for (auto& s : qkz_failures_at_q1(specialise_family_q1(fam), spec)) rep.qkz_failures.push_back("q=1 " + s);
  }
  rep.state.sector = lambda;
  rep.state.provenance = "product";
  rep.state.weights = weights_at_one(fam);
  rep.state.Z = total(rep.state.weights);
  rep.stationary = is_stationary(generator_from_blocks(spec), spec, rep.state.weights);
  StationaryState oracle = nullspace_stationary(spec, lambda);
  rep.oracle_agrees = proportional(oracle.weights, rep.state.weights);

  bool pure = std::all_of(lambda.begin(), lambda.end(), [&](int v) { return std::abs(v) <= spec.rL; });
  if (pure) {
    bool ok = true;
    for (const auto& mu : states) {
      SignedWord w = shortest_word(mu, antidominant_form(mu, spec.rR), spec.rR);
      Rational expect = ipow(t, -w.length()) * ipow(ttn, w.minus_count());
      if (rep.state.weights.at(mu) != expect) ok = false;
    }
    rep.constant_formula = ok;
  }
  return rep;
}

}  // namespace asepk
