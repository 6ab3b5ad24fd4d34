#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "asepk/rational.hpp"
#include "asepk/weyl.hpp"
#include "test_util.hpp"

using namespace asepk;
using testutil::Rng;

namespace {

// All signed permutations of the entries, by brute force.
std::set<Composition> signed_perms(Composition c) {
  std::set<Composition> out;
  const int n = static_cast<int>(c.size());
  std::sort(c.begin(), c.end());
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Composition v = c;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) v[static_cast<std::size_t>(k)] = -v[static_cast<std::size_t>(k)];
      out.insert(v);
    }
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

Composition random_comp(Rng& rng, int n, int bound) {
  Composition c;
  for (int k = 0; k < n; ++k) c.push_back(static_cast<int>(rng.uniform(-bound, bound)));
  return c;
}

bool reachable_within(const Composition& from, const Composition& to, int len) {
  if (from == to) return true;
  if (len == 0) return false;
  for (int g = 1; g <= static_cast<int>(from.size()); ++g)
    if (reachable_within(apply_generator(from, g), to, len - 1)) return true;
  return false;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("orbit examples") {
  CHECK(orbit({1, 0}) == std::set<Composition>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(orbit({0, 0}) == std::set<Composition>{{0, 0}});
  CHECK(orbit({1, 1}, 1) == std::set<Composition>{{1, 1}});
  CHECK(orbit({2, 1}, 1).size() == 4);  // (2,1),(1,2),(1,-2),(-2,1)... only |last|>1 flips
  for (const auto& m : orbit({2, 1}, 1)) {
    bool has_pos_one = std::find(m.begin(), m.end(), 1) != m.end();
    CHECK(has_pos_one);
  }
}

TEST_CASE("orbit matches signed permutations and sizes divide 2^n n!") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Composition l = random_comp(rng, n, 2);
    auto o = orbit(l);
    CHECK(o == signed_perms(l));
    long group = (1L << n) * factorial(n);
    CHECK(group % static_cast<long>(o.size()) == 0);
    Composition delta = antidominant_form(l);
    for (const auto& m : o) CHECK(antidominant_form(m) == delta);
  }
}

TEST_CASE("dominance and order examples") {
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK(dominance_leq({3, -1}, {3, -1}));
  CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
  CHECK_THROWS_AS(dominance_leq({1}, {1, 0}), Error);
  CHECK(succeq({1, 0}, {0, 0}));
  CHECK(succeq({-1, 2}, {-1, 2}));
  // (-1,2)^+ = (2,1) beats (1,-1)^+ = (1,1)
  CHECK(succeq({-1, 2}, {1, -1}));
  CHECK_FALSE(succeq({1, -1}, {-1, 2}));
  CHECK(dominant({-1, 2, 0}) == Composition{2, 1, 0});
}

TEST_CASE("succeq is a partial order") {
  Rng rng(5);
  std::vector<Composition> pts;
  for (int k = 0; k < 60; ++k) pts.push_back(random_comp(rng, 3, 2));
  for (const auto& a : pts) {
    CHECK(succeq(a, a));
    for (const auto& b : pts) {
      if (succeq(a, b) && succeq(b, a)) CHECK(a == b);
      for (const auto& c : pts)
        if (succeq(a, b) && succeq(b, c)) CHECK(succeq(a, c));
    }
  }
}

TEST_CASE("antidominant examples") {
  auto a = antidominant({1, 0, 2});
  CHECK(a.delta == Composition{-2, -1, 0});
  CHECK(apply_word(a.delta, a.word.word) == Composition{1, 0, 2});
  auto z = antidominant({0, 0, 0});
  CHECK(z.delta == Composition{0, 0, 0});
  CHECK(z.word.length() == 0);
  CHECK(z.word.minus_count() == 0);
  auto m = antidominant({-1, -1});
  CHECK(m.delta == Composition{-1, -1});
  CHECK(m.word.length() == 0);
  CHECK(m.word.minus_count() == 0);
}

TEST_CASE("antidominant words are shortest and decompose as sign times permutation") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    Composition l = random_comp(rng, n, 2);
    auto a = antidominant(l);
    CHECK(apply_word(a.delta, a.word.word) == l);
    if (a.word.length() > 0) CHECK_FALSE(reachable_within(a.delta, l, a.word.length() - 1));
    for (int k = 0; k < n; ++k) {
      auto kk = static_cast<std::size_t>(k);
      CHECK(l[kk] == a.word.sign_vector[kk] * a.delta[static_cast<std::size_t>(a.word.permutation[kk])]);
    }
    std::vector<int> p = a.word.permutation;
    std::sort(p.begin(), p.end());
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    CHECK(p == id);
    // the minus count equals the number of s_n letters applied to nonzero entries
    int flips = 0;
    Composition cur = a.delta;
    for (int g : a.word.word) {
      if (g == n && cur.back() != 0) ++flips;
      cur = apply_generator(cur, g);
    }
    CHECK(a.word.minus_count() % 2 == flips % 2);
  }
}

TEST_CASE("deformed antidominant keeps small entries") {
  auto a = antidominant({2, 1, 0}, 1);
  CHECK(a.delta == Composition{-2, 0, 1});
  CHECK(apply_word(a.delta, a.word.word, 1) == Composition{2, 1, 0});
  CHECK(orbit({2, 1, 0}, 1).count(a.delta) == 1);
}

TEST_CASE("rho and spectral values") {
  CHECK(spectral_data({2, 1, 0}).rho == std::vector<int>{2, 1, 0});
  CHECK(spectral_data({0, 0}).eps == std::vector<int>{1, 1});
  CHECK(spectral_data({-1, 0}).eps == std::vector<int>{0, 1});
  Rational q(3), t(Rational(1, 2)), t0(5), tn(Rational(-2, 7));
  auto y = spectral_values<Rational>({0, 0}, q, t, t0, tn);
  // rho(0) = (1,0): y_1 = t^2 t0 tn, y_2 = t0 tn
  CHECK(y[0] == t * t * t0 * tn);
  CHECK(y[1] == t0 * tn);
}

TEST_CASE("spectral vector permutation property") {
  Rng rng(21);
  Rational q(Rational(7, 3)), t(Rational(2, 5)), t0(Rational(-3, 2)), tn(Rational(5, 4));
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng.uniform(2, 4));
    Composition l = random_comp(rng, n, 2);
    auto y = spectral_values<Rational>(l, q, t, t0, tn);
    for (int i = 1; i < n; ++i) {
      if (l[static_cast<std::size_t>(i - 1)] == l[static_cast<std::size_t>(i)]) continue;
      auto ys = spectral_values<Rational>(apply_generator(l, i), q, t, t0, tn);
      // the t^{n-i} prefactor is positional; the bracket part t^{rho_i} q^{l_i} (t0 tn)^{eps_i} permutes
      CHECK(ys[static_cast<std::size_t>(i - 1)] == y[static_cast<std::size_t>(i)] * t);
      CHECK(ys[static_cast<std::size_t>(i)] * t == y[static_cast<std::size_t>(i - 1)]);
    }
  }
}

TEST_CASE("mu split and conjugate") {
  auto [c, pi] = mu_split({2, -1, 0, 3}, 1);
  CHECK(c == Composition{-1, 0});
  CHECK(pi == Composition{2, 0, 0, 3});
  auto [c0, pi0] = mu_split({2, 0, -1}, 0);
  CHECK(c0 == Composition{0});
  CHECK(pi0 == Composition{2, 0, -1});
  auto [c3, pi3] = mu_split({2, 0, -1}, 3);
  CHECK(c3 == Composition{2, 0, -1});
  CHECK(pi3 == Composition{0, 0, 0});
  CHECK(conjugate({2, 1, 0}) == Composition{2, 1});
  CHECK(conjugate({1, 1, 1}) == Composition{3});
  CHECK(conjugate({0, 0}).empty());
  CHECK_THROWS_AS(conjugate({1, 2}), Error);
  CHECK_THROWS_AS(conjugate({1, -1}), Error);
  for (Composition p : {Composition{3, 1, 1}, Composition{2, 2}, Composition{4, 2, 1, 1}})
    CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("composition parsing") {
  CHECK(parse_composition("1,-2,0") == Composition{1, -2, 0});
  CHECK(to_csv({1, -2, 0}) == "1,-2,0");
  CHECK_THROWS_AS(parse_composition("1,x"), Error);
  CHECK_THROWS_AS(parse_composition(""), Error);
}
