#include "asepk/hecke.hpp"

#include <cstdlib>
#include <tuple>

namespace asepk {

std::vector<std::string> x_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<Composition> eigen_span(const Composition& lambda) {
  const auto n = lambda.size();
  int bound = 1;
  for (int v : lambda) bound = std::max(bound, std::abs(v) + 1);
  std::vector<Composition> out;
  Composition mu(n, -bound);
  while (true) {
    if (succeq(lambda, mu)) out.push_back(mu);
    std::size_t k = 0;
    while (k < n && mu[k] == bound) mu[k++] = -bound;
    if (k == n) break;
    ++mu[k];
  }
  auto key = [](const Composition& m) {
    Composition plus = dominant(m);
    Composition partial(m.size());
    std::partial_sum(m.begin(), m.end(), partial.begin());
    return std::make_tuple(std::accumulate(plus.begin(), plus.end(), 0), plus, partial);
  };
  std::sort(out.begin(), out.end(), [&](const Composition& x, const Composition& y) { return key(x) > key(y); });
  require(!out.empty() && out.front() == lambda, ErrorKind::Internal, "eigen span does not start at lambda");
  return out;
}

std::vector<std::pair<int, Composition>> family_covers(const Composition& mu) {
  const int n = static_cast<int>(mu.size());
  std::vector<std::pair<int, Composition>> out;
  for (int i = 1; i < n; ++i) {
    if (mu[static_cast<std::size_t>(i - 1)] < mu[static_cast<std::size_t>(i)]) out.emplace_back(i, apply_generator(mu, i));
  }
  if (mu.back() < 0) out.emplace_back(n, apply_generator(mu, n));
  return out;
}

}  // namespace asepk
