#include "asepk/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace asepk {

int SignedWord::minus_count() const {
  return static_cast<int>(std::count(sign_vector.begin(), sign_vector.end(), -1));
}

std::string to_csv(const Composition& c) {
  std::ostringstream os;
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  return os.str();
}

Composition parse_composition(const std::string& csv) {
  Composition c;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      c.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "bad composition entry '" + item + "'");
    }
  }
  require(!c.empty(), ErrorKind::Usage, "empty composition");
  return c;
}

Composition apply_generator(const Composition& c, int g, std::optional<int> cutoff) {
  const int n = static_cast<int>(c.size());
  require(g >= 1 && g <= n, ErrorKind::Usage, "generator index out of range");
  Composition out = c;
  if (g < n) {
    std::swap(out[static_cast<std::size_t>(g - 1)], out[static_cast<std::size_t>(g)]);
  } else if (!cutoff || std::abs(out.back()) > *cutoff) {
    out.back() = -out.back();
  }
  return out;
}

Composition apply_word(const Composition& c, const std::vector<int>& word, std::optional<int> cutoff) {
  Composition out = c;
  for (int g : word) out = apply_generator(out, g, cutoff);
  return out;
}

std::set<Composition> orbit(const Composition& lambda, std::optional<int> deformed_rR) {
  std::set<Composition> seen{lambda};
  std::deque<Composition> queue{lambda};
  const int n = static_cast<int>(lambda.size());
  while (!queue.empty()) {
    Composition m = queue.front();
    queue.pop_front();
    for (int g = 1; g <= n; ++g) {
      Composition next = apply_generator(m, g, deformed_rR);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

bool dominance_leq(const Composition& mu, const Composition& lambda) {
  require(mu.size() == lambda.size(), ErrorKind::Structural, "length mismatch");
  long s = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    s += lambda[k] - mu[k];
    if (s < 0) return false;
  }
  return true;
}

Composition dominant(const Composition& lambda) {
  Composition out;
  for (int v : lambda) out.push_back(std::abs(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool succeq(const Composition& lambda, const Composition& mu) {
  require(mu.size() == lambda.size(), ErrorKind::Structural, "length mismatch");
  Composition lp = dominant(lambda), mp = dominant(mu);
  if (lp != mp) return dominance_leq(mp, lp);
  return dominance_leq(mu, lambda);
}

SignedWord shortest_word(const Composition& from, const Composition& to, std::optional<int> cutoff) {
  require(from.size() == to.size(), ErrorKind::Structural, "length mismatch");
  const int n = static_cast<int>(from.size());
  std::map<Composition, std::vector<int>> best{{from, {}}};
  std::vector<Composition> layer{from};
  while (!best.count(to)) {
    require(!layer.empty(), ErrorKind::Usage, "target not in the orbit of the source");
    std::map<Composition, std::vector<int>> next;
    for (const auto& m : layer) {
      const auto& w = best.at(m);
      for (int g = 1; g <= n; ++g) {
        Composition c = apply_generator(m, g, cutoff);
        if (best.count(c)) continue;
        std::vector<int> cand = w;
        cand.push_back(g);
        auto it = next.find(c);
        if (it == next.end()) next.emplace(c, cand);
        else if (cand < it->second) it->second = cand;
      }
    }
    layer.clear();
    for (auto& [c, w] : next) {
      best.emplace(c, w);
      layer.push_back(c);
    }
  }
  SignedWord sw;
  sw.word = best.at(to);
  // track labelled positions: entry k of `labels` is +-(source index + 1)
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = k + 1;
  Composition cur = from;
  for (int g : sw.word) {
    if (g < n) {
      std::swap(labels[static_cast<std::size_t>(g - 1)], labels[static_cast<std::size_t>(g)]);
    } else if (!cutoff || std::abs(cur.back()) > *cutoff) {
      labels.back() = -labels.back();
    }
    cur = apply_generator(cur, g, cutoff);
  }
  for (int v : labels) {
    sw.sign_vector.push_back(v < 0 ? -1 : 1);
    sw.permutation.push_back(std::abs(v) - 1);
  }
  return sw;
}

Composition antidominant_form(const Composition& lambda, std::optional<int> cutoff) {
  Composition out;
  for (int v : lambda) out.push_back(!cutoff || std::abs(v) > *cutoff ? -std::abs(v) : v);
  std::sort(out.begin(), out.end());
  return out;
}

Antidominant antidominant(const Composition& lambda, std::optional<int> cutoff) {
  Antidominant a;
  a.delta = antidominant_form(lambda, cutoff);
  a.word = shortest_word(a.delta, lambda, cutoff);
  return a;
}

SpectralData spectral_data(const Composition& lambda) {
  const int n = static_cast<int>(lambda.size());
  SpectralData s;
  SignedWord w = shortest_word(dominant(lambda), lambda);
  Composition rho;
  for (int k = 0; k < n; ++k) rho.push_back(n - 1 - k);
  s.rho = apply_word(rho, w.word);
  for (int v : lambda) s.eps.push_back(v >= 0 ? 1 : 0);
  return s;
}

std::pair<Composition, Composition> mu_split(const Composition& mu, int rL) {
  require(rL >= 0, ErrorKind::Usage, "cutoff must be nonnegative");
  Composition c, pi;
  for (int v : mu) {
    if (std::abs(v) <= rL) {
      c.push_back(v);
      pi.push_back(0);
    } else {
      pi.push_back(v);
    }
  }
  return {c, pi};
}

Composition conjugate(const Composition& partition) {
  for (std::size_t k = 0; k < partition.size(); ++k) {
    require(partition[k] >= 0, ErrorKind::Usage, "partition entries must be nonnegative");
    if (k) require(partition[k] <= partition[k - 1], ErrorKind::Usage, "partition must be weakly decreasing");
  }
  Composition out;
  int largest = partition.empty() ? 0 : partition.front();
  for (int j = 1; j <= largest; ++j) {
    int count = 0;
    for (int v : partition)
      if (v >= j) ++count;
    out.push_back(count);
  }
  return out;
}

}  // namespace asepk
