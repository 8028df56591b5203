#pragma once

// Brute-force oracles, independent of the library's code paths.  Expected
// values in the tests are computed (or were frozen) from these.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "pnc/keyseq.hpp"
#include "pnc/laurent.hpp"
#include "pnc/puiseux.hpp"

namespace oracle {

inline std::vector<long long> gcd_ladder_d(const std::vector<long long>& w) {
  std::vector<long long> d;
  long long g = 0;
  for (long long v : w) {
    g = std::gcd(g, std::llabs(v));
    d.push_back(g);
  }
  return d;
}

// Plain recursive semigroup membership.
inline bool semigroup_member(const std::vector<long long>& gens, long long t) {
  if (t == 0) return true;
  if (t < 0) return false;
  for (long long g : gens)
    if (g <= t && semigroup_member(gens, t - g)) return true;
  return false;
}

// Exhaustive search for representations alpha_k w_k = sum beta_j w_j with
// 0 <= beta_j < alpha_j (j >= 1) and |beta_0| within the stated bound.
// Returns the number of solutions and the unique one when count == 1.
struct RepSearch {
  long long count = 0;
  std::vector<long long> solution;
};

inline RepSearch bounded_rep_search(const std::vector<long long>& w, int k) {
  auto d = gcd_ladder_d(w);
  std::vector<long long> alpha;
  for (size_t i = 1; i < w.size(); ++i) alpha.push_back(d[i - 1] / d[i]);
  long long target = alpha[static_cast<size_t>(k - 1)] * w[static_cast<size_t>(k)];

  long long bound = std::llabs(target);
  for (int j = 1; j < k; ++j)
    bound += alpha[static_cast<size_t>(j - 1)] * std::llabs(w[static_cast<size_t>(j)]);
  bound = bound / w[0] + 1;

  RepSearch out;
  std::vector<long long> beta(static_cast<size_t>(k), 0);
  std::function<void(int, long long)> walk = [&](int j, long long rest) {
    if (j == 0) {
      if (rest % w[0] == 0 && std::llabs(rest / w[0]) <= bound) {
        ++out.count;
        beta[0] = rest / w[0];
        out.solution.assign(beta.begin(), beta.end());
      }
      return;
    }
    for (long long b = 0; b < alpha[static_cast<size_t>(j - 1)]; ++b) {
      beta[static_cast<size_t>(j)] = b;
      walk(j - 1, rest - b * w[static_cast<size_t>(j)]);
    }
  };
  walk(k - 1, target);
  return out;
}

// Naive lattice enumeration of Sigma for p_g (independent bounds, iterative).
inline long long pg_count(const std::vector<long long>& w, long long k) {
  if (k < 0) return 0;
  auto d = gcd_ladder_d(w);
  std::vector<long long> alpha;
  for (size_t i = 1; i < w.size(); ++i) alpha.push_back(d[i - 1] / d[i]);
  int m = static_cast<int>(w.size());
  std::vector<long long> beta(static_cast<size_t>(m), 0);
  long long count = 0;
  for (;;) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += beta[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
    bool ok = s <= k;
    for (int j = 1; ok && j < m - 1; ++j)
      if (beta[static_cast<size_t>(j)] >= alpha[static_cast<size_t>(j - 1)]) ok = false;
    if (ok) ++count;
    int j = 0;
    for (; j < m; ++j) {
      ++beta[static_cast<size_t>(j)];
      if (beta[static_cast<size_t>(j)] * w[static_cast<size_t>(j)] <= k) break;
      beta[static_cast<size_t>(j)] = 0;
    }
    if (j == m) break;
  }
  return count;
}

// Gorenstein index by direct scan.
inline std::optional<long long> gorenstein_index_scan(long long a_last,
                                                      long long w_last,
                                                      long long k, long long cap) {
  if (k == 0) return 1;
  for (long long m = 1; m <= cap; ++m)
    if ((m * k) % a_last == 0 && (m * k) % w_last == 0) return m;
  return std::nullopt;
}

inline pnc::GenericSeries series(
    std::initializer_list<std::pair<pnc::Rational, pnc::Rational>> body,
    pnc::Rational r) {
  std::map<pnc::Rational, pnc::Rational> m;
  for (const auto& [e, c] : body) m.emplace(e, c);
  return pnc::make_series(std::move(m), std::move(r));
}

}  // namespace oracle
