#pragma once

// Independent reference computations and random generators for the tests.
// Nothing here calls into the library except for value types.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fmc/points.hpp"
#include "fmc/tree.hpp"

namespace oracle {

using fmc::Vec;
using Rng = std::mt19937_64;

// ---- counting -----------------------------------------------------------------

inline bool nested_or_disjoint(std::uint64_t a, std::uint64_t b) {
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

// Number of collections of subsets of [n] with at least two elements (the full
// set allowed) that are pairwise nested or disjoint. Backtracking over subsets.
inline std::int64_t count_nested_collections(int n) {
  std::vector<std::uint64_t> cands;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
    if (__builtin_popcountll(s) >= 2) cands.push_back(s);
  std::vector<std::uint64_t> chosen;
  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cands.size()) {
      ++count;
      return;
    }
    rec(i + 1);
    for (auto c : chosen)
      if (!nested_or_disjoint(c, cands[i])) return;
    chosen.push_back(cands[i]);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);
  return count;
}

// All sets of such a collection: brute-force list, sorted sets per collection.
inline std::vector<std::vector<std::uint64_t>> nested_collections(int n) {
  std::vector<std::uint64_t> cands;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
    if (__builtin_popcountll(s) >= 2) cands.push_back(s);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cands.size()) {
      auto c = chosen;
      std::sort(c.begin(), c.end());
      out.push_back(c);
      return;
    }
    rec(i + 1);
    for (auto c : chosen)
      if (!nested_or_disjoint(c, cands[i])) return;
    chosen.push_back(cands[i]);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Catalan numbers by the convolution recurrence.
inline std::int64_t catalan(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[static_cast<std::size_t>(n)];
}

// Dissections of a convex polygon with `sides` sides using `diagonals`
// non-crossing diagonals (Kirkman-Cayley).
inline std::int64_t dissections(int sides, int diagonals) {
  const int j = diagonals;
  return binomial(sides - 3, j) * binomial(sides + j - 1, j) / (j + 1);
}

// ---- geometry -----------------------------------------------------------------

inline Vec gaussian(Rng& rng, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(m);
  for (int c = 0; c < m; ++c) v[c] = g(rng);
  return v;
}

inline Vec unit(Rng& rng, int m) {
  Vec v = gaussian(rng, m);
  while (v.norm() < 1e-3) v = gaussian(rng, m);
  return v.normalized();
}

// Random configuration of n points in [-1,1]^m with pairwise distance at least
// `sep` and, for m >= 2, no three points within `sep` of a common line.
inline fmc::Configuration random_configuration(Rng& rng, int n, int m,
                                               double sep = 1e-2) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<Vec> x;
    for (int i = 0; i < n; ++i) {
      Vec p(m);
      for (int c = 0; c < m; ++c) p[c] = u(rng);
      x.push_back(p);
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        if ((x[i] - x[j]).norm() < sep) ok = false;
        if (m < 2) continue;
        for (int k = j + 1; k < n && ok; ++k) {
          const Vec a = x[j] - x[i];
          const Vec b = x[k] - x[i];
          // distance from x_k to the line through x_i, x_j
          const double h =
              (b - a * (a.dot(b) / a.squaredNorm())).norm();
          if (h < sep) ok = false;
        }
      }
    if (ok) return fmc::Configuration{m, x};
  }
}

inline Vec direction(const fmc::Configuration& c, int i, int j) {
  return (c.points[i] - c.points[j]).normalized();
}

inline double distance_ratio(const fmc::Configuration& c, int i, int j, int k) {
  return (c.points[i] - c.points[j]).norm() / (c.points[i] - c.points[k]).norm();
}

// Centroid at the origin, largest norm 1.
inline fmc::Configuration normalized(const fmc::Configuration& c) {
  Vec mean = Vec::Zero(c.m);
  for (const auto& p : c.points) mean += p;
  mean /= static_cast<double>(c.points.size());
  double r = 0.0;
  for (const auto& p : c.points) r = std::max(r, (p - mean).norm());
  fmc::Configuration out{c.m, {}};
  for (const auto& p : c.points) out.points.push_back((p - mean) / r);
  return out;
}

// ---- cosimplicial reference ---------------------------------------------------

// Interior positions 0 <= s_1 <= ... <= s_n <= 1 correspond to barycentric
// gaps t_0 = s_1, t_j = s_{j+1} - s_j, t_n = 1 - s_n. A map sigma: [n] -> [m]
// pushes gaps forward by summing over fibers.
inline std::vector<double> pushforward_positions(const std::vector<int>& sigma,
                                                 int m,
                                                 const std::vector<double>& s) {
  const std::size_t n = s.size();
  std::vector<double> gaps(n + 1);
  double prev = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    gaps[j] = s[j] - prev;
    prev = s[j];
  }
  gaps[n] = 1.0 - prev;
  std::vector<double> out_gaps(static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) out_gaps[static_cast<std::size_t>(sigma[j])] += gaps[j];
  std::vector<double> pos;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    acc += out_gaps[static_cast<std::size_t>(j)];
    pos.push_back(acc);
  }
  return pos;
}

// Monotone maps [n] -> [m].
inline std::vector<std::vector<int>> monotone_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
