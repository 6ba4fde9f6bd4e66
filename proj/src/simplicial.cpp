#include "fmc/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

bool parallel(const Vec& a, const Vec& b, double tol) {
  return (a - b).norm() <= tol || (a + b).norm() <= tol;
}

// The twelve paths on {0,1,2,3} with path[0] < path[3], in lexicographic order.
std::array<std::array<int, 4>, 12> straight_paths() {
  std::array<std::array<int, 4>, 12> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  std::size_t c = 0;
  do {
    if (p[0] < p[3]) out[c++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

SimplicialPoint project_Q(const AmbientPoint& a) {
  return static_cast<const SimplicialPoint&>(a);
}

bool three_dependent(const Vec& u1, const Vec& u2, const Vec& u3, double tol) {
  return nonnegatively_dependent(u1, u2, u3, tol);
}

std::array<CircuitPair, 12> circuit_table_for(CircuitOrientation o) {
  std::array<CircuitPair, 12> table{};
  const auto paths = straight_paths();
  for (std::size_t c = 0; c < 12; ++c) {
    const auto& p = paths[c];
    std::array<int, 4> comp{p[2], p[0], p[3], p[1]};
    if ((o >> c) & 1U) std::reverse(comp.begin(), comp.end());
    table[c] = CircuitPair{p, comp, 1};
  }
  return table;
}

const std::array<CircuitPair, 12>& circuit_table() {
  static const std::array<CircuitPair, 12> table = circuit_table_for(0);
  return table;
}

FourDirections FourDirections::from_point(const SimplicialPoint& p,
                                          const std::array<int, 4>& indices) {
  FourDirections f;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      f(a, b) = a == b ? Vec::Zero(p.m)
                       : p.dir(indices[sz(a)], indices[sz(b)]);
    }
  }
  return f;
}

double four_consistency_residual(const FourDirections& u, const Vec& v,
                                 const Vec& w,
                                 const std::array<CircuitPair, 12>& table) {
  double sum = 0.0;
  for (const auto& c : table) {
    double term = c.sign;
    for (std::size_t e = 0; e < 3; ++e) {
      term *= u(c.path[e], c.path[e + 1]).dot(v);
      term *= u(c.complement[e], c.complement[e + 1]).dot(w);
    }
    sum += term;
  }
  return sum;
}

std::vector<CircuitOrientation> calibrate_circuit_orientations(int samples,
                                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  // Per-sample term values under the base orientation; reversing a
  // complement reverses three edges and so negates its term.
  std::vector<std::array<double, 12>> terms;
  const auto base = circuit_table_for(0);
  while (static_cast<int>(terms.size()) < samples) {
    std::vector<Vec> pts(4, Vec(2));
    for (auto& q : pts) q << coord(rng), coord(rng);
    bool ok = true;
    for (int a = 0; a < 4 && ok; ++a)
      for (int b = a + 1; b < 4 && ok; ++b)
        ok = (pts[sz(a)] - pts[sz(b)]).norm() > 1e-3;
    if (!ok) continue;
    const AmbientPoint a = alpha(Configuration{2, pts});
    const auto f = FourDirections::from_point(a, {0, 1, 2, 3});
    Vec v(2), w(2);
    v << coord(rng), coord(rng);
    w << coord(rng), coord(rng);
    std::array<double, 12> row{};
    for (std::size_t c = 0; c < 12; ++c) {
      std::array<CircuitPair, 12> single{};
      single.fill(CircuitPair{{0, 1, 2, 3}, {0, 1, 2, 3}, 0});
      single[0] = base[c];
      row[c] = four_consistency_residual(f, v, w, single);
    }
    terms.push_back(row);
  }
  std::vector<CircuitOrientation> found;
  for (CircuitOrientation o = 0; o < (1U << 12); o += 2) {  // bit 0 fixed
    bool vanishes = true;
    for (const auto& row : terms) {
      double sum = 0.0;
      double scale = 0.0;
      for (std::size_t c = 0; c < 12; ++c) {
        const double t = ((o >> c) & 1U) ? -row[c] : row[c];
        sum += t;
        scale += std::abs(t);
      }
      if (std::abs(sum) > 1e-12 * std::max(1.0, scale)) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) found.push_back(o);
  }
  return found;
}

std::vector<Vec> four_consistency_probes(int m) {
  std::vector<Vec> out;
  std::vector<int> k(sz(m), 0);
  // Enumerate compositions of 3 into m non-negative parts.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m - 1) {
      k[sz(pos)] = left;
      Vec v(m);
      for (int c = 0; c < m; ++c) v[c] = k[sz(c)];
      out.push_back(v.normalized());
      return;
    }
    for (int a = left; a >= 0; --a) {
      k[sz(pos)] = a;
      rec(pos + 1, left - a);
    }
  };
  if (m >= 1) rec(0, 3);
  return out;
}

Verdict membership_simplicial(const SimplicialPoint& p, const Manifold& manifold,
                              double tol) {
  const int n = p.n();
  if (p.u.size() != sz(n) * sz(n)) {
    throw DomainError("malformed_point", "direction table has wrong size");
  }
  if (manifold.ambient_dim() != p.m) {
    throw DomainError("bad_dimension", "manifold and point dimensions differ");
  }
  VerdictBuilder vb(tol);
  const CoincidenceTest ct(p.x, tol);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || ct.coincide(i, j)) continue;
      const Vec diff = p.x[sz(i)] - p.x[sz(j)];
      vb.check(Condition::macroscopic, {i, j},
               (p.dir(i, j) - diff / diff.norm()).norm());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      vb.check(Condition::dependence, {i, j}, (p.dir(i, j) + p.dir(j, i)).norm());
      for (int k = j + 1; k < n; ++k) {
        vb.check(Condition::dependence, {i, j, k},
                 dependence_gap(p.dir(i, j), p.dir(j, k), p.dir(k, i)));
        vb.check(Condition::dependence, {i, k, j},
                 dependence_gap(p.dir(i, k), p.dir(k, j), p.dir(j, i)));
      }
    }
  }
  const auto probes = four_consistency_probes(p.m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const auto f = FourDirections::from_point(p, {i, j, k, l});
          double worst = 0.0;
          for (const auto& v : probes)
            for (const auto& w : probes)
              worst = std::max(worst, std::abs(four_consistency_residual(f, v, w)));
          vb.check(Condition::four_consistency, {i, j, k, l}, worst);
        }
  if (manifold.kind == Manifold::Kind::sphere) {
    for (int i = 0; i < n; ++i) {
      vb.check(Condition::manifold, {i}, std::abs(p.x[sz(i)].norm() - 1.0));
      for (int j = 0; j < n; ++j) {
        if (i != j && ct.coincide(i, j)) {
          vb.check(Condition::manifold, {i, j},
                   std::abs(p.dir(i, j).dot(p.x[sz(i)])));
        }
      }
    }
  }
  if (p.framed()) {
    for (int i = 0; i < n; ++i) {
      const Vec& f = p.frames[sz(i)];
      vb.check(Condition::frame, {i}, std::abs(f.norm() - 1.0));
      if (manifold.kind == Manifold::Kind::sphere) {
        vb.check(Condition::frame, {i}, std::abs(f.dot(p.x[sz(i)])));
      }
    }
  }
  return vb.take();
}

ExclusionRelation exclusion_of_directions(const SimplicialPoint& p, double tol) {
  const int n = p.n();
  ExclusionRelation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if ((p.dir(i, k) - p.dir(j, k)).norm() <= tol &&
            !parallel(p.dir(i, j), p.dir(i, k), tol)) {
          r.insert(i + 1, j + 1, k + 1);
        }
      }
  return r;
}

FTree tree_of_directions(const SimplicialPoint& p, double tol) {
  const CoincidenceTest ct(p.x, tol);
  return tree_of_exclusion(exclusion_of_directions(p, tol), ct.all_coincide());
}

Configuration reconstruct_rho(const SimplicialPoint& p, double tol) {
  const int n = p.n();
  const int m = p.m;
  if (exclusion_of_directions(p, tol).count() != 0) {
    throw DomainError("exclusions_present",
                      "directions record colliding clusters; reconstruct each "
                      "cluster separately");
  }
  Configuration c{m, std::vector<Vec>(sz(n), Vec::Zero(m))};
  if (n <= 1) return c;

  const Vec axis = p.dir(0, 1);
  bool collinear = true;
  for (int i = 0; i < n && collinear; ++i)
    for (int j = i + 1; j < n && collinear; ++j)
      collinear = parallel(p.dir(i, j), axis, tol);
  if (collinear) {
    // Index i sits ahead of every j with u(i,j) = +axis.
    std::vector<int> rank(sz(n), 0);
    std::vector<char> used(sz(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && (p.dir(i, j) - axis).norm() <= tol) ++rank[sz(i)];
      }
      if (used[sz(rank[sz(i)])] != 0) {
        throw DomainError("inconsistent_directions",
                          "collinear directions do not order the points");
      }
      used[sz(rank[sz(i)])] = 1;
    }
    for (int i = 0; i < n; ++i) {
      c.points[sz(i)] = (-1.0 + 2.0 * rank[sz(i)] / (n - 1)) * axis;
    }
    return normalize(c);
  }

  std::vector<char> placed(sz(n), 0);
  c.points[1] = p.dir(1, 0);
  placed[0] = placed[1] = 1;
  int count = 2;
  while (count < n) {
    double scale = 0.0;
    for (int q = 0; q < n; ++q)
      if (placed[sz(q)] != 0) scale = std::max(scale, c.points[sz(q)].norm());
    bool grew = false;
    for (int k = 0; k < n && !grew; ++k) {
      if (placed[sz(k)] != 0) continue;
      for (int i = 0; i < n && !grew; ++i) {
        if (placed[sz(i)] == 0) continue;
        for (int j = i + 1; j < n && !grew; ++j) {
          if (placed[sz(j)] == 0) continue;
          const Vec& a = p.dir(k, i);
          const Vec& b = p.dir(k, j);
          if (parallel(a, b, tol)) continue;
          // x_i + s a = x_j + t b in the least-squares sense.
          const Vec r = c.points[sz(j)] - c.points[sz(i)];
          const double ab = a.dot(b);
          const double det = 1.0 - ab * ab;
          const double ra = r.dot(a);
          const double rb = r.dot(b);
          const double s = (ra - ab * rb) / det;
          const double t = (ab * ra - rb) / det;
          if (!(s > tol * scale) || !(t > tol * scale)) continue;
          c.points[sz(k)] =
              0.5 * ((c.points[sz(i)] + s * a) + (c.points[sz(j)] + t * b));
          placed[sz(k)] = 1;
          ++count;
          grew = true;
        }
      }
    }
    if (!grew) {
      throw DomainError("no_eligible_triple",
                        "no pair of placed points sees a new point along "
                        "independent rays");
    }
  }
  return normalize(c);
}

Configuration approx_family(const SimplicialPoint& p, double eps, double tol) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw DomainError("out_of_range", "eps must lie in (0, 1)");
  }
  const FTree t = tree_of_directions(p, tol);
  const int n = p.n();
  // offset[v]: position of the edge ending at v within its parent's cluster.
  std::vector<Vec> offset(sz(t.vertex_count()), Vec::Zero(p.m));
  std::vector<int> depth(sz(t.vertex_count()), 0);
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v != FTree::root()) depth[sz(v)] = depth[sz(t.parent(v))] + 1;
    if (t.is_leaf(v)) continue;
    const auto& kids = t.children(v);
    std::vector<int> reps;
    for (int c : kids) reps.push_back(min_label(t.leaves_over(c)) - 1);
    SimplicialPoint sub = SimplicialPoint::zeros(static_cast<int>(reps.size()), p.m);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = 0; b < reps.size(); ++b)
        if (a != b) {
          sub.dir(static_cast<int>(a), static_cast<int>(b)) = p.dir(reps[a], reps[b]);
        }
    const Configuration local = reconstruct_rho(sub, tol);
    for (std::size_t q = 0; q < kids.size(); ++q) offset[sz(kids[q])] = local.points[q];
  }
  Configuration out{p.m, std::vector<Vec>(sz(n), Vec::Zero(p.m))};
  for (int l = 1; l <= n; ++l) {
    Vec pos = Vec::Zero(p.m);
    for (int v = t.leaf_vertex(l); v != FTree::root(); v = t.parent(v)) {
      // The edge ending at v has height depth(parent(v)).
      pos += std::pow(eps, depth[sz(t.parent(v))]) * offset[sz(v)];
    }
    out.points[sz(l - 1)] = pos;
  }
  require_distinct(out);
  return out;
}

double direction_error(const Configuration& c, const SimplicialPoint& p) {
  const AmbientPoint a = alpha(c);
  double worst = 0.0;
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (i != j) worst = std::max(worst, (a.dir(i, j) - p.dir(i, j)).norm());
  return worst;
}

}  // namespace fmc
