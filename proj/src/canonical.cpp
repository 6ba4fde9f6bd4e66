#include "fmc/canonical.hpp"

#include <algorithm>
#include <random>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_unit(const Vec& v) {
  if (!(std::abs(v.norm() - 1.0) <= 1e-8)) {
    throw DomainError("non_unit", "direction is not a unit vector");
  }
}

bool parallel(const Vec& a, const Vec& b, double tol) {
  return (a - b).norm() <= tol || (a + b).norm() <= tol;
}

double segment_gap(const Vec& a, const Vec& b) {
  const Vec ab = b - a;
  const double len2 = ab.squaredNorm();
  double s = len2 > 0.0 ? -a.dot(ab) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return (a + s * ab).norm();
}

// Product under the extended convention, pairing each zero with an infinity.
double extended_product(std::initializer_list<double> terms) {
  int zeros = 0;
  int infs = 0;
  double finite = 1.0;
  for (double t : terms) {
    if (t == 0.0) {
      ++zeros;
    } else if (std::isinf(t)) {
      ++infs;
    } else {
      finite *= t;
    }
  }
  if (zeros > 0 && infs > 0) {
    if (zeros == infs) return finite;
    return zeros > infs ? 0.0 : kInf;
  }
  if (zeros > 0) return 0.0;
  if (infs > 0) return kInf;
  return finite;
}

}  // namespace

AmbientPoint alpha(const Configuration& c) {
  require_distinct(c);
  const int n = c.size();
  AmbientPoint a = AmbientPoint::zeros(n, c.m);
  a.x = c.points;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec diff = c.points[sz(i)] - c.points[sz(j)];
      a.dir(i, j) = diff / diff.norm();
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double num = (c.points[sz(i)] - c.points[sz(j)]).norm();
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        a.ratio(i, j, k) = num / (c.points[sz(i)] - c.points[sz(k)]).norm();
      }
    }
  }
  return a;
}

Configuration normalize(const Configuration& c) {
  require_distinct(c);
  Configuration out = c;
  if (c.size() == 0) return out;
  Vec centroid = Vec::Zero(c.m);
  for (const auto& p : c.points) centroid += p;
  centroid /= static_cast<double>(c.size());
  double radius = 0.0;
  for (auto& p : out.points) {
    p -= centroid;
    radius = std::max(radius, p.norm());
  }
  if (radius > 0.0) {
    for (auto& p : out.points) p /= radius;
  }
  return out;
}

double unit_sine(const Vec& a, const Vec& b) {
  return 0.5 * (a - b).norm() * (a + b).norm();
}

double dependence_gap(const Vec& a, const Vec& b, const Vec& c) {
  const Vec e1 = b - a;
  const Vec e2 = c - a;
  const double g11 = e1.dot(e1);
  const double g12 = e1.dot(e2);
  const double g22 = e2.dot(e2);
  const double det = g11 * g22 - g12 * g12;
  if (det > 1e-14 * std::max(1.0, g11 * g22)) {
    const double r1 = -a.dot(e1);
    const double r2 = -a.dot(e2);
    const double s = (r1 * g22 - r2 * g12) / det;
    const double t = (g11 * r2 - g12 * r1) / det;
    if (s >= 0.0 && t >= 0.0 && s + t <= 1.0) return (a + s * e1 + t * e2).norm();
  }
  return std::min({segment_gap(a, b), segment_gap(b, c), segment_gap(c, a)});
}

bool nonnegatively_dependent(const Vec& a, const Vec& b, const Vec& c,
                             double tol) {
  require_unit(a);
  require_unit(b);
  require_unit(c);
  return dependence_gap(a, b, c) <= tol;
}

namespace {

RatioEstimate ratio_core(const Vec& u_ij, const Vec& u_jk, const Vec& u_ik,
                         const Vec& u_ki, const Vec& u_kj, const Vec& u_ji,
                         double tol) {
  for (const Vec* v : {&u_ij, &u_jk, &u_ik, &u_ki, &u_kj, &u_ji}) require_unit(*v);
  const bool distinct = !parallel(u_ij, u_jk, tol) && !parallel(u_jk, u_ik, tol) &&
                        !parallel(u_ij, u_ik, tol);
  if (distinct) {
    return {true, unit_sine(u_ki, u_kj) / unit_sine(u_ji, u_jk)};
  }
  if ((u_ik - u_jk).norm() <= tol && !parallel(u_ij, u_ik, tol)) {
    return {true, 0.0};
  }
  return {false, 0.0};
}

}  // namespace

RatioEstimate ratio_from_directions(const SimplicialPoint& p, int i, int j,
                                    int k, double tol) {
  return ratio_core(p.dir(i, j), p.dir(j, k), p.dir(i, k), p.dir(k, i),
                    p.dir(k, j), p.dir(j, i), tol);
}

RatioEstimate ratio_from_directions(const Vec& u_ij, const Vec& u_jk,
                                    const Vec& u_ik, double tol) {
  return ratio_core(u_ij, u_jk, u_ik, -u_ik, -u_jk, -u_ij, tol);
}

FTree tree_of(const AmbientPoint& a, double tol) {
  const int n = a.n();
  ExclusionRelation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k && a.ratio(i, j, k) <= tol) {
          r.insert(i + 1, j + 1, k + 1);
        }
  const CoincidenceTest ct(a.x, tol);
  return tree_of_exclusion(r, ct.all_coincide());
}

Verdict membership_canonical(const AmbientPoint& a, const Manifold& manifold,
                             double tol) {
  const int n = a.n();
  const auto nn = sz(n);
  if (a.u.size() != nn * nn || a.d.size() != nn * nn * nn) {
    throw DomainError("malformed_point", "coordinate tables have wrong size");
  }
  if (manifold.ambient_dim() != a.m) {
    throw DomainError("bad_dimension", "manifold and point dimensions differ");
  }
  VerdictBuilder vb(tol);
  const CoincidenceTest ct(a.x, tol);

  // (1) agreement with the points wherever they are apart.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || ct.coincide(i, j)) continue;
      const Vec diff = a.x[sz(i)] - a.x[sz(j)];
      vb.check(Condition::macroscopic, {i, j},
               (a.dir(i, j) - diff / diff.norm()).norm());
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k || ct.coincide(i, k)) continue;
        const double expected =
            (a.x[sz(i)] - a.x[sz(j)]).norm() / (a.x[sz(i)] - a.x[sz(k)]).norm();
        vb.check(Condition::macroscopic, {i, j, k},
                 ratio_distance(a.ratio(i, j, k), expected));
      }

  // (2) ratios forced by directions.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const RatioEstimate est = ratio_from_directions(a, i, j, k, tol);
        if (est.determined) {
          vb.check(Condition::law_of_sines, {i, j, k},
                   ratio_distance(a.ratio(i, j, k), est.value));
        }
      }

  // (3) antisymmetry and non-negative dependence around each triangle.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      vb.check(Condition::dependence, {i, j}, (a.dir(i, j) + a.dir(j, i)).norm());
      for (int k = j + 1; k < n; ++k) {
        vb.check(Condition::dependence, {i, j, k},
                 dependence_gap(a.dir(i, j), a.dir(j, k), a.dir(k, i)));
        vb.check(Condition::dependence, {i, k, j},
                 dependence_gap(a.dir(i, k), a.dir(k, j), a.dir(j, i)));
      }
    }
  }

  // (4) multiplicative identities among the ratios.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (i == j || i == k) continue;
        const auto p = extended_product({a.ratio(i, j, k), a.ratio(i, k, j)});
        vb.check(Condition::cocycle, {i, j, k}, ratio_distance(p, 1.0));
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = i + 1; k < n; ++k) {
        if (k == j) continue;
        const auto p = extended_product(
            {a.ratio(i, j, k), a.ratio(j, k, i), a.ratio(k, i, j)});
        vb.check(Condition::cocycle, {i, j, k}, ratio_distance(p, 1.0));
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const double t1 = a.ratio(i, j, k);
          const double t2 = a.ratio(i, k, l);
          const double t3 = a.ratio(i, l, j);
          const bool has_zero = t1 == 0.0 || t2 == 0.0 || t3 == 0.0;
          const bool has_inf = std::isinf(t1) || std::isinf(t2) || std::isinf(t3);
          // A zero meeting an infinity leaves the product undetermined here.
          if (has_zero && has_inf) continue;
          const auto p = extended_product({t1, t2, t3});
          vb.check(Condition::cocycle, {i, j, k, l}, ratio_distance(p, 1.0));
        }

  // (5) the points lie on the manifold; colliding directions are tangent.
  if (manifold.kind == Manifold::Kind::sphere) {
    for (int i = 0; i < n; ++i) {
      vb.check(Condition::manifold, {i}, std::abs(a.x[sz(i)].norm() - 1.0));
      for (int j = 0; j < n; ++j) {
        if (i != j && ct.coincide(i, j)) {
          vb.check(Condition::manifold, {i, j},
                   std::abs(a.dir(i, j).dot(a.x[sz(i)])));
        }
      }
    }
  }
  if (a.framed()) {
    for (int i = 0; i < n; ++i) {
      const Vec& f = a.frames[sz(i)];
      vb.check(Condition::frame, {i}, std::abs(f.norm() - 1.0));
      if (manifold.kind == Manifold::Kind::sphere) {
        vb.check(Condition::frame, {i}, std::abs(f.dot(a.x[sz(i)])));
      }
    }
  }
  return vb.take();
}

// ---------------------------------------------------------------------------
// Charts

namespace {

const std::vector<Vec>& config_at(const StratumPoint& s, int v) {
  if (v == FTree::root()) return s.root;
  return s.vertex_configs[sz(s.tree.internal_index(v))];
}

double scale_at(const StratumPoint& s, int v) {
  return s.scales[sz(s.tree.internal_index(v))];
}

double min_pairwise(const std::vector<Vec>& pts) {
  double best = kInf;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      best = std::min(best, (pts[a] - pts[b]).norm());
  return best;
}

}  // namespace

double scale_bound(const StratumPoint& s) {
  double best = min_pairwise(s.root);
  for (const auto& cfg : s.vertex_configs) best = std::min(best, min_pairwise(cfg));
  if (std::isinf(best)) return 1.0;
  const double q = best / 3.0;
  return q / (1.0 + q);
}

void validate_stratum(const StratumPoint& s, double tol) {
  const FTree& t = s.tree;
  if (s.m < 1) throw DomainError("malformed_stratum", "dimension must be positive");
  const auto& inner = t.internal_vertices();
  if (s.root.size() != sz(t.valence_up(FTree::root())) ||
      s.vertex_configs.size() != inner.size() || s.scales.size() != inner.size()) {
    throw DomainError("malformed_stratum",
                      "stratum data does not match the tree's shape");
  }
  for (std::size_t q = 0; q < inner.size(); ++q) {
    if (s.vertex_configs[q].size() != sz(t.valence_up(inner[q]))) {
      throw DomainError("malformed_stratum",
                        "vertex configuration has the wrong number of points");
    }
  }
  auto check_points = [&](const std::vector<Vec>& pts) {
    for (const auto& p : pts) {
      if (p.size() != s.m || !p.allFinite()) {
        throw DomainError("malformed_stratum", "bad point in stratum data");
      }
    }
  };
  check_points(s.root);
  for (const auto& cfg : s.vertex_configs) {
    check_points(cfg);
    Vec sum = Vec::Zero(s.m);
    double radius = 0.0;
    for (const auto& p : cfg) {
      sum += p;
      radius = std::max(radius, p.norm());
    }
    const double k = static_cast<double>(cfg.size());
    if (sum.norm() > tol * k || std::abs(radius - 1.0) > tol) {
      throw DomainError("not_normalized",
                        "vertex configuration must have centroid 0 and radius 1");
    }
  }
  if (!(min_pairwise(s.root) > 0.0)) {
    throw DomainError("duplicate_points", "root configuration has repeated points");
  }
  const double r = scale_bound(s);
  for (double tv : s.scales) {
    if (!(tv >= 0.0) || !(tv < r)) {
      throw DomainError("scale_bound", "scale " + std::to_string(tv) +
                                           " outside [0, " + std::to_string(r) +
                                           ")");
    }
  }
}

AmbientPoint expand_chart(const StratumPoint& s) {
  validate_stratum(s);
  const FTree& t = s.tree;
  const int n = t.leaf_count();
  const int nv = t.vertex_count();
  // local[v][l]: position of leaf l in the frame of v (v's own scale set to 1).
  std::vector<std::vector<Vec>> local(sz(nv), std::vector<Vec>(sz(n) + 1));
  for (int v = nv - 1; v >= 0; --v) {
    if (t.is_leaf(v)) continue;
    const auto& pts = config_at(s, v);
    const auto& kids = t.children(v);
    for (std::size_t q = 0; q < kids.size(); ++q) {
      const int c = kids[q];
      if (t.is_leaf(c)) {
        local[sz(v)][sz(t.label(c))] = pts[q];
        continue;
      }
      const double tc = scale_at(s, c);
      for (int l : labels_of(t.leaves_over(c))) {
        local[sz(v)][sz(l)] = pts[q] + tc * local[sz(c)][sz(l)];
      }
    }
  }

  AmbientPoint a = AmbientPoint::zeros(n, s.m);
  std::vector<int> pair_join(sz(n) * sz(n), 0);
  for (int i = 0; i < n; ++i) {
    a.x[sz(i)] = local[0][sz(i) + 1];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int w = join(t, leaf_bit(i + 1) | leaf_bit(j + 1));
      pair_join[sz(i) * sz(n) + sz(j)] = w;
      const Vec diff = local[sz(w)][sz(i) + 1] - local[sz(w)][sz(j) + 1];
      const double len = diff.norm();
      if (!(len > 0.0)) {
        throw DomainError("degenerate_chart", "clusters collide inside a frame");
      }
      a.dir(i, j) = diff / len;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const int wij = pair_join[sz(i) * sz(n) + sz(j)];
        const int wik = pair_join[sz(i) * sz(n) + sz(k)];
        // Both joins lie below leaf i, so the shallower one is the triple join.
        const int w = popcount(t.leaves_over(wij)) >= popcount(t.leaves_over(wik))
                          ? wij
                          : wik;
        const auto& f = local[sz(w)];
        const double num = (f[sz(i) + 1] - f[sz(j) + 1]).norm();
        const double den = (f[sz(i) + 1] - f[sz(k) + 1]).norm();
        a.ratio(i, j, k) = den == 0.0 ? kInf : num / den;
      }
  return a;
}

StratumPoint invert_chart(const FTree& t, const AmbientPoint& a, double tol) {
  const int n = t.leaf_count();
  if (a.n() != n) {
    throw DomainError("size_mismatch", "point and tree have different sizes");
  }
  if (!leq(t, tree_of(a, tol))) {
    throw DomainError("chart_region",
                      "the point's stratum is not a contraction of the tree");
  }
  const int nv = t.vertex_count();

  // Anchors of every vertex below `frame`, measured in the frame's own
  // coordinates: leaves sit at their positions, other vertices at the mean
  // of their children.
  auto anchors_in = [&](int frame) {
    std::vector<Vec> pos(sz(nv));
    if (frame == FTree::root()) {
      for (int l = 1; l <= n; ++l) pos[sz(t.leaf_vertex(l))] = a.x[sz(l - 1)];
    } else {
      const auto& kids = t.children(frame);
      const int r1 = min_label(t.leaves_over(kids[0])) - 1;
      const int r2 = min_label(t.leaves_over(kids[1])) - 1;
      for (int l1 : labels_of(t.leaves_over(frame))) {
        const int l = l1 - 1;
        const double d = l == r1 ? 0.0 : l == r2 ? 1.0 : a.ratio(r1, l, r2);
        if (!std::isfinite(d)) {
          throw DomainError("chart_region", "infinite ratio inside a cluster");
        }
        pos[sz(t.leaf_vertex(l1))] =
            l == r1 ? Vec::Zero(a.m) : Vec(d * a.dir(l, r1));
      }
    }
    std::vector<int> order;
    for (int v = frame; v < nv; ++v) {
      // Preorder numbering: the subtree of `frame` is a contiguous id range.
      if (v != frame && (t.leaves_over(v) & ~t.leaves_over(frame)) != 0) break;
      order.push_back(v);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      if (t.is_leaf(v)) continue;
      Vec mean = Vec::Zero(a.m);
      for (int c : t.children(v)) mean += pos[sz(c)];
      pos[sz(v)] = mean / static_cast<double>(t.valence_up(v));
    }
    return pos;
  };
  auto spread = [&](const std::vector<Vec>& pos, int v) {
    double r = 0.0;
    for (int c : t.children(v)) r = std::max(r, (pos[sz(c)] - pos[sz(v)]).norm());
    return r;
  };

  StratumPoint s;
  s.tree = t;
  s.m = a.m;
  const auto root_pos = anchors_in(FTree::root());
  for (int c : t.children(FTree::root())) s.root.push_back(root_pos[sz(c)]);
  std::vector<std::vector<Vec>> frame_pos(sz(nv));
  frame_pos[0] = root_pos;
  for (int v : t.internal_vertices()) {
    frame_pos[sz(v)] = anchors_in(v);
    const auto& pos = frame_pos[sz(v)];
    const double r = spread(pos, v);
    if (!(r > 0.0)) throw DomainError("chart_region", "cluster has no extent");
    std::vector<Vec> cfg;
    for (int c : t.children(v)) cfg.push_back((pos[sz(c)] - pos[sz(v)]) / r);
    s.vertex_configs.push_back(std::move(cfg));
  }
  for (int v : t.internal_vertices()) {
    const int p = t.parent(v);
    const auto& pos = frame_pos[sz(p)];
    const double num = spread(pos, v);
    const double tv = p == FTree::root() ? num : num / spread(pos, p);
    // Rounding in the anchors leaves a residue of order eps at t = 0.
    s.scales.push_back(tv <= tol ? 0.0 : tv);
  }
  return s;
}

StratumPoint stratum_sample(const FTree& t, int m, std::uint64_t seed) {
  if (m < 1) throw DomainError("bad_dimension", "dimension must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  constexpr double kMargin = 0.1;
  constexpr int kAttempts = 10000;

  auto draw = [&](int k, bool normalized) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      std::vector<Vec> pts;
      for (int q = 0; q < k; ++q) {
        Vec p(m);
        for (int c = 0; c < m; ++c) p[c] = coord(rng);
        pts.push_back(p);
      }
      if (normalized) {
        if (min_pairwise(pts) == 0.0) continue;
        pts = normalize(Configuration{m, pts}).points;
      }
      if (k < 2 || min_pairwise(pts) >= kMargin) return pts;
    }
    // Evenly spaced fallback along the first axis.
    std::vector<Vec> pts;
    for (int q = 0; q < k; ++q) {
      Vec p = Vec::Zero(m);
      p[0] = k == 1 ? 0.0 : -1.0 + 2.0 * q / (k - 1);
      pts.push_back(p);
    }
    return normalized ? normalize(Configuration{m, pts}).points : pts;
  };

  StratumPoint s;
  s.tree = t;
  s.m = m;
  s.root = draw(t.valence_up(FTree::root()), false);
  for (int v : t.internal_vertices()) {
    s.vertex_configs.push_back(draw(t.valence_up(v), true));
  }
  const double r = scale_bound(s);
  std::uniform_real_distribution<double> scale(0.0, r);
  for (std::size_t q = 0; q < t.internal_vertices().size(); ++q) {
    s.scales.push_back(scale(rng));
  }
  return s;
}

AmbientPoint permute(const SetMap& sigma, const AmbientPoint& a) {
  const int n = a.n();
  if (sigma.domain != n || !sigma.is_bijective()) {
    throw DomainError("not_bijective", "permutation must be a bijection of 1..n");
  }
  AmbientPoint out = AmbientPoint::zeros(n, a.m);
  if (a.framed()) out.frames.assign(sz(n), Vec());
  for (int i = 0; i < n; ++i) {
    out.x[sz(sigma(i))] = a.x[sz(i)];
    if (a.framed()) out.frames[sz(sigma(i))] = a.frames[sz(i)];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.dir(sigma(i), sigma(j)) = a.dir(i, j);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        out.ratio(sigma(i), sigma(j), sigma(k)) = a.ratio(i, j, k);
      }
    }
  }
  return out;
}

Configuration permute(const SetMap& sigma, const Configuration& c) {
  if (sigma.domain != c.size() || !sigma.is_bijective()) {
    throw DomainError("not_bijective", "permutation must be a bijection of 1..n");
  }
  Configuration out = c;
  for (int i = 0; i < c.size(); ++i) out.points[sz(sigma(i))] = c.points[sz(i)];
  return out;
}

double ambient_distance(const AmbientPoint& a, const AmbientPoint& b) {
  if (a.n() != b.n() || a.m != b.m) {
    throw DomainError("size_mismatch", "points have different shapes");
  }
  const int n = a.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, (a.x[sz(i)] - b.x[sz(i)]).norm());
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      worst = std::max(worst, (a.dir(i, j) - b.dir(i, j)).norm());
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        worst = std::max(worst, ratio_distance(a.ratio(i, j, k), b.ratio(i, j, k)));
      }
    }
  }
  return worst;
}

}  // namespace fmc
