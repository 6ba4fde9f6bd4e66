#include <doctest.h>

#include <cmath>
#include <set>

#include "fmc/errors.hpp"
#include "fmc/simplicial.hpp"
#include "oracles.hpp"

using namespace fmc;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec v1(double a) {
  Vec v(1);
  v << a;
  return v;
}

double max_abs(const Vec& a, const Vec& b) { return (a - b).cwiseAbs().maxCoeff(); }

FTree tree_from(int n, std::vector<std::vector<int>> sets) {
  std::vector<LeafSet> masks;
  for (const auto& s : sets) {
    LeafSet m = 0;
    for (int l : s) m |= leaf_bit(l);
    masks.push_back(m);
  }
  return FTree::from_paren(make_parenthesization(n, masks));
}

double max_dir_error(const SimplicialPoint& a, const SimplicialPoint& b) {
  double e = 0.0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (i != j) e = std::max(e, max_abs(a.dir(i, j), b.dir(i, j)));
  return e;
}

// The three-cluster point with u_13 = u_23 = e1 and u_12 = e2, all x equal.
SimplicialPoint cluster_point() {
  SimplicialPoint p = SimplicialPoint::zeros(3, 2);
  p.x = {v2(0, 0), v2(0, 0), v2(0, 0)};
  p.dir(0, 1) = v2(0, 1);
  p.dir(1, 0) = v2(0, -1);
  p.dir(0, 2) = v2(1, 0);
  p.dir(2, 0) = v2(-1, 0);
  p.dir(1, 2) = v2(1, 0);
  p.dir(2, 1) = v2(-1, 0);
  return p;
}

std::array<int, 4> identity4() { return {0, 1, 2, 3}; }

}  // namespace

TEST_CASE("project_Q forgets ratios") {
  oracle::Rng rng(1);
  const auto c = oracle::random_configuration(rng, 4, 3);
  const AmbientPoint a = alpha(c);
  const SimplicialPoint q = project_Q(a);
  CHECK(q.n() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(max_abs(q.x[i], c.points[i]) == 0.0);
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(max_abs(q.dir(i, j), a.dir(i, j)) == 0.0);
  }
  const SetMap sigma = SetMap::from_values(4, {2, 0, 3, 1});
  const SimplicialPoint lhs = project_Q(permute(sigma, a));
  const SimplicialPoint rhs = project_Q(alpha(permute(sigma, c)));
  CHECK(max_dir_error(lhs, rhs) == 0.0);
}

TEST_CASE("three-dependence examples") {
  const double h = std::sqrt(0.5);
  CHECK(three_dependent(v2(-1, 0), v2(h, -h), v2(0, 1), 1e-12));
  CHECK_FALSE(three_dependent(v2(1, 0), v2(1, 0), v2(0, 1), 1e-12));
  CHECK(three_dependent(v2(1, 0), v2(-1, 0), v2(0, 1), 1e-12));
}

TEST_CASE("circuit table structure") {
  const auto& table = circuit_table();
  std::set<std::array<int, 4>> paths;
  for (const auto& c : table) {
    CHECK(c.path[0] < c.path[3]);
    CHECK(c.sign == 1);
    paths.insert(c.path);
    // each path is a permutation of 0..3, and so is the complement
    auto sorted = c.path;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == identity4());
    auto comp = c.complement;
    std::sort(comp.begin(), comp.end());
    CHECK(comp == identity4());
    // the two paths share no edge and together cover all six
    std::set<std::pair<int, int>> edges;
    for (int e = 0; e < 3; ++e) {
      edges.insert(std::minmax(c.path[e], c.path[e + 1]));
      edges.insert(std::minmax(c.complement[e], c.complement[e + 1]));
    }
    CHECK(edges.size() == 6);
  }
  CHECK(paths.size() == 12);
  CHECK(circuit_table_for(0)[5].complement == table[5].complement);
}

TEST_CASE("orientation calibration finds the frozen table") {
  const auto found = calibrate_circuit_orientations(40, 17);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == 0U);
}

TEST_CASE("four-consistency on the slope example") {
  const Configuration c{2, {v2(0, 1), v2(0, 2), v2(1, 0), v2(2, 0)}};
  const auto f = FourDirections::from_point(project_Q(alpha(c)), identity4());
  CHECK(std::abs(four_consistency_residual(f, v2(0, 1), v2(1, 0))) <= 1e-12);
}

TEST_CASE("four-consistency vanishes on configurations") {
  oracle::Rng rng(2);
  for (int m = 2; m <= 4; ++m) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = oracle::random_configuration(rng, 4, m);
      const auto f = FourDirections::from_point(project_Q(alpha(c)), identity4());
      const Vec v = oracle::unit(rng, m);
      const Vec w = oracle::unit(rng, m);
      CHECK(std::abs(four_consistency_residual(f, v, w)) <= 1e-10);
      for (const auto& p : four_consistency_probes(m))
        for (const auto& q : four_consistency_probes(m))
          CHECK(std::abs(four_consistency_residual(f, p, q)) <= 1e-10);
    }
  }
}

TEST_CASE("four-consistency separates unrelated directions") {
  oracle::Rng rng(3);
  int separated = 0;
  constexpr int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    FourDirections f;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        f(a, b) = oracle::unit(rng, 2);
        f(b, a) = -f(a, b);
      }
    double worst = 0.0;
    for (const auto& p : four_consistency_probes(2))
      for (const auto& q : four_consistency_probes(2))
        worst = std::max(worst, std::abs(four_consistency_residual(f, p, q)));
    if (worst > 1e-4) ++separated;
  }
  CHECK(separated >= 990);
}

TEST_CASE("probes contain the basis") {
  for (int m = 1; m <= 4; ++m) {
    const auto probes = four_consistency_probes(m);
    CHECK(static_cast<std::int64_t>(probes.size()) == oracle::binomial(m + 2, 3));
    for (int c = 0; c < m; ++c) {
      bool found = false;
      for (const auto& p : probes) found |= p == Vec::Unit(m, c);
      CHECK(found);
    }
    for (const auto& p : probes) CHECK(p.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("simplicial membership") {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 3);
    const auto q = project_Q(alpha(oracle::random_configuration(rng, n, m)));
    const Verdict v = membership_simplicial(q, Manifold::euclidean(m), 1e-9);
    CHECK(v.pass());
    CHECK(v.max_residual <= 1e-10);
  }
  SimplicialPoint bad = project_Q(alpha(oracle::random_configuration(rng, 4, 2)));
  bad.dir(1, 3) = -bad.dir(1, 3);
  CHECK_FALSE(membership_simplicial(bad, Manifold::euclidean(2), 1e-9).pass());
}

TEST_CASE("simplicial membership of boundary points") {
  oracle::Rng rng(5);
  const auto trees = enumerate_trees(5, TreeVariant::full);
  for (int trial = 0; trial < 100; ++trial) {
    StratumPoint s = stratum_sample(trees[rng() % trees.size()], 3, rng());
    std::fill(s.scales.begin(), s.scales.end(), 0.0);
    CHECK(membership_simplicial(project_Q(expand_chart(s)), Manifold::euclidean(3), 1e-9)
              .pass());
  }
}

TEST_CASE("non-coplanar direction in a cluster is rejected") {
  StratumPoint s = stratum_sample(tree_from(4, {{1, 2, 3}}), 3, 8);
  s.scales = {0.0};
  SimplicialPoint p = project_Q(expand_chart(s));
  REQUIRE(membership_simplicial(p, Manifold::euclidean(3), 1e-9).pass());
  // the cluster directions span a plane; tilt u_12 out of it
  const Eigen::Vector3d a3 = p.dir(0, 1);
  const Eigen::Vector3d b3 = p.dir(0, 2);
  const Vec normal = a3.cross(b3).normalized();
  p.dir(0, 1) = (p.dir(0, 1) + 0.5 * normal).normalized();
  p.dir(1, 0) = -p.dir(0, 1);
  const Verdict v = membership_simplicial(p, Manifold::euclidean(3), 1e-9);
  REQUIRE_FALSE(v.pass());
  bool cites = false;
  for (const auto& viol : v.violations) {
    cites |= viol.condition == Condition::dependence ||
             viol.condition == Condition::four_consistency;
  }
  CHECK(cites);
}

TEST_CASE("classification from directions") {
  oracle::Rng rng(6);
  const auto q = project_Q(alpha(oracle::random_configuration(rng, 5, 2)));
  CHECK(tree_of_directions(q, 1e-9) == FTree::corolla(5));
  const SimplicialPoint p = cluster_point();
  const ExclusionRelation r = exclusion_of_directions(p, 1e-9);
  CHECK(r.contains(1, 2, 3));
  CHECK(r.contains(2, 1, 3));
  CHECK(r.count() == 2);
  CHECK(tree_of_directions(p, 1e-9) == tree_from(3, {{1, 2}, {1, 2, 3}}));
}

TEST_CASE("classification from directions agrees with ratios") {
  oracle::Rng rng(7);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n, TreeVariant::full)) {
      StratumPoint s = stratum_sample(t, 2, rng());
      std::fill(s.scales.begin(), s.scales.end(), 0.0);
      const AmbientPoint a = expand_chart(s);
      CHECK(tree_of_directions(project_Q(a), 1e-9) == tree_of(a, 1e-9));
    }
  }
}

TEST_CASE("reconstruction") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int m = 2 + static_cast<int>(rng() % 2);
    const auto c = oracle::random_configuration(rng, n, m);
    const SimplicialPoint q = project_Q(alpha(c));
    const Configuration r = reconstruct_rho(q, 1e-9);
    const Configuration want = oracle::normalized(c);
    for (int i = 0; i < n; ++i) CHECK(max_abs(r.points[i], want.points[i]) <= 1e-6);
    CHECK(max_dir_error(project_Q(alpha(r)), q) <= 1e-8);
  }
}

TEST_CASE("reconstruction of collinear data") {
  // u_ij = +1 for i < j: the points decrease along the line
  SimplicialPoint p = SimplicialPoint::zeros(3, 1);
  p.x = {v1(0), v1(0), v1(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) p.dir(i, j) = v1(i < j ? 1.0 : -1.0);
  const Configuration r = reconstruct_rho(p, 1e-9);
  CHECK(r.points[0][0] == doctest::Approx(1.0));
  CHECK(r.points[1][0] == doctest::Approx(0.0));
  CHECK(r.points[2][0] == doctest::Approx(-1.0));
}

TEST_CASE("reconstruction rejects clusters") {
  CHECK_THROWS_AS(reconstruct_rho(cluster_point(), 1e-9), DomainError);
}

TEST_CASE("approximating families") {
  oracle::Rng rng(9);
  const auto c = oracle::random_configuration(rng, 4, 2);
  const SimplicialPoint q = project_Q(alpha(c));
  const Configuration x = approx_family(q, 1e-3);
  CHECK(direction_error(x, q) <= 1e-9);

  const SimplicialPoint p = cluster_point();
  std::vector<double> err;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const Configuration xe = approx_family(p, eps);
    CHECK(tree_of(alpha(xe), 1e-12) == FTree::corolla(3));
    err.push_back(direction_error(xe, p));
  }
  const double slope1 = std::log10(err[0] / err[1]);
  const double slope2 = std::log10(err[1] / err[2]);
  CHECK(slope1 == doctest::Approx(1.0).epsilon(0.2));
  CHECK(slope2 == doctest::Approx(1.0).epsilon(0.2));
  CHECK_THROWS_AS(approx_family(p, 0.0), DomainError);
  CHECK_THROWS_AS(approx_family(p, 1.0), DomainError);
}

TEST_CASE("approximating families of sampled boundary points") {
  oracle::Rng rng(10);
  const auto trees = enumerate_trees(5, TreeVariant::full);
  for (int trial = 0; trial < 30; ++trial) {
    const FTree& t = trees[rng() % trees.size()];
    if (codim(t) == 0) continue;
    StratumPoint s = stratum_sample(t, 2, rng());
    std::fill(s.scales.begin(), s.scales.end(), 0.0);
    const SimplicialPoint p = project_Q(expand_chart(s));
    const double e2 = direction_error(approx_family(p, 1e-2), p);
    const double e4 = direction_error(approx_family(p, 1e-4), p);
    CHECK(e4 < e2);
    CHECK(e4 <= 1e-2);
  }
}
