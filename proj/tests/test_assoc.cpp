#include <doctest.h>

#include <map>
#include <set>

#include "fmc/assoc.hpp"
#include "fmc/errors.hpp"
#include "oracles.hpp"

using namespace fmc;

namespace {

FTree tree_from(int n, std::vector<std::vector<int>> sets) {
  std::vector<LeafSet> masks;
  for (const auto& s : sets) {
    LeafSet m = 0;
    for (int l : s) m |= leaf_bit(l);
    masks.push_back(m);
  }
  return FTree::from_paren(make_parenthesization(n, masks));
}

// Increasing points on the line with the given ratio of first gap to span,
// normalized to centroid 0 and largest norm 1.
std::vector<double> three_on_line(double s) {
  Configuration c{1, {}};
  for (double v : {0.0, s, 1.0}) c.points.push_back(Vec::Constant(1, v));
  std::vector<double> out;
  for (const auto& p : oracle::normalized(c).points) out.push_back(p[0]);
  return out;
}

std::vector<double> ratios(const AmbientPoint& a) {
  std::vector<double> out;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      for (int k = 0; k < a.n(); ++k)
        if (i != j && j != k && i != k) out.push_back(a.ratio(i, j, k));
  return out;
}

}  // namespace

TEST_CASE("small associahedra") {
  CHECK(f_vector(0) == std::vector<std::int64_t>{1});
  CHECK(f_vector(1) == std::vector<std::int64_t>{2, 1});
  CHECK(f_vector(2) == std::vector<std::int64_t>{5, 5, 1});
  CHECK(f_vector(3)[0] == 14);
}

TEST_CASE("f-vectors match polygon dissections") {
  for (int n = 0; n <= 6; ++n) {
    const auto f = f_vector(n);
    REQUIRE(f.size() == static_cast<std::size_t>(n + 1));
    CHECK(f[0] == oracle::catalan(n + 1));
    std::int64_t euler = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(f[k] == oracle::dissections(n + 3, n - k));
      euler += (k % 2 == 0 ? 1 : -1) * f[k];
    }
    CHECK(euler == 1);
  }
  CHECK_THROWS_AS(f_vector(kMaxAssocDim + 1), DomainError);
  CHECK_THROWS_AS(f_vector(-1), DomainError);
}

TEST_CASE("face poset of the pentagon") {
  const FacePoset p = face_poset(2);
  CHECK(p.faces.size() == 11);
  CHECK(p.covers.size() == 15);
  std::map<int, int> facets;
  for (const auto& [coarse, fine] : p.covers) {
    CHECK(p.faces[coarse].dim == p.faces[fine].dim + 1);
    CHECK(leq(p.faces[fine].tree, p.faces[coarse].tree));
    ++facets[coarse];
  }
  CHECK(facets[0] == 5);
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    if (p.faces[f].dim == 1) CHECK(facets[static_cast<int>(f)] == 2);
  }
  const std::string dot = p.to_dot();
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("face posets are graded and complete") {
  for (int n = 0; n <= 4; ++n) {
    const FacePoset p = face_poset(n);
    const auto f = f_vector(n);
    std::int64_t total = 0;
    for (auto c : f) total += c;
    CHECK(static_cast<std::int64_t>(p.faces.size()) == total);
    for (std::size_t i = 1; i < p.faces.size(); ++i) CHECK(p.faces[i - 1].dim >= p.faces[i].dim);
    // oracle: covers are the pairs differing by exactly one set
    std::set<std::pair<int, int>> want;
    for (std::size_t a = 0; a < p.faces.size(); ++a)
      for (std::size_t b = 0; b < p.faces.size(); ++b) {
        const auto& sa = p.faces[a].tree.paren().sets;
        const auto& sb = p.faces[b].tree.paren().sets;
        if (sb.size() == sa.size() + 1 &&
            std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) {
          want.emplace(static_cast<int>(a), static_cast<int>(b));
        }
      }
    std::set<std::pair<int, int>> got(p.covers.begin(), p.covers.end());
    CHECK(got == want);
  }
}

TEST_CASE("interior point of the pentagon") {
  const FTree corolla = FTree::corolla(4);
  FaceParams params;
  params.root_interior = {0.2, 0.4};
  const AmbientPoint a = realize_face(corolla, params);
  CHECK(a.x[1][0] == 0.2);
  CHECK(a.ratio(0, 1, 2) == doctest::Approx(0.5));                // x / y
  CHECK(a.ratio(3, 2, 1) == doctest::Approx((1 - 0.4) / (1 - 0.2)));  // (1-y)/(1-x)
  CHECK(tree_of(a, 1e-9) == corolla);
  CHECK(membership_canonical(a, Manifold::euclidean(1), 1e-9).pass());
}

TEST_CASE("edge where the first three points collide") {
  const FTree t = tree_from(4, {{1, 2, 3}});
  for (double s : {0.1, 0.3, 0.5, 0.9}) {
    FaceParams params;
    params.vertex_configs = {three_on_line(s)};
    const AmbientPoint a = realize_face(t, params);
    CHECK(a.ratio(0, 1, 2) == doctest::Approx(s).epsilon(1e-12));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK(a.dir(i, j)[0] == -1.0);
    CHECK(a.x[0][0] == 0.0);
    CHECK(a.x[2][0] == 0.0);
    CHECK(tree_of(a, 1e-9) == t);
  }
}

TEST_CASE("pentagon vertices") {
  std::set<std::vector<double>> patterns;
  int vertices = 0;
  for (const auto& t : enumerate_trees(4, TreeVariant::planar)) {
    if (codim(t) != 2) continue;
    ++vertices;
    const AmbientPoint a = realize_face(t, default_face_params(t));
    const auto d = ratios(a);
    for (double v : d) CHECK((v == 0.0 || v == 1.0 || std::isinf(v)));
    patterns.insert(d);
    CHECK(tree_of(a, 1e-9) == t);
  }
  CHECK(vertices == 5);
  CHECK(patterns.size() == 5);
}

TEST_CASE("every face realizes in its own stratum") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& face : face_poset(n).faces) {
      const AmbientPoint a = realize_face(face.tree, default_face_params(face.tree));
      CHECK(tree_of(a, 1e-9) == face.tree);
      CHECK(membership_canonical(a, Manifold::euclidean(1), 1e-9).pass());
      for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) CHECK(a.dir(i, j)[0] == -1.0);
    }
  }
}

TEST_CASE("face realization rejects bad input") {
  CHECK_THROWS_AS(realize_face(tree_from(4, {{1, 3}}), FaceParams{}), DomainError);
  CHECK_THROWS_AS(realize_face(tree_from(4, {{1, 2, 3, 4}}), FaceParams{}), DomainError);
  FaceParams wrong;
  wrong.root_interior = {0.4, 0.2};
  CHECK_THROWS_AS(realize_face(FTree::corolla(4), wrong), DomainError);
  CHECK_THROWS_AS(realize_face(FTree::corolla(4), FaceParams{}), DomainError);
  CHECK(is_planar(tree_from(4, {{2, 3}})));
  CHECK_FALSE(is_planar(tree_from(4, {{2, 4}})));
}
