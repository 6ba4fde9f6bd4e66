#pragma once

// The canonical compactification of configurations in R^m: coordinates,
// membership, stratum classification and chart maps.

#include <cstdint>
#include <optional>

#include "fmc/points.hpp"
#include "fmc/tree.hpp"

namespace fmc {

// u(i,j) = unit(x_i - x_j), d(i,j,k) = |x_i - x_j| / |x_i - x_k|.
AmbientPoint alpha(const Configuration& c);

// Translates the centroid to the origin and scales the largest norm to 1.
Configuration normalize(const Configuration& c);

// Sine of the angle between two unit vectors, accurate near 0 and pi.
double unit_sine(const Vec& a, const Vec& b);

// True iff the unit vectors admit a non-negative, not-all-zero linear
// dependence, i.e. the origin lies in their convex hull.
bool nonnegatively_dependent(const Vec& a, const Vec& b, const Vec& c, double tol);
// Distance from the origin to the triangle with vertices a, b, c.
double dependence_gap(const Vec& a, const Vec& b, const Vec& c);

struct RatioEstimate {
  bool determined = false;
  double value = 0.0;
};

// The ratio d(i,j,k) as forced by the directions among i, j, k: the sine rule
// when the three lines are pairwise distinct, zero when i and j approach each
// other from the same side of k, and undetermined otherwise (collinear data).
RatioEstimate ratio_from_directions(const SimplicialPoint& p, int i, int j,
                                    int k, double tol);
// Same, from the three directions u(i,j), u(j,k), u(i,k); the reversed
// directions are their negatives.
RatioEstimate ratio_from_directions(const Vec& u_ij, const Vec& u_jk,
                                    const Vec& u_ik, double tol);

// Tr of {((i,j),k) : d(i,j,k) <= tol}, with a trunk when every point
// coincides.
FTree tree_of(const AmbientPoint& a, double tol);

Verdict membership_canonical(const AmbientPoint& a, const Manifold& manifold,
                             double tol);

// Nested infinitesimal configurations with scale parameters. root[e] is the
// position of the e-th cluster at the root; vertex_configs[q] and scales[q]
// belong to tree.internal_vertices()[q], with points ordered like the
// vertex's children.
struct StratumPoint {
  FTree tree = FTree::corolla(1);
  int m = 1;
  std::vector<Vec> root;
  std::vector<std::vector<Vec>> vertex_configs;
  std::vector<double> scales;
};

// Upper bound on the scales: r/(1-r) is a third of the smallest distance
// between two points of any vertex configuration (r = 1 if there are none).
double scale_bound(const StratumPoint& s);

// Throws DomainError unless s satisfies every stratum-point invariant.
void validate_stratum(const StratumPoint& s, double tol = kDefaultTol);

AmbientPoint expand_chart(const StratumPoint& s);

// Requires tree_of(a, tol) to be a contraction of t.
StratumPoint invert_chart(const FTree& t, const AmbientPoint& a,
                          double tol = kDefaultTol);

StratumPoint stratum_sample(const FTree& t, int m, std::uint64_t seed);

// Result index sigma(i) carries the data of index i.
AmbientPoint permute(const SetMap& sigma, const AmbientPoint& a);
Configuration permute(const SetMap& sigma, const Configuration& c);

// max over coordinates of |x - x'|, |u - u'| and ratio_distance(d, d').
double ambient_distance(const AmbientPoint& a, const AmbientPoint& b);

}  // namespace fmc
