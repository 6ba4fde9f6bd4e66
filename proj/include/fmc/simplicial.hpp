#pragma once

// The simplicial variant, which keeps only points and pairwise directions:
// the forgetful map from the canonical compactification, the
// three-dependence / four-consistency characterization, classification from
// directions, reconstruction of configurations from directions, and
// degeneration families.

#include <array>
#include <cstdint>

#include "fmc/canonical.hpp"

namespace fmc {

SimplicialPoint project_Q(const AmbientPoint& a);

// Non-negative, not-all-zero dependence of three unit vectors.
bool three_dependent(const Vec& u1, const Vec& u2, const Vec& u3, double tol);

// A Hamiltonian path (c0, c1, c2, c3) on four local indices, paired with its
// complementary path and a sign. Edges are oriented along each path.
struct CircuitPair {
  std::array<int, 4> path;
  std::array<int, 4> complement;
  int sign;
};

// The frozen table of the twelve circuits (up to reversal, path[0] < path[3]).
const std::array<CircuitPair, 12>& circuit_table();

// Candidate orientation of each circuit's complement: bit c set means circuit
// c uses the reversed complement. The first circuit is fixed, so candidates
// range over 2^11 values.
using CircuitOrientation = std::uint32_t;

// Builds the table for a candidate orientation (bit c reverses the complement
// of circuit c, all signs +1).
std::array<CircuitPair, 12> circuit_table_for(CircuitOrientation o);

// Tests every candidate orientation against `samples` random planar 4-point
// configurations and returns those whose residual vanishes on all of them.
std::vector<CircuitOrientation> calibrate_circuit_orientations(int samples,
                                                               std::uint64_t seed);

// Directions on a 4-element index set: dir(a, b) for local indices 0..3.
struct FourDirections {
  std::array<Vec, 16> u;
  const Vec& operator()(int a, int b) const { return u[static_cast<std::size_t>(a * 4 + b)]; }
  Vec& operator()(int a, int b) { return u[static_cast<std::size_t>(a * 4 + b)]; }

  static FourDirections from_point(const SimplicialPoint& p,
                                   const std::array<int, 4>& indices);
};

// Sum over the circuit table of sign * prod_{C}(u.v) * prod_{C*}(u.w).
double four_consistency_residual(const FourDirections& u, const Vec& v,
                                 const Vec& w,
                                 const std::array<CircuitPair, 12>& table =
                                     circuit_table());

// The test vectors used for four-consistency: the normalized points of the
// degree-3 simplex lattice {sum k_p e_p : k_p >= 0, sum k_p = 3}. They contain
// the coordinate basis.
std::vector<Vec> four_consistency_probes(int m);

Verdict membership_simplicial(const SimplicialPoint& p, const Manifold& manifold,
                              double tol);

// Exclusions read off directions: ((i,j),k) when u(i,k) = u(j,k) and u(i,j)
// is not parallel to them.
ExclusionRelation exclusion_of_directions(const SimplicialPoint& p, double tol);

FTree tree_of_directions(const SimplicialPoint& p, double tol);

// A configuration whose directions are p's (p.x is ignored). Requires no
// exclusions among the indices.
Configuration reconstruct_rho(const SimplicialPoint& p, double tol);

// Open configurations x(eps) whose directions tend to p's as eps -> 0.
Configuration approx_family(const SimplicialPoint& p, double eps,
                            double tol = kDefaultTol);

// Largest |alpha(c).u(i,j) - p.u(i,j)|.
double direction_error(const Configuration& c, const SimplicialPoint& p);

}  // namespace fmc
