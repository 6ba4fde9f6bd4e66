#pragma once

// Maps induced by maps of index sets: projections along injections, pull-backs
// of framed points along arbitrary maps, diagonal (doubling) maps with an
// ordered parameter, and the cosimplicial structure over the unit interval.

#include <optional>

#include "fmc/canonical.hpp"
#include "fmc/simplicial.hpp"

namespace fmc {

// Keeps the data of indices sigma(0..m-1). Frames are carried along.
AmbientPoint project_sigma(const SetMap& sigma, const AmbientPoint& p);
SimplicialPoint project_sigma(const SetMap& sigma, const SimplicialPoint& p);
Configuration project_sigma(const SetMap& sigma, const Configuration& c);

// Pull-back of a framed point along sigma: index i takes the point and frame
// of sigma(i). When sigma(i) = sigma(j) = a, the pair (i, j) is read as a
// collision along the frame f of a with the later index displaced along f:
// u(i,j) = -f and u(j,i) = +f for i < j.
SimplicialPoint F_sigma(const SetMap& sigma, const SimplicialPoint& p);

// Index map collapsing {i, ..., i+k} (zero-based) onto i.
SetMap diagonal_collapse(int n, int i, int k);
// Section of diagonal_collapse: j -> j for j <= i, j -> j + k for j > i.
SetMap diagonal_section(int n, int i, int k);

// Replaces index i of a framed point by k+1 coincident copies whose relative
// position is the ordered 1-dimensional point `assoc` on k+1 indices (its x
// is ignored). For k = 1 the parameter may be omitted.
AmbientPoint diagonal(const AmbientPoint& p, int i, int k,
                      const std::optional<AmbientPoint>& assoc = std::nullopt,
                      double tol = kDefaultTol);

// The unique ordered point of two coincident indices on the line.
AmbientPoint ordered_pair_point();

// Monotone map [n] -> [m] given as SetMap with domain n+1, codomain m+1.
// Its dual on interval positions {0..m+1} -> {0..n+1}.
SetMap cosimplicial_dual(const SetMap& sigma);

// Checks that p is a framed point on the unit interval with first point 0,
// last point 1 and frame +1 at both ends.
void require_interval_point(const SimplicialPoint& p, double tol = kDefaultTol);

// Structure map of the cosimplicial space for a monotone sigma: [n] -> [m];
// takes n+2 interval positions to m+2.
SimplicialPoint cosimplicial_map(const SetMap& sigma, const SimplicialPoint& p,
                                 double tol = kDefaultTol);

// Framed interval point with the given interior positions, ordered as listed
// (each must lie in [0, 1] and be non-decreasing). Coincident positions are
// ordered by index.
SimplicialPoint interval_point(const std::vector<double>& interior);

}  // namespace fmc
