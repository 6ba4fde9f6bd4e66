#pragma once

// The associahedron as the space of ordered points on the line with pinned
// endpoints: its face poset (planar trees on n+2 leaves), f-vectors, and
// coordinates for points of each face.

#include <cstdint>
#include <vector>

#include "fmc/canonical.hpp"
#include "fmc/tree.hpp"

namespace fmc {

inline constexpr int kMaxAssocDim = 8;

struct Face {
  FTree tree;
  int dim;
};

struct FacePoset {
  int n = 0;
  std::vector<Face> faces;                  // sorted by decreasing dimension
  std::vector<std::pair<int, int>> covers;  // (face, facet of it)

  std::string to_dot() const;
};

FacePoset face_poset(int n);

// Number of faces of each dimension 0..n.
std::vector<std::int64_t> f_vector(int n);

// Interior coordinates of a face: positions of the root clusters strictly
// between the two end clusters (increasing, in (0,1)), and for every internal
// vertex an increasing normalized configuration on the line.
struct FaceParams {
  std::vector<double> root_interior;
  std::vector<std::vector<double>> vertex_configs;
};

// Evenly spaced parameters for the face of t.
FaceParams default_face_params(const FTree& t);

// The boundary point of the ordered interval configuration space lying on the
// face of t with the given parameters; the end clusters sit at 0 and 1.
AmbientPoint realize_face(const FTree& t, const FaceParams& params);

bool is_planar(const FTree& t);

}  // namespace fmc
