#include "fmc/assoc.hpp"

#include <map>
#include <sstream>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void check_dim(int n) {
  if (n < 0 || n > kMaxAssocDim) {
    throw DomainError("out_of_range", "associahedron dimension must lie in 0.." +
                                          std::to_string(kMaxAssocDim));
  }
}

bool consecutive(LeafSet s) {
  const LeafSet shifted = s >> (min_label(s) - 1);
  return (shifted & (shifted + 1)) == 0;
}

void require_increasing(const std::vector<double>& v, const char* what) {
  for (std::size_t q = 1; q < v.size(); ++q) {
    if (!(v[q] > v[q - 1])) {
      throw DomainError("bad_face_params", std::string(what) + " must increase");
    }
  }
}

}  // namespace

bool is_planar(const FTree& t) {
  if (t.leaf_count() < 2 || t.has_trunk()) return false;
  for (LeafSet s : t.paren().sets)
    if (!consecutive(s)) return false;
  return true;
}

FacePoset face_poset(int n) {
  check_dim(n);
  FacePoset poset;
  poset.n = n;
  std::map<std::vector<LeafSet>, int> index;
  for (auto& p : enumerate_parenthesizations(n + 2, TreeVariant::planar)) {
    index.emplace(p.sets, static_cast<int>(poset.faces.size()));
    const int dim = n - static_cast<int>(p.sets.size());
    poset.faces.push_back(Face{FTree::from_paren(p), dim});
  }
  for (std::size_t f = 0; f < poset.faces.size(); ++f) {
    const auto& sets = poset.faces[f].tree.paren().sets;
    for (std::size_t drop = 0; drop < sets.size(); ++drop) {
      std::vector<LeafSet> coarser;
      for (std::size_t q = 0; q < sets.size(); ++q)
        if (q != drop) coarser.push_back(sets[q]);
      poset.covers.emplace_back(index.at(coarser), static_cast<int>(f));
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

std::string FacePoset::to_dot() const {
  std::ostringstream os;
  os << "digraph associahedron {\n";
  for (std::size_t f = 0; f < faces.size(); ++f) {
    os << "  f" << f << " [label=\"dim " << faces[f].dim;
    for (LeafSet s : faces[f].tree.paren().sets) {
      const auto ls = labels_of(s);
      os << " (" << ls.front() << ".." << ls.back() << ")";
    }
    os << "\"];\n";
  }
  for (const auto& [a, b] : covers) os << "  f" << a << " -> f" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::int64_t> f_vector(int n) {
  check_dim(n);
  std::vector<std::int64_t> counts(sz(n) + 1, 0);
  for (const auto& p : enumerate_parenthesizations(n + 2, TreeVariant::planar)) {
    ++counts[sz(n - static_cast<int>(p.sets.size()))];
  }
  return counts;
}

FaceParams default_face_params(const FTree& t) {
  FaceParams params;
  const int k0 = t.valence_up(FTree::root());
  for (int q = 1; q + 1 < k0; ++q) {
    params.root_interior.push_back(static_cast<double>(q) / (k0 - 1));
  }
  for (int v : t.internal_vertices()) {
    const int k = t.valence_up(v);
    std::vector<double> cfg;
    for (int q = 0; q < k; ++q) cfg.push_back(-1.0 + 2.0 * q / (k - 1));
    params.vertex_configs.push_back(std::move(cfg));
  }
  return params;
}

AmbientPoint realize_face(const FTree& t, const FaceParams& params) {
  if (!is_planar(t)) {
    throw DomainError("not_planar", "faces are indexed by planar trees without trunk");
  }
  const int k0 = t.valence_up(FTree::root());
  if (params.root_interior.size() != sz(k0 - 2) ||
      params.vertex_configs.size() != t.internal_vertices().size()) {
    throw DomainError("bad_face_params", "parameters do not match the face");
  }
  std::vector<double> root{0.0};
  root.insert(root.end(), params.root_interior.begin(), params.root_interior.end());
  root.push_back(1.0);
  require_increasing(root, "root positions");

  StratumPoint s;
  s.tree = t;
  s.m = 1;
  for (double v : root) s.root.push_back(Vec::Constant(1, v));
  for (std::size_t q = 0; q < params.vertex_configs.size(); ++q) {
    const auto& cfg = params.vertex_configs[q];
    if (cfg.size() != sz(t.valence_up(t.internal_vertices()[q]))) {
      throw DomainError("bad_face_params", "vertex configuration has the wrong size");
    }
    require_increasing(cfg, "vertex configurations");
    std::vector<Vec> pts;
    for (double v : cfg) pts.push_back(Vec::Constant(1, v));
    s.vertex_configs.push_back(std::move(pts));
  }
  s.scales.assign(t.internal_vertices().size(), 0.0);
  return expand_chart(s);
}

}  // namespace fmc
