#pragma once

// Rooted labelled trees indexing the strata of compactified configuration
// spaces, together with the equivalent bookkeeping by nested subsets
// (parenthesizations) and by exclusion triples.
//
// Leaf labels are 1-based (1..n); a LeafSet stores label i in bit i-1.
// Vertex ids are canonical: the root is vertex 0 and the remaining vertices
// are numbered in depth-first preorder, visiting the edges out of each vertex
// in order of the smallest leaf label above them. Two trees are isomorphic
// (label-preserving) exactly when their encodings agree.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fmc {

using LeafSet = std::uint64_t;

inline constexpr int kMaxLeaves = 64;
inline constexpr int kMaxEnumerationLeaves = 9;
inline constexpr int kMaxPlanarLeaves = 10;

inline LeafSet leaf_bit(int label) { return LeafSet{1} << (label - 1); }
inline LeafSet full_leaf_set(int n) {
  return n >= 64 ? ~LeafSet{0} : (LeafSet{1} << n) - 1;
}
int popcount(LeafSet s);
int min_label(LeafSet s);  // 0 for the empty set
std::vector<int> labels_of(LeafSet s);

// A collection of subsets of {1..n}, each of size >= 2, pairwise nested or
// disjoint. `sets` is kept sorted ascending and duplicate-free.
struct Parenthesization {
  int n = 0;
  std::vector<LeafSet> sets;

  bool operator==(const Parenthesization&) const = default;
};

// Throws DomainError unless `p` is a valid parenthesization; returns it with
// its sets sorted.
Parenthesization make_parenthesization(int n, std::vector<LeafSet> sets);

// Triples ((i,j),k) of distinct labels, stored densely.
class ExclusionRelation {
 public:
  explicit ExclusionRelation(int n = 0);

  int size() const { return n_; }
  bool contains(int i, int j, int k) const;
  void insert(int i, int j, int k);
  std::size_t count() const;
  std::vector<std::array<int, 3>> triples() const;  // lexicographic

  // Axiom 1: ((i,j),k) => ((j,i),k) and not ((i,k),j).
  // Axiom 2: ((x,y),z) and ((w,x),y) => ((w,x),z).
  bool satisfies_axioms() const;

  bool operator==(const ExclusionRelation&) const = default;

 private:
  std::size_t index(int i, int j, int k) const;

  int n_;
  std::vector<char> bits_;
};

// A map of finite sets {0..domain-1} -> {0..codomain-1}. Zero-based in code;
// the JSON form is one-based.
struct SetMap {
  int domain = 0;
  int codomain = 0;
  std::vector<int> values;

  static SetMap identity(int n);
  static SetMap from_values(int codomain, std::vector<int> values);

  int operator()(int i) const { return values[static_cast<std::size_t>(i)]; }
  bool is_injective() const;
  bool is_bijective() const;
  bool is_monotone() const;

  bool operator==(const SetMap&) const = default;
};

// (outer ∘ inner)(i) = outer(inner(i)).
SetMap compose(const SetMap& outer, const SetMap& inner);

class FTree {
 public:
  // Corolla: every leaf attached directly to the root.
  static FTree corolla(int n);
  // One internal vertex per member set.
  static FTree from_paren(const Parenthesization& p);
  // From a parent array (root has parent -1) and per-vertex labels (0 for
  // non-leaves). Any vertex numbering is accepted; the result is canonical.
  static FTree from_parents(std::span<const int> parents,
                            std::span<const int> labels);

  int leaf_count() const { return n_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  static constexpr int root() { return 0; }

  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  int label(int v) const { return label_[static_cast<std::size_t>(v)]; }
  bool is_leaf(int v) const { return label(v) != 0; }
  bool is_internal(int v) const { return v != root() && !is_leaf(v); }
  LeafSet leaves_over(int v) const { return over_[static_cast<std::size_t>(v)]; }
  // Terminal vertices of the edges out of v, in canonical order.
  const std::vector<int>& children(int v) const {
    return children_[static_cast<std::size_t>(v)];
  }
  int valence_up(int v) const { return static_cast<int>(children(v).size()); }
  int leaf_vertex(int label) const;
  // Position of `child` within E(parent(child)).
  int edge_index(int child) const;

  // Non-root, non-leaf vertices in canonical (preorder) order.
  const std::vector<int>& internal_vertices() const { return internal_; }
  // Index of v in internal_vertices(), or -1.
  int internal_index(int v) const;

  const Parenthesization& paren() const { return paren_; }
  bool has_trunk() const;

  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& labels() const { return label_; }

  bool operator==(const FTree& o) const { return paren_ == o.paren_; }

 private:
  explicit FTree(Parenthesization p);

  int n_ = 0;
  Parenthesization paren_;
  std::vector<int> parent_;
  std::vector<int> label_;
  std::vector<LeafSet> over_;
  std::vector<std::vector<int>> children_;
  std::vector<int> internal_;
  std::vector<int> internal_index_;
  std::vector<int> leaf_vertex_;
};

enum class TreeVariant { full, trunk, planar };

TreeVariant parse_tree_variant(const std::string& name);

// Contracts the edges whose terminal vertices are listed. Leaf edges and
// vertices that do not exist are rejected.
FTree contract(const FTree& t, std::span<const int> edge_terminals);

// True iff `coarser` is (isomorphic to) a contraction of `t`.
bool leq(const FTree& t, const FTree& coarser);

std::vector<Parenthesization> enumerate_parenthesizations(int n,
                                                          TreeVariant variant);
std::vector<FTree> enumerate_trees(int n, TreeVariant variant);

Parenthesization paren_of_tree(const FTree& t);
FTree tree_of_paren(const Parenthesization& p);

ExclusionRelation exclusion_of_paren(const Parenthesization& p);
ExclusionRelation exclusion_of_tree(const FTree& t);
// Inverse of exclusion_of_tree; `trunk` adds the set {1..n}, which exclusions
// cannot see.
FTree tree_of_exclusion(const ExclusionRelation& r, bool trunk);

// Pruning along an injective map sigma: {0..m-1} -> {0..n-1}; leaf a+1 of the
// result corresponds to leaf sigma(a)+1 of t.
FTree prune(const FTree& t, const SetMap& sigma);

// Relabels leaf i as sigma(i-1)+1 for a bijection sigma.
FTree relabel(const FTree& t, const SetMap& sigma);

// Deepest vertex lying under all of the given leaf labels.
int join(const FTree& t, LeafSet labels);
int join(const FTree& t, std::span<const int> labels);

int codim(const FTree& t);

std::string to_dot(const FTree& t);
// Hasse diagram of the contraction order on a list of trees with equal leaf
// counts; covering edges point from a tree to its one-step contractions.
std::string hasse_dot(std::span<const FTree> trees);

}  // namespace fmc
