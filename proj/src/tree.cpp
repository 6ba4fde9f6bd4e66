#include "fmc/tree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>

#include "fmc/errors.hpp"

namespace fmc {

int popcount(LeafSet s) { return std::popcount(s); }

int min_label(LeafSet s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }

std::vector<int> labels_of(LeafSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

namespace {

bool subset_of(LeafSet a, LeafSet b) { return (a & ~b) == 0; }

void check_leaf_count(int n, int cap) {
  if (n < 1 || n > cap) {
    throw DomainError("out_of_range", "leaf count " + std::to_string(n) +
                                          " outside supported range 1.." +
                                          std::to_string(cap));
  }
}

}  // namespace

Parenthesization make_parenthesization(int n, std::vector<LeafSet> sets) {
  check_leaf_count(n, kMaxLeaves);
  const LeafSet full = full_leaf_set(n);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (LeafSet s : sets) {
    if (!subset_of(s, full)) {
      throw DomainError("out_of_range", "subset mentions a label above n");
    }
    if (popcount(s) < 2) {
      throw DomainError("small_subset", "subsets must have at least two labels");
    }
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const LeafSet meet = sets[a] & sets[b];
      if (meet != 0 && meet != sets[a] && meet != sets[b]) {
        throw DomainError("not_nested", "subsets overlap without nesting");
      }
    }
  }
  return Parenthesization{n, std::move(sets)};
}

// ---------------------------------------------------------------------------
// ExclusionRelation

ExclusionRelation::ExclusionRelation(int n)
    : n_(n),
      bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                static_cast<std::size_t>(n),
            0) {
  if (n < 0) throw DomainError("out_of_range", "negative index set size");
}

std::size_t ExclusionRelation::index(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) {
    throw DomainError("out_of_range", "exclusion index out of range");
  }
  const auto n = static_cast<std::size_t>(n_);
  return (static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) *
             n +
         static_cast<std::size_t>(k - 1);
}

bool ExclusionRelation::contains(int i, int j, int k) const {
  return bits_[index(i, j, k)] != 0;
}

void ExclusionRelation::insert(int i, int j, int k) {
  if (i == j || j == k || i == k) {
    throw DomainError("not_distinct", "exclusion triple needs distinct labels");
  }
  bits_[index(i, j, k)] = 1;
}

std::size_t ExclusionRelation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::array<int, 3>> ExclusionRelation::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        if (bits_[index(i, j, k)] != 0) out.push_back({i, j, k});
  return out;
}

bool ExclusionRelation::satisfies_axioms() const {
  for (const auto& [x, y, z] : triples()) {
    if (!contains(y, x, z) || contains(x, z, y)) return false;
    for (int w = 1; w <= n_; ++w) {
      if (w == x || w == y || w == z) continue;
      if (contains(w, x, y) && !contains(w, x, z)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SetMap

SetMap SetMap::identity(int n) {
  SetMap s{n, n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) s.values[static_cast<std::size_t>(i)] = i;
  return s;
}

SetMap SetMap::from_values(int codomain, std::vector<int> values) {
  if (codomain < 0) throw DomainError("out_of_range", "negative codomain size");
  for (int v : values) {
    if (v < 0 || v >= codomain) {
      throw DomainError("out_of_range", "map value outside the codomain");
    }
  }
  const int domain = static_cast<int>(values.size());
  return SetMap{domain, codomain, std::move(values)};
}

bool SetMap::is_injective() const {
  std::vector<char> seen(static_cast<std::size_t>(codomain), 0);
  for (int v : values) {
    if (seen[static_cast<std::size_t>(v)] != 0) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool SetMap::is_bijective() const { return domain == codomain && is_injective(); }

bool SetMap::is_monotone() const {
  return std::is_sorted(values.begin(), values.end());
}

SetMap compose(const SetMap& outer, const SetMap& inner) {
  if (inner.codomain != outer.domain) {
    throw DomainError("size_mismatch", "maps are not composable");
  }
  std::vector<int> vals;
  vals.reserve(inner.values.size());
  for (int v : inner.values) vals.push_back(outer(v));
  return SetMap{inner.domain, outer.codomain, std::move(vals)};
}

// ---------------------------------------------------------------------------
// FTree

FTree::FTree(Parenthesization p) : n_(p.n), paren_(std::move(p)) {
  const LeafSet full = full_leaf_set(n_);
  leaf_vertex_.assign(static_cast<std::size_t>(n_) + 1, -1);

  // Children of a vertex covering `mask`: the maximal member sets inside it
  // (strictly inside for non-root vertices) plus the uncovered leaves.
  auto child_masks = [&](LeafSet mask, bool is_root) {
    std::vector<LeafSet> inside;
    for (LeafSet s : paren_.sets) {
      if (subset_of(s, mask) && (is_root || s != mask)) inside.push_back(s);
    }
    std::vector<LeafSet> out;
    LeafSet covered = 0;
    for (LeafSet s : inside) {
      bool maximal = true;
      for (LeafSet t : inside) {
        if (t != s && subset_of(s, t)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(s);
        covered |= s;
      }
    }
    for (int l : labels_of(mask & ~covered)) out.push_back(leaf_bit(l));
    std::sort(out.begin(), out.end(), [](LeafSet a, LeafSet b) {
      return min_label(a) < min_label(b);
    });
    return out;
  };

  std::function<int(LeafSet, int, bool)> visit = [&](LeafSet mask, int par,
                                                     bool is_root) -> int {
    const int v = static_cast<int>(parent_.size());
    parent_.push_back(par);
    over_.push_back(mask);
    children_.emplace_back();
    const bool leaf = !is_root && popcount(mask) == 1;
    label_.push_back(leaf ? min_label(mask) : 0);
    if (leaf) {
      leaf_vertex_[static_cast<std::size_t>(min_label(mask))] = v;
      return v;
    }
    if (!is_root) internal_.push_back(v);
    for (LeafSet c : child_masks(mask, is_root)) {
      const int cv = visit(c, v, false);
      children_[static_cast<std::size_t>(v)].push_back(cv);
    }
    return v;
  };
  visit(full, -1, true);

  internal_index_.assign(parent_.size(), -1);
  for (std::size_t a = 0; a < internal_.size(); ++a) {
    internal_index_[static_cast<std::size_t>(internal_[a])] = static_cast<int>(a);
  }
}

FTree FTree::corolla(int n) { return FTree(make_parenthesization(n, {})); }

FTree FTree::from_paren(const Parenthesization& p) {
  return FTree(make_parenthesization(p.n, p.sets));
}

FTree FTree::from_parents(std::span<const int> parents,
                          std::span<const int> labels) {
  const int nv = static_cast<int>(parents.size());
  if (nv == 0 || labels.size() != parents.size()) {
    throw DomainError("malformed_tree", "parent and label arrays must match");
  }
  int root = -1;
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    const int p = parents[static_cast<std::size_t>(v)];
    if (p == -1) {
      if (root != -1) throw DomainError("malformed_tree", "more than one root");
      root = v;
    } else if (p < 0 || p >= nv || p == v) {
      throw DomainError("malformed_tree", "parent index out of range");
    } else {
      kids[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  if (root == -1) throw DomainError("malformed_tree", "no root");

  int n = 0;
  for (int v = 0; v < nv; ++v) {
    if (labels[static_cast<std::size_t>(v)] != 0) ++n;
  }
  check_leaf_count(n, kMaxLeaves);

  std::vector<LeafSet> over(static_cast<std::size_t>(nv), 0);
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  LeafSet used = 0;
  std::vector<LeafSet> sets;
  std::function<void(int)> walk = [&](int v) {
    const auto vi = static_cast<std::size_t>(v);
    if (seen[vi] != 0) throw DomainError("malformed_tree", "cycle in parents");
    seen[vi] = 1;
    const int lab = labels[vi];
    if (lab != 0) {
      if (lab < 1 || lab > n || (used & leaf_bit(lab)) != 0) {
        throw DomainError("malformed_tree", "leaf labels must biject onto 1..n");
      }
      if (!kids[vi].empty()) {
        throw DomainError("malformed_tree", "labelled vertex has children");
      }
      used |= leaf_bit(lab);
      over[vi] = leaf_bit(lab);
      return;
    }
    if (v != root && kids[vi].size() < 2) {
      throw DomainError("malformed_tree",
                        "non-root vertex must be a leaf or have two edges up");
    }
    if (v == root && kids[vi].empty()) {
      throw DomainError("malformed_tree", "root has no edges");
    }
    for (int c : kids[vi]) {
      walk(c);
      over[vi] |= over[static_cast<std::size_t>(c)];
    }
    if (v != root) sets.push_back(over[vi]);
  };
  walk(root);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw DomainError("malformed_tree", "vertices unreachable from the root");
  }
  return FTree(make_parenthesization(n, std::move(sets)));
}

int FTree::leaf_vertex(int label) const {
  if (label < 1 || label > n_) {
    throw DomainError("unknown_label", "leaf label " + std::to_string(label) +
                                           " not in 1.." + std::to_string(n_));
  }
  return leaf_vertex_[static_cast<std::size_t>(label)];
}

int FTree::edge_index(int child) const {
  const auto& sib = children(parent(child));
  return static_cast<int>(std::find(sib.begin(), sib.end(), child) - sib.begin());
}

int FTree::internal_index(int v) const {
  if (v < 0 || v >= vertex_count()) return -1;
  return internal_index_[static_cast<std::size_t>(v)];
}

bool FTree::has_trunk() const {
  return n_ >= 2 && std::binary_search(paren_.sets.begin(), paren_.sets.end(),
                                       full_leaf_set(n_));
}

// ---------------------------------------------------------------------------
// Operations

TreeVariant parse_tree_variant(const std::string& name) {
  if (name == "full") return TreeVariant::full;
  if (name == "trunk") return TreeVariant::trunk;
  if (name == "planar") return TreeVariant::planar;
  throw DomainError("invalid_argument", "unknown tree variant '" + name + "'");
}

FTree contract(const FTree& t, std::span<const int> edge_terminals) {
  std::vector<LeafSet> drop;
  for (int v : edge_terminals) {
    if (v < 0 || v >= t.vertex_count() || v == FTree::root()) {
      throw DomainError("unknown_edge",
                        "vertex " + std::to_string(v) + " ends no edge of the tree");
    }
    if (t.is_leaf(v)) {
      throw DomainError("leaf_edge", "cannot contract the leaf edge at vertex " +
                                         std::to_string(v));
    }
    drop.push_back(t.leaves_over(v));
  }
  std::vector<LeafSet> keep;
  for (LeafSet s : t.paren().sets) {
    if (std::find(drop.begin(), drop.end(), s) == drop.end()) keep.push_back(s);
  }
  return FTree::from_paren(Parenthesization{t.leaf_count(), std::move(keep)});
}

bool leq(const FTree& t, const FTree& coarser) {
  if (t.leaf_count() != coarser.leaf_count()) {
    throw DomainError("size_mismatch", "trees have different leaf counts");
  }
  const auto& fine = t.paren().sets;
  return std::includes(fine.begin(), fine.end(), coarser.paren().sets.begin(),
                       coarser.paren().sets.end());
}

namespace {

// Calls `emit` on each set partition of the labels in `mask`, given as a list
// of blocks.
void for_each_partition(LeafSet mask,
                        const std::function<void(const std::vector<LeafSet>&)>& emit) {
  const std::vector<int> elems = labels_of(mask);
  std::vector<LeafSet> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == elems.size()) {
      emit(blocks);
      return;
    }
    const LeafSet bit = leaf_bit(elems[idx]);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      rec(idx + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    rec(idx + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Visits every nested family of subsets (size >= 2) of `mask` that does not
// contain `mask` itself. `acc` holds the sets chosen so far by outer levels.
void for_each_laminar(LeafSet mask, std::vector<LeafSet>& acc,
                      const std::function<void(std::vector<LeafSet>&)>& emit) {
  for_each_partition(mask, [&](const std::vector<LeafSet>& blocks) {
    if (blocks.size() == 1) return;  // the partition {mask} itself
    std::vector<LeafSet> big;
    for (LeafSet b : blocks)
      if (popcount(b) >= 2) big.push_back(b);
    std::function<void(std::size_t)> product = [&](std::size_t idx) {
      if (idx == big.size()) {
        emit(acc);
        return;
      }
      acc.push_back(big[idx]);
      for_each_laminar(big[idx], acc, [&](std::vector<LeafSet>&) {
        product(idx + 1);
      });
      acc.pop_back();
    };
    product(0);
  });
}

// Same for families of intervals inside the interval [lo, hi] of labels.
void for_each_interval_laminar(int lo, int hi, std::vector<LeafSet>& acc,
                               const std::function<void()>& emit) {
  const int gaps = hi - lo;  // cut positions after lo, ..., hi-1
  for (std::uint32_t cuts = 1; cuts < (1U << gaps); ++cuts) {
    std::vector<std::pair<int, int>> big;
    int start = lo;
    for (int g = 0; g <= gaps; ++g) {
      const bool cut_here = g == gaps || ((cuts >> g) & 1U) != 0;
      if (!cut_here) continue;
      const int end = lo + g;
      if (end > start) big.emplace_back(start, end);
      start = end + 1;
    }
    std::function<void(std::size_t)> product = [&](std::size_t idx) {
      if (idx == big.size()) {
        emit();
        return;
      }
      const auto [a, b] = big[idx];
      acc.push_back(full_leaf_set(b) & ~full_leaf_set(a - 1));
      for_each_interval_laminar(a, b, acc, [&] { product(idx + 1); });
      acc.pop_back();
    };
    product(0);
  }
}

}  // namespace

std::vector<Parenthesization> enumerate_parenthesizations(int n,
                                                          TreeVariant variant) {
  if (variant == TreeVariant::planar) {
    check_leaf_count(n, kMaxPlanarLeaves);
    if (n < 2) {
      throw DomainError("out_of_range", "planar trees need at least two leaves");
    }
  } else {
    check_leaf_count(n, kMaxEnumerationLeaves);
  }
  const LeafSet full = full_leaf_set(n);
  std::vector<Parenthesization> out;
  if (n == 1) return {Parenthesization{1, {}}};
  std::vector<LeafSet> acc;
  auto record = [&](std::vector<LeafSet> sets, bool with_full) {
    if (with_full) sets.push_back(full);
    std::sort(sets.begin(), sets.end());
    out.push_back(Parenthesization{n, std::move(sets)});
  };
  if (variant == TreeVariant::planar) {
    for_each_interval_laminar(1, n, acc, [&] { record(acc, false); });
  } else {
    for_each_laminar(full, acc, [&](std::vector<LeafSet>& sets) {
      record(sets, false);
      if (variant == TreeVariant::trunk && n >= 2) {
        out.pop_back();
        record(sets, true);
      } else if (n >= 2) {
        record(sets, true);
      }
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Parenthesization& a, const Parenthesization& b) {
              if (a.sets.size() != b.sets.size()) {
                return a.sets.size() < b.sets.size();
              }
              return a.sets < b.sets;
            });
  return out;
}

std::vector<FTree> enumerate_trees(int n, TreeVariant variant) {
  std::vector<FTree> out;
  for (const auto& p : enumerate_parenthesizations(n, variant)) {
    out.push_back(FTree::from_paren(p));
  }
  return out;
}

Parenthesization paren_of_tree(const FTree& t) { return t.paren(); }

FTree tree_of_paren(const Parenthesization& p) { return FTree::from_paren(p); }

ExclusionRelation exclusion_of_paren(const Parenthesization& p) {
  ExclusionRelation r(p.n);
  const LeafSet full = full_leaf_set(p.n);
  for (LeafSet s : p.sets) {
    const auto in = labels_of(s);
    const auto out = labels_of(full & ~s);
    for (int i : in)
      for (int j : in)
        if (i != j)
          for (int k : out) r.insert(i, j, k);
  }
  return r;
}

ExclusionRelation exclusion_of_tree(const FTree& t) {
  return exclusion_of_paren(t.paren());
}

FTree tree_of_exclusion(const ExclusionRelation& r, bool trunk) {
  const int n = r.size();
  check_leaf_count(n, kMaxLeaves);
  if (!r.satisfies_axioms()) {
    throw DomainError("exclusion_axioms",
                      "relation violates the exclusion axioms");
  }
  std::vector<LeafSet> sets;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      if (k == i) continue;
      LeafSet s = leaf_bit(i);
      for (int j = 1; j <= n; ++j) {
        if (j != i && j != k && r.contains(i, j, k)) s |= leaf_bit(j);
      }
      if (popcount(s) >= 2) sets.push_back(s);
    }
  }
  Parenthesization p = make_parenthesization(n, std::move(sets));
  if (!(exclusion_of_paren(p) == r)) {
    throw DomainError("exclusion_axioms",
                      "relation is not the exclusion relation of any tree");
  }
  if (trunk && n >= 2) {
    p.sets.push_back(full_leaf_set(n));
    p = make_parenthesization(n, std::move(p.sets));
  }
  return FTree::from_paren(p);
}

FTree prune(const FTree& t, const SetMap& sigma) {
  if (sigma.codomain != t.leaf_count()) {
    throw DomainError("size_mismatch", "map codomain differs from leaf count");
  }
  if (!sigma.is_injective()) {
    throw DomainError("not_injective", "pruning needs an injective map");
  }
  std::vector<LeafSet> sets;
  for (LeafSet s : t.paren().sets) {
    LeafSet pre = 0;
    for (int a = 0; a < sigma.domain; ++a) {
      if ((s & leaf_bit(sigma(a) + 1)) != 0) pre |= leaf_bit(a + 1);
    }
    if (popcount(pre) >= 2) sets.push_back(pre);
  }
  return FTree::from_paren(make_parenthesization(sigma.domain, std::move(sets)));
}

FTree relabel(const FTree& t, const SetMap& sigma) {
  if (sigma.domain != t.leaf_count() || !sigma.is_bijective()) {
    throw DomainError("not_bijective", "relabelling needs a permutation");
  }
  std::vector<LeafSet> sets;
  for (LeafSet s : t.paren().sets) {
    LeafSet img = 0;
    for (int l : labels_of(s)) img |= leaf_bit(sigma(l - 1) + 1);
    sets.push_back(img);
  }
  return FTree::from_paren(make_parenthesization(t.leaf_count(), std::move(sets)));
}

int join(const FTree& t, LeafSet labels) {
  if (labels == 0) throw DomainError("empty_labels", "join of no leaves");
  if (!subset_of(labels, full_leaf_set(t.leaf_count()))) {
    throw DomainError("unknown_label", "join names a label above n");
  }
  if (popcount(labels) == 1) return t.leaf_vertex(min_label(labels));
  int best = FTree::root();
  for (int v : t.internal_vertices()) {
    const LeafSet over = t.leaves_over(v);
    if (subset_of(labels, over) && popcount(over) <= popcount(t.leaves_over(best))) {
      best = v;
    }
  }
  return best;
}

int join(const FTree& t, std::span<const int> labels) {
  LeafSet s = 0;
  for (int l : labels) {
    if (l < 1 || l > t.leaf_count()) {
      throw DomainError("unknown_label", "join names label " + std::to_string(l));
    }
    s |= leaf_bit(l);
  }
  return join(t, s);
}

int codim(const FTree& t) { return static_cast<int>(t.paren().sets.size()); }

std::string to_dot(const FTree& t) {
  std::ostringstream os;
  os << "digraph ftree {\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"";
    if (v == FTree::root()) {
      os << "root";
    } else if (t.is_leaf(v)) {
      os << t.label(v);
    } else {
      os << "{";
      const auto ls = labels_of(t.leaves_over(v));
      for (std::size_t a = 0; a < ls.size(); ++a) os << (a ? "," : "") << ls[a];
      os << "}";
    }
    os << "\"];\n";
  }
  for (int v = 1; v < t.vertex_count(); ++v) {
    os << "  v" << t.parent(v) << " -> v" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string paren_label(const Parenthesization& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t a = 0; a < p.sets.size(); ++a) {
    os << (a ? "," : "") << "{";
    const auto ls = labels_of(p.sets[a]);
    for (std::size_t b = 0; b < ls.size(); ++b) os << (b ? "," : "") << ls[b];
    os << "}";
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string hasse_dot(std::span<const FTree> trees) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (std::size_t a = 0; a < trees.size(); ++a) {
    os << "  t" << a << " [label=\"" << paren_label(trees[a].paren()) << "\"];\n";
  }
  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (std::size_t b = 0; b < trees.size(); ++b) {
      if (codim(trees[a]) == codim(trees[b]) + 1 && leq(trees[a], trees[b])) {
        os << "  t" << a << " -> t" << b << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace fmc
