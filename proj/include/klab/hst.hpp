#pragma once

#include <string>
#include <vector>

#include "klab/metric.hpp"
#include "klab/random.hpp"
#include "klab/rational.hpp"

namespace klab {

// Rooted tree with exact edge lengths. Node 0 is always the root. Leaves carry
// labels 0..n_leaves-1 identifying metric points. Immutable after construction.
struct WeightedHst {
  struct Node {
    int parent = -1;
    Rat parent_edge;        // length of the edge to the parent; unused for the root
    std::vector<int> children;
    int leaf_label = -1;    // >= 0 iff this node is a leaf
  };

  std::vector<Node> nodes;
  std::vector<int> leaf_node;  // leaf label -> node index
  Rat sigma;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int leaf_count() const { return static_cast<int>(leaf_node.size()); }
  bool is_leaf(int v) const { return nodes[v].leaf_label >= 0; }
  bool is_root(int v) const { return v == 0; }

  int depth() const;                    // edges on the longest root-leaf path
  int node_depth(int v) const;
  std::vector<int> subtree_node_counts() const;
  std::vector<std::vector<int>> leaves_under() const;  // node -> sorted leaf labels
  int lca(int u, int v) const;

  // distance between leaves identified by their labels
  Rat leaf_distance(int a, int b) const;
  // tree distance between arbitrary nodes
  Rat node_distance(int u, int v) const;
};

struct StretchViolation {
  int node;
  int child;
  Rat parent_edge;
  Rat child_edge;
};

// Lists every non-root, non-leaf node p with a child edge w(p,i) such that
// W(p) < sigma * w(p,i). Empty result iff the tree is a weighted sigma-HST.
std::vector<StretchViolation> verify_stretch(const WeightedHst& t, const Rat& sigma);

// True if every node's child edges are all equal and shrink by a factor of at
// least sigma along every root-leaf path.
bool is_plain_hst(const WeightedHst& t, const Rat& sigma);

// Samples one tree of the standard random hierarchical decomposition: random
// permutation of the points plus a random dyadic radius scale in [1,2),
// radii growing by powers of sigma. Leaves are exactly the metric points and
// every leaf pair's tree distance dominates its metric distance (exact).
WeightedHst sample_frt_embedding(const FiniteMetric& m, const Rat& sigma, Rng& rng);

// Depth reduction: contracts a parent edge wherever a child subtree holds more
// than half of the current subtree's nodes (strictly; post-order). Output has
// identical leaves, depth <= ceil(log2(node count)), and shrinks any leaf-pair
// distance by a factor of at most 2*sigma/(sigma-1).
WeightedHst contract_to_weighted(const WeightedHst& t, const Rat& sigma);

int ceil_log2(long x);

// Fixture/test helper: builds a plain sigma-HST from a nested leaf partition.
// spec[v] lists children as either leaf labels or sub-partitions.
struct TreeSpec {
  int leaf = -1;
  std::vector<TreeSpec> children;
  static TreeSpec leaf_node(int label) {
    TreeSpec s;
    s.leaf = label;
    return s;
  }
  static TreeSpec internal(std::vector<TreeSpec> ch) {
    TreeSpec s;
    s.children = std::move(ch);
    return s;
  }
};
WeightedHst build_plain_hst(const TreeSpec& spec, const Rat& sigma, const Rat& top_edge);

// Random plain sigma-HST on n leaves (random shape, uniform level edges).
WeightedHst random_plain_hst(int n_leaves, const Rat& sigma, Rng& rng);

}  // namespace klab
