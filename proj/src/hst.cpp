#include "klab/hst.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "klab/errors.hpp"

namespace klab {

int WeightedHst::node_depth(int v) const {
  int d = 0;
  while (v != 0) {
    v = nodes[v].parent;
    ++d;
  }
  return d;
}

int WeightedHst::depth() const {
  int best = 0;
  for (int leaf : leaf_node) best = std::max(best, node_depth(leaf));
  return best;
}

std::vector<int> WeightedHst::subtree_node_counts() const {
  std::vector<int> cnt(nodes.size(), 1);
  // children always have larger indices than their parent (construction invariant)
  for (int v = node_count() - 1; v >= 1; --v) cnt[nodes[v].parent] += cnt[v];
  return cnt;
}

std::vector<std::vector<int>> WeightedHst::leaves_under() const {
  std::vector<std::vector<int>> acc(nodes.size());
  for (int v = node_count() - 1; v >= 0; --v) {
    if (is_leaf(v)) acc[v].push_back(nodes[v].leaf_label);
    std::sort(acc[v].begin(), acc[v].end());
    if (v != 0) {
      auto& p = acc[nodes[v].parent];
      p.insert(p.end(), acc[v].begin(), acc[v].end());
    }
  }
  for (auto& l : acc) std::sort(l.begin(), l.end());
  return acc;
}

int WeightedHst::lca(int u, int v) const {
  int du = node_depth(u), dv = node_depth(v);
  while (du > dv) {
    u = nodes[u].parent;
    --du;
  }
  while (dv > du) {
    v = nodes[v].parent;
    --dv;
  }
  while (u != v) {
    u = nodes[u].parent;
    v = nodes[v].parent;
  }
  return u;
}

Rat WeightedHst::node_distance(int u, int v) const {
  int a = lca(u, v);
  Rat d(0);
  for (int x = u; x != a; x = nodes[x].parent) d += nodes[x].parent_edge;
  for (int x = v; x != a; x = nodes[x].parent) d += nodes[x].parent_edge;
  return d;
}

Rat WeightedHst::leaf_distance(int a, int b) const {
  if (a < 0 || a >= leaf_count()) throw UnknownLeaf("label " + std::to_string(a));
  if (b < 0 || b >= leaf_count()) throw UnknownLeaf("label " + std::to_string(b));
  if (a == b) return Rat(0);
  return node_distance(leaf_node[a], leaf_node[b]);
}

std::vector<StretchViolation> verify_stretch(const WeightedHst& t, const Rat& sigma) {
  std::vector<StretchViolation> out;
  for (int v = 1; v < t.node_count(); ++v) {
    if (t.is_leaf(v)) continue;  // condition applies to non-root, non-leaf nodes only
    for (int c : t.nodes[v].children) {
      if (t.nodes[v].parent_edge < sigma * t.nodes[c].parent_edge)
        out.push_back({v, c, t.nodes[v].parent_edge, t.nodes[c].parent_edge});
    }
  }
  return out;
}

bool is_plain_hst(const WeightedHst& t, const Rat& sigma) {
  for (int v = 0; v < t.node_count(); ++v) {
    const auto& ch = t.nodes[v].children;
    for (size_t i = 1; i < ch.size(); ++i)
      if (t.nodes[ch[i]].parent_edge != t.nodes[ch[0]].parent_edge) return false;
    if (v != 0 && !t.is_leaf(v) && !ch.empty()) {
      if (t.nodes[v].parent_edge < sigma * t.nodes[ch[0]].parent_edge) return false;
    }
  }
  return true;
}

int ceil_log2(long x) {
  int r = 0;
  long p = 1;
  while (p < x) {
    p *= 2;
    ++r;
  }
  return r;
}

namespace {

struct Cluster {
  std::vector<int> pts;
  int level;  // leaves at level 0
};

}  // namespace

WeightedHst sample_frt_embedding(const FiniteMetric& m, const Rat& sigma, Rng& rng) {
  if (sigma <= 1) throw Error("sample_frt_embedding: sigma must exceed 1");
  WeightedHst t;
  t.sigma = sigma;
  if (m.n == 1) {
    WeightedHst::Node root;
    root.leaf_label = 0;
    t.nodes.push_back(root);
    t.leaf_node = {0};
    // still consume the sample's randomness so sequences stay aligned
    rng.dyadic_unit(20);
    return t;
  }

  Rat beta = Rat(1) + rng.dyadic_unit(20);  // uniform dyadic in [1,2)
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  Rat dmin = min_distance(m);
  Rat delta = diameter(m);
  Rat r0 = dmin / 2;
  // levels 0..L with radius(l) = beta * sigma^l * r0; level L holds everything
  int L = 1;
  {
    Rat r = sigma * r0;
    while (r < delta) {
      r *= sigma;
      ++L;
    }
  }
  std::vector<Rat> radius(L + 1);
  {
    Rat s(1);
    for (int l = 0; l <= L; ++l) {
      radius[l] = beta * s * r0;
      s *= sigma;
    }
  }
  // edge from a level-(l+1) node down to its level-l child
  std::vector<Rat> edge(L + 1);
  for (int l = 0; l < L; ++l) edge[l] = radius[l + 1];

  t.leaf_node.assign(m.n, -1);
  WeightedHst::Node root;
  t.nodes.push_back(root);

  std::function<void(int, const std::vector<int>&, int)> split =
      [&](int node, const std::vector<int>& pts, int level) {
        if (level == 0) {
          // radius(0) < dmin, so every cluster here is a single point
          for (int label : pts) {
            WeightedHst::Node leaf;
            leaf.parent = node;
            leaf.parent_edge = edge[0];
            leaf.leaf_label = label;
            int id = static_cast<int>(t.nodes.size());
            t.nodes.push_back(leaf);
            t.nodes[node].children.push_back(id);
            t.leaf_node[label] = id;
          }
          return;
        }
        // children: points grouped by their first permutation center within radius(level-1)
        std::map<int, std::vector<int>> groups;  // rank of center -> points
        for (int v : pts) {
          for (int rank = 0; rank < m.n; ++rank) {
            if (m.dist[perm[rank]][v] <= radius[level - 1]) {
              groups[rank].push_back(v);
              break;
            }
          }
        }
        for (auto& [rank, group] : groups) {
          if (static_cast<int>(group.size()) == static_cast<int>(pts.size()) && groups.size() == 1) {
            // cluster unchanged: still emit the chain node so level geometry is uniform
          }
          WeightedHst::Node child;
          child.parent = node;
          child.parent_edge = edge[level - 1];
          int id = static_cast<int>(t.nodes.size());
          t.nodes.push_back(child);
          t.nodes[node].children.push_back(id);
          split(id, group, level - 1);
        }
      };

  std::vector<int> all(m.n);
  std::iota(all.begin(), all.end(), 0);
  split(0, all, L);
  return t;
}

namespace {

// post-order rebuild used by contract_to_weighted; returns new node id
int copy_contracted(const WeightedHst& src, int v, int new_parent, const Rat& edge,
                    WeightedHst& dst, std::vector<int>& subtree_nodes) {
  int id = static_cast<int>(dst.nodes.size());
  WeightedHst::Node node;
  node.parent = new_parent;
  node.parent_edge = edge;
  node.leaf_label = src.nodes[v].leaf_label;
  dst.nodes.push_back(node);
  if (node.leaf_label >= 0) dst.leaf_node[node.leaf_label] = id;

  struct ChildInfo {
    int id;
    int count;
  };
  std::vector<ChildInfo> built;
  int total = 1;
  for (int c : src.nodes[v].children) {
    int cid = copy_contracted(src, c, id, src.nodes[c].parent_edge, dst, subtree_nodes);
    built.push_back({cid, subtree_nodes[cid]});
    total += subtree_nodes[cid];
    dst.nodes[id].children.push_back(cid);
  }
  // contract the edge to a child whose subtree holds strictly more than half
  // of this subtree's nodes (at most one such child can exist)
  for (size_t i = 0; i < built.size(); ++i) {
    if (2 * built[i].count > total) {
      int heavy = built[i].id;
      auto& ch = dst.nodes[id].children;
      ch.erase(std::find(ch.begin(), ch.end(), heavy));
      for (int gc : dst.nodes[heavy].children) {
        dst.nodes[gc].parent = id;
        ch.push_back(gc);
      }
      // keep the heavy node's slot out of the tree: mark dead, compacted later
      dst.nodes[heavy].parent = -2;
      dst.nodes[heavy].children.clear();
      total -= 1;
      break;
    }
  }
  subtree_nodes[id] = total;
  return id;
}

}  // namespace

WeightedHst contract_to_weighted(const WeightedHst& t, const Rat& sigma) {
  if (!is_plain_hst(t, sigma)) throw NotAnHst("contract_to_weighted requires a plain sigma-HST");
  WeightedHst work;
  work.sigma = sigma;
  work.leaf_node.assign(t.leaf_count(), -1);
  std::vector<int> subtree_nodes(2 * t.node_count() + 1, 0);
  work.nodes.reserve(t.node_count());
  copy_contracted(t, 0, -1, Rat(0), work, subtree_nodes);

  // compact away dead slots, renumbering so parents precede children
  std::vector<int> order;
  order.reserve(work.nodes.size());
  std::vector<int> remap(work.nodes.size(), -1);
  std::function<void(int)> walk = [&](int v) {
    remap[v] = static_cast<int>(order.size());
    order.push_back(v);
    for (int c : work.nodes[v].children) walk(c);
  };
  walk(0);

  WeightedHst out;
  out.sigma = sigma;
  out.leaf_node.assign(t.leaf_count(), -1);
  out.nodes.reserve(order.size());
  for (int v : order) {
    WeightedHst::Node n;
    n.parent = work.nodes[v].parent < 0 ? -1 : remap[work.nodes[v].parent];
    n.parent_edge = work.nodes[v].parent_edge;
    n.leaf_label = work.nodes[v].leaf_label;
    for (int c : work.nodes[v].children) n.children.push_back(remap[c]);
    out.nodes.push_back(n);
    if (n.leaf_label >= 0) out.leaf_node[n.leaf_label] = remap[v];
  }
  return out;
}

WeightedHst build_plain_hst(const TreeSpec& spec, const Rat& sigma, const Rat& top_edge) {
  WeightedHst t;
  t.sigma = sigma;
  int max_label = -1;
  std::function<void(const TreeSpec&)> scan = [&](const TreeSpec& s) {
    if (s.leaf >= 0) max_label = std::max(max_label, s.leaf);
    for (const auto& c : s.children) scan(c);
  };
  scan(spec);
  t.leaf_node.assign(max_label + 1, -1);

  std::function<int(const TreeSpec&, int, const Rat&)> build = [&](const TreeSpec& s, int parent,
                                                                   const Rat& edge) {
    WeightedHst::Node n;
    n.parent = parent;
    n.parent_edge = edge;
    n.leaf_label = s.leaf;
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(n);
    if (s.leaf >= 0) t.leaf_node[s.leaf] = id;
    for (const auto& c : s.children) {
      int cid = build(c, id, parent < 0 ? top_edge : edge / sigma);
      t.nodes[id].children.push_back(cid);
    }
    return id;
  };
  build(spec, -1, top_edge);
  for (int l : t.leaf_node)
    if (l < 0) throw Error("build_plain_hst: leaf labels must be 0..max contiguous");
  return t;
}

WeightedHst random_plain_hst(int n_leaves, const Rat& sigma, Rng& rng) {
  // random laminar partition: recursively split label ranges
  std::function<TreeSpec(int, int)> gen = [&](int lo, int hi) -> TreeSpec {
    if (hi - lo == 1) return TreeSpec::leaf_node(lo);
    int span = hi - lo;
    int parts = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(std::min(span - 1, 3))));
    std::vector<int> cuts{lo, hi};
    while (static_cast<int>(cuts.size()) < parts + 1) {
      int c = lo + 1 + static_cast<int>(rng.below(static_cast<uint64_t>(span - 1)));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<TreeSpec> ch;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      TreeSpec sub = gen(cuts[i], cuts[i + 1]);
      // randomly wrap to vary depths
      if (rng.below(3) == 0 && sub.leaf < 0) sub = TreeSpec::internal({sub});
      ch.push_back(std::move(sub));
    }
    return TreeSpec::internal(std::move(ch));
  };
  TreeSpec spec = n_leaves == 1 ? TreeSpec::leaf_node(0) : gen(0, n_leaves);
  // top edge sigma^depth keeps bottom edges at 1
  WeightedHst probe = build_plain_hst(spec, sigma, Rat(1));
  int d = std::max(probe.depth(), 1);
  Rat top(1);
  for (int i = 0; i < d; ++i) top *= sigma;
  return build_plain_hst(spec, sigma, top);
}

}  // namespace klab
