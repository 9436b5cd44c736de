#include <aptile/apcomplex.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace aptile {

namespace {

constexpr std::size_t kTowerCap = 2000000;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  // Maps every element to a dense class id in [0, count), ordered by first
  // occurrence, and returns the class count.
  std::pair<std::vector<std::size_t>, std::size_t> classes() {
    std::vector<std::size_t> id(parent_.size());
    std::map<std::size_t, std::size_t> seen;
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      std::size_t root = find(a);
      auto [it, fresh] = seen.try_emplace(root, seen.size());
      (void)fresh;
      id[a] = it->second;
    }
    return {id, seen.size()};
  }

 private:
  std::vector<std::size_t> parent_;
};

//.tile_lengths / .lambda when the Perron data is exact.
void attach_lengths(APGraph& g) {
  PerronData pd = perron(g.rule);
  if (!pd.exact) return;
  g.tile_lengths = pd.lengths;
  g.lambda = pd.lambda;
}

// Fills vertex_image from the already-built edges and self_map: the tail of
// an edge maps to the tail of its image path, the head to the head.  The
// substitution preserves adjacency, so the assignments of different edges
// agree on shared vertices; a conflict would mean the construction is wrong.
void attach_vertex_image(APGraph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.vertex_image.assign(g.vertex_count, kUnset);
  auto assign = [&](std::size_t v, std::size_t image) {
    if (g.vertex_image[v] == kUnset) {
      g.vertex_image[v] = image;
    } else if (g.vertex_image[v] != image) {
      throw std::logic_error("approximant graph: vertex image is not well defined");
    }
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::vector<std::size_t>& path = g.self_map[e];
    if (path.empty()) throw std::logic_error("approximant graph: empty image path");
    assign(g.edges[e].tail, g.edges[path.front()].tail);
    assign(g.edges[e].head, g.edges[path.back()].head);
  }
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (g.vertex_image[v] == kUnset)
      throw std::logic_error("approximant graph: isolated vertex class");
  }
}

}  // namespace

QuadraticNumber APGraph::edge_length(std::size_t e) const {
  const APEdge& edge = edges.at(e);
  if (tile_lengths.empty())
    throw std::domain_error("edge lengths are not exactly representable for this rule");
  return tile_lengths.at(static_cast<std::size_t>(edge.label.core));
}

std::set<std::vector<int>> two_factors(const SubstitutionRule& rule, std::size_t n) {
  return language_factors(rule, n);
}

APGraph build_uncollared(const SubstitutionRule& rule) {
  std::set<std::vector<int>> adj = two_factors(rule, 2);
  const std::size_t k = rule.letters();

  // Atom 2a is the tail (left border) of tile a, atom 2a+1 its head.
  UnionFind uf(2 * k);
  for (const std::vector<int>& f : adj) {
    uf.unite(2 * static_cast<std::size_t>(f[0]) + 1, 2 * static_cast<std::size_t>(f[1]));
  }
  auto [cls, count] = uf.classes();

  APGraph g;
  g.rule = rule;
  g.collared = false;
  g.vertex_count = count;
  for (std::size_t a = 0; a < k; ++a) {
    APEdge e;
    e.tail = cls[2 * a];
    e.head = cls[2 * a + 1];
    e.label = CollaredTile{-1, static_cast<int>(a), -1};
    g.edges.push_back(e);
  }
  g.self_map.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (int letter : rule.images[a]) g.self_map[a].push_back(static_cast<std::size_t>(letter));
  }
  attach_vertex_image(g);
  attach_lengths(g);
  return g;
}

APGraph build_collared(const SubstitutionRule& rule) {
  std::set<std::vector<int>> f3 = two_factors(rule, 3);
  std::set<std::vector<int>> f4 = two_factors(rule, 4);

  std::vector<CollaredTile> tiles;
  std::map<CollaredTile, std::size_t> index;
  for (const std::vector<int>& f : f3) {
    CollaredTile t{f[0], f[1], f[2]};
    index.emplace(t, tiles.size());
    tiles.push_back(t);
  }

  // A four-letter factor wxyz witnesses the collared tiles (w,x,y), (x,y,z)
  // lying side by side, gluing the head of the first to the tail of the
  // second.
  UnionFind uf(2 * tiles.size());
  for (const std::vector<int>& f : f4) {
    std::size_t first = index.at(CollaredTile{f[0], f[1], f[2]});
    std::size_t second = index.at(CollaredTile{f[1], f[2], f[3]});
    uf.unite(2 * first + 1, 2 * second);
  }
  auto [cls, count] = uf.classes();

  APGraph g;
  g.rule = rule;
  g.collared = true;
  g.vertex_count = count;
  for (std::size_t e = 0; e < tiles.size(); ++e) {
    APEdge edge;
    edge.tail = cls[2 * e];
    edge.head = cls[2 * e + 1];
    edge.label = tiles[e];
    g.edges.push_back(edge);
  }

  // Image path of (l, c, r): the tiles of the image of c, each collared by
  // its neighbors inside the image of l|c|r.
  g.self_map.resize(tiles.size());
  for (std::size_t e = 0; e < tiles.size(); ++e) {
    const CollaredTile& t = tiles[e];
    const std::vector<int>& wl = rule.images[static_cast<std::size_t>(t.left)];
    const std::vector<int>& wc = rule.images[static_cast<std::size_t>(t.core)];
    const std::vector<int>& wr = rule.images[static_cast<std::size_t>(t.right)];
    for (std::size_t i = 0; i < wc.size(); ++i) {
      int prev = i == 0 ? wl.back() : wc[i - 1];
      int next = i + 1 == wc.size() ? wr.front() : wc[i + 1];
      auto it = index.find(CollaredTile{prev, wc[i], next});
      if (it == index.end())
        throw std::logic_error("approximant graph: image collar is not a legal factor");
      g.self_map[e].push_back(it->second);
    }
  }
  attach_vertex_image(g);
  attach_lengths(g);
  return g;
}

long betti1(const APGraph& g) {
  UnionFind uf(g.vertex_count);
  for (const APEdge& e : g.edges) uf.unite(e.tail, e.head);
  std::size_t components = uf.classes().second;
  return static_cast<long>(g.edges.size()) - static_cast<long>(g.vertex_count) +
         static_cast<long>(components);
}

ApproximantTower approximant_tower(const APGraph& g, std::size_t n) {
  if (n > 0 && (g.self_map.size() != g.edges.size() || g.vertex_image.size() != g.vertex_count))
    throw std::invalid_argument("approximant tower requires a graph with a self-map");
  ApproximantTower tower;
  tower.graph = g;
  tower.depth = n;
  tower.paths.resize(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) tower.paths[e] = {e};

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::vector<std::size_t>> next(g.edges.size());
    std::size_t total = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      for (std::size_t f : g.self_map[e]) {
        next[e].insert(next[e].end(), tower.paths[f].begin(), tower.paths[f].end());
      }
      total += next[e].size();
      if (total > kTowerCap)
        throw std::overflow_error("approximant tower exceeds the composed-path cap");
    }
    tower.paths = std::move(next);
  }

  // Certify the tower: continuity, endpoint classes, and exact length scaling.
  std::vector<std::size_t> vimage(g.vertex_count);
  std::iota(vimage.begin(), vimage.end(), std::size_t{0});
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t v = 0; v < g.vertex_count; ++v) vimage[v] = g.vertex_image[vimage[v]];
  }
  std::optional<QuadraticNumber> scale;
  if (g.lambda) {
    QuadraticNumber pow(1);
    for (std::size_t step = 0; step < n; ++step) pow = pow * *g.lambda;
    scale = pow;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::vector<std::size_t>& path = tower.paths[e];
    if (path.empty()) throw std::logic_error("approximant tower: empty image path");
    if (g.edges[path.front()].tail != vimage[g.edges[e].tail] ||
        g.edges[path.back()].head != vimage[g.edges[e].head])
      throw std::logic_error("approximant tower: path endpoints disagree with vertex images");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.edges[path[i]].head != g.edges[path[i + 1]].tail)
        throw std::logic_error("approximant tower: image path is not continuous");
    }
    if (scale) {
      QuadraticNumber total(0);
      for (std::size_t f : path) total += g.edge_length(f);
      if (total != *scale * g.edge_length(e))
        throw std::logic_error("approximant tower: image length does not scale exactly");
    }
  }
  return tower;
}

}  // namespace aptile
