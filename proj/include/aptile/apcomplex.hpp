#pragma once

#include <aptile/quadratic.hpp>
#include <aptile/substitution.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace aptile {

// A prototile together with one tile of context on each side.  Uncollared
// graphs use left = right = -1.  The word left|core|right of a collared tile
// always occurs in the substitution language.
struct CollaredTile {
  int left = -1;
  int core = 0;
  int right = -1;
  friend auto operator<=>(const CollaredTile&, const CollaredTile&) = default;
};

// Directed edge of an approximant graph; tail/head are vertex class ids.
struct APEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  CollaredTile label;
  friend bool operator==(const APEdge&, const APEdge&) = default;
};

// The approximant graph of a substitution: one directed edge per (collared)
// prototile, an endpoint vertex class per batch of tile borders that may meet,
// and the substitution-induced self-map sending each edge to the edge path
// traced by its image.  The inverse-limit tower is carried by this single
// pair (graph, self-map): every deeper approximant is the same graph with the
// iterated map (see approximant_tower), so nothing else is materialized.
struct APGraph {
  SubstitutionRule rule;
  bool collared = false;
  std::size_t vertex_count = 0;
  std::vector<APEdge> edges;
  // self_map[e] = indices of the edges crossed by the image of edge e, in
  // order; consecutive path edges share a vertex.
  std::vector<std::vector<std::size_t>> self_map;
  // Image of each vertex class under the self-map (well defined because the
  // substitution preserves adjacency).
  std::vector<std::size_t> vertex_image;
  // Natural tile lengths per prototile (left Perron eigenvector, normalized
  // to lengths[0] = 1) and the expansion factor, exact in the quadratic
  // field.  Empty/nullopt when the alphabet is too large for exact data.
  std::vector<QuadraticNumber> tile_lengths;
  std::optional<QuadraticNumber> lambda;

  // Length of the core tile of edge e; throws std::domain_error when exact
  // lengths are unavailable and std::out_of_range on a bad index.
  QuadraticNumber edge_length(std::size_t e) const;
};

// All length-n factors of the substitution language; the adjacency data the
// graph constructions below consume.  Requires a primitive, expanding rule.
std::set<std::vector<int>> two_factors(const SubstitutionRule& rule, std::size_t n);

// One edge per prototile; head(a) is glued to tail(b) exactly when ab is a
// legal two-letter factor.  Requires a primitive, expanding rule.
APGraph build_uncollared(const SubstitutionRule& rule);

// One edge per collared tile (legal three-letter factor); gluings come from
// the legal four-letter factors, and the self-map collars each image tile
// inside the image of the original collar.  Requires a primitive, expanding
// rule.
APGraph build_collared(const SubstitutionRule& rule);

// First Betti number: edges - vertices + connected components.
long betti1(const APGraph& g);

// The depth-n approximant of the tower over g: the same graph with the
// self-map composed n times.  paths[e] lists the level-n image path of edge
// e; n = 0 gives singleton paths.
struct ApproximantTower {
  APGraph graph;
  std::size_t depth = 0;
  std::vector<std::vector<std::size_t>> paths;
};

// Composes the self-map n times and certifies the result: each path is
// continuous, joins the n-fold vertex images of its edge's endpoints, and -
// when exact lengths are available - has total length lambda^n times the
// edge's length.  Throws std::overflow_error when the composed paths exceed
// an internal size cap.
ApproximantTower approximant_tower(const APGraph& g, std::size_t n);

}  // namespace aptile
