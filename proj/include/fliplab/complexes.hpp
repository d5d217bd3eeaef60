#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fliplab/model.hpp"

namespace fliplab {

/// A simplex of the arc complex: a sorted set of pairwise disjoint arcs.
using Simplex = std::vector<Arc>;

/// Dual simplex of a triangulation: the top-dimensional simplex of the arc
/// complex spanned by its arcs.
Simplex pi(const Triangulation& t);

struct FlipEdge {
  int u = 0;  // vertex indices, u < v
  int v = 0;
  std::optional<Arc> only_in_u;  // the arc removed when flipping u into v
  std::optional<Arc> only_in_v;
};

/// A subgraph of the flip graph: triangulations as vertices, flips as
/// edges. Built either by breadth-first exploration around a center (with
/// per-vertex distances recorded), by exhaustive enumeration on the finite
/// models, or from raw parts for adversarial inputs.
class FlipSubgraph {
 public:
  static FlipSubgraph ball(const Model& model, const Triangulation& center, int radius);
  static FlipSubgraph full(const Model& model);  // UnboundedError on the torus
  static FlipSubgraph from_parts(Model model, std::vector<Triangulation> vertices,
                                 std::vector<std::pair<int, int>> edges);

  const Model& model() const { return model_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Triangulation>& vertices() const { return vertices_; }
  const Triangulation& vertex(int idx) const { return vertices_.at(idx); }
  std::optional<int> index_of(const Triangulation& t) const;
  const std::vector<FlipEdge>& edges() const { return edges_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<int>& neighbors(int idx) const { return adjacency_.at(idx); }
  int degree(int idx) const { return static_cast<int>(adjacency_.at(idx).size()); }
  bool has_edge(int u, int v) const;

  bool built_as_ball() const { return center_.has_value(); }
  int center_index() const;
  int radius() const;
  /// Distance from the ball center (balls only).
  int distance_from_center(int idx) const;
  /// Vertex indices at distance exactly k from the ball center.
  std::vector<int> shell(int k) const;

  /// BFS distances inside this subgraph; -1 for unreachable vertices.
  std::vector<int> distances_from(int idx) const;
  bool connected() const;

 private:
  explicit FlipSubgraph(Model model) : model_(std::move(model)) {}
  int add_vertex(const Triangulation& t);
  void add_edge(int u, int v, const Arc& only_in_u, const Arc& only_in_v);
  void finalize();

  Model model_;
  std::vector<Triangulation> vertices_;
  std::vector<FlipEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::string, int> index_;
  std::optional<int> center_;
  std::optional<int> radius_;
  std::vector<int> distance_;
};

/// Arc complex or a subcomplex of it: vertices plus maximal simplices.
/// Construction sorts, deduplicates, prunes contained simplices and checks
/// that every simplex is pairwise disjoint in the model.
class SimplicialComplex {
 public:
  SimplicialComplex(Model model, std::vector<Simplex> maximal_simplices);

  const Model& model() const { return model_; }
  const std::vector<Arc>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  int dimension() const;

  bool has_vertex(const Arc& a) const;
  /// True iff the (sorted) arc set is contained in some maximal simplex.
  bool contains_simplex(const Simplex& s) const;
  bool is_subcomplex_of(const SimplicialComplex& whole) const;
  /// Number of input simplices dropped by containment pruning.
  int pruned_count() const { return pruned_; }

 private:
  Model model_;
  std::vector<Simplex> maximal_;
  std::vector<Arc> vertices_;
  int pruned_ = 0;
};

/// Union of the dual simplices of the subgraph's vertices. None of them is
/// contained in another (they are distinct and top-dimensional), which is
/// asserted.
SimplicialComplex dual_subcomplex(const FlipSubgraph& x_f);

/// The full arc complex of a finite model; its maximal simplices are
/// exactly the triangulations.
SimplicialComplex full_arc_complex(const Model& model);

struct DualityViolation {
  int u = 0;
  int v = 0;
  int shared_arcs = 0;
  bool edge_present = false;
};

struct DualityReport {
  long long pairs_checked = 0;
  std::vector<DualityViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For every vertex pair, checks that being a flip edge, sharing all arcs
/// but one, and the dual simplices meeting in a codimension-one face of
/// each are all equivalent.
DualityReport check_duality(const FlipSubgraph& x_f);

/// Intersection of the arc sets of all vertices at distance <= r from the
/// center. Throws BallNotContainedError when the r-ball around the center
/// is not fully inside the subgraph.
std::vector<Arc> ball_common_arcs(const FlipSubgraph& x_f, const Triangulation& center,
                                  int r);

/// For an unflippable arc a: returns (b, a) where b is the outer arc of
/// the folded triangle with inner arc a. Flipping b and then a is executed
/// and checked to land on a triangulation at distance two that no longer
/// contains a.
std::pair<Arc, Arc> unflippable_witness(const Triangulation& t, const Arc& a);

}  // namespace fliplab
