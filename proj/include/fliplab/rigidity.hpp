#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fliplab/complexes.hpp"

namespace fliplab {

/// Injective partial map on vertices of a complex or graph. Injectivity is
/// enforced at construction.
template <typename V>
class VertexMap {
 public:
  VertexMap() = default;

  explicit VertexMap(std::vector<std::pair<V, V>> pairs) {
    for (auto& [src, dst] : pairs) {
      if (forward_.count(src))
        throw std::invalid_argument("vertex map assigns a source twice");
      if (!image_.insert(dst).second)
        throw std::invalid_argument("vertex map is not injective");
      forward_.emplace(std::move(src), std::move(dst));
    }
  }

  static VertexMap identity(const std::vector<V>& domain) {
    VertexMap m;
    for (const V& v : domain) {
      m.forward_.emplace(v, v);
      m.image_.insert(v);
    }
    return m;
  }

  const V& at(const V& src) const { return forward_.at(src); }
  bool contains(const V& src) const { return forward_.count(src) > 0; }
  bool maps_onto(const V& dst) const { return image_.count(dst) > 0; }
  std::size_t size() const { return forward_.size(); }
  const std::map<V, V>& pairs() const { return forward_; }

  std::vector<V> domain() const {
    std::vector<V> out;
    out.reserve(forward_.size());
    for (const auto& [src, dst] : forward_) out.push_back(src);
    return out;
  }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend bool operator<(const VertexMap& a, const VertexMap& b) {
    return a.forward_ < b.forward_;
  }

 private:
  std::map<V, V> forward_;
  std::set<V> image_;
};

using ArcMap = VertexMap<Arc>;
using TriangulationMap = VertexMap<Triangulation>;

/// True iff the map is defined on exactly the vertices of x, lands in the
/// vertices of target, and sends every maximal simplex of x into some
/// maximal simplex of target (equivalent to sending simplices to
/// simplices). Throws DomainMismatchError when the domain differs from the
/// vertex set of x.
bool is_injective_simplicial(const ArcMap& m, const SimplicialComplex& x,
                             const SimplicialComplex& target);

/// The map on triangulations induced by an arc map: T maps to the set of
/// images of its arcs. Each image is checked to be a triangulation of the
/// target model (ImageNotTriangulationError otherwise) and the result is
/// checked to carry flip edges to flip edges.
TriangulationMap induce_flip_map(const ArcMap& lambda_a, const FlipSubgraph& x_f,
                                 const Model& target_model);

/// Recovers the arc map from a map on triangulations: the image of arc a
/// is read off any edge (T, T') with a in T but not in T', and all
/// witnesses must agree. Throws NoWitnessEdgeError when some arc is never
/// removed along an edge and InconsistentWitnessError when the map is not
/// induced by any arc map.
ArcMap extract_arc_map(const TriangulationMap& lambda_f, const FlipSubgraph& x_f);

/// All injective simplicial maps from x into target, backtracking over
/// vertices in an order that keeps each new vertex highly connected to the
/// already-assigned ones. Deterministic output order.
std::vector<ArcMap> enumerate_injective_simplicial_maps(const SimplicialComplex& x,
                                                        const SimplicialComplex& target);

/// All injective simplicial maps whole -> target restricting to lambda on
/// the subcomplex x.
std::vector<ArcMap> extensions(const ArcMap& lambda, const SimplicialComplex& x,
                               const SimplicialComplex& whole,
                               const SimplicialComplex& target);

struct RigidityRecord {
  ArcMap lambda;
  std::uint64_t extension_count = 0;
  std::vector<ArcMap> extensions;  // retained only when requested
};

struct RigidityReport {
  std::uint64_t lambda_count = 0;
  std::uint64_t unique_count = 0;
  std::uint64_t none_count = 0;
  std::uint64_t multiple_count = 0;
  bool rigid = false;  // every lambda extends in exactly one way
  std::vector<RigidityRecord> details;
};

/// Enumerates every injective simplicial map x -> target and counts the
/// extensions of each to the whole complex.
RigidityReport rigidity_report(const SimplicialComplex& x, const SimplicialComplex& whole,
                               const SimplicialComplex& target,
                               bool keep_extensions = false);

/// All injective graph morphisms whole -> target restricting to lambda on
/// the subgraph x. Flip graphs are read as 1-dimensional complexes, so
/// "simplicial" means vertex-injective and edge-preserving.
std::vector<TriangulationMap> graph_extensions(const TriangulationMap& lambda,
                                               const FlipSubgraph& x,
                                               const FlipSubgraph& whole,
                                               const FlipSubgraph& target);

struct TreeExtensionCount {
  int lambda_count = 1;  // the single lambda tested: the identity
  std::uint64_t extension_count = 0;
  int shell_vertices = 0;  // size of the r-shell of the tree
};

/// Counts injective graph morphisms of the radius-(r+1) ball of the
/// once-punctured-torus flip tree into itself that fix the radius-r ball
/// pointwise. The trivalent tree gives 2^(size of the r-shell) of them,
/// demonstrating non-unique extension.
TreeExtensionCount count_tree_extensions(int r);

}  // namespace fliplab
