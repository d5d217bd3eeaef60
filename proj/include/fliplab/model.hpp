#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fliplab/arc.hpp"
#include "fliplab/surface.hpp"

namespace fliplab {

enum class ModelKind : std::uint8_t { Polygon, PuncturedPolygon, OncePuncturedTorus };

class Triangulation;

/// One of the three exactly computable arc models: the disk with n
/// boundary marked points, the once-punctured disk, and the once-punctured
/// torus. Arcs, disjointness, triangulations, faces and flips are all
/// decided combinatorially and exactly.
class Model {
 public:
  static Model polygon(int sides);            // n >= 4
  static Model punctured_polygon(int sides);  // n >= 3
  static Model once_punctured_torus();

  ModelKind kind() const { return kind_; }
  /// Boundary marked points; 0 for the torus.
  int sides() const { return sides_; }
  SurfaceSig surface() const;
  int complexity() const;

  /// "polygon:N", "ppolygon:N" or "torus".
  std::string spec_string() const;
  static Model parse_spec(std::string_view text);

  bool owns_arc(const Arc& a) const;
  /// Throws ModelMismatchError unless the arc is a canonical essential arc
  /// of this model.
  void require_arc(const Arc& a) const;

  /// Every essential arc, sorted. Throws UnboundedError on the torus.
  std::vector<Arc> all_arcs() const;

  /// Whether the two isotopy classes have representatives with disjoint
  /// interiors. Shared marked endpoints do not count as intersection, and
  /// an arc is disjoint from itself.
  bool disjoint(const Arc& a, const Arc& b) const;

  /// Pairwise disjoint, of full size, and maximal. Maximality is
  /// re-verified directly, not inferred from the arc count.
  bool is_triangulation(const std::vector<Arc>& arcs) const;

  Triangulation base_triangulation() const;

  friend auto operator<=>(const Model&, const Model&) = default;

 private:
  Model(ModelKind kind, int sides) : kind_(kind), sides_(sides) {}

  ModelKind kind_;
  int sides_;
};

/// Side of a triangle lying on the boundary: the segment from vertex
/// `start` to `start + 1 (mod n)`.
struct BoundarySegment {
  int start = 0;
  friend auto operator<=>(const BoundarySegment&, const BoundarySegment&) = default;
};

using FaceSide = std::variant<Arc, BoundarySegment>;

std::string to_string(const FaceSide& side);

/// One triangle of the decomposition induced by a triangulation. A face is
/// self-folded when one arc occurs as two of its sides; that arc is the
/// inner arc and the remaining side the outer arc.
struct Face {
  std::array<FaceSide, 3> sides{};  // sorted
  bool self_folded = false;

  int side_multiplicity(const Arc& a) const;
  bool has_side(const Arc& a) const { return side_multiplicity(a) > 0; }
  Arc folded_inner() const;  // requires self_folded
  Arc folded_outer() const;  // requires self_folded
};

/// A maximal set of pairwise disjoint essential arcs: a vertex of the flip
/// graph and a top-dimensional simplex of the arc complex. Validated fully
/// at construction.
class Triangulation {
 public:
  Triangulation(Model model, std::vector<Arc> arcs);

  const Model& model() const { return model_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  bool contains(const Arc& a) const;

  /// The triangle decomposition. Every arc occurs on exactly two
  /// face-side slots (twice in one face when self-folded).
  std::vector<Face> faces() const;

  /// True iff the two face-side slots of the arc lie in distinct faces.
  bool flippable(const Arc& a) const;
  std::vector<Arc> flippable_arcs() const;

  /// Replace the arc by the unique other diagonal of the quadrilateral
  /// formed by its two adjacent faces. Returns the new triangulation and
  /// the new arc.
  std::pair<Triangulation, Arc> flip(const Arc& a) const;

  /// Sorted arcs joined with commas, e.g. "C(0,2),C(0,3)".
  std::string to_string() const;
  static Triangulation parse(const Model& model, std::string_view text);

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  Model model_;
  std::vector<Arc> arcs_;  // sorted canonical
};

}  // namespace fliplab
