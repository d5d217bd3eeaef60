#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fliplab {

/// Homeomorphism type of a compact orientable marked surface: genus,
/// number of interior marked points, and the number of marked points on
/// each boundary component. Boundary counts are stored sorted, so equality
/// is multiset equality.
///
/// Construction enforces that every boundary component carries at least
/// one marked point and that the total number of marked points is nonzero.
class SurfaceSig {
 public:
  SurfaceSig(int genus, int interior_marks, std::vector<int> boundary_marks = {});

  int genus() const { return genus_; }
  int interior_marks() const { return interior_marks_; }
  const std::vector<int>& boundary_marks() const { return boundary_marks_; }
  int boundary_components() const { return static_cast<int>(boundary_marks_.size()); }
  int total_marks() const;

  /// "S_{g,n}" or "S_{g,n,(p1,...,pb)}" with sorted boundary counts.
  std::string to_string() const;
  static SurfaceSig parse(std::string_view text);

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;

 private:
  int genus_;
  int interior_marks_;
  std::vector<int> boundary_marks_;  // sorted ascending
};

/// Number of arcs in a triangulation: 6g + 3b + 3n + sum(p_i) - 6.
/// May be negative for small signatures; callers decide what to do then.
int complexity(const SurfaceSig& sig);

/// True iff the signatures describe homeomorphic marked surfaces.
bool same_type(const SurfaceSig& a, const SurfaceSig& b);

}  // namespace fliplab
