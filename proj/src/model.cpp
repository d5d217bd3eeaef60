#include "fliplab/model.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fliplab/errors.hpp"

namespace fliplab {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

/// x lies strictly inside the counterclockwise open interval (lo, hi) mod m.
bool strictly_between(int x, int lo, int hi, int m) {
  if (x == lo || x == hi) return false;
  int span = mod(hi - lo, m);
  int off = mod(x - lo, m);
  return off > 0 && off < span;
}

/// Chords {a,b} and {c,d} of an m-gon cross iff their endpoints strictly
/// interleave. Shared endpoints never count as a crossing.
bool chords_interleave(int a, int b, int c, int d, int m) {
  if (a == c || a == d || b == c || b == d) return false;
  return strictly_between(c, a, b, m) != strictly_between(d, a, b, m);
}

long long slope_det(const Arc& a, const Arc& b) {
  return a.p() * b.q() - a.q() * b.p();
}

// ---------------------------------------------------------------------------
// Punctured polygon: the double cover picture.
//
// The once-punctured n-gon lifts to a 2n-gon branched over the puncture; the
// branch point O sits at the center. Every arc lifts to curves that are
// straight in the cover:
//   - a boundary-to-boundary arc lifts to two antipodal plain chords,
//   - a radial lifts to the two half-diameters from i and i+n to O,
//   - a loop lifts to the two pushoffs of the diameter (i, i+n), one on
//     each side of O.
// Two arcs are disjoint exactly when no pair of their lifts crosses away
// from shared polygon vertices and O. All tests below are pure endpoint
// combinatorics on the 2n-gon.
// ---------------------------------------------------------------------------

struct Lift {
  enum class Type { Chord, Half, Push };
  Type type = Type::Chord;
  int a = 0;     // Chord: one endpoint; Half: rim endpoint; Push: base vertex < n
  int b = 0;     // Chord: other endpoint; Push: a + n
  int side = 0;  // Push only: +1 detours left of the a -> a+n walk, -1 right
};

int lifts_of(const Arc& arc, int n, Lift out[2]) {
  const int two_n = 2 * n;
  switch (arc.kind()) {
    case Arc::Kind::PChord: {
      int i = arc.i(), j = arc.j();
      if (arc.side() == 1) {
        // puncture-free region runs i -> j counterclockwise
        out[0] = {Lift::Type::Chord, i, j, 0};
        out[1] = {Lift::Type::Chord, i + n, j + n, 0};
      } else {
        out[0] = {Lift::Type::Chord, j, i + n, 0};
        out[1] = {Lift::Type::Chord, (j + n) % two_n, i, 0};
      }
      return 2;
    }
    case Arc::Kind::Radial:
      out[0] = {Lift::Type::Half, arc.vertex(), 0, 0};
      out[1] = {Lift::Type::Half, arc.vertex() + n, 0, 0};
      return 2;
    case Arc::Kind::Loop:
      out[0] = {Lift::Type::Push, arc.vertex(), arc.vertex() + n, +1};
      out[1] = {Lift::Type::Push, arc.vertex(), arc.vertex() + n, -1};
      return 2;
    default:
      throw std::logic_error("lift of a non punctured-polygon arc");
  }
}

/// Half-diameter from rim vertex u to O versus a plain chord: they cross
/// iff u sits on the chord's center-free side (the shorter interval).
bool cross_chord_half(const Lift& c, int u, int n) {
  const int two_n = 2 * n;
  if (u == c.a || u == c.b) return false;
  int span = mod(c.b - c.a, two_n);
  if (span < n) return strictly_between(u, c.a, c.b, two_n);
  if (span > n) return strictly_between(u, c.b, c.a, two_n);
  throw std::logic_error("plain chord through the cover center");
}

/// Half-diameter versus a pushed-off diameter: they cross iff the rim
/// endpoint lies on the detour side.
bool cross_half_push(int u, const Lift& p, int n) {
  const int two_n = 2 * n;
  if (u == p.a || u == p.b) return false;
  return p.side > 0 ? strictly_between(u, p.b, p.a, two_n)
                    : strictly_between(u, p.a, p.b, two_n);
}

bool lifts_cross(const Lift& x, const Lift& y, int n) {
  const int two_n = 2 * n;
  using T = Lift::Type;
  switch (x.type) {
    case T::Chord:
      switch (y.type) {
        case T::Chord:
          return chords_interleave(x.a, x.b, y.a, y.b, two_n);
        case T::Half:
          return cross_chord_half(x, y.a, n);
        case T::Push:
          return chords_interleave(x.a, x.b, y.a, y.b, two_n);
      }
      break;
    case T::Half:
      switch (y.type) {
        case T::Chord:
          return cross_chord_half(y, x.a, n);
        case T::Half:
          return false;  // half-diameters meet only at the puncture
        case T::Push:
          return cross_half_push(x.a, y, n);
      }
      break;
    case T::Push:
      switch (y.type) {
        case T::Chord:
          return chords_interleave(y.a, y.b, x.a, x.b, two_n);
        case T::Half:
          return cross_half_push(y.a, x, n);
        case T::Push:
          // the two lifts of one loop share endpoints and opposite sides
          return x.a != y.a;
      }
      break;
  }
  return false;
}

bool ppoly_disjoint(const Arc& a, const Arc& b, int n) {
  if (a == b) return true;
  Lift la[2], lb[2];
  int ca = lifts_of(a, n, la);
  int cb = lifts_of(b, n, lb);
  for (int i = 0; i < ca; ++i)
    for (int j = 0; j < cb; ++j)
      if (lifts_cross(la[i], lb[j], n)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Face extraction for the punctured polygon: trace faces of the lifted
// triangulation in the 2n-gon via a rotation system, drop the outer face,
// and project antipodal face pairs down to base triangles.
// ---------------------------------------------------------------------------

struct CoverEdge {
  enum class T { Chord, Half, Push, Boundary };
  T t = T::Boundary;
  int ep0 = 0;  // O is vertex id 2n
  int ep1 = 0;
  int side = 0;
  int base_arc = -1;  // index into the triangulation's arcs; -1 for boundary
};

using CoverKey = std::tuple<int, int, int, int>;

CoverKey key_of(const CoverEdge& e) {
  return {static_cast<int>(e.t), e.ep0, e.ep1, e.side};
}

CoverEdge sigma_image(const CoverEdge& e, int n) {
  const int two_n = 2 * n;
  CoverEdge out = e;
  switch (e.t) {
    case CoverEdge::T::Chord: {
      int a = (e.ep0 + n) % two_n, b = (e.ep1 + n) % two_n;
      out.ep0 = std::min(a, b);
      out.ep1 = std::max(a, b);
      break;
    }
    case CoverEdge::T::Half:
      out.ep0 = (e.ep0 + n) % two_n;
      break;
    case CoverEdge::T::Push:
      out.side = -e.side;  // the antipodal map flips the detour side
      break;
    case CoverEdge::T::Boundary:
      out.ep0 = (e.ep0 + n) % two_n;
      out.ep1 = (out.ep0 + 1) % two_n;
      break;
  }
  return out;
}

std::vector<Face> ppoly_faces(int n, const std::vector<Arc>& arcs) {
  const int two_n = 2 * n;
  const int O = two_n;

  std::vector<CoverEdge> edges;
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
    Lift l[2];
    int c = lifts_of(arcs[k], n, l);
    for (int t = 0; t < c; ++t) {
      CoverEdge e;
      e.base_arc = k;
      switch (l[t].type) {
        case Lift::Type::Chord:
          e.t = CoverEdge::T::Chord;
          e.ep0 = std::min(l[t].a % two_n, l[t].b % two_n);
          e.ep1 = std::max(l[t].a % two_n, l[t].b % two_n);
          break;
        case Lift::Type::Half:
          e.t = CoverEdge::T::Half;
          e.ep0 = l[t].a;
          e.ep1 = O;
          break;
        case Lift::Type::Push:
          e.t = CoverEdge::T::Push;
          e.ep0 = l[t].a;
          e.ep1 = l[t].b;
          e.side = l[t].side;
          break;
      }
      edges.push_back(e);
    }
  }
  for (int v = 0; v < two_n; ++v)
    edges.push_back({CoverEdge::T::Boundary, v, (v + 1) % two_n, 0, -1});

  // rotation system: ends sorted counterclockwise at every cover vertex
  struct End {
    int edge;
    int slot;  // 0 at ep0
  };
  std::vector<std::vector<End>> rotation(two_n + 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rotation[edges[e].ep0].push_back({e, 0});
    rotation[edges[e].ep1].push_back({e, 1});
  }
  auto sort_key = [&](int v, const End& end) -> std::pair<int, int> {
    const CoverEdge& e = edges[end.edge];
    if (v == O) return {e.ep0, 0};  // only half-diameters reach O
    int other = end.slot == 0 ? e.ep1 : e.ep0;
    if (other == O) return {n, 0};
    int step = mod(other - v, two_n);
    int tie = 0;
    // a pushoff leaves its endpoint slightly toward its detour side
    if (e.t == CoverEdge::T::Push) tie = end.slot == 0 ? e.side : -e.side;
    return {step, tie};
  };
  std::vector<std::map<std::pair<int, int>, int>> position(edges.size());
  for (int v = 0; v <= two_n; ++v) {
    auto& ends = rotation[v];
    std::sort(ends.begin(), ends.end(), [&](const End& l, const End& r) {
      return sort_key(v, l) < sort_key(v, r);
    });
  }
  // position of each end inside its vertex's rotation
  std::vector<std::array<std::pair<int, int>, 2>> end_pos(edges.size());
  for (int v = 0; v <= two_n; ++v)
    for (int idx = 0; idx < static_cast<int>(rotation[v].size()); ++idx) {
      const End& end = rotation[v][idx];
      end_pos[end.edge][end.slot] = {v, idx};
    }

  // halfedge h = 2*edge + dir; dir 0 travels ep0 -> ep1.
  auto next_halfedge = [&](int h) {
    int e = h / 2, dir = h % 2;
    int head_slot = dir == 0 ? 1 : 0;
    auto [v, idx] = end_pos[e][head_slot];
    const auto& ends = rotation[v];
    const End& out = ends[(idx - 1 + ends.size()) % ends.size()];
    // leaving v: slot 0 means travelling ep0 -> ep1
    return 2 * out.edge + (out.slot == 0 ? 0 : 1);
  };

  const int half_count = 2 * static_cast<int>(edges.size());
  std::vector<int> orbit_of(half_count, -1);
  std::vector<std::vector<int>> orbits;
  for (int h = 0; h < half_count; ++h) {
    if (orbit_of[h] >= 0) continue;
    std::vector<int> orbit;
    int cur = h;
    while (orbit_of[cur] < 0) {
      orbit_of[cur] = static_cast<int>(orbits.size());
      orbit.push_back(cur);
      cur = next_halfedge(cur);
    }
    if (cur != h) throw std::logic_error("face tracing produced a non-closed orbit");
    orbits.push_back(std::move(orbit));
  }

  // the outer face is traced along the boundary clockwise; find it via the
  // reversed halfedge of boundary segment (0, 1)
  int boundary01 = -1;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].t == CoverEdge::T::Boundary && edges[e].ep0 == 0) boundary01 = e;
  const int outer = orbit_of[2 * boundary01 + 1];

  std::map<CoverKey, int> index_by_key;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    index_by_key[key_of(edges[e])] = e;

  std::vector<std::vector<int>> cover_faces;
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    if (o == outer) continue;
    if (orbits[o].size() != 3)
      throw std::logic_error("interior cover face is not a triangle");
    std::vector<int> ids;
    for (int h : orbits[o]) ids.push_back(h / 2);
    std::sort(ids.begin(), ids.end());
    cover_faces.push_back(std::move(ids));
  }

  // pair each face with its antipodal image and emit one base face per pair
  std::set<std::vector<int>> face_set(cover_faces.begin(), cover_faces.end());
  std::vector<Face> result;
  for (const auto& f : cover_faces) {
    std::vector<int> img;
    for (int e : f) img.push_back(index_by_key.at(key_of(sigma_image(edges[e], n))));
    std::sort(img.begin(), img.end());
    if (!face_set.count(img) || img == f)
      throw std::logic_error("cover faces do not pair under the deck map");
    if (f > img) continue;  // keep one representative per pair

    Face face;
    for (int s = 0; s < 3; ++s) {
      const CoverEdge& e = edges[f[s]];
      if (e.t == CoverEdge::T::Boundary)
        face.sides[s] = BoundarySegment{e.ep0 % n};
      else
        face.sides[s] = arcs[e.base_arc];
    }
    std::sort(face.sides.begin(), face.sides.end());
    face.self_folded = face.sides[0] == face.sides[1] || face.sides[1] == face.sides[2];
    result.push_back(face);
  }
  if (2 * result.size() != cover_faces.size())
    throw std::logic_error("cover face pairing lost faces");
  return result;
}

// ---------------------------------------------------------------------------
// Polygon faces: the faces of a polygon triangulation are exactly the
// 3-cliques of its segment set (chords plus boundary edges), since all
// vertices lie in convex position.
// ---------------------------------------------------------------------------

std::vector<Face> polygon_faces(int n, const std::vector<Arc>& arcs) {
  std::set<std::pair<int, int>> segs;
  for (int v = 0; v < n; ++v)
    segs.insert(std::minmax(v, (v + 1) % n));
  for (const Arc& a : arcs) segs.insert({a.i(), a.j()});

  auto side_of = [&](int u, int v) -> FaceSide {
    if (v - u == 1) return BoundarySegment{u};
    if (u == 0 && v == n - 1) return BoundarySegment{n - 1};
    return Arc::chord(u, v);
  };

  std::vector<Face> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!segs.count({i, j})) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!segs.count({j, k}) || !segs.count({i, k})) continue;
        Face f;
        f.sides = {side_of(i, j), side_of(j, k), side_of(i, k)};
        std::sort(f.sides.begin(), f.sides.end());
        f.self_folded = false;
        out.push_back(f);
      }
    }
  return out;
}

std::vector<Face> torus_faces(const std::vector<Arc>& arcs) {
  // an ideal triangulation of the once-punctured torus has two triangles,
  // each bounded by all three arcs
  Face f;
  f.sides = {arcs[0], arcs[1], arcs[2]};
  std::sort(f.sides.begin(), f.sides.end());
  f.self_folded = false;
  return {f, f};
}

std::string kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Polygon:
      return "polygon";
    case ModelKind::PuncturedPolygon:
      return "ppolygon";
    case ModelKind::OncePuncturedTorus:
      return "torus";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Model
// ---------------------------------------------------------------------------

Model Model::polygon(int sides) {
  if (sides < 4) throw std::invalid_argument("polygon model needs at least 4 vertices");
  return Model(ModelKind::Polygon, sides);
}

Model Model::punctured_polygon(int sides) {
  if (sides < 3)
    throw std::invalid_argument("punctured polygon model needs at least 3 vertices");
  return Model(ModelKind::PuncturedPolygon, sides);
}

Model Model::once_punctured_torus() { return Model(ModelKind::OncePuncturedTorus, 0); }

SurfaceSig Model::surface() const {
  switch (kind_) {
    case ModelKind::Polygon:
      return SurfaceSig(0, 0, {sides_});
    case ModelKind::PuncturedPolygon:
      return SurfaceSig(0, 1, {sides_});
    case ModelKind::OncePuncturedTorus:
      return SurfaceSig(1, 1, {});
  }
  throw std::logic_error("unknown model kind");
}

int Model::complexity() const { return fliplab::complexity(surface()); }

std::string Model::spec_string() const {
  if (kind_ == ModelKind::OncePuncturedTorus) return "torus";
  return kind_name(kind_) + ":" + std::to_string(sides_);
}

Model Model::parse_spec(std::string_view text) {
  if (text == "torus") return once_punctured_torus();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view name = text.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(std::string(text.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad vertex count in model spec: '" + std::string(text) + "'");
    }
    try {
      if (name == "polygon") return polygon(n);
      if (name == "ppolygon") return punctured_polygon(n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid model spec: ") + e.what());
    }
  }
  throw ParseError("model spec must be polygon:N, ppolygon:N or torus, got '" +
                   std::string(text) + "'");
}

bool Model::owns_arc(const Arc& a) const {
  switch (kind_) {
    case ModelKind::Polygon: {
      if (a.kind() != Arc::Kind::Chord) return false;
      int i = a.i(), j = a.j();
      if (i < 0 || j >= sides_) return false;
      return j - i >= 2 && !(i == 0 && j == sides_ - 1);
    }
    case ModelKind::PuncturedPolygon: {
      switch (a.kind()) {
        case Arc::Kind::Radial:
        case Arc::Kind::Loop:
          return a.vertex() >= 0 && a.vertex() < sides_;
        case Arc::Kind::PChord: {
          int i = a.i(), j = a.j();
          if (i < 0 || j >= sides_) return false;
          // the puncture-free region must contain a boundary vertex
          int free_size = a.side() == 1 ? j - i - 1 : sides_ - (j - i) - 1;
          return free_size >= 1;
        }
        default:
          return false;
      }
    }
    case ModelKind::OncePuncturedTorus: {
      if (a.kind() != Arc::Kind::Slope) return false;
      long long p = a.p() < 0 ? -a.p() : a.p();
      long long q = a.q();
      if (q < 0) return false;
      if (q == 0) return a.p() == 1;
      return std::gcd(p, q) == 1;
    }
  }
  return false;
}

void Model::require_arc(const Arc& a) const {
  if (!owns_arc(a))
    throw ModelMismatchError("arc " + a.to_string() + " does not belong to model " +
                             spec_string());
}

std::vector<Arc> Model::all_arcs() const {
  std::vector<Arc> out;
  switch (kind_) {
    case ModelKind::Polygon:
      for (int i = 0; i < sides_; ++i)
        for (int j = i + 2; j < sides_; ++j)
          if (!(i == 0 && j == sides_ - 1)) out.push_back(Arc::chord(i, j));
      break;
    case ModelKind::PuncturedPolygon:
      for (int v = 0; v < sides_; ++v) {
        out.push_back(Arc::radial(v));
        out.push_back(Arc::loop(v));
      }
      for (int i = 0; i < sides_; ++i)
        for (int j = i + 1; j < sides_; ++j)
          for (int s = 0; s < 2; ++s) {
            Arc a = Arc::punctured_chord(i, j, s);
            if (owns_arc(a)) out.push_back(a);
          }
      break;
    case ModelKind::OncePuncturedTorus:
      throw UnboundedError("the once-punctured torus has infinitely many arcs");
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Model::disjoint(const Arc& a, const Arc& b) const {
  require_arc(a);
  require_arc(b);
  switch (kind_) {
    case ModelKind::Polygon:
      return !chords_interleave(a.i(), a.j(), b.i(), b.j(), sides_);
    case ModelKind::PuncturedPolygon:
      return ppoly_disjoint(a, b, sides_);
    case ModelKind::OncePuncturedTorus: {
      long long d = slope_det(a, b);
      return d >= -1 && d <= 1;
    }
  }
  return false;
}

namespace {

/// The two slopes disjoint from both members of a Farey edge: the mediant
/// and the difference.
std::pair<Arc, Arc> farey_completions(const Arc& x, const Arc& y) {
  return {Arc::slope(x.p() + y.p(), x.q() + y.q()),
          Arc::slope(x.p() - y.p(), x.q() - y.q())};
}

}  // namespace

bool Model::is_triangulation(const std::vector<Arc>& arcs) const {
  for (const Arc& a : arcs)
    if (!owns_arc(a)) return false;
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (static_cast<int>(sorted.size()) != complexity()) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!disjoint(sorted[i], sorted[j])) return false;

  // maximality, checked directly
  if (kind_ == ModelKind::OncePuncturedTorus) {
    // the only slopes disjoint from an edge of the triple are its two
    // completions; each is either the third member or crosses it
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int k = 3 - i - j;
        auto [m, d] = farey_completions(sorted[i], sorted[j]);
        for (const Arc& cand : {m, d}) {
          if (cand == sorted[k]) continue;
          long long det = slope_det(cand, sorted[k]);
          if (det >= -1 && det <= 1) return false;
        }
      }
    return true;
  }
  for (const Arc& cand : all_arcs()) {
    if (std::binary_search(sorted.begin(), sorted.end(), cand)) continue;
    bool fits = true;
    for (const Arc& have : sorted)
      if (!disjoint(cand, have)) {
        fits = false;
        break;
      }
    if (fits) return false;
  }
  return true;
}

Triangulation Model::base_triangulation() const {
  std::vector<Arc> arcs;
  switch (kind_) {
    case ModelKind::Polygon:
      for (int k = 2; k <= sides_ - 2; ++k) arcs.push_back(Arc::chord(0, k));
      break;
    case ModelKind::PuncturedPolygon:
      arcs.push_back(Arc::loop(0));
      arcs.push_back(Arc::radial(0));
      for (int j = 2; j <= sides_ - 1; ++j)
        arcs.push_back(Arc::punctured_chord(0, j, 1));
      break;
    case ModelKind::OncePuncturedTorus:
      arcs = {Arc::slope(0, 1), Arc::slope(1, 0), Arc::slope(1, 1)};
      break;
  }
  return Triangulation(*this, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

std::string to_string(const FaceSide& side) {
  if (std::holds_alternative<Arc>(side)) return std::get<Arc>(side).to_string();
  int s = std::get<BoundarySegment>(side).start;
  return "b(" + std::to_string(s) + ")";
}

int Face::side_multiplicity(const Arc& a) const {
  int count = 0;
  for (const FaceSide& s : sides)
    if (std::holds_alternative<Arc>(s) && std::get<Arc>(s) == a) ++count;
  return count;
}

Arc Face::folded_inner() const {
  if (!self_folded) throw std::logic_error("face is not self-folded");
  return std::get<Arc>(sides[0] == sides[1] ? sides[0] : sides[1]);
}

Arc Face::folded_outer() const {
  if (!self_folded) throw std::logic_error("face is not self-folded");
  const FaceSide& other = sides[0] == sides[1] ? sides[2] : sides[0];
  if (!std::holds_alternative<Arc>(other))
    throw std::logic_error("folded triangle with a boundary outer side");
  return std::get<Arc>(other);
}

// ---------------------------------------------------------------------------
// Triangulation
// ---------------------------------------------------------------------------

Triangulation::Triangulation(Model model, std::vector<Arc> arcs)
    : model_(std::move(model)), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  if (!model_.is_triangulation(arcs_))
    throw std::invalid_argument("arc set is not a triangulation of " +
                                model_.spec_string());
}

bool Triangulation::contains(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

std::vector<Face> Triangulation::faces() const {
  switch (model_.kind()) {
    case ModelKind::Polygon:
      return polygon_faces(model_.sides(), arcs_);
    case ModelKind::PuncturedPolygon:
      return ppoly_faces(model_.sides(), arcs_);
    case ModelKind::OncePuncturedTorus:
      return torus_faces(arcs_);
  }
  throw std::logic_error("unknown model kind");
}

bool Triangulation::flippable(const Arc& a) const {
  if (!contains(a))
    throw ArcNotInTriangulationError("arc " + a.to_string() + " is not in " + to_string());
  for (const Face& f : faces())
    if (f.side_multiplicity(a) == 2) return false;
  return true;
}

std::vector<Arc> Triangulation::flippable_arcs() const {
  std::vector<Face> fs = faces();
  std::vector<Arc> out;
  for (const Arc& a : arcs_) {
    bool folded = false;
    for (const Face& f : fs)
      if (f.side_multiplicity(a) == 2) {
        folded = true;
        break;
      }
    if (!folded) out.push_back(a);
  }
  return out;
}

std::pair<Triangulation, Arc> Triangulation::flip(const Arc& a) const {
  if (!contains(a))
    throw ArcNotInTriangulationError("arc " + a.to_string() + " is not in " + to_string());
  if (!flippable(a))
    throw NotFlippableError("arc " + a.to_string() +
                            " is the inner arc of a folded triangle");

  Arc replacement = a;
  switch (model_.kind()) {
    case ModelKind::Polygon: {
      // the two faces adjacent to the chord form a quadrilateral; take the
      // other diagonal
      std::vector<int> corners;
      for (const Face& f : faces()) {
        if (!f.has_side(a)) continue;
        std::set<int> vs;
        for (const FaceSide& s : f.sides) {
          if (std::holds_alternative<Arc>(s)) {
            vs.insert(std::get<Arc>(s).i());
            vs.insert(std::get<Arc>(s).j());
          } else {
            int b = std::get<BoundarySegment>(s).start;
            vs.insert(b);
            vs.insert((b + 1) % model_.sides());
          }
        }
        for (int v : vs)
          if (v != a.i() && v != a.j()) corners.push_back(v);
      }
      if (corners.size() != 2) throw std::logic_error("chord without two opposite corners");
      replacement = Arc::chord(corners[0], corners[1]);
      break;
    }
    case ModelKind::PuncturedPolygon: {
      // the flipped arc is the unique other completion of the remaining arcs
      std::vector<Arc> found;
      for (const Arc& cand : model_.all_arcs()) {
        if (cand == a || contains(cand)) continue;
        bool fits = true;
        for (const Arc& have : arcs_)
          if (have != a && !model_.disjoint(cand, have)) {
            fits = false;
            break;
          }
        if (fits) found.push_back(cand);
      }
      if (found.size() != 1)
        throw std::logic_error("flippable arc without a unique replacement");
      replacement = found[0];
      break;
    }
    case ModelKind::OncePuncturedTorus: {
      std::vector<Arc> others;
      for (const Arc& x : arcs_)
        if (x != a) others.push_back(x);
      auto [m, d] = farey_completions(others[0], others[1]);
      if (a != m && a != d)
        throw std::logic_error("triple member is not a completion of its edge");
      replacement = a == m ? d : m;
      break;
    }
  }

  std::vector<Arc> next;
  for (const Arc& x : arcs_)
    if (x != a) next.push_back(x);
  next.push_back(replacement);
  return {Triangulation(model_, std::move(next)), replacement};
}

std::string Triangulation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k > 0) out += ",";
    out += arcs_[k].to_string();
  }
  return out;
}

Triangulation Triangulation::parse(const Model& model, std::string_view text) {
  // split on commas at parenthesis depth zero; arc texts contain commas
  std::vector<Arc> arcs;
  std::string current;
  int depth = 0;
  auto flush = [&]() {
    if (current.empty()) throw ParseError("empty arc in triangulation text");
    arcs.push_back(Arc::parse(current));
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    if (c != ' ') current += c;
  }
  flush();
  try {
    return Triangulation(model, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid triangulation: ") + e.what());
  } catch (const ModelMismatchError& e) {
    throw ParseError(std::string("invalid triangulation: ") + e.what());
  }
}

}  // namespace fliplab
