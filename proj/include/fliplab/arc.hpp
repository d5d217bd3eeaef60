#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fliplab {

/// Canonical encoding of an essential arc, one encoding per isotopy class:
///
///  - Chord(i, j): polygon arc between boundary vertices, i < j.
///  - PChord(i, j, side): punctured-polygon arc between boundary vertices,
///    i < j. The arc cuts the disk in two; side says which piece holds the
///    puncture: side 0 is the piece along the vertex interval i+1..j-1,
///    side 1 the piece along the complementary interval.
///  - Radial(i): punctured-polygon arc from boundary vertex i to the
///    puncture.
///  - Loop(i): punctured-polygon arc from i back to i enclosing only the
///    puncture.
///  - Slope(p, q): once-punctured-torus arc as a reduced fraction with
///    q >= 0, and (1, 0) for the infinite slope.
///
/// Factories normalize their input; whether an encoding is an essential
/// arc of a concrete model (which knows the vertex count) is checked by
/// Model::require_arc.
class Arc {
 public:
  enum class Kind : std::uint8_t { Chord, PChord, Radial, Loop, Slope };

  static Arc chord(int i, int j);
  static Arc punctured_chord(int i, int j, int side);
  static Arc radial(int i);
  static Arc loop(int i);
  static Arc slope(long long p, long long q);

  Kind kind() const { return kind_; }

  int i() const;       // Chord, PChord
  int j() const;       // Chord, PChord
  int side() const;    // PChord
  int vertex() const;  // Radial, Loop
  long long p() const; // Slope
  long long q() const; // Slope

  /// "C(i,j)", "PC(i,j,s)", "R(i)", "L(i)" or "p/q".
  std::string to_string() const;
  static Arc parse(std::string_view text);

  friend auto operator<=>(const Arc&, const Arc&) = default;

 private:
  Arc(Kind kind, long long a, long long b, long long c)
      : kind_(kind), a_(a), b_(b), c_(c) {}

  Kind kind_;
  long long a_;
  long long b_;
  long long c_;
};

}  // namespace fliplab
