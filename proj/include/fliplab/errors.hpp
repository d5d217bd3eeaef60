#pragma once

#include <stdexcept>

namespace fliplab {

/// Base class for the domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An arc was used with a model it does not belong to.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

/// A finite enumeration was requested on the once-punctured torus, which
/// has infinitely many arcs and triangulations.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

class ArcNotInTriangulationError : public Error {
 public:
  using Error::Error;
};

/// The arc is the inner arc of a self-folded triangle.
class NotFlippableError : public Error {
 public:
  using Error::Error;
};

/// unflippable_witness was asked about an arc that is flippable.
class ArcIsFlippableError : public Error {
 public:
  using Error::Error;
};

/// The requested ball is not fully contained in the given subgraph.
class BallNotContainedError : public Error {
 public:
  using Error::Error;
};

class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// The image of some triangulation under an induced map is not a
/// triangulation of the target model.
class ImageNotTriangulationError : public Error {
 public:
  using Error::Error;
};

/// No edge of the subgraph removes the arc, so its image cannot be read
/// off any triangulation pair.
class NoWitnessEdgeError : public Error {
 public:
  using Error::Error;
};

/// Two witness edges disagree, so the map is not induced by any arc map.
class InconsistentWitnessError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fliplab
