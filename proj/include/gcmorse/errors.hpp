#pragma once

#include <stdexcept>
#include <string>

namespace gcmorse {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user-supplied data (malformed file, invalid graph, bad flag value).
// The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A mathematical invariant the construction guarantees was found violated.
// Always indicates a bug in this library (or a hand-built object that breaks
// a documented precondition).  The CLI maps these to exit code 1.
struct InvariantError : Error {
  using Error::Error;
};

// ---- input-side errors -----------------------------------------------------

// Requested spanning tree is not a spanning tree of the graph.
struct NotATree : InputError {
  using InputError::InputError;
};

// Requested root does not have valency 1 in the spanning tree.
struct BadRoot : InputError {
  using InputError::InputError;
};

// Graph is not connected.
struct Disconnected : InputError {
  using InputError::InputError;
};

// Two-particle complex needs at least two vertices.
struct TooSmall : InputError {
  using InputError::InputError;
};

// A cell function does not cover every cell of the complex.
struct MissingValue : InputError {
  using InputError::InputError;
};

// A directed edge sequence handed to flux() is not a closed cycle.
struct NotAClosedCycle : InputError {
  using InputError::InputError;
};

// ---- invariant-side errors -------------------------------------------------

// A cell function fails the discrete Morse conditions.
struct NotMorse : InvariantError {
  using InvariantError::InvariantError;
};

// A gradient field contains a closed V-path.
struct CyclicField : InvariantError {
  using InvariantError::InvariantError;
};

// The repair step found a cell violating the local pattern its construction
// guarantees; a self-check of the implementation, never expected at runtime.
struct AssertionFailure : InvariantError {
  using InvariantError::InvariantError;
};

// Gradient-flow substitution exceeded its iteration bound.
struct NonTermination : InvariantError {
  using InvariantError::InvariantError;
};

// Gauge propagation could not order the flux equations (impossible for
// acyclic fields; defensive).
struct UnsolvableOrder : InvariantError {
  using InvariantError::InvariantError;
};

}  // namespace gcmorse
