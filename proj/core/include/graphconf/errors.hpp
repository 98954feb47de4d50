#pragma once

#include <stdexcept>
#include <string>

namespace graphconf {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates the graph invariants (loops, parallel edges, dangling
/// endpoints, duplicate identifiers).
class MalformedGraph : public Error {
 public:
    using Error::Error;
};

class UnknownVertex : public Error {
 public:
    using Error::Error;
};

class UnknownEdge : public Error {
 public:
    using Error::Error;
};

/// A subdivision count of zero was requested.
class ZeroParts : public Error {
 public:
    using Error::Error;
};

class Disconnected : public Error {
 public:
    using Error::Error;
};

/// The graph does not satisfy the standing hypotheses of the requested
/// computation (e.g. it is homeomorphic to a circle or an interval).
class HypothesisViolated : public Error {
 public:
    using Error::Error;
};

class NotACycle : public Error {
 public:
    using Error::Error;
};

class NonAdjacentEdges : public Error {
 public:
    using Error::Error;
};

/// An exact integer solve that must succeed by construction failed;
/// indicates a broken internal invariant.
class SolveFailure : public Error {
 public:
    using Error::Error;
};

class BadRotation : public Error {
 public:
    using Error::Error;
};

/// The rotation system does not describe a planar embedding (face count
/// violates the Euler relation).
class EulerMismatch : public Error {
 public:
    using Error::Error;
};

class BadOuterMarker : public Error {
 public:
    using Error::Error;
};

class NoEssentialVertex : public Error {
 public:
    using Error::Error;
};

class NoOffBoundaryVertex : public Error {
 public:
    using Error::Error;
};

/// Malformed input file (JSON syntax or schema violations).
class ParseError : public Error {
 public:
    using Error::Error;
};

}  // namespace graphconf
