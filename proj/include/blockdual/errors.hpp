#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockdual {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The symmetrised Cartan matrix is not positive definite.
class NotFiniteType : public Error {
 public:
  explicit NotFiniteType(const std::string& what) : Error(what) {}
};

/// A Cartan spec string could not be parsed.
class UnknownType : public Error {
 public:
  explicit UnknownType(const std::string& what) : Error(what) {}
};

/// Two elements from different root systems were combined.
class MixedRootSystems : public Error {
 public:
  explicit MixedRootSystems(const std::string& what) : Error(what) {}
};

/// A full enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required)
      : Error(what + " (required size " + std::to_string(required) + ")"),
        required_size(required) {}
  std::size_t required_size;
};

/// w(alpha_i) is not plus or minus a simple root.
class NotStandardParabolic : public Error {
 public:
  explicit NotStandardParabolic(const std::string& what) : Error(what) {}
};

/// Operation requires all components of type A.
class NotTypeA : public Error {
 public:
  explicit NotTypeA(const std::string& what) : Error(what) {}
};

/// Operation requires the parabolic truncation to be trivial.
class NotRegularParabolic : public Error {
 public:
  explicit NotRegularParabolic(const std::string& what) : Error(what) {}
};

/// Parts do not form a composition of n.
class NotAComposition : public Error {
 public:
  explicit NotAComposition(const std::string& what) : Error(what) {}
};

/// An element used as a module index lies outside the block's index set.
class IndexNotInBlock : public Error {
 public:
  explicit IndexNotInBlock(const std::string& what) : Error(what) {}
};

/// Module kind not supported by the requested map.
class UnsupportedKind : public Error {
 public:
  explicit UnsupportedKind(const std::string& what) : Error(what) {}
};

/// A condition the theory guarantees failed to hold; indicates a bug.
class InternalInvariantViolation : public Error {
 public:
  explicit InternalInvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace blockdual
