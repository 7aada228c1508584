#pragma once

#include <stdexcept>
#include <string>

namespace ordinal {

/// Base of every exception thrown by the library.
class OrdinalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation was given arguments outside its domain
/// (empty suc list, Zero member in a family sup, non-finitary input, ...).
class InvalidArgument : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

/// A user-supplied family generator failed while the engine or a verifier
/// was evaluating it. Never turned into a verdict.
class EngineError : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

/// Structural recursion went deeper than its guard; the generator that
/// produced the name is most likely ill-founded.
class DepthExhausted : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

/// A kernel constructor was applied to premises of the wrong shape.
class KernelError : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

}  // namespace ordinal
