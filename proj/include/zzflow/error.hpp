#pragma once

#include <stdexcept>
#include <string>

namespace zzflow {

// Bad caller input: out-of-range vertex, n < 3, non-alternating permutation, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidEdge : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MalformedClique : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MalformedGrove : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A computed structure contradicts one of the theorems the toolkit checks.
// Raising this means either a bug or a counterexample; never bad input.
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zzflow
