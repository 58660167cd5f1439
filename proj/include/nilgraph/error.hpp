#pragma once

#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

namespace nilgraph {

// Bad user input: malformed spec strings, invalid parameters, non-members.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration cap or search budget exhausted.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Clique search ran out of nodes; carries the best clique found so far.
class SearchTimeout : public ResourceLimit {
public:
  SearchTimeout(const std::string &what, std::size_t lower_bound, std::vector<std::uint32_t> witness)
      : ResourceLimit(what), lower_bound(lower_bound), witness(std::move(witness)) {}

  std::size_t lower_bound;
  std::vector<std::uint32_t> witness;
};

// An internal consistency check failed (order formula mismatch, inexact division, ...).
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace nilgraph
