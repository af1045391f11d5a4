#pragma once

#include <stdexcept>
#include <string>

namespace wiener {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 records, edge-list files, family specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside an operation's supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Wiener polynomial is undefined for disconnected graphs.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace wiener
