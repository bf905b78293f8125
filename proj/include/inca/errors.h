#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace inca {

// Domain errors. Everything the engine throws on bad input derives from
// Error so callers (the CLI in particular) can map it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A formula or literal that must be ground still contains a variable, or
// mentions an atom outside the environmental atom universe.
class GroundednessError : public Error {
 public:
  using Error::Error;
};

// A configured size cap (world atoms, activation-set literals) was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// The linear system over worlds has no solution.
class InconsistentKBError : public Error {
 public:
  using Error::Error;
};

// Evidence made the environmental model inconsistent. `conflict` holds the
// rendered probabilistic formulas of a minimal conflicting subset (or the
// whole augmented knowledge base when it is too large to search).
class InconsistentEvidenceError : public Error {
 public:
  InconsistentEvidenceError(const std::string& what,
                            std::vector<std::string> conflict)
      : Error(what), conflict_(std::move(conflict)) {}
  const std::vector<std::string>& conflict() const { return conflict_; }

 private:
  std::vector<std::string> conflict_;
};

// Both L and its complement came out warranted; indicates a bug.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

// A world distribution is not a probability distribution over the
// conforming worlds.
class DistributionError : public Error {
 public:
  using Error::Error;
};

// A constant was used in a role (actor/operation) it was not declared with.
class SortError : public Error {
 public:
  using Error::Error;
};

// Syntax or document-level error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message, std::string snippet)
      : Error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(std::move(message)),
        snippet_(std::move(snippet)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& snippet() const { return snippet_; }

 private:
  static std::string format(int line, int column, const std::string& msg) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
  std::string message_;
  std::string snippet_;
};

}  // namespace inca
