#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pebble {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  Disconnected,
  RootOutOfRange,
  VertexOutOfRange,
  UnknownFamily,
  BadParameter,
  RootNotIncluded,
  NotAdjacent,
  InsufficientPebbles,
  GraphMismatch,
  ResourceLimit,
  NotATree,
  WeightNotPositive,
  NegativeWeight,
  UncoveredVertex,
  UncertifiedComponent,
  NegativeCoefficient,
  BadEmbedding,
  UnknownName,
  UncertifiedWeight,
  DimensionMismatch,
  EmptyStrategySet,
  UnboundedCoverage,
  ParseError,
  VersionMismatch,
  Overflow,
  BadSymmetry,
};

std::string_view to_string(ErrorCode code);

/// Base class for every error raised by the library. The code identifies
/// the contract that was violated; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a configured node cap is exceeded. Never means "unsolvable".
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorCode::ResourceLimit, what) {}
};

/// Text-format errors carry the 1-based line they were detected on.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pebble
