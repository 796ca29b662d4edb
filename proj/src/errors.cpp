#include "pebble/errors.hpp"

namespace pebble {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootOutOfRange: return "RootOutOfRange";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::RootNotIncluded: return "RootNotIncluded";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::InsufficientPebbles: return "InsufficientPebbles";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WeightNotPositive: return "WeightNotPositive";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::UncertifiedComponent: return "UncertifiedComponent";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::BadEmbedding: return "BadEmbedding";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UncertifiedWeight: return "UncertifiedWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyStrategySet: return "EmptyStrategySet";
    case ErrorCode::UnboundedCoverage: return "UnboundedCoverage";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadSymmetry: return "BadSymmetry";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, const std::string& what)
    : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace pebble
