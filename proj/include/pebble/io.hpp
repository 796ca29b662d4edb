#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/weight_function.hpp"

namespace pebble {

// Line-oriented text formats. Each starts with "<magic> <version>"; blank
// lines and lines starting with '#' are ignored, and numeric lines may end in
// a '#' comment. Parsers throw ParseError carrying the offending line number,
// with code VersionMismatch for an unsupported version. Serializers emit the
// canonical form: sorted ids, reduced fractions, zero entries omitted.
//
//   pebblegraph 1          pebbleconfig 1        pebbleweights 1
//   vertices <n>           p <id> <count>        w <id> <num>/<den>
//   root <id>
//   family <name> [transitive]
//   edge <u> <v>
//   label <id> <text>
//   sym <image of 0> <image of 1> ...
//
// "family" and "sym" carry generator metadata so symmetry reduction survives
// a round trip through a file.

std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

std::string serialize_config(const Configuration& p);
Configuration parse_config(std::string_view text, const GraphPtr& g);

std::string serialize_weights(const WeightFunction& w);
WeightFunction parse_weights(std::string_view text, const GraphPtr& g);

/// Copy list for decomposition checks:
///
///   pebblecopies 1
///   copy <graph file> <weights file>
///   map <sub id> <ambient id>      # one per base vertex, following its copy line
///
/// File names are relative to the manifest's directory.
struct CopiesManifest {
  struct Copy {
    std::string graph_file;
    std::string weights_file;
    Embedding embedding;
  };
  std::vector<Copy> copies;
};

std::string serialize_copies(const CopiesManifest& m);
CopiesManifest parse_copies(std::string_view text);

/// Whole-file helpers; read failures raise ParseError at line 0.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pebble
