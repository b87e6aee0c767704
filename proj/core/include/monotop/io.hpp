#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "monotop/complex.hpp"
#include "monotop/graph.hpp"
#include "monotop/ideal.hpp"

namespace monotop {

/// `.ideal` text: a `vars:` line, then one generator per line as
/// space-separated names (`()` is the generator 1). `#` starts a comment.
/// Unknown variables, repeated variables within a line and duplicate
/// generators are rejected with ParseError.
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);

/// `.graph` text: an optional `vertices:` line, then one `u v` edge per line.
/// Without a `vertices:` line, vertices are ordered by first appearance.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& graph);

/// One face per line, `()` for the empty face, sorted by degree and then
/// lexicographically.
std::string format_complex(const SimplicialComplex& complex);
SimplicialComplex parse_complex(std::string_view text, UniversePtr universe);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

enum class InputKind { Ideal, Graph };
/// By extension: `.graph` is a graph, anything else an ideal.
InputKind input_kind(const std::filesystem::path& path);

}  // namespace monotop
