#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "monotop/covers.hpp"
#include "monotop/graph.hpp"
#include "monotop/homology.hpp"
#include "monotop/io.hpp"
#include "monotop/resolution.hpp"

namespace monotop {

/// Insertion-ordered JSON so that output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

enum class GraphIdeal { Edge, Star };

struct Input {
  std::string path;
  InputKind kind = InputKind::Ideal;
  GraphIdeal graph_ideal = GraphIdeal::Edge;
  std::optional<Graph> graph;
  MonomialIdeal ideal;
};

/// Parses an `.ideal` or `.graph` file; graphs become their edge or star ideal.
Input load_input(const std::filesystem::path& path, GraphIdeal graph_ideal);
Input make_input(std::string path, const Graph& graph, GraphIdeal graph_ideal);
Input make_input(std::string path, MonomialIdeal ideal);

struct ReportOptions {
  std::size_t max_faces = kDefaultMaxFaces;
  std::size_t max_resolution_states = 100000;
  bool all_resolutions = false;
  bool timing = false;
  std::uint64_t seed = 0;
};

struct CommandResult {
  Json json;
  std::string text;
  /// Every internal consistency check passed.
  bool consistent = true;
};

Json to_json(const HomologyProfile& profile);
Json to_json(const Resolution& resolution, const VariableUniverse& names);
Json to_json(const GraphInvariants& inv);
std::string format_profile(const HomologyProfile& profile);

/// Nonzero groups of `a` equal those of `b` moved up by `shift` degrees.
bool same_up_to_shift(const HomologyProfile& a, const HomologyProfile& b, int shift);

CommandResult run_classify(const Input& input, const ReportOptions& options);
CommandResult run_homology(const Input& input, const ReportOptions& options);
CommandResult run_euler(const Input& input, const ReportOptions& options);
/// Throws PreconditionError for ideal inputs.
CommandResult run_invariants(const Input& input, const ReportOptions& options);
CommandResult run_collapse(const Input& input, const ReportOptions& options);
CommandResult run_report(const Input& input, const ReportOptions& options);

}  // namespace monotop
