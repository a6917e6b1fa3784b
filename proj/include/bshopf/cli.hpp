#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "bshopf/core.hpp"
#include "bshopf/graphs.hpp"

namespace bshopf::cli {

struct JobSpec {
  std::string command;  // closure chi csf zetainv eulerian cdindex tutte beta selftest
  std::string document;  // input text; unused by selftest
  std::string basis = "monomial";
  int n = 3;  // for beta
  std::optional<std::pair<std::int64_t, std::int64_t>> m_range;
  std::string format = "json";
};

struct JobResult {
  int exit_code = 0;  // 0 ok, 1 input error, 2 guard exceeded, 3 cross-check failure
  std::string output;
  std::string diagnostics;
};

using Input = std::variant<BuildingSet, SimpleGraph>;

/// JSON building set {"ground_set": [...], "generators": [[...]]} (closed up),
/// JSON graph {"vertices": [...], "edges": [[u, v]]}, or "u v" edge lines.
Input parse_input(const std::string& doc);

/// {"ground_set", "generators"} with the full generating collection, so the
/// document parses back to an equivalent building set.
std::string building_set_document(const BuildingSet& b);

/// "A..B" with A <= B.
std::pair<std::int64_t, std::int64_t> parse_m_range(const std::string& text);

/// Never throws; errors become exit codes and diagnostics.
JobResult run(const JobSpec& spec);

}  // namespace bshopf::cli
