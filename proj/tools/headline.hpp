#pragma once

#include <string>
#include <vector>

#include "ftc/invariants.hpp"

namespace ftc::cli {

struct TableRow {
  std::string quantity;
  std::string expected;
  std::string computed;
  std::string method;
  bool agrees = false;
};

/// Recomputes the headline values: tc and cat of small circles, the colouring
/// count and the witness circle size.
std::vector<TableRow> headline_table(const SearchConfig& config);

std::string render_table(const std::vector<TableRow>& rows);

}  // namespace ftc::cli
