#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resdist/families.hpp"

namespace resdist::cli {

enum class Command { Resist, Spectral, Verify, Walk, Families };
enum class Format { Table, Json, Csv };

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

struct CliRequest {
  Command command = Command::Families;
  std::optional<FamilySpec> family;
  std::optional<std::string> array_json;
  Format format = Format::Table;
  bool exact = false;
  std::uint64_t seed = 1;
  long long walks = 100000;
  std::optional<std::pair<int, int>> source;  // vertex indices for `walk`
};

/// Executes a parsed request. Library errors are reported on `err` and mapped
/// to kExitInvalid; `verify` returns kExitMismatch when any check fails.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv (including argv[0]) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace resdist::cli
