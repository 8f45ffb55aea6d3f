#pragma once

// Run headers, locale-independent number formatting and output sinks shared
// by the subcommands.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

namespace cohq::cli {

inline constexpr const char* tool_name = "cohq";
inline constexpr const char* tool_version = "0.1.0";

struct RunHeader {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::string ensemble;
  std::size_t count = 0;
  std::string generator;
  std::string timestamp;  // UTC, ISO-8601 to the second
};

RunHeader make_header(std::string command, std::optional<std::uint64_t> seed,
                      std::string ensemble, std::size_t count);

std::string utc_timestamp();

nlohmann::json to_json(const RunHeader& h);

/// "# key: value" lines; always the first lines of a CSV output.
void write_csv_header(std::ostream& os, const RunHeader& h);

/// Shortest representation that parses back to the same double.
std::string format_number(double v);

/// A named file, or a fallback stream when no path is given. Throws IoError
/// when the file cannot be opened or a write fails.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback);

  std::ostream& stream() { return *os_; }
  void finish();

 private:
  std::optional<std::string> path_;
  std::ofstream file_;
  std::ostream* os_;
};

void write_json(Sink& sink, const nlohmann::json& j);

}  // namespace cohq::cli
