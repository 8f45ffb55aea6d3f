#include "output.hpp"

#include <charconv>
#include <chrono>
#include <ctime>

#include "cohq/errors.hpp"
#include "cohq/states.hpp"

namespace cohq::cli {

RunHeader make_header(std::string command, std::optional<std::uint64_t> seed,
                      std::string ensemble, std::size_t count) {
  return {std::move(command), seed, std::move(ensemble), count, std::string(generator_name),
          utc_timestamp()};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json to_json(const RunHeader& h) {
  return {
      {"tool", tool_name},
      {"version", tool_version},
      {"command", h.command},
      {"seed", h.seed ? nlohmann::json(*h.seed) : nlohmann::json(nullptr)},
      {"ensemble", h.ensemble},
      {"count", h.count},
      {"generator", h.generator},
      {"timestamp", h.timestamp},
  };
}

void write_csv_header(std::ostream& os, const RunHeader& h) {
  os << "# tool: " << tool_name << ' ' << tool_version << '\n';
  os << "# command: " << h.command << '\n';
  os << "# seed: " << (h.seed ? std::to_string(*h.seed) : "none") << '\n';
  os << "# ensemble: " << h.ensemble << '\n';
  os << "# count: " << h.count << '\n';
  os << "# generator: " << h.generator << '\n';
  os << "# timestamp: " << h.timestamp << '\n';
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

Sink::Sink(const std::optional<std::string>& path, std::ostream& fallback)
    : path_(path), os_(&fallback) {
  if (path_) {
    file_.open(*path_, std::ios::out | std::ios::trunc);
    if (!file_) throw IoError("cannot open '" + *path_ + "' for writing");
    os_ = &file_;
  }
}

void Sink::finish() {
  os_->flush();
  if (!*os_) throw IoError("write failed" + (path_ ? " for '" + *path_ + "'" : std::string()));
  if (path_) file_.close();
}

void write_json(Sink& sink, const nlohmann::json& j) {
  sink.stream() << j.dump(2) << '\n';
  sink.finish();
}

}  // namespace cohq::cli
