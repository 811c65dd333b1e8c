#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cjlab::protocol {

enum class Direction { ClientToServer, ServerToClient };

std::string_view direction_name(Direction d);  // "c2s" / "s2c"

/// One logged wire message. `payload` holds the raw frame bytes; the JSON-
/// lines form embeds them parsed when they are valid JSON and as a "raw"
/// string otherwise.
struct LogRecord {
  std::uint64_t ts_ms = 0;
  std::string session_id;
  Direction direction = Direction::ClientToServer;
  std::string payload;
};

std::string to_jsonl(const LogRecord& record);

struct FrameLog {
  std::vector<LogRecord> records;

  void add(std::uint64_t ts_ms, std::string session_id, Direction direction,
           std::string payload);
  void write(std::ostream& os) const;
};

}  // namespace cjlab::protocol
