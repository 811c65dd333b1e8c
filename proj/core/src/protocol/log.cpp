#include "cjlab/protocol/log.hpp"

#include <json.hpp>

#include <ostream>

namespace cjlab::protocol {

std::string_view direction_name(Direction d) {
  return d == Direction::ClientToServer ? "c2s" : "s2c";
}

std::string to_jsonl(const LogRecord& record) {
  nlohmann::ordered_json line;
  line["ts"] = record.ts_ms;
  line["session_id"] = record.session_id;
  line["direction"] = std::string(direction_name(record.direction));
  nlohmann::ordered_json frame =
      nlohmann::ordered_json::parse(record.payload, nullptr, false);
  if (frame.is_discarded()) {
    line["frame"] = nlohmann::ordered_json{{"raw", record.payload}};
  } else {
    line["frame"] = std::move(frame);
  }
  return line.dump();
}

void FrameLog::add(std::uint64_t ts_ms, std::string session_id,
                   Direction direction, std::string payload) {
  records.push_back(
      LogRecord{ts_ms, std::move(session_id), direction, std::move(payload)});
}

void FrameLog::write(std::ostream& os) const {
  for (const LogRecord& r : records) {
    os << to_jsonl(r) << '\n';
  }
}

}  // namespace cjlab::protocol
