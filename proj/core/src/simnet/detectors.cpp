#include "cjlab/simnet/detectors.hpp"

#include <array>
#include <istream>

#include "cjlab/protocol/frame.hpp"

namespace cjlab::simnet {

std::string_view detector_name(DetectorKind kind) {
  return kind == DetectorKind::Blacklist ? "blacklist" : "payload";
}

std::string_view trigger_name(Trigger trigger) {
  switch (trigger) {
    case Trigger::None: return "none";
    case Trigger::EndpointMatch: return "endpoint-match";
    case Trigger::MiningSequence: return "mining-sequence";
  }
  return "?";
}

std::vector<std::string> load_blacklist(std::istream& is) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    line = line.substr(start, end - start + 1);
    if (line.empty() || line[0] == '#') continue;
    entries.push_back(line);
  }
  return entries;
}

bool blacklist_matches(const std::vector<std::string>& blacklist,
                       const std::string& endpoint) {
  for (const std::string& entry : blacklist) {
    if (!entry.empty() && entry.back() == '*') {
      if (endpoint.compare(0, entry.size() - 1, entry, 0, entry.size() - 1) ==
          0) {
        return true;
      }
    } else if (entry == endpoint) {
      return true;
    }
  }
  return false;
}

DetectorVerdict blacklist_detector(std::span<const ConnectionRecord> conns,
                                   const std::vector<std::string>& blacklist) {
  DetectorVerdict verdict{DetectorKind::Blacklist, false, Trigger::None, std::nullopt};
  for (const ConnectionRecord& conn : conns) {
    if (blacklist_matches(blacklist, conn.endpoint)) {
      verdict.flagged = true;
      verdict.trigger = Trigger::EndpointMatch;
      verdict.time_of_flag_ms = conn.ts_ms;
      return verdict;
    }
  }
  return verdict;
}

namespace {

constexpr std::array<std::string_view, 5> kRoundSequence = {
    "auth", "authed", "job", "submit", "hash_accept"};

}  // namespace

void PayloadDetector::observe(const protocol::LogRecord& record) {
  if (verdict_.flagged) return;

  std::string_view type;
  try {
    protocol::Frame frame = protocol::decode(record.payload);
    type = protocol::frame_type_name(frame);
  } catch (const protocol::CodecError&) {
    ++undecodable_;
    return;
  }

  int& stage = stage_[record.session_id];
  if (type == kRoundSequence[static_cast<std::size_t>(stage)]) {
    ++stage;
    if (stage == static_cast<int>(kRoundSequence.size())) {
      verdict_.flagged = true;
      verdict_.trigger = Trigger::MiningSequence;
      verdict_.time_of_flag_ms = record.ts_ms;
    }
  }
  // other protocol frames (job rotations, repeat submits) leave the
  // automaton where it is; the round only ever moves forward
}

DetectorVerdict payload_detector(std::span<const protocol::LogRecord> stream) {
  PayloadDetector detector;
  for (const protocol::LogRecord& record : stream) detector.observe(record);
  return detector.verdict();
}

}  // namespace cjlab::simnet
