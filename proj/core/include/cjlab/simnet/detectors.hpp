#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjlab/protocol/log.hpp"

namespace cjlab::simnet {

enum class DetectorKind { Blacklist, Payload };
enum class Trigger { None, EndpointMatch, MiningSequence };

std::string_view detector_name(DetectorKind kind);
std::string_view trigger_name(Trigger trigger);

struct DetectorVerdict {
  DetectorKind detector = DetectorKind::Blacklist;
  bool flagged = false;
  Trigger trigger = Trigger::None;
  std::optional<std::uint64_t> time_of_flag_ms;
};

/// One outbound connection as a URL-blocking extension would see it.
struct ConnectionRecord {
  std::string endpoint;  // "host:port" the client dialed
  std::uint64_t ts_ms = 0;
  std::string session_id;
};

/// Blacklist entries are exact endpoint matches; a trailing '*' makes the
/// entry a prefix wildcard ("pool.example:*"). One endpoint per line, '#'
/// comments allowed.
std::vector<std::string> load_blacklist(std::istream& is);
bool blacklist_matches(const std::vector<std::string>& blacklist,
                       const std::string& endpoint);

/// URL blocking: flags if and only if some connection's destination is
/// blacklisted. Looks at no payload whatsoever, which is precisely why a
/// relay defeats it and a key-less session still trips it.
DetectorVerdict blacklist_detector(std::span<const ConnectionRecord> conns,
                                   const std::vector<std::string>& blacklist);

/// Message inspection: runs the mining-round automaton
/// auth -> authed -> job -> submit -> hash_accept per session and flags at
/// the first completed round. Messages that do not decode as protocol
/// frames are counted and skipped, so chat traffic cannot trip it — and
/// neither can a key-less session, which never gets past auth.
class PayloadDetector {
 public:
  void observe(const protocol::LogRecord& record);
  DetectorVerdict verdict() const { return verdict_; }
  std::uint64_t undecodable_messages() const { return undecodable_; }

 private:
  std::map<std::string, int> stage_;  // per session: frames matched so far
  DetectorVerdict verdict_{DetectorKind::Payload, false, Trigger::None, std::nullopt};
  std::uint64_t undecodable_ = 0;
};

DetectorVerdict payload_detector(std::span<const protocol::LogRecord> stream);

}  // namespace cjlab::simnet
