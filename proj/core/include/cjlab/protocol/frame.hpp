#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cjlab::protocol {

// The five wire messages of one mining session. Field formats are part of
// the protocol: site keys are 32 characters, blobs 152 lowercase hex chars,
// targets 8 lowercase hex chars, nonces 8 lowercase hex chars, results
// 64 hex chars.

struct AuthFrame {
  std::string site_key;
  std::string auth_type = "anonymous";
  std::optional<std::string> user;
  std::int64_t goal = 0;

  bool operator==(const AuthFrame&) const = default;
};

struct AuthedFrame {
  std::string token;  // may be empty: observed sessions carry blank tokens
  std::uint64_t hashes = 0;

  bool operator==(const AuthedFrame&) const = default;
};

struct JobFrame {
  std::string job_id;  // decimal digits
  std::string blob;    // 152 lowercase hex chars (76 bytes)
  std::string target;  // 8 lowercase hex chars, little-endian u32

  bool operator==(const JobFrame&) const = default;
};

struct SubmitFrame {
  std::string job_id;
  std::string nonce;   // 8 lowercase hex chars
  std::string result;  // 64 hex chars (256-bit hash)

  bool operator==(const SubmitFrame&) const = default;
};

struct HashAcceptFrame {
  std::uint64_t hashes = 0;  // cumulative session credit

  bool operator==(const HashAcceptFrame&) const = default;
};

using Frame =
    std::variant<AuthFrame, AuthedFrame, JobFrame, SubmitFrame, HashAcceptFrame>;

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by decode() for a well-formed envelope whose "type" is not one of
/// the five protocol messages. Carries the raw type string.
class UnknownFrameError : public CodecError {
 public:
  explicit UnknownFrameError(std::string frame_type);
  const std::string& frame_type() const { return frame_type_; }

 private:
  std::string frame_type_;
};

/// Raised for envelopes that are not JSON, lack required params, carry
/// ill-typed params, or violate a field-format invariant. The message names
/// the offending field.
class MalformedFrameError : public CodecError {
 public:
  using CodecError::CodecError;
};

std::string_view frame_type_name(const Frame& frame);

/// Canonical encoding: fully compact JSON, UTF-8, fixed key order
/// ("type" then "params", params in wire order). Validates the frame's
/// field-format invariants first and throws MalformedFrameError naming the
/// field on violation.
std::string encode(const Frame& frame);

/// Tolerant of arbitrary JSON whitespace and key order; strict on types and
/// required params. Throws UnknownFrameError or MalformedFrameError.
Frame decode(std::string_view bytes);

}  // namespace cjlab::protocol
