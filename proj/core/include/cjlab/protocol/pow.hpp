#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cjlab/protocol/frame.hpp"

namespace cjlab::protocol {

// Share proof-of-work. The hash is SHA-256 over the 76-byte decoded blob;
// a nonce is the 8 hex chars at blob positions [78, 86) (bytes 39..42,
// little-endian), and a hash wins when its final 4 bytes, read as a
// little-endian u32, do not exceed the target. Both solve and verify use
// the same function; it is a protocol constant.

inline constexpr std::size_t kBlobHexLen = 152;
inline constexpr std::size_t kNonceHexOffset = 78;
inline constexpr std::size_t kNonceHexLen = 8;

/// Little-endian u32 from the 8-hex target. Throws std::invalid_argument.
std::uint32_t parse_target(std::string_view target_hex);

/// floor(2^32 / (target + 1)): the expected number of hash attempts per
/// share, and the per-share session credit.
std::uint64_t difficulty(std::string_view target_hex);

std::array<std::uint8_t, 32> sha256(std::string_view bytes);

/// SHA-256 of the decoded blob. Throws std::invalid_argument on a blob that
/// is not 152 lowercase hex chars.
std::array<std::uint8_t, 32> hash_blob(std::string_view blob_hex);

bool meets_target(const std::array<std::uint8_t, 32>& hash,
                  std::uint32_t target);

/// The blob with `nonce` written into the nonce window, lowercase hex LE.
std::string splice_nonce(std::string_view blob_hex, std::uint32_t nonce);
std::string nonce_hex(std::uint32_t nonce);

std::string hex_encode(const std::uint8_t* data, std::size_t len);

struct Share {
  std::string nonce;   // as spliced into the blob
  std::string result;  // 64 lowercase hex chars
};

struct SolveResult {
  std::optional<Share> share;
  std::uint64_t attempts = 0;  // hashes actually computed
};

/// Iterates nonces from start_nonce (wrapping) for at most max_iters
/// attempts and returns the first winning share. Throws
/// std::invalid_argument on a malformed blob or max_iters == 0.
SolveResult solve(const JobFrame& job, std::uint32_t start_nonce,
                  std::uint64_t max_iters);

enum class VerifyStatus { Accept, BadHash, AboveTarget, WrongJob };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Accept;
  bool accepted() const { return status == VerifyStatus::Accept; }
};

std::string_view verify_status_name(VerifyStatus status);

/// Recomputes the hash from blob+nonce and checks result equality and the
/// target condition. Rejection is a value, never an exception.
VerifyResult verify(const JobFrame& job, std::string_view nonce,
                    std::string_view result);

/// As verify(), but first checks that the submit names the current job.
VerifyResult verify_submit(const JobFrame& current_job, const SubmitFrame& s);

}  // namespace cjlab::protocol
