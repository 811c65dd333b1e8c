#include "cjlab/protocol/pow.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cjlab::protocol {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
  if (c >= 'A' && c <= 'F') return 10 + (c - 'A');
  return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

std::vector<std::uint8_t> hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string with odd length");
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("non-hex character");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

}  // namespace

std::string hex_encode(const std::uint8_t* data, std::size_t len) {
  std::string out(len * 2, '0');
  for (std::size_t i = 0; i < len; ++i) {
    out[2 * i] = kHexDigits[data[i] >> 4];
    out[2 * i + 1] = kHexDigits[data[i] & 0xF];
  }
  return out;
}

std::uint32_t parse_target(std::string_view target_hex) {
  if (target_hex.size() != 8) {
    throw std::invalid_argument("target must be 8 hex chars");
  }
  std::vector<std::uint8_t> bytes = hex_decode(target_hex);
  // little-endian
  return static_cast<std::uint32_t>(bytes[0]) |
         static_cast<std::uint32_t>(bytes[1]) << 8 |
         static_cast<std::uint32_t>(bytes[2]) << 16 |
         static_cast<std::uint32_t>(bytes[3]) << 24;
}

std::uint64_t difficulty(std::string_view target_hex) {
  const std::uint64_t t = parse_target(target_hex);
  return (1ULL << 32) / (t + 1);
}

std::array<std::uint8_t, 32> sha256(std::string_view bytes) {
  std::array<std::uint8_t, 32> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len,
                 EVP_sha256(), nullptr) != 1 ||
      len != digest.size()) {
    throw std::runtime_error("sha256: digest failure");
  }
  return digest;
}

std::array<std::uint8_t, 32> hash_blob(std::string_view blob_hex) {
  if (blob_hex.size() != kBlobHexLen) {
    throw std::invalid_argument("blob must be 152 hex chars");
  }
  std::vector<std::uint8_t> raw = hex_decode(blob_hex);
  return sha256(std::string_view(reinterpret_cast<const char*>(raw.data()),
                                 raw.size()));
}

bool meets_target(const std::array<std::uint8_t, 32>& hash,
                  std::uint32_t target) {
  const std::uint32_t tail = static_cast<std::uint32_t>(hash[28]) |
                             static_cast<std::uint32_t>(hash[29]) << 8 |
                             static_cast<std::uint32_t>(hash[30]) << 16 |
                             static_cast<std::uint32_t>(hash[31]) << 24;
  return tail <= target;
}

std::string nonce_hex(std::uint32_t nonce) {
  std::uint8_t bytes[4] = {
      static_cast<std::uint8_t>(nonce & 0xFF),
      static_cast<std::uint8_t>(nonce >> 8 & 0xFF),
      static_cast<std::uint8_t>(nonce >> 16 & 0xFF),
      static_cast<std::uint8_t>(nonce >> 24 & 0xFF),
  };
  return hex_encode(bytes, 4);
}

std::string splice_nonce(std::string_view blob_hex, std::uint32_t nonce) {
  if (blob_hex.size() != kBlobHexLen) {
    throw std::invalid_argument("blob must be 152 hex chars");
  }
  std::string out(blob_hex);
  out.replace(kNonceHexOffset, kNonceHexLen, nonce_hex(nonce));
  return out;
}

SolveResult solve(const JobFrame& job, std::uint32_t start_nonce,
                  std::uint64_t max_iters) {
  if (max_iters == 0) throw std::invalid_argument("solve: max_iters must be >= 1");
  const std::uint32_t target = parse_target(job.target);
  std::vector<std::uint8_t> raw = hex_decode(job.blob);
  if (raw.size() != kBlobHexLen / 2) {
    throw std::invalid_argument("solve: malformed blob");
  }

  SolveResult result;
  std::uint32_t nonce = start_nonce;
  for (std::uint64_t i = 0; i < max_iters; ++i, ++nonce) {
    raw[39] = static_cast<std::uint8_t>(nonce & 0xFF);
    raw[40] = static_cast<std::uint8_t>(nonce >> 8 & 0xFF);
    raw[41] = static_cast<std::uint8_t>(nonce >> 16 & 0xFF);
    raw[42] = static_cast<std::uint8_t>(nonce >> 24 & 0xFF);
    const auto digest = sha256(std::string_view(
        reinterpret_cast<const char*>(raw.data()), raw.size()));
    ++result.attempts;
    if (meets_target(digest, target)) {
      result.share = Share{nonce_hex(nonce),
                           hex_encode(digest.data(), digest.size())};
      return result;
    }
  }
  return result;
}

std::string_view verify_status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Accept: return "accept";
    case VerifyStatus::BadHash: return "bad-hash";
    case VerifyStatus::AboveTarget: return "above-target";
    case VerifyStatus::WrongJob: return "wrong-job";
  }
  return "?";
}

VerifyResult verify(const JobFrame& job, std::string_view nonce,
                    std::string_view result) {
  std::string blob(job.blob);
  if (nonce.size() != kNonceHexLen || blob.size() != kBlobHexLen) {
    return {VerifyStatus::BadHash};
  }
  blob.replace(kNonceHexOffset, kNonceHexLen, nonce);

  std::array<std::uint8_t, 32> digest;
  try {
    digest = hash_blob(blob);
  } catch (const std::invalid_argument&) {
    return {VerifyStatus::BadHash};
  }
  std::string expected = hex_encode(digest.data(), digest.size());
  std::string given(result);
  std::transform(given.begin(), given.end(), given.begin(), [](char c) {
    return c >= 'A' && c <= 'F' ? static_cast<char>(c - 'A' + 'a') : c;
  });
  if (given != expected) return {VerifyStatus::BadHash};
  if (!meets_target(digest, parse_target(job.target))) {
    return {VerifyStatus::AboveTarget};
  }
  return {VerifyStatus::Accept};
}

VerifyResult verify_submit(const JobFrame& current_job, const SubmitFrame& s) {
  if (s.job_id != current_job.job_id) return {VerifyStatus::WrongJob};
  return verify(current_job, s.nonce, s.result);
}

}  // namespace cjlab::protocol
