#include "cjlab/protocol/frame.hpp"

#include <json.hpp>

namespace cjlab::protocol {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_lower_hex(std::string_view s) {
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

bool is_hex(std::string_view s) {
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
          (c >= 'A' && c <= 'F'))) {
      return false;
    }
  }
  return true;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_field(std::string_view frame, std::string_view field,
                            std::string_view why) {
  throw MalformedFrameError(std::string(frame) + "." + std::string(field) +
                            ": " + std::string(why));
}

void validate(const AuthFrame& f) {
  if (f.site_key.size() != 32) bad_field("auth", "site_key", "must be 32 chars");
  if (f.goal < 0) bad_field("auth", "goal", "must be non-negative");
}

void validate(const AuthedFrame&) {}

void validate(const JobFrame& f) {
  if (!is_digits(f.job_id)) bad_field("job", "job_id", "must be decimal digits");
  if (f.blob.size() != 152 || !is_lower_hex(f.blob)) {
    bad_field("job", "blob", "must be 152 lowercase hex chars");
  }
  if (f.target.size() != 8 || !is_lower_hex(f.target)) {
    bad_field("job", "target", "must be 8 lowercase hex chars");
  }
}

void validate(const SubmitFrame& f) {
  if (!is_digits(f.job_id)) bad_field("submit", "job_id", "must be decimal digits");
  if (f.nonce.size() != 8 || !is_lower_hex(f.nonce)) {
    bad_field("submit", "nonce", "must be 8 lowercase hex chars");
  }
  if (f.result.size() != 64 || !is_hex(f.result)) {
    bad_field("submit", "result", "must be 64 hex chars");
  }
}

void validate(const HashAcceptFrame&) {}

const ordered_json* find_key(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string require_string(const ordered_json& params, const char* frame,
                           const char* key) {
  const ordered_json* v = find_key(params, key);
  if (!v) bad_field(frame, key, "missing");
  if (!v->is_string()) bad_field(frame, key, "must be a string");
  return v->get<std::string>();
}

std::uint64_t require_uint(const ordered_json& params, const char* frame,
                           const char* key) {
  const ordered_json* v = find_key(params, key);
  if (!v) bad_field(frame, key, "missing");
  if (!v->is_number_integer()) bad_field(frame, key, "must be an integer");
  if (!v->is_number_unsigned() && v->get<std::int64_t>() < 0) {
    bad_field(frame, key, "must be non-negative");
  }
  return v->get<std::uint64_t>();
}

}  // namespace

UnknownFrameError::UnknownFrameError(std::string frame_type)
    : CodecError("unknown frame type: " + frame_type),
      frame_type_(std::move(frame_type)) {}

std::string_view frame_type_name(const Frame& frame) {
  struct Namer {
    std::string_view operator()(const AuthFrame&) const { return "auth"; }
    std::string_view operator()(const AuthedFrame&) const { return "authed"; }
    std::string_view operator()(const JobFrame&) const { return "job"; }
    std::string_view operator()(const SubmitFrame&) const { return "submit"; }
    std::string_view operator()(const HashAcceptFrame&) const {
      return "hash_accept";
    }
  };
  return std::visit(Namer{}, frame);
}

std::string encode(const Frame& frame) {
  ordered_json envelope;
  envelope["type"] = std::string(frame_type_name(frame));
  ordered_json params;

  if (const auto* f = std::get_if<AuthFrame>(&frame)) {
    validate(*f);
    params["site_key"] = f->site_key;
    params["type"] = f->auth_type;
    if (f->user) {
      params["user"] = *f->user;
    } else {
      params["user"] = nullptr;
    }
    params["goal"] = f->goal;
  } else if (const auto* f = std::get_if<AuthedFrame>(&frame)) {
    validate(*f);
    params["token"] = f->token;
    params["hashes"] = f->hashes;
  } else if (const auto* f = std::get_if<JobFrame>(&frame)) {
    validate(*f);
    params["job_id"] = f->job_id;
    params["blob"] = f->blob;
    params["target"] = f->target;
  } else if (const auto* f = std::get_if<SubmitFrame>(&frame)) {
    validate(*f);
    params["job_id"] = f->job_id;
    params["nonce"] = f->nonce;
    params["result"] = f->result;
  } else if (const auto* f = std::get_if<HashAcceptFrame>(&frame)) {
    validate(*f);
    params["hashes"] = f->hashes;
  }

  envelope["params"] = std::move(params);
  return envelope.dump();
}

Frame decode(std::string_view bytes) {
  ordered_json envelope = ordered_json::parse(bytes, nullptr, false);
  if (envelope.is_discarded() || !envelope.is_object()) {
    throw MalformedFrameError("frame is not a JSON object");
  }
  const ordered_json* type = find_key(envelope, "type");
  if (!type || !type->is_string()) {
    throw MalformedFrameError("frame: missing string \"type\"");
  }
  const std::string type_name = type->get<std::string>();
  const ordered_json* params_ptr = find_key(envelope, "params");
  ordered_json params = params_ptr ? *params_ptr : ordered_json::object();
  if (!params.is_object()) {
    throw MalformedFrameError(type_name + ".params: must be an object");
  }

  if (type_name == "auth") {
    AuthFrame f;
    f.site_key = require_string(params, "auth", "site_key");
    f.auth_type = require_string(params, "auth", "type");
    if (const ordered_json* user = find_key(params, "user")) {
      if (user->is_string()) {
        f.user = user->get<std::string>();
      } else if (!user->is_null()) {
        bad_field("auth", "user", "must be a string or null");
      }
    }
    if (const ordered_json* goal = find_key(params, "goal")) {
      if (!goal->is_number_integer()) bad_field("auth", "goal", "must be an integer");
      f.goal = goal->get<std::int64_t>();
    }
    validate(f);
    return f;
  }
  if (type_name == "authed") {
    AuthedFrame f;
    f.token = require_string(params, "authed", "token");
    f.hashes = require_uint(params, "authed", "hashes");
    return f;
  }
  if (type_name == "job") {
    JobFrame f;
    f.job_id = require_string(params, "job", "job_id");
    f.blob = require_string(params, "job", "blob");
    f.target = require_string(params, "job", "target");
    validate(f);
    return f;
  }
  if (type_name == "submit") {
    SubmitFrame f;
    f.job_id = require_string(params, "submit", "job_id");
    f.nonce = require_string(params, "submit", "nonce");
    f.result = require_string(params, "submit", "result");
    validate(f);
    return f;
  }
  if (type_name == "hash_accept") {
    HashAcceptFrame f;
    f.hashes = require_uint(params, "hash_accept", "hashes");
    return f;
  }
  throw UnknownFrameError(type_name);
}

}  // namespace cjlab::protocol
