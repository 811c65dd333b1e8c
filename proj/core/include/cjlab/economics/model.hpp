#pragma once

#include <string>
#include <string_view>

namespace cjlab::economics {

/// Pool payout constants: 2.894e-5 XMR per million hashes, 200 USD per XMR.
/// Both are overridable knobs for what-if runs.
struct MarketConstants {
  double pay_rate_xmr_per_mhash = 2.894e-5;
  double xmr_price_usd = 200.0;

  void validate() const;  // throws std::invalid_argument unless both > 0
};

struct Profit {
  double xmr = 0.0;
  double usd = 0.0;
};

/// Session profit for a device hashing at `hashes_per_sec` for `dt_minutes`.
/// The session length enters in seconds: P = rate * (h * dt_s) / 1e6.
/// (Quoted device tables only cohere with the per-second reading.)
Profit profit(double hashes_per_sec, double dt_minutes,
              const MarketConstants& constants = {});

/// Eq.-2 battery loss: C * W * t_r * (b_n - b_c), in USD.
/// Throws std::invalid_argument when b_c > b_n or b_c < 0 — mining cannot
/// leave the battery fuller than the no-mining baseline.
double loss_usd(double cost_usd_per_wh, double watts,
                double recharge_h_per_pct, double baseline_pct,
                double mined_pct);

struct XmrTime {
  double hashes_needed = 0.0;  // 1e6 / pay rate
  double years = 0.0;          // at the given device rate
};

XmrTime time_to_one_xmr(double hashes_per_sec,
                        const MarketConstants& constants = {});

struct BlockStats {
  double probability = 0.0;       // target / 2^256
  double expected_hashes = 0.0;   // 1 / probability
  double expected_seconds = 0.0;  // expected_hashes / network rate
};

/// Block-level PoW relations for a 256-bit target given as a hex string of
/// up to 64 digits. Throws std::invalid_argument on a zero target, a
/// malformed string, or a non-positive hash rate.
BlockStats block_stats(std::string_view target_hex256,
                       double network_hash_rate);

inline constexpr double kSecondsPerYear = 31'536'000.0;

}  // namespace cjlab::economics
