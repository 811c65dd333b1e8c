#include "cjlab/economics/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cjlab::economics {

void MarketConstants::validate() const {
  if (!(pay_rate_xmr_per_mhash > 0.0) || !(xmr_price_usd > 0.0)) {
    throw std::invalid_argument("market constants must be strictly positive");
  }
}

Profit profit(double hashes_per_sec, double dt_minutes,
              const MarketConstants& constants) {
  constants.validate();
  if (hashes_per_sec < 0.0 || dt_minutes < 0.0) {
    throw std::invalid_argument("profit: negative inputs");
  }
  const double total_hashes = hashes_per_sec * dt_minutes * 60.0;
  Profit p;
  p.xmr = constants.pay_rate_xmr_per_mhash * total_hashes / 1e6;
  p.usd = p.xmr * constants.xmr_price_usd;
  return p;
}

double loss_usd(double cost_usd_per_wh, double watts,
                double recharge_h_per_pct, double baseline_pct,
                double mined_pct) {
  if (cost_usd_per_wh <= 0.0 || watts <= 0.0 || recharge_h_per_pct <= 0.0) {
    throw std::invalid_argument("loss: device parameters must be positive");
  }
  if (mined_pct < 0.0 || mined_pct > baseline_pct) {
    throw std::invalid_argument(
        "loss: battery after mining must satisfy 0 <= b_c <= b_n");
  }
  return cost_usd_per_wh * watts * recharge_h_per_pct *
         (baseline_pct - mined_pct);
}

XmrTime time_to_one_xmr(double hashes_per_sec,
                        const MarketConstants& constants) {
  constants.validate();
  if (!(hashes_per_sec > 0.0)) {
    throw std::invalid_argument("time_to_one_xmr: hash rate must be > 0");
  }
  XmrTime t;
  t.hashes_needed = 1e6 / constants.pay_rate_xmr_per_mhash;
  t.years = t.hashes_needed / hashes_per_sec / kSecondsPerYear;
  return t;
}

BlockStats block_stats(std::string_view target_hex256,
                       double network_hash_rate) {
  if (!(network_hash_rate > 0.0)) {
    throw std::invalid_argument("block_stats: hash rate must be > 0");
  }
  if (target_hex256.empty() || target_hex256.size() > 64) {
    throw std::invalid_argument("block_stats: target must be 1..64 hex chars");
  }
  double value = 0.0;
  for (char c : target_hex256) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = 10 + (c - 'a');
    else if (c >= 'A' && c <= 'F') digit = 10 + (c - 'A');
    else throw std::invalid_argument("block_stats: non-hex character");
    value = value * 16.0 + digit;
  }
  if (value == 0.0) {
    throw std::invalid_argument("block_stats: target must be nonzero");
  }
  BlockStats stats;
  stats.probability = std::ldexp(value, -256);
  stats.expected_hashes = 1.0 / stats.probability;
  stats.expected_seconds = stats.expected_hashes / network_hash_rate;
  return stats;
}

}  // namespace cjlab::economics
