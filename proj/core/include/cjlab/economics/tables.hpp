#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjlab/economics/model.hpp"

namespace cjlab::economics {

/// One throttle operating point of a device: measured hash rate and the
/// battery level left after a session at that throttle.
struct AlphaPoint {
  double alpha = 0.0;
  double hash_rate = 0.0;  // hashes/second
  double battery_after_mining_pct = 0.0;  // b_c
};

struct DeviceProfile {
  std::string name;
  double watts = 0.0;                     // W, battery watt-hours
  double cost_usd_per_wh = 6.418e-5;      // C
  double recharge_h_per_pct = 0.015;      // t_r
  double baseline_battery_pct = 0.0;      // b_n after the session, no mining
  double session_minutes = 0.0;           // session length
  std::vector<AlphaPoint> points;

  const AlphaPoint& point(double alpha) const;  // throws if absent
};

struct SessionEconomics {
  std::string device;
  double alpha = 0.0;
  double hash_rate = 0.0;
  double profit_xmr = 0.0;
  double profit_usd = 0.0;
  double loss_usd = 0.0;
  double gap_usd = 0.0;  // loss - profit, exactly
  double years_to_one_xmr = 0.0;
};

/// The three benchmarked devices with their published parameters. The
/// electricity cost and recharge rate were published for the Windows
/// machine only and are applied to all profiles.
std::vector<DeviceProfile> builtin_device_profiles();

/// Profiles from a JSON document (same schema as data/device_profiles.json).
/// Throws std::runtime_error on schema violations.
std::vector<DeviceProfile> load_device_profiles(std::istream& is);

/// One economics row per (device, alpha). Every requested alpha must exist
/// in every profile; a missing operating point throws std::invalid_argument
/// naming device and alpha.
std::vector<SessionEconomics> device_table(
    std::span<const DeviceProfile> profiles, std::span<const double> alphas,
    const MarketConstants& constants = {});

std::string device_table_csv(std::span<const SessionEconomics> rows);

// ---------------------------------------------------------------------------

struct WebsiteProfile {
  std::string name;
  double monthly_visits = 0.0;
  double avg_visit_seconds = 0.0;
  double visitor_hash_rate = 20.0;  // hashes/second per visitor
};

/// Monthly cryptojacking revenue: visits * duration * rate hashes, paid at
/// the market constants.
double website_profit_usd(const WebsiteProfile& profile,
                          const MarketConstants& constants = {});

/// Reference row for the shipped website datasets. `ads_revenue_usd` is an
/// external monthly figure (reference data, never computed here).
struct WebsiteRow {
  WebsiteProfile profile;
  int global_rank = 0;
  std::optional<double> ads_revenue_usd;
};

std::vector<WebsiteRow> builtin_top_websites();      // global top 10
std::vector<WebsiteRow> builtin_mining_websites();   // top 10 of the corpus

std::string website_table_csv(std::span<const WebsiteRow> rows,
                              const MarketConstants& constants = {});

/// "mm:ss" -> seconds. Seconds above 59 are accepted as printed in the
/// source tables. Throws std::invalid_argument on anything else.
double parse_duration_mmss(std::string_view text);

}  // namespace cjlab::economics
