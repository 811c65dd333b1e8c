#include "cjlab/economics/tables.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "cjlab/featurecsv.hpp"

namespace cjlab::economics {

namespace {

WebsiteRow site(std::string name, int rank, double visits,
                std::string_view duration, std::optional<double> ads) {
  WebsiteRow row;
  row.profile.name = std::move(name);
  row.profile.monthly_visits = visits;
  row.profile.avg_visit_seconds = parse_duration_mmss(duration);
  row.global_rank = rank;
  row.ads_revenue_usd = ads;
  return row;
}

}  // namespace

const AlphaPoint& DeviceProfile::point(double alpha) const {
  for (const AlphaPoint& p : points) {
    if (p.alpha == alpha) return p;
  }
  throw std::invalid_argument("device '" + name + "' has no alpha=" +
                              format_number(alpha) + " operating point");
}

std::vector<DeviceProfile> builtin_device_profiles() {
  std::vector<DeviceProfile> profiles(3);

  profiles[0].name = "windows";
  profiles[0].watts = 65.0;
  profiles[0].baseline_battery_pct = 82.0;
  profiles[0].session_minutes = 85.0;
  profiles[0].points = {{0.1, 21.0, 10.0}, {0.5, 14.0, 19.0}, {0.9, 5.0, 57.0}};

  profiles[1].name = "linux";
  profiles[1].watts = 41.0;
  profiles[1].baseline_battery_pct = 70.0;
  profiles[1].session_minutes = 71.0;
  profiles[1].points = {{0.1, 26.0, 3.0}, {0.5, 16.0, 22.0}, {0.9, 5.0, 54.0}};

  profiles[2].name = "android";
  profiles[2].watts = 9.9;
  profiles[2].baseline_battery_pct = 76.0;
  profiles[2].session_minutes = 163.0;
  profiles[2].points = {{0.1, 5.0, 11.0}, {0.5, 3.0, 32.0}, {0.9, 2.0, 49.0}};

  return profiles;
}

std::vector<DeviceProfile> load_device_profiles(std::istream& is) {
  nlohmann::json doc = nlohmann::json::parse(is, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("devices") ||
      !doc["devices"].is_array()) {
    throw std::runtime_error("device profiles: expected {\"devices\": [...]}");
  }
  std::vector<DeviceProfile> profiles;
  for (const auto& item : doc["devices"]) {
    DeviceProfile p;
    try {
      p.name = item.at("name").get<std::string>();
      p.watts = item.at("watts").get<double>();
      p.baseline_battery_pct = item.at("baseline_battery_pct").get<double>();
      p.session_minutes = item.at("session_minutes").get<double>();
      if (item.contains("cost_usd_per_wh")) {
        p.cost_usd_per_wh = item["cost_usd_per_wh"].get<double>();
      }
      if (item.contains("recharge_h_per_pct")) {
        p.recharge_h_per_pct = item["recharge_h_per_pct"].get<double>();
      }
      for (const auto& pt : item.at("points")) {
        p.points.push_back(AlphaPoint{
            pt.at("alpha").get<double>(), pt.at("hash_rate").get<double>(),
            pt.at("battery_after_mining_pct").get<double>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("device profiles: ") + e.what());
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

std::vector<SessionEconomics> device_table(
    std::span<const DeviceProfile> profiles, std::span<const double> alphas,
    const MarketConstants& constants) {
  std::vector<SessionEconomics> rows;
  for (const DeviceProfile& device : profiles) {
    for (double alpha : alphas) {
      const AlphaPoint& pt = device.point(alpha);
      SessionEconomics row;
      row.device = device.name;
      row.alpha = alpha;
      row.hash_rate = pt.hash_rate;
      const Profit p = profit(pt.hash_rate, device.session_minutes, constants);
      row.profit_xmr = p.xmr;
      row.profit_usd = p.usd;
      row.loss_usd =
          loss_usd(device.cost_usd_per_wh, device.watts,
                   device.recharge_h_per_pct, device.baseline_battery_pct,
                   pt.battery_after_mining_pct);
      row.gap_usd = row.loss_usd - row.profit_usd;
      row.years_to_one_xmr = time_to_one_xmr(pt.hash_rate, constants).years;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string device_table_csv(std::span<const SessionEconomics> rows) {
  std::ostringstream os;
  os << "device,alpha,h,P_xmr,P_usd,L_usd,gap_usd,T_years\n";
  for (const SessionEconomics& r : rows) {
    os << r.device << ',' << format_number(r.alpha) << ','
       << format_number(r.hash_rate) << ',' << format_number(r.profit_xmr)
       << ',' << format_number(r.profit_usd) << ','
       << format_number(r.loss_usd) << ',' << format_number(r.gap_usd) << ','
       << format_number(r.years_to_one_xmr) << '\n';
  }
  return os.str();
}

double website_profit_usd(const WebsiteProfile& profile,
                          const MarketConstants& constants) {
  constants.validate();
  if (profile.monthly_visits < 0.0 || profile.avg_visit_seconds < 0.0 ||
      profile.visitor_hash_rate <= 0.0) {
    throw std::invalid_argument("website profile: fields must be positive");
  }
  const double hashes = profile.monthly_visits * profile.avg_visit_seconds *
                        profile.visitor_hash_rate;
  return constants.pay_rate_xmr_per_mhash * hashes / 1e6 *
         constants.xmr_price_usd;
}

std::vector<WebsiteRow> builtin_top_websites() {
  return {
      site("google.com", 1, 47.09e9, "07:23", 7.94e9),
      site("youtube.com", 2, 26.22e9, "20:05", 291e6),
      site("baidu.com", 3, 19.08e9, "08:56", 234e6),
      site("wikipedia.org", 4, 6.55e9, "03:51", 160e6),
      site("reddit.com", 5, 1.69e9, "10:38", std::nullopt),
      site("facebook.com", 6, 29.87e9, "13:28", 3.3e9),
      site("yahoo.com", 7, 5.21e9, "06:19", 250e6),
      site("google.co.in", 8, 5.33e9, "07:46", 1.1e9),
      site("qq.com", 9, 3.66e9, "04:02", std::nullopt),
      site("taobao.com", 10, 1.73e9, "06:25", std::nullopt),
  };
}

std::vector<WebsiteRow> builtin_mining_websites() {
  return {
      site("firefoxchina.cn", 1088, 87.24e6, "04:32", std::nullopt),
      site("baytpbportal.fi", 1613, 12.16e6, "05:36", std::nullopt),
      site("mejortorrent.com", 1800, 22.83e6, "04:50", std::nullopt),
      site("moonbit.co.in", 2761, 15.68e6, "28:37", std::nullopt),
      site("shareae.com", 3331, 5.86e6, "04:49", std::nullopt),
      site("maalaimalar.com", 4090, 3.38e6, "03:26", std::nullopt),
      site("icouchtuner.to", 6084, 7.96e6, "02:98", std::nullopt),
      site("paperpk.com", 6794, 3.01e6, "03:23", std::nullopt),
      site("scamadviser.com", 6847, 4.20e6, "02:08", std::nullopt),
      site("seriesdanko.to", 7253, 5.44e6, "04:59", std::nullopt),
  };
}

std::string website_table_csv(std::span<const WebsiteRow> rows,
                              const MarketConstants& constants) {
  std::ostringstream os;
  os << "website,global_rank,monthly_visits,avg_visit_seconds,"
        "hash_rate,P_cj_usd,P_ads_usd\n";
  for (const WebsiteRow& row : rows) {
    os << row.profile.name << ',' << row.global_rank << ','
       << format_number(row.profile.monthly_visits) << ','
       << format_number(row.profile.avg_visit_seconds) << ','
       << format_number(row.profile.visitor_hash_rate) << ','
       << format_number(website_profit_usd(row.profile, constants)) << ',';
    if (row.ads_revenue_usd) os << format_number(*row.ads_revenue_usd);
    os << '\n';
  }
  return os.str();
}

double parse_duration_mmss(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon + 1 >= text.size()) {
    throw std::invalid_argument("duration must be mm:ss");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == colon) continue;
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("duration must be mm:ss");
    }
  }
  const double minutes = std::stod(std::string(text.substr(0, colon)));
  const double seconds = std::stod(std::string(text.substr(colon + 1)));
  return minutes * 60.0 + seconds;
}

}  // namespace cjlab::economics
