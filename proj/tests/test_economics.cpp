#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cjlab/economics/model.hpp"
#include "cjlab/economics/tables.hpp"

using namespace cjlab::economics;

TEST_CASE("profit: session formula under the seconds convention") {
  const Profit p = profit(21.0, 85.0);
  // brute: 2.894e-5 * (21 * 85 * 60) / 1e6
  const double expected = 2.894e-5 * (21.0 * 85.0 * 60.0) / 1e6;
  CHECK(p.xmr == doctest::Approx(expected).epsilon(1e-12));
  CHECK(p.usd == p.xmr * 200.0);
  CHECK(p.xmr > 3.0e-6);
  CHECK(p.xmr < 3.3e-6);

  CHECK(profit(0.0, 85.0).xmr == 0.0);
  CHECK(profit(0.0, 85.0).usd == 0.0);
  CHECK_THROWS_AS(profit(-1.0, 5.0), std::invalid_argument);

  // linearity and monotonicity in both arguments
  CHECK(profit(42.0, 85.0).xmr ==
        doctest::Approx(2.0 * p.xmr).epsilon(1e-12));
  CHECK(profit(21.0, 170.0).xmr ==
        doctest::Approx(2.0 * p.xmr).epsilon(1e-12));
}

TEST_CASE("loss: battery drain pricing") {
  const double L = loss_usd(6.418e-5, 65.0, 0.015, 82.0, 10.0);
  CHECK(L == doctest::Approx(6.418e-5 * 65.0 * 0.015 * 72.0).epsilon(1e-12));
  CHECK(L == doctest::Approx(4.5055e-3).epsilon(1e-3));

  CHECK(loss_usd(6.418e-5, 65.0, 0.015, 82.0, 82.0) == 0.0);
  CHECK_THROWS_AS(loss_usd(6.418e-5, 65.0, 0.015, 82.0, 83.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(loss_usd(0.0, 65.0, 0.015, 82.0, 10.0),
                  std::invalid_argument);

  // the published parameters applied to the second device's measurements
  const double linux_loss = loss_usd(6.418e-5, 41.0, 0.015, 70.0, 3.0);
  CHECK(linux_loss ==
        doctest::Approx(6.418e-5 * 41.0 * 0.015 * 67.0).epsilon(1e-12));
  // loss is linear in the drained percentage
  CHECK(loss_usd(6.418e-5, 41.0, 0.015, 70.0, 36.5) ==
        doctest::Approx(linux_loss / 2.0 + 0.0).epsilon(1e-9));
}

TEST_CASE("time to one coin") {
  const XmrTime t = time_to_one_xmr(21.0);
  CHECK(t.hashes_needed == doctest::Approx(1e6 / 2.894e-5).epsilon(1e-12));
  CHECK(t.hashes_needed == doctest::Approx(3.455e10).epsilon(0.005));
  CHECK(t.years > 47.0);
  CHECK(t.years < 55.0);

  const XmrTime doubled = time_to_one_xmr(42.0);
  CHECK(doubled.years == doctest::Approx(t.years / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(time_to_one_xmr(0.0), std::invalid_argument);
}

TEST_CASE("device table: rows, identities and guards") {
  const auto profiles = builtin_device_profiles();
  REQUIRE(profiles.size() == 3);
  const double alphas[] = {0.1, 0.5, 0.9};
  const auto rows = device_table(profiles, alphas);
  REQUIRE(rows.size() == 9);

  for (const SessionEconomics& row : rows) {
    CHECK(row.gap_usd == row.loss_usd - row.profit_usd);  // exact by construction
    CHECK(row.profit_usd >= 0.0);
    CHECK(row.loss_usd >= 0.0);
  }

  // windows at the lowest throttle, against direct evaluation
  const SessionEconomics& w01 = rows[0];
  CHECK(w01.device == "windows");
  CHECK(w01.alpha == 0.1);
  CHECK(w01.profit_usd == doctest::Approx(6.2e-4).epsilon(0.01));
  CHECK(w01.loss_usd == doctest::Approx(4.5054e-3).epsilon(1e-3));
  CHECK(w01.gap_usd == doctest::Approx(3.886e-3).epsilon(1e-2));

  // the phone at heavy throttle still loses money
  const SessionEconomics& android09 = rows[8];
  CHECK(android09.device == "android");
  CHECK(android09.alpha == 0.9);
  CHECK(android09.gap_usd > 0.0);

  const double missing[] = {0.25};
  CHECK_THROWS_AS(device_table(profiles, missing), std::invalid_argument);

  const std::string csv = device_table_csv(rows);
  CHECK(csv.find("device,alpha,h,P_xmr,P_usd,L_usd,gap_usd,T_years") == 0);
}

TEST_CASE("device profiles: json round trip") {
  std::istringstream json(R"({
    "devices": [
      {"name": "tablet", "watts": 12.5, "baseline_battery_pct": 90,
       "session_minutes": 60, "recharge_h_per_pct": 0.02,
       "points": [{"alpha": 0.1, "hash_rate": 8, "battery_after_mining_pct": 40}]}
    ]})");
  const auto profiles = load_device_profiles(json);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].name == "tablet");
  CHECK(profiles[0].recharge_h_per_pct == 0.02);
  CHECK(profiles[0].cost_usd_per_wh == 6.418e-5);  // default applies
  CHECK(profiles[0].point(0.1).hash_rate == 8.0);
  CHECK_THROWS_AS(profiles[0].point(0.5), std::invalid_argument);

  std::istringstream broken(R"({"devices": [{"name": "x"}]})");
  CHECK_THROWS_AS(load_device_profiles(broken), std::runtime_error);
}

TEST_CASE("website profit: published traffic reproduces the revenue table") {
  const auto top = builtin_top_websites();
  REQUIRE(top.size() == 10);

  const WebsiteRow& google = top[0];
  CHECK(google.profile.name == "google.com");
  CHECK(google.profile.avg_visit_seconds == 443.0);
  CHECK(website_profit_usd(google.profile) ==
        doctest::Approx(2.41e6).epsilon(0.02));

  const WebsiteRow& youtube = top[1];
  CHECK(website_profit_usd(youtube.profile) ==
        doctest::Approx(3.65e6).epsilon(0.02));

  const auto mining = builtin_mining_websites();
  CHECK(website_profit_usd(mining[0].profile) ==
        doctest::Approx(2746.9).epsilon(0.01));

  WebsiteProfile none;
  none.name = "ghost";
  none.monthly_visits = 0.0;
  none.avg_visit_seconds = 100.0;
  CHECK(website_profit_usd(none) == 0.0);

  // folding visits * duration into one session reproduces profit() exactly
  const double folded_minutes =
      google.profile.monthly_visits * google.profile.avg_visit_seconds / 60.0;
  const Profit same = profit(google.profile.visitor_hash_rate, folded_minutes);
  CHECK(website_profit_usd(google.profile) ==
        doctest::Approx(same.usd).epsilon(1e-12));

  const std::string csv = website_table_csv(top);
  CHECK(csv.find("google.com,1,") != std::string::npos);
  CHECK(csv.find("7940000000") != std::string::npos);  // reference ads revenue
}

TEST_CASE("block statistics") {
  // target = 2^255: half the hash space
  const std::string half = "8" + std::string(63, '0');
  BlockStats s = block_stats(half, 1.0);
  CHECK(s.probability == 0.5);
  CHECK(s.expected_hashes == 2.0);
  CHECK(s.expected_seconds == 2.0);

  BlockStats faster = block_stats(half, 2.0);
  CHECK(faster.expected_seconds == s.expected_seconds / 2.0);

  // target = 2^224 at a megahash network
  const std::string t224 = "1" + std::string(56, '0');
  BlockStats m = block_stats(t224, 1e6);
  CHECK(m.expected_hashes == doctest::Approx(4294967296.0).epsilon(1e-12));
  CHECK(m.expected_seconds == doctest::Approx(4294.967296).epsilon(1e-12));

  CHECK_THROWS_AS(block_stats("0", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(block_stats("", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(block_stats("xyz", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(block_stats(half, 0.0), std::invalid_argument);
}

TEST_CASE("duration parsing") {
  CHECK(parse_duration_mmss("07:23") == 443.0);
  CHECK(parse_duration_mmss("20:05") == 1205.0);
  CHECK(parse_duration_mmss("02:98") == 218.0);  // as printed in the source
  CHECK_THROWS_AS(parse_duration_mmss("443"), std::invalid_argument);
  CHECK_THROWS_AS(parse_duration_mmss("a:b"), std::invalid_argument);
}

TEST_CASE("market constants validate") {
  MarketConstants bad;
  bad.xmr_price_usd = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(profit(21.0, 85.0, bad), std::invalid_argument);
}
