#include "core/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/traffic.hpp"

namespace uavhet {

void validate(const RunPlan& plan) {
  require(plan.epoch_steps >= 1, ErrorCode::kConfig, "epoch_steps must be >= 1");
  require(plan.horizon_steps >= plan.epoch_steps, ErrorCode::kConfig,
          "horizon_steps must be >= epoch_steps");
  require(std::isfinite(plan.step_seconds) && plan.step_seconds > 0.0, ErrorCode::kConfig,
          "step_seconds must be > 0");
  require(plan.replications >= 1, ErrorCode::kConfig, "replications must be >= 1");
  require(plan.mapper.max_iters >= 1, ErrorCode::kConfig, "mapper_max_iters must be >= 1");
  require(std::isfinite(plan.mapper.tolerance) && plan.mapper.tolerance >= 0.0, ErrorCode::kConfig,
          "mapper_tolerance must be >= 0");
}

bool RunResult::ok() const {
  return std::none_of(replications.begin(), replications.end(),
                      [](const ReplicationResult& r) { return r.error.has_value(); });
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto threads = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex guard;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(guard);
            if (!first) first = std::current_exception();
          }
        }
      });
    }
  }
  if (first) std::rethrow_exception(first);
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::uint32_t replication) {
  return derive_seed(base_seed, 0x7265706cULL, replication);
}

Thresholds thresholds_of(const Scenario& s) {
  return {s.delay_threshold_s, s.sinr_threshold, s.se_coverage_threshold};
}

namespace {

constexpr std::size_t kDemandBins = 360;

struct CellContext {
  const Scenario* scenario = nullptr;
  Point2 center;
  double radius = 0.0;
  ChannelParams uav_ch;
  ChannelParams mbs_ch;
  TrafficParams traffic;
  Point3 mbs_position;
  std::vector<UserEquipment> users;
  std::vector<std::size_t> sector_of_user;
  std::vector<double> mbs_sinr;
};

void check_finite(double v, const char* what) {
  if (std::isnan(v)) fail(ErrorCode::kNumeric, std::string("NaN encountered in ") + what);
}

/// Which transmitter a user attaches to for one epoch.
struct UserLink {
  Server server = Server::kMbs;
  std::int32_t uav = -1;
  double sinr = 0.0;
  double distance = 0.0;
};

/// Cost model of one cell for one epoch. UAVs hover over the zone they map to;
/// pair costs use the distance from where each UAV currently is.
class CellMappingProblem final : public MappingProblem {
 public:
  CellMappingProblem(const CellContext& ctx, const std::vector<Zone>& zones,
                     std::span<const std::size_t> zone_of_user, std::span<const double> rates,
                     std::vector<Point3> current, double step_seconds)
      : ctx_(ctx), zones_(zones), zone_of_user_(zone_of_user), current_(std::move(current)) {
    const Scenario& s = *ctx.scenario;
    const std::size_t zc = zones.size();
    zone_users_.resize(zc);
    users_.assign(zc, 0);
    requests_.assign(zc, 0);
    centroid_.resize(zc);
    spread_.assign(zc, 0.0);
    hover_.resize(zc);
    std::vector<double> expected(zc, 0.0);
    for (std::size_t z = 0; z < zc; ++z) {
      for (std::size_t u : zones[z].users) {
        zone_users_[z].push_back(ctx.users[u].position);
        expected[z] += rates[u] * step_seconds;
      }
      users_[z] = static_cast<std::int64_t>(zones[z].users.size());
      requests_[z] = std::llround(expected[z]);
      const Point2 fallback = polygon_centroid(zones[z].polygon);
      hover_[z] = uav_position_for_zone(zone_users_[z], fallback, s.altitude_min_ft,
                                        s.altitude_max_ft, ctx.uav_ch.los_min_elevation_rad,
                                        s.los_coverage_fraction);
      centroid_[z] = hover_[z].ground();
      double acc = 0.0;
      for (const auto& p : zone_users_[z]) acc += distance(centroid_[z], p);
      spread_[z] = zone_users_[z].empty() ? 0.0 : acc / static_cast<double>(zone_users_[z].size());
    }
    committed_hover_ = hover_;
    tr_share_ = static_cast<double>(s.users_per_cell_max) / static_cast<double>(zc);
  }

  std::size_t uav_count() const override { return current_.size(); }
  std::size_t zone_count() const override { return zones_.size(); }

  std::vector<double> area_costs(const Pairing& current) override {
    return evaluate(current).area_costs;
  }

  std::vector<double> uav_costs(const Pairing& current) override {
    const Evaluation ev = evaluate(current);
    std::vector<double> out(current_.size());
    for (std::size_t i = 0; i < current_.size(); ++i) {
      out[i] = current[i] ? ev.pair_costs[i] : roaming_cost(i, ev.df_uav);
    }
    return out;
  }

  double overall_cost(const Pairing& candidate) override { return evaluate(candidate).overall; }

  void reset(Rng& rng) override {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t z = 0; z < hover_.size(); ++z) {
      const double r = 0.25 * spread_[z] * std::sqrt(unit(rng));
      const double a = kTwoPi * unit(rng);
      hover_[z].x = centroid_[z].x + r * std::cos(a);
      hover_[z].y = centroid_[z].y + r * std::sin(a);
    }
  }

  void commit(const Pairing&) override { committed_hover_ = hover_; }
  void restore() override { hover_ = committed_hover_; }

  std::vector<Point3> positions(const Pairing& pairing) const {
    std::vector<Point3> pos = current_;
    std::vector<std::size_t> per_zone(zones_.size(), 0);
    for (const auto& z : pairing) {
      if (z) ++per_zone[*z];
    }
    std::vector<std::size_t> seen(zones_.size(), 0);
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      if (!pairing[i]) continue;
      const std::size_t z = *pairing[i];
      Point3 p = hover_[z];
      if (per_zone[z] > 1) {
        const double r = std::max(50.0, 0.25 * spread_[z]);
        const double a = kTwoPi * static_cast<double>(seen[z]++) / static_cast<double>(per_zone[z]);
        p.x += r * std::cos(a);
        p.y += r * std::sin(a);
      }
      pos[i] = p;
    }
    return pos;
  }

  /// Per-user attachment under a pairing: the nearest UAV mapped to the
  /// user's zone when it has line of sight, the macro station otherwise.
  std::vector<UserLink> links(const Pairing& pairing) const {
    const std::vector<Point3> pos = positions(pairing);
    std::vector<Point3> tx;
    std::vector<std::int32_t> tx_uav;
    std::vector<std::vector<std::size_t>> zone_tx(zones_.size());
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      if (!pairing[i]) continue;
      zone_tx[*pairing[i]].push_back(tx.size());
      tx.push_back(pos[i]);
      tx_uav.push_back(static_cast<std::int32_t>(i));
    }
    std::vector<UserLink> out(ctx_.users.size());
    for (std::size_t u = 0; u < ctx_.users.size(); ++u) {
      const Point2 ue = ctx_.users[u].position;
      UserLink link{Server::kMbs, -1, ctx_.mbs_sinr[u], distance(ctx_.mbs_position, ue)};
      const std::size_t z = zone_of_user_[u];
      if (z != kNoZone && !zone_tx[z].empty()) {
        std::size_t best = zone_tx[z].front();
        double best_d = distance(tx[best], ue);
        for (std::size_t k : zone_tx[z]) {
          const double d = distance(tx[k], ue);
          if (d < best_d) {
            best_d = d;
            best = k;
          }
        }
        const auto geo = LinkGeometry::between(tx[best], ue);
        if (los_available(geo, ctx_.uav_ch)) {
          link = {Server::kUav, tx_uav[best], sinr(ue, best, tx, ctx_.uav_ch), geo.distance};
        }
      }
      check_finite(link.sinr, "SINR");
      out[u] = link;
    }
    return out;
  }

  CostReport report(const Pairing& pairing) const {
    const Evaluation ev = evaluate(pairing);
    const Scenario& s = *ctx_.scenario;
    CostReport rep;
    rep.df_uav = ev.df_uav;
    rep.cf_overall = ev.overall;
    const auto counts = count_per_zone(pairing);
    for (std::size_t z = 0; z < zones_.size(); ++z) {
      ZoneCost zc;
      zc.zone = z;
      zc.users = users_[z];
      zc.requests = requests_[z];
      zc.area_load = ev.area_loads[z];
      zc.df_area = ev.df_area[z];
      zc.cf_area = ev.area_costs[z];
      zc.uavs_assigned = counts[z];
      zc.within_average_ceiling = zc.df_area <= density_area_average(requests_[z]);
      if (counts[z] == 0) ++rep.unserved_zones;
      rep.zones.push_back(zc);
    }
    for (std::size_t i = 0; i < current_.size(); ++i) {
      UavCost uc;
      uc.uav = i;
      uc.zone = pairing[i];
      uc.df_uav = ev.df_uav;
      if (pairing[i]) {
        uc.mean_distance_m = ev.mean_distance[i];
        uc.los = ev.los[i];
        uc.cf_uav = ev.pair_costs[i];
      } else {
        uc.mean_distance_m = mean_distance_to_all(i);
        uc.cf_uav = roaming_cost(i, ev.df_uav);
      }
      rep.uavs.push_back(uc);
    }
    (void)s;
    return rep;
  }

  std::int64_t expected_requests() const {
    std::int64_t t = 0;
    for (auto r : requests_) t += r;
    return t;
  }

 private:
  struct Evaluation {
    std::vector<double> area_loads;
    std::vector<double> df_area;
    std::vector<double> area_costs;
    std::vector<double> pair_costs;
    std::vector<double> mean_distance;
    std::vector<bool> los;
    double df_uav = 0.0;
    double overall = 0.0;
  };

  std::vector<std::size_t> count_per_zone(const Pairing& p) const {
    std::vector<std::size_t> counts(zones_.size(), 0);
    for (const auto& z : p) {
      if (z) ++counts[*z];
    }
    return counts;
  }

  double mean_distance_to_all(std::size_t uav) const {
    if (ctx_.users.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& u : ctx_.users) acc += distance(current_[uav], u.position);
    return acc / static_cast<double>(ctx_.users.size());
  }

  // Cost of a UAV not yet mapped, measured against the whole cell.
  double roaming_cost(std::size_t uav, double df_uav) const {
    const Scenario& s = *ctx_.scenario;
    std::int64_t req = expected_requests();
    return cost_uav(df_uav, mean_distance_to_all(uav), ctx_.radius, s.pathloss_exp,
                    static_cast<double>(req), static_cast<double>(ctx_.users.size()), s.eta1, s.eta2,
                    true);
  }

  Evaluation evaluate(const Pairing& pairing) const {
    const Scenario& s = *ctx_.scenario;
    const std::size_t zc = zones_.size();
    Evaluation ev;
    ev.area_loads.assign(zc, 0.0);
    const auto links_now = links(pairing);
    for (std::size_t u = 0; u < links_now.size(); ++u) {
      const std::size_t z = zone_of_user_[u];
      if (z == kNoZone) continue;
      ev.area_loads[z] += user_load(links_now[u].sinr, s.offered_traffic_bps, s.bandwidth_hz).value;
    }
    double total_load = 0.0;
    for (double l : ev.area_loads) total_load += l;
    ev.df_area.resize(zc);
    ev.area_costs.resize(zc);
    for (std::size_t z = 0; z < zc; ++z) {
      ev.df_area[z] = density_area(static_cast<double>(users_[z]), tr_share_, requests_[z]);
      ev.area_costs[z] = cost_area(ev.df_area[z], ev.area_loads[z], static_cast<double>(requests_[z]),
                                   tr_share_, s.eta1, s.eta2);
      check_finite(ev.area_costs[z], "area cost");
    }
    ev.df_uav = density_uav(total_load, s.uav_count, s.uav_capacity);

    const std::size_t n = current_.size();
    ev.pair_costs.assign(n, 0.0);
    ev.mean_distance.assign(n, 0.0);
    ev.los.assign(n, true);
    std::vector<double> assigned_costs;
    for (std::size_t i = 0; i < n; ++i) {
      if (!pairing[i]) continue;
      const std::size_t z = *pairing[i];
      double acc = 0.0;
      bool any_los = zone_users_[z].empty();
      for (const auto& p : zone_users_[z]) {
        acc += distance(current_[i], p);
        if (!any_los && los_available(LinkGeometry::between(hover_[z], p), ctx_.uav_ch)) any_los = true;
      }
      ev.mean_distance[i] = zone_users_[z].empty()
                                ? distance(current_[i], hover_[z])
                                : acc / static_cast<double>(zone_users_[z].size());
      ev.los[i] = any_los;
      ev.pair_costs[i] = cost_uav(ev.df_uav, ev.mean_distance[i], ctx_.radius, s.pathloss_exp,
                                  static_cast<double>(requests_[z]), static_cast<double>(users_[z]),
                                  s.eta1, s.eta2, any_los);
      assigned_costs.push_back(ev.pair_costs[i]);
    }
    const auto counts = count_per_zone(pairing);
    ev.overall = uavhet::overall_cost(assigned_costs, ev.area_costs, counts, n);
    return ev;
  }

  const CellContext& ctx_;
  const std::vector<Zone>& zones_;
  std::span<const std::size_t> zone_of_user_;
  std::vector<Point3> current_;
  std::vector<std::vector<Point2>> zone_users_;
  std::vector<std::int64_t> users_;
  std::vector<std::int64_t> requests_;
  std::vector<Point2> centroid_;
  std::vector<double> spread_;
  std::vector<Point3> hover_;
  std::vector<Point3> committed_hover_;
  double tr_share_ = 1.0;
};

void simulate_cell(const Scenario& s, const RunPlan& plan, std::uint32_t replication,
                   std::uint32_t cell, std::uint64_t seed, bool keep_records,
                   std::vector<StepRecord>& records, std::vector<EpochTrace>& traces) {
  Rng placement = make_stream(seed, cell, Stream::kPlacement);
  Rng demand_rng = make_stream(seed, cell, Stream::kDemand);
  Rng arrivals = make_stream(seed, cell, Stream::kArrivals);
  Rng mapper_rng = make_stream(seed, cell, Stream::kMapper);

  CellContext ctx;
  ctx.scenario = &s;
  ctx.center = {0.0, 0.0};
  ctx.radius = s.cell_radius_m;
  ctx.uav_ch = uav_channel(s);
  ctx.mbs_ch = mbs_channel(s);
  ctx.traffic = TrafficParams::from(s);
  ctx.mbs_position = {ctx.center.x, ctx.center.y, s.mbs_height_m};

  // Static population: uneven density over the six standard sectors.
  const auto standard = partition_zones(ctx.center, ctx.radius, AngularDemand::uniform(),
                                        kStandardGuiderLines, kStandardGuiderLines);
  std::uniform_real_distribution<double> density(0.5, 1.5);
  std::vector<double> weights(standard.size());
  for (auto& w : weights) w = density(placement);
  const int count = users_in_cell(s.active_users + s.extra_users, s.mbs_count, static_cast<int>(cell));
  ctx.users = place_users(ctx.center, ctx.radius, standard, weights,
                          static_cast<std::size_t>(count), placement());
  ctx.sector_of_user.resize(ctx.users.size());
  ctx.mbs_sinr.resize(ctx.users.size());
  for (std::size_t u = 0; u < ctx.users.size(); ++u) {
    ctx.sector_of_user[u] = find_zone(standard, ctx.center, ctx.users[u].position);
    // The macro tier sits on its own band: noise-limited.
    ctx.mbs_sinr[u] = rx_power(distance(ctx.mbs_position, ctx.users[u].position), ctx.mbs_ch) /
                      ctx.mbs_ch.noise_power_w();
  }

  const std::size_t n = static_cast<std::size_t>(s.uav_count);
  std::vector<Point3> uav_now(n, Point3{ctx.center.x, ctx.center.y, feet_to_meters(s.altitude_min_ft)});
  std::vector<std::size_t> all_users(ctx.users.size());
  for (std::size_t u = 0; u < all_users.size(); ++u) all_users[u] = u;

  const double base_rate = base_request_rate(s);
  const double mid = 0.5 * (s.requests_per_zone_min + s.requests_per_zone_max);
  std::uniform_int_distribution<int> sector_requests(s.requests_per_zone_min, s.requests_per_zone_max);
  const double dt = plan.step_seconds;
  const double packet_bits = ctx.traffic.packet_bits;
  const double offered = ctx.traffic.offered_bps();

  const std::uint32_t epochs = (plan.horizon_steps + plan.epoch_steps - 1) / plan.epoch_steps;
  for (std::uint32_t e = 0; e < epochs; ++e) {
    std::vector<double> multiplier(standard.size());
    for (auto& m : multiplier) m = sector_requests(demand_rng) / mid;
    std::vector<double> rates(ctx.users.size());
    std::vector<double> bins(kDemandBins, 0.0);
    for (std::size_t u = 0; u < ctx.users.size(); ++u) {
      const std::size_t sec = ctx.sector_of_user[u];
      rates[u] = base_rate * (sec == kNoZone ? 1.0 : multiplier[sec]);
      const double theta = angle_of(ctx.users[u].position, ctx.center);
      const auto b = std::min(kDemandBins - 1, static_cast<std::size_t>(theta / kTwoPi * kDemandBins));
      bins[b] += rates[u];
    }
    std::vector<Zone> zones =
        partition_zones(ctx.center, ctx.radius, AngularDemand(bins), s.uav_count, s.max_zones);
    attach_users(zones, ctx.center, ctx.users);
    std::vector<std::size_t> zone_of_user(ctx.users.size(), kNoZone);
    for (const auto& z : zones) {
      for (std::size_t u : z.users) zone_of_user[u] = z.id;
    }

    CellMappingProblem problem(ctx, zones, zone_of_user, rates, uav_now, dt);
    EpochTrace trace;
    trace.replication = replication;
    trace.cell = cell;
    trace.epoch = e;
    trace.expected_requests = problem.expected_requests();
    trace.min_uav_count = min_uav_count(trace.expected_requests, s.uav_capacity);

    Pairing pairing(n);
    if (s.uavs_enabled) {
      trace.assignment = iterate_mapping(problem, plan.mapper, mapper_rng);
      pairing = trace.assignment.pairing(n);
    }
    trace.costs = problem.report(pairing);
    trace.uav_positions = problem.positions(pairing);
    const std::vector<UserLink> links = problem.links(pairing);

    // Per-zone request outcomes over the epoch for the admission check.
    std::vector<std::vector<RequestOutcome>> outcomes(zones.size());

    const std::uint32_t first = e * plan.epoch_steps;
    const std::uint32_t last = std::min(plan.horizon_steps, first + plan.epoch_steps);
    std::vector<std::size_t> pending(n + 1, 0);
    std::vector<std::int64_t> used(n + 1, 0);
    for (std::uint32_t step = first; step < last; ++step) {
      const auto events = generate_requests(all_users, rates, dt, arrivals);
      std::fill(pending.begin(), pending.end(), 0);
      std::fill(used.begin(), used.end(), 0);
      auto key_of = [&](const UserLink& l) {
        return l.server == Server::kUav ? static_cast<std::size_t>(l.uav) : n;
      };
      double carried = 0.0;
      for (const auto& ev : events) ++pending[key_of(links[ev.user])];
      for (const auto& ev : events) {
        const UserLink& l = links[ev.user];
        if (l.server != Server::kUav) continue;
        const auto se = spectral_efficiency(l.sinr, s.bandwidth_hz, pending[key_of(l)]);
        carried += std::min(offered, se.rate_bps);
      }
      const double backhaul = carried > s.backhaul_cap_bps ? s.backhaul_cap_bps / carried : 1.0;

      for (auto& z : zones) {
        z.request_count = 0;
        z.drops.clear();
      }
      for (const auto& ev : events) {
        const UserLink& l = links[ev.user];
        const std::size_t key = key_of(l);
        const auto se = spectral_efficiency(l.sinr, s.bandwidth_hz, pending[key]);
        const UserLoad load = user_load(l.sinr, offered, s.bandwidth_hz);
        const double share = se.rate_bps * (l.server == Server::kUav ? backhaul : 1.0);
        const double rho = offered / share;
        const double queue = queue_delay(rho, share / packet_bits);
        const DelayBreakdown delay = total_delay(l.distance, load.value, queue, ctx.traffic);
        check_finite(delay.total, "delay");

        const std::int64_t cap = l.server == Server::kUav ? s.uav_capacity : s.mbs_capacity;
        const std::int64_t room = std::max<std::int64_t>(0, cap - used[key]);
        const auto admitted = static_cast<std::uint32_t>(std::min<std::int64_t>(ev.count, room));
        used[key] += ev.count;
        const bool late = delay.overloaded() || delay.total > s.delay_threshold_s;

        StepRecord r;
        r.replication = replication;
        r.cell = cell;
        r.step = step;
        r.user = static_cast<std::uint32_t>(ev.user);
        r.served_by = l.server;
        r.server_id = l.uav;
        r.requests = ev.count;
        r.dropped_requests = late ? ev.count : ev.count - admitted;
        r.sinr = l.sinr;
        r.se = se.se_bps_hz;
        r.rate = share;
        r.load = load.value;
        r.delay = delay;
        r.overloaded = delay.overloaded();
        r.dropped = r.dropped_requests > 0;
        records.push_back(r);

        const std::size_t z = zone_of_user[ev.user];
        if (z != kNoZone) {
          zones[z].request_count += ev.count;
          for (std::uint32_t k = 0; k < ev.count; ++k) {
            const bool handled = k < admitted;
            const bool dropped = late || !handled;
            zones[z].drops.push_back(dropped);
            outcomes[z].push_back({handled, dropped});
          }
        }
      }
    }
    (void)keep_records;

    trace.costs.constraint_ok = true;
    for (std::size_t z = 0; z < zones.size(); ++z) {
      auto& zc = trace.costs.zones[z];
      if (outcomes[z].empty()) {
        zc.admission = {true, false, 0.0, static_cast<double>(zc.users) /
                                              (static_cast<double>(s.users_per_cell_max) / zones.size())};
        continue;
      }
      zc.admission = admission_constraint(outcomes[z], static_cast<double>(zc.users),
                                          static_cast<double>(s.users_per_cell_max) / zones.size(),
                                          s.admission_squared);
      trace.costs.constraint_ok = trace.costs.constraint_ok && zc.admission.ok;
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (pairing[i]) uav_now[i] = trace.uav_positions[i];
    }
    traces.push_back(std::move(trace));
  }
}

}  // namespace

ReplicationResult run_replication(const Scenario& scenario, const RunPlan& plan,
                                  std::uint32_t replication, bool keep_records) {
  validate(scenario);
  validate(plan);
  ReplicationResult out;
  out.replication = replication;
  out.seed = replication_seed(scenario.seed, replication);
  for (int c = 0; c < scenario.mbs_count; ++c) {
    simulate_cell(scenario, plan, replication, static_cast<std::uint32_t>(c), out.seed, keep_records,
                  out.records, out.epochs);
  }
  const std::uint32_t epochs = (plan.horizon_steps + plan.epoch_steps - 1) / plan.epoch_steps;
  std::vector<double> trace(epochs, 0.0);
  if (scenario.uavs_enabled) {
    for (const auto& t : out.epochs) trace[t.epoch] += t.costs.cf_overall;
  } else {
    trace.clear();
  }
  out.metrics = compute_metrics(out.records, thresholds_of(scenario), std::move(trace));
  if (!keep_records) {
    out.records.clear();
    out.records.shrink_to_fit();
  }
  return out;
}

RunResult run(const Scenario& scenario, const RunPlan& plan, bool keep_records) {
  validate(scenario);
  validate(plan);
  RunResult result;
  result.config = {scenario, plan};
  result.replications.resize(plan.replications);

  parallel_for(plan.replications, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    try {
      result.replications[r] = run_replication(scenario, plan, r, keep_records);
    } catch (const std::exception& e) {
      ReplicationResult failed;
      failed.replication = r;
      failed.seed = replication_seed(scenario.seed, r);
      failed.error = e.what();
      result.replications[r] = std::move(failed);
    }
  });
  return result;
}

namespace {

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

}  // namespace

MetricsSummary summarize(std::span<const ReplicationResult> reps) {
  std::vector<double> delay, viol, p5, med, cov, sinr, drops;
  for (const auto& r : reps) {
    if (r.error) continue;
    delay.push_back(r.metrics.mean_delay);
    viol.push_back(r.metrics.delay_violations);
    p5.push_back(r.metrics.p5_se);
    med.push_back(r.metrics.median_se);
    cov.push_back(r.metrics.throughput_coverage);
    sinr.push_back(r.metrics.p_guaranteed_sinr);
    drops.push_back(r.metrics.drop_fraction);
  }
  MetricsSummary s;
  s.replications = delay.size();
  s.mean_delay = mean_std(delay);
  s.delay_violations = mean_std(viol);
  s.p5_se = mean_std(p5);
  s.median_se = mean_std(med);
  s.throughput_coverage = mean_std(cov);
  s.p_guaranteed_sinr = mean_std(sinr);
  s.drop_fraction = mean_std(drops);
  return s;
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, std::span<const GridPoint> grid) {
  require(!grid.empty(), ErrorCode::kInvalidArgument, "sweep grid must not be empty");
  std::vector<SweepRow> rows(grid.size() * 2);
  parallel_for(rows.size(), [&](std::size_t job) {
    SweepRow& row = rows[job];
    row.point = grid[job / 2];
    row.uavs_enabled = job % 2 == 0;
    try {
      ExperimentConfig cfg = base;
      for (const auto& [key, value] : row.point) apply_override(cfg, key, nlohmann::json(value));
      cfg.scenario.uavs_enabled = row.uavs_enabled;
      validate(cfg);
      const RunResult res = run(cfg.scenario, cfg.plan, false);
      for (const auto& r : res.replications) {
        if (r.error) throw Error(ErrorCode::kNumeric, *r.error);
      }
      row.summary = summarize(res.replications);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

std::vector<GridPoint> default_grid(const Scenario& s) {
  std::vector<GridPoint> grid;
  const int ceiling = (3 * s.users_per_cell_max * s.mbs_count) / 2 - s.active_users;
  const int step = std::max(1, s.active_users / 2);
  for (double alt : {200.0, 350.0, 500.0}) {
    for (int extra = 0; extra <= ceiling; extra += step) {
      grid.push_back({{"altitude_min_ft", alt}, {"altitude_max_ft", alt},
                      {"extra_users", static_cast<double>(extra)}});
    }
  }
  for (double alpha : {2.0, 3.0, 4.0}) grid.push_back({{"pathloss_exp", alpha}});
  return grid;
}

}  // namespace uavhet
