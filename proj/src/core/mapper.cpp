#include "core/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/channel.hpp"
#include "core/error.hpp"

namespace uavhet {

Pairing Assignment::pairing(std::size_t uav_count) const {
  Pairing p(uav_count);
  for (const auto& [uav, zone] : pairs) {
    require(uav < uav_count, ErrorCode::kInvalidArgument, "assignment names an unknown UAV");
    p[uav] = zone;
  }
  return p;
}

std::optional<std::size_t> Assignment::zone_of(std::size_t uav) const {
  for (const auto& [u, z] : pairs) {
    if (u == uav) return z;
  }
  return std::nullopt;
}

std::vector<std::size_t> Assignment::uavs_per_zone(std::size_t zone_count) const {
  std::vector<std::size_t> counts(zone_count, 0);
  for (const auto& pr : pairs) {
    if (pr.second < zone_count) ++counts[pr.second];
  }
  return counts;
}

Assignment from_pairing(const Pairing& pairing) {
  Assignment a;
  for (std::size_t u = 0; u < pairing.size(); ++u) {
    if (pairing[u]) a.pairs.emplace_back(u, *pairing[u]);
  }
  return a;
}

std::vector<std::size_t> rank_zones(std::span<const double> area_costs) {
  std::vector<std::size_t> order(area_costs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (double c : area_costs) {
    require(!std::isnan(c), ErrorCode::kNumeric, "area cost is NaN");
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return area_costs[a] > area_costs[b]; });
  return order;
}

Assignment greedy_assign(std::span<const double> uav_costs,
                         std::span<const std::size_t> ranked_zones) {
  Assignment out;
  if (ranked_zones.empty()) return out;
  std::vector<std::size_t> eligible;
  for (std::size_t u = 0; u < uav_costs.size(); ++u) {
    require(!std::isnan(uav_costs[u]), ErrorCode::kNumeric, "UAV cost is NaN");
    if (std::isfinite(uav_costs[u])) eligible.push_back(u);
  }
  std::stable_sort(eligible.begin(), eligible.end(),
                   [&](std::size_t a, std::size_t b) { return uav_costs[a] < uav_costs[b]; });
  out.pairs.reserve(eligible.size());
  for (std::size_t k = 0; k < eligible.size(); ++k) {
    out.pairs.emplace_back(eligible[k], ranked_zones[k % ranked_zones.size()]);
  }
  return out;
}

double rematch(MappingProblem& problem, Pairing& pairing, std::span<const std::size_t> ranked,
               double cost, const MapperOptions& options) {
  const std::size_t n = pairing.size();
  for (std::size_t pass = 0; pass < options.max_iters; ++pass) {
    bool improved = false;
    for (std::size_t zone : ranked) {
      for (std::size_t a = 0; a < n; ++a) {
        if (pairing[a] != zone) continue;
        double best = cost;
        std::optional<std::size_t> partner;
        for (std::size_t b = 0; b < n; ++b) {
          if (b == a || pairing[b] == zone) continue;
          Pairing cand = pairing;
          std::swap(cand[a], cand[b]);
          const double c = problem.overall_cost(cand);
          if (c < best - options.tolerance) {
            best = c;
            partner = b;
          }
        }
        if (partner) {
          std::swap(pairing[a], pairing[*partner]);
          cost = best;
          improved = true;
          break;  // this zone's UAV changed; move on to the next zone
        }
      }
    }
    if (!improved) break;
  }
  return cost;
}

Assignment iterate_mapping(MappingProblem& problem, const MapperOptions& options, Rng& rng) {
  const std::size_t n = problem.uav_count();
  const std::size_t zones = problem.zone_count();

  Assignment best;
  Pairing current(n);
  std::size_t resets_left = options.resets;

  for (std::size_t pass = 1; pass <= options.max_iters; ++pass) {
    best.passes = pass;
    const auto area = problem.area_costs(current);
    const auto uav = problem.uav_costs(current);
    require(area.size() == zones && uav.size() == n, ErrorCode::kInternal,
            "mapping problem returned mis-sized cost vectors");
    const auto ranked = rank_zones(area);

    const Assignment proposal = greedy_assign(uav, ranked);
    if (proposal.pairs.empty() && best.iterations == 0) {
      best.converged = false;
      return best;
    }

    Pairing cand = proposal.pairing(n);
    double c = problem.overall_cost(cand);
    c = rematch(problem, cand, ranked, c, options);

    if (c < best.final_cost - options.tolerance) {
      current = cand;
      best.pairs = from_pairing(cand).pairs;
      best.final_cost = c;
      best.history.push_back(c);
      ++best.iterations;
      problem.commit(cand);
      continue;
    }
    if (resets_left > 0) {
      --resets_left;
      problem.reset(rng);
      continue;
    }
    problem.restore();
    best.converged = best.iterations > 0;
    return best;
  }
  problem.restore();
  best.converged = false;
  return best;
}

Point3 uav_position_for_zone(std::span<const Point2> users, Point2 fallback_center,
                             double alt_min_ft, double alt_max_ft, double los_min_elevation_rad,
                             double coverage_fraction) {
  require(alt_min_ft > 0.0 && alt_min_ft <= alt_max_ft, ErrorCode::kInvalidArgument,
          "altitude range must satisfy 0 < min <= max");
  const double lo = feet_to_meters(alt_min_ft);
  const double hi = feet_to_meters(alt_max_ft);
  if (users.empty()) return {fallback_center.x, fallback_center.y, lo};

  Point2 c{};
  for (const auto& u : users) c = c + u;
  c = (1.0 / static_cast<double>(users.size())) * c;

  const double tan_min = std::tan(los_min_elevation_rad);
  std::vector<double> needed;
  needed.reserve(users.size());
  for (const auto& u : users) needed.push_back(distance(c, u) * tan_min);
  std::sort(needed.begin(), needed.end());

  const auto want = static_cast<std::size_t>(
      std::ceil(coverage_fraction * static_cast<double>(users.size()) - 1e-12));
  const std::size_t k = std::clamp<std::size_t>(want, 1, users.size());
  const double target = needed[k - 1];
  if (!(target <= hi)) return {c.x, c.y, hi};

  double alt = std::max(lo, target);
  ChannelParams gate;
  gate.los_min_elevation_rad = los_min_elevation_rad;
  // Nudge past rounding so the LOS check itself agrees with the closed form.
  for (int guard = 0; guard < 64 && alt < hi; ++guard) {
    std::size_t seen = 0;
    for (const auto& u : users) {
      if (los_available(LinkGeometry::between({c.x, c.y, alt}, u), gate)) ++seen;
    }
    if (seen >= k) break;
    alt = std::min(hi, std::nextafter(alt, hi));
  }
  return {c.x, c.y, alt};
}

}  // namespace uavhet
