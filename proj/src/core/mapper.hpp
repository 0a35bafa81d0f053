#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace uavhet {

/// Zone per UAV; nullopt when the UAV is not mapped.
using Pairing = std::vector<std::optional<std::size_t>>;

struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (uav, zone)
  std::size_t iterations = 0;  // accepted rematching steps
  std::size_t passes = 0;      // outer passes, accepted or not
  bool converged = false;
  double final_cost = std::numeric_limits<double>::infinity();
  std::vector<double> history;  // C_f^O of each accepted state

  Pairing pairing(std::size_t uav_count) const;
  std::optional<std::size_t> zone_of(std::size_t uav) const;
  std::vector<std::size_t> uavs_per_zone(std::size_t zone_count) const;
};

Assignment from_pairing(const Pairing& pairing);

/// Descending by area cost; equal costs keep ascending zone id.
std::vector<std::size_t> rank_zones(std::span<const double> area_costs);

/// Cheapest UAV onto the costliest zone: UAVs sorted ascending by cost (ties by
/// id) are dealt onto `ranked_zones` in order, wrapping when UAVs outnumber
/// zones. UAVs with non-finite cost are left out.
Assignment greedy_assign(std::span<const double> uav_costs,
                         std::span<const std::size_t> ranked_zones);

/// The state a mapping run evaluates. Costs may depend on the pairing under
/// consideration and on internal state that reset() perturbs.
class MappingProblem {
 public:
  virtual ~MappingProblem() = default;

  virtual std::size_t uav_count() const = 0;
  virtual std::size_t zone_count() const = 0;

  /// C_f^A per zone given the current pairing.
  virtual std::vector<double> area_costs(const Pairing& current) = 0;
  /// Scalar C_f^U per UAV given the current pairing, used for ranking.
  virtual std::vector<double> uav_costs(const Pairing& current) = 0;
  /// C_f^O of a candidate pairing.
  virtual double overall_cost(const Pairing& candidate) = 0;

  virtual void reset(Rng& /*rng*/) {}
  virtual void commit(const Pairing& /*accepted*/) {}
  virtual void restore() {}
};

struct MapperOptions {
  std::size_t max_iters = 100;
  double tolerance = 1e-9;
  std::size_t resets = 1;
};

/// Swap-based rematching from `pairing`, zone by zone in `ranked` order, until
/// no exchange lowers C_f^O by more than the tolerance. Returns the final cost.
double rematch(MappingProblem& problem, Pairing& pairing, std::span<const std::size_t> ranked,
               double cost, const MapperOptions& options);

/// Repeats rank → greedy_assign → rematch, accepting only strict C_f^O descent.
/// One reset of the problem state is tried before stopping.
Assignment iterate_mapping(MappingProblem& problem, const MapperOptions& options, Rng& rng);

/// Hover point over a zone: the users' centroid at the lowest altitude within
/// [alt_min_ft, alt_max_ft] that gives line of sight to at least
/// `coverage_fraction` of them, else the ceiling. Returned in meters.
Point3 uav_position_for_zone(std::span<const Point2> users, Point2 fallback_center,
                             double alt_min_ft, double alt_max_ft, double los_min_elevation_rad,
                             double coverage_fraction);

}  // namespace uavhet
