#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace uavhet {

inline constexpr double kIneligible = std::numeric_limits<double>::infinity();

/// λ^k e^{-λ} / k!, evaluated as exp(k·ln λ − λ − lnΓ(k+1)).
double poisson_pmf(double lambda, std::int64_t k);

/// Area density: Poisson pmf with rate x/T_r at k = S_r.
double density_area(double active_users, double capacity_tr, std::int64_t requests);

/// UAV density: Poisson pmf with rate L_a/n at k = S_n.
double density_uav(double area_load, std::int64_t uav_count, std::int64_t uav_capacity);

/// 1/(e·S_r!): the area density when x equals T_r.
double density_area_average(std::int64_t requests);

/// Per-request indicators: `handled` is the capacity indicator T_r^i,
/// `dropped` the drop indicator C_d^i.
struct RequestOutcome {
  bool handled = true;
  bool dropped = false;
};

struct AdmissionResult {
  bool ok = false;
  bool infeasible = false;  // negative radicand
  double lhs = 0.0;
  double rhs = 0.0;
};

/// sqrt((1/S_r)·Σ(T_r^i − C_d^i)) <= x/T_r, with S_r = requests.size().
/// `squared` switches the summand to (T_r^i − C_d^i)².
AdmissionResult admission_constraint(std::span<const RequestOutcome> requests, double active_users,
                                     double capacity_tr, bool squared = false);

/// D_f^A · L_a · (η1·S_r + η2·T_r)
double cost_area(double df_area, double area_load, double requests, double capacity_tr, double eta1,
                 double eta2);

/// D_f^U · (R/R_cell)^α · (η1·S_r + η2·x); kIneligible without line of sight.
double cost_uav(double df_uav, double distance_m, double cell_radius_m, double pathloss_exp,
                double requests, double active_users, double eta1, double eta2, bool los);

/// (1/n)·Σ C_f^U + Σ_j C_f^A(j) / max(U_T(j), 1)
double overall_cost(std::span<const double> uav_costs, std::span<const double> area_costs,
                    std::span<const std::size_t> uavs_per_area, std::size_t uav_count);

struct ZoneCost {
  std::size_t zone = 0;
  std::int64_t users = 0;
  std::int64_t requests = 0;
  double area_load = 0.0;
  double df_area = 0.0;
  double cf_area = 0.0;
  std::size_t uavs_assigned = 0;
  AdmissionResult admission;
  bool within_average_ceiling = true;
};

struct UavCost {
  std::size_t uav = 0;
  std::optional<std::size_t> zone;
  double mean_distance_m = 0.0;
  double df_uav = 0.0;
  double cf_uav = 0.0;
  bool los = true;
};

/// Evaluated densities and costs for one mapping of UAVs onto zones.
struct CostReport {
  std::vector<ZoneCost> zones;
  std::vector<UavCost> uavs;
  double df_uav = 0.0;
  double cf_overall = 0.0;
  std::size_t unserved_zones = 0;  // zones costed with the U_T = 1 floor
  bool constraint_ok = true;
};

}  // namespace uavhet
