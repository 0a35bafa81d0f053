#include "core/cost.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace uavhet {

namespace {

double log_factorial(std::int64_t k) {
  const double arg = static_cast<double>(k) + 1.0;
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(arg, &sign);
#else
  return std::lgamma(arg);
#endif
}

}  // namespace

double poisson_pmf(double lambda, std::int64_t k) {
  require(lambda >= 0.0 && std::isfinite(lambda), ErrorCode::kInvalidArgument,
          "Poisson rate must be finite and >= 0");
  require(k >= 0, ErrorCode::kInvalidArgument, "Poisson count must be >= 0");
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(lambda) - lambda - log_factorial(k));
}

double density_area(double active_users, double capacity_tr, std::int64_t requests) {
  require(capacity_tr > 0.0, ErrorCode::kInvalidArgument, "T_r must be > 0");
  require(active_users >= 0.0, ErrorCode::kInvalidArgument, "active users must be >= 0");
  return poisson_pmf(active_users / capacity_tr, requests);
}

double density_uav(double area_load, std::int64_t uav_count, std::int64_t uav_capacity) {
  require(uav_count >= 1, ErrorCode::kInvalidArgument, "UAV density needs n >= 1");
  require(area_load >= 0.0, ErrorCode::kInvalidArgument, "area load must be >= 0");
  return poisson_pmf(area_load / static_cast<double>(uav_count), uav_capacity);
}

double density_area_average(std::int64_t requests) {
  require(requests >= 0, ErrorCode::kInvalidArgument, "S_r must be >= 0");
  // Same operation order as poisson_pmf at λ = 1 so the two agree bit for bit.
  return std::exp(static_cast<double>(requests) * std::log(1.0) - 1.0 - log_factorial(requests));
}

AdmissionResult admission_constraint(std::span<const RequestOutcome> requests, double active_users,
                                     double capacity_tr, bool squared) {
  require(!requests.empty(), ErrorCode::kInvalidArgument, "admission check needs S_r >= 1");
  require(capacity_tr > 0.0, ErrorCode::kInvalidArgument, "T_r must be > 0");
  double acc = 0.0;
  for (const auto& r : requests) {
    const double d = (r.handled ? 1.0 : 0.0) - (r.dropped ? 1.0 : 0.0);
    acc += squared ? d * d : d;
  }
  AdmissionResult out;
  out.rhs = active_users / capacity_tr;
  const double radicand = acc / static_cast<double>(requests.size());
  if (radicand < 0.0) {
    out.infeasible = true;
    out.lhs = std::numeric_limits<double>::quiet_NaN();
    out.ok = false;
    return out;
  }
  out.lhs = std::sqrt(radicand);
  out.ok = out.lhs <= out.rhs;
  return out;
}

double cost_area(double df_area, double area_load, double requests, double capacity_tr, double eta1,
                 double eta2) {
  return df_area * area_load * (eta1 * requests + eta2 * capacity_tr);
}

double cost_uav(double df_uav, double distance_m, double cell_radius_m, double pathloss_exp,
                double requests, double active_users, double eta1, double eta2, bool los) {
  if (!los) return kIneligible;
  require(cell_radius_m > 0.0, ErrorCode::kInvalidArgument, "cell radius must be > 0");
  return df_uav * std::pow(distance_m / cell_radius_m, pathloss_exp) *
         (eta1 * requests + eta2 * active_users);
}

double overall_cost(std::span<const double> uav_costs, std::span<const double> area_costs,
                    std::span<const std::size_t> uavs_per_area, std::size_t uav_count) {
  require(area_costs.size() == uavs_per_area.size(), ErrorCode::kInvalidArgument,
          "one U_T entry per area required");
  double uav_term = 0.0;
  if (uav_count > 0) {
    for (double c : uav_costs) uav_term += c;
    uav_term /= static_cast<double>(uav_count);
  }
  double area_term = 0.0;
  for (std::size_t j = 0; j < area_costs.size(); ++j) {
    area_term += area_costs[j] / static_cast<double>(std::max<std::size_t>(uavs_per_area[j], 1));
  }
  return uav_term + area_term;
}

}  // namespace uavhet
