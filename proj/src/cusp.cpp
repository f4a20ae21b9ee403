#include "tangle/cusp.hpp"

#include "tangle/error.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace tangle {

BaseSurface::BaseSurface(int genus, int punctures, std::vector<CuspPair> pairs)
    : genus_(genus), punctures_(punctures), pairs_(std::move(pairs)) {
  if (genus < 0)
    throw InvalidArgument("genus must be nonnegative");
  if (punctures < 1)
    throw InvalidArgument("at least one puncture is required");
  if (rank() < 1)
    throw InvalidArgument("fundamental group must have rank at least 1");
  std::set<std::string> ids;
  for (const CuspPair &pair : pairs_) {
    if (!ids.insert(pair.id).second)
      throw InvalidArgument("duplicate pair id '" + pair.id + "'");
    if (!(pair.base_length >= 0.0) || !std::isfinite(pair.base_length))
      throw InvalidArgument("pair '" + pair.id +
                            "': base length must be finite and nonnegative");
    if (pair.lollipop_1.rank() != rank() || pair.lollipop_2.rank() != rank())
      throw InvalidArgument("pair '" + pair.id + "': lollipop rank must be " +
                            std::to_string(rank()));
    if (!distinct_powers(pair.lollipop_1, pair.lollipop_2))
      throw InvalidArgument("pair '" + pair.id +
                            "': lollipops must be nontrivial with distinct "
                            "powers");
  }
}

BranchDegrees branch_degrees(const Homomorphism &phi, const CuspPair &pair,
                             Point k) {
  return {phi.evaluate(pair.lollipop_1).orbit_size(k),
          phi.evaluate(pair.lollipop_2).orbit_size(k)};
}

double lifted_length(double base_length, BranchDegrees degrees) {
  if (degrees.d1 < 1 || degrees.d2 < 1)
    throw InvalidArgument("branching degrees must be at least 1");
  return base_length + std::log(static_cast<double>(degrees.d1)) +
         std::log(static_cast<double>(degrees.d2));
}

double lifted_length(const CuspPair &pair, BranchDegrees degrees) {
  return lifted_length(pair.base_length, degrees);
}

namespace {

struct Lift {
  const CuspPair *pair;
  Point k;
  BranchDegrees degrees;
  double length;
};

// Calls visit(lift) for every pair and fiber point, in (pair, k) order.
template <class Visit>
void for_each_lift(const Homomorphism &phi, const BaseSurface &surface,
                   Visit &&visit) {
  if (phi.rank() != surface.rank())
    throw InvalidArgument("homomorphism rank " + std::to_string(phi.rank()) +
                          " does not match surface rank " +
                          std::to_string(surface.rank()));
  for (const CuspPair &pair : surface.pairs()) {
    const auto sizes1 = phi.evaluate(pair.lollipop_1).orbit_sizes();
    const auto sizes2 = phi.evaluate(pair.lollipop_2).orbit_sizes();
    for (std::size_t i = 0; i < sizes1.size(); ++i) {
      const BranchDegrees d{sizes1[i], sizes2[i]};
      visit(Lift{&pair, static_cast<Point>(i + 1), d, lifted_length(pair, d)});
    }
  }
}

void check_L(double L) {
  if (!std::isfinite(L) || !(L > 0.0))
    throw InvalidArgument("L must be a positive finite number");
}

} // namespace

HoroballReport has_L_horoball(const Homomorphism &phi,
                              const BaseSurface &surface, double L) {
  check_L(L);
  HoroballReport report;
  report.min_lift_length = std::numeric_limits<double>::infinity();
  for_each_lift(phi, surface, [&](const Lift &lift) {
    const bool better =
        !report.worst_pair || lift.length < report.min_lift_length ||
        (lift.length == report.min_lift_length &&
         (lift.pair->id < *report.worst_pair ||
          (lift.pair->id == *report.worst_pair && lift.k < report.worst_point)));
    if (better) {
      report.min_lift_length = lift.length;
      report.worst_pair = lift.pair->id;
      report.worst_point = lift.k;
      report.worst_degrees = lift.degrees;
    }
  });

  if (L < 1.0) {
    report.decision = true;
    report.note = "L < 1: horoballs of perimeter below 1 are always embedded";
    return report;
  }
  report.decision =
      report.min_lift_length >= 2.0 * std::log(L) - length_tolerance;
  return report;
}

std::optional<HoroballWitness> horoball_failure_witness(
    const Homomorphism &phi, const BaseSurface &surface, double L) {
  check_L(L);
  if (L < 1.0)
    return std::nullopt;
  const double threshold = 2.0 * std::log(L);
  std::optional<HoroballWitness> shortest, tangled;
  for_each_lift(phi, surface, [&](const Lift &lift) {
    if (lift.length >= threshold - length_tolerance)
      return;
    const bool is_tangled =
        static_cast<double>(lift.degrees.d1 + lift.degrees.d2) <=
        threshold + length_tolerance;
    const HoroballWitness w{lift.pair->id, lift.k, lift.degrees, lift.length,
                            is_tangled};
    if (is_tangled && !tangled)
      tangled = w;
    if (!shortest || lift.length < shortest->lift_length)
      shortest = w;
  });
  return tangled ? tangled : shortest;
}

} // namespace tangle
