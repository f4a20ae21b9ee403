#pragma once

#include "tangle/homomorphism.hpp"
#include "tangle/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tangle {

/// Absolute tolerance for comparisons between lengths.
inline constexpr double length_tolerance = 1e-9;

/// A pair of connected cusps on the base surface: the length of its beam
/// outside the unit horoballs, and the lollipop words a1, a2 based at the
/// beam's midpoint.
struct CuspPair {
  std::string id;
  double base_length = 0.0;
  /// Decimal text the length was read from; printed back verbatim.
  std::string base_length_text;
  Word lollipop_1;
  Word lollipop_2;
};

/// Base surface of genus g with p >= 1 punctures, whose fundamental group is
/// free of rank 2g + p - 1, together with the finite list of cusp pairs that
/// can be short enough to matter.
class BaseSurface {
public:
  /// Validates rank, punctures, word ranks, nonnegative lengths, unique ids,
  /// and that each pair's lollipops are nontrivial with distinct powers.
  BaseSurface(int genus, int punctures, std::vector<CuspPair> pairs);

  int genus() const noexcept { return genus_; }
  int punctures() const noexcept { return punctures_; }
  int rank() const noexcept { return 2 * genus_ + punctures_ - 1; }
  const std::vector<CuspPair> &pairs() const noexcept { return pairs_; }

private:
  int genus_;
  int punctures_;
  std::vector<CuspPair> pairs_;
};

struct BranchDegrees {
  std::size_t d1 = 1;
  std::size_t d2 = 1;

  friend bool operator==(const BranchDegrees &, const BranchDegrees &) = default;
};

/// Branching degrees at the two cusps of the lift of `pair` through fiber
/// point k: the orbit sizes of k under phi(a1) and phi(a2).
BranchDegrees branch_degrees(const Homomorphism &phi, const CuspPair &pair,
                             Point k);

/// base_length + ln d1 + ln d2.
double lifted_length(const CuspPair &pair, BranchDegrees degrees);
double lifted_length(double base_length, BranchDegrees degrees);

struct HoroballReport {
  bool decision = true;
  /// Minimum lifted length over all pairs and fiber points; +inf when the
  /// descriptor lists no pairs.
  double min_lift_length = 0.0;
  /// Minimiser, ties broken by (pair id, k). Empty when there are no pairs.
  std::optional<std::string> worst_pair;
  Point worst_point = 0;
  BranchDegrees worst_degrees;
  /// Set when L < 1, where the property holds trivially.
  std::optional<std::string> note;
};

/// Decides the L-horoball property of the cover defined by phi: every lift
/// of every listed pair must have length at least 2 ln L (within
/// length_tolerance).
HoroballReport has_L_horoball(const Homomorphism &phi,
                              const BaseSurface &surface, double L);

/// A lift that is too short. `tangled` records whether the degrees also
/// satisfy d1 + d2 <= 2 ln L, i.e. the lollipops are (2 ln L)-tangled at k.
struct HoroballWitness {
  std::string pair_id;
  Point k = 0;
  BranchDegrees degrees;
  double lift_length = 0.0;
  bool tangled = false;
};

/// Absent iff has_L_horoball decides true. Otherwise a short lift, preferring
/// one that is also a tangling witness; among equals the first in
/// (pair order, k) wins.
std::optional<HoroballWitness> horoball_failure_witness(
    const Homomorphism &phi, const BaseSurface &surface, double L);

} // namespace tangle
