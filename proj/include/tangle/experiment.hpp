#pragma once

#include "tangle/carrier.hpp"
#include "tangle/cusp.hpp"
#include "tangle/homomorphism.hpp"
#include "tangle/labelled_graph.hpp"
#include "tangle/word.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangle {

/// Fraction of a homomorphism population with some property, either counted
/// exactly or estimated by Monte Carlo.
struct FractionEstimate {
  std::size_t degree = 0;
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  double estimate = 0.0;
  /// Binomial standard error; 0 for exact counts.
  double std_error = 0.0;
  bool exact = false;
};

struct MonteCarloConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Worker threads. Results do not depend on this.
  unsigned threads = 1;
  /// Rejection cap per sample when sampling transitive homomorphisms.
  std::uint64_t max_attempts = 10'000;
};

/// Inclusive arithmetic progression "start:stop:step", "start:stop" or "n".
std::vector<std::size_t> parse_degree_range(std::string_view text);

FractionEstimate exact_tangled_fraction(
    const Word &w1, const Word &w2, std::uint64_t R, std::size_t degree,
    bool transitive_only, std::uint64_t budget = default_enumeration_budget);

FractionEstimate mc_tangled_fraction(const Word &w1, const Word &w2,
                                     std::uint64_t R, std::size_t degree,
                                     bool transitive_only,
                                     const MonteCarloConfig &config);

FractionEstimate exact_transitive_fraction(
    int rank, std::size_t degree,
    std::uint64_t budget = default_enumeration_budget);
FractionEstimate mc_transitive_fraction(int rank, std::size_t degree,
                                        const MonteCarloConfig &config);

struct CountBoundRow {
  std::size_t degree = 0;
  std::uint64_t exact = 0;
  boost::multiprecision::cpp_int bound;
  /// exact / (n!)^m and bound / (n!)^m.
  double exact_ratio = 0.0;
  double bound_ratio = 0.0;
  /// C with bound / (n!)^m == C * n^chi.
  boost::multiprecision::cpp_rational constant;
  long long chi = 0;
  bool holds = false;
};

std::vector<CountBoundRow> verify_count_bound(
    const LabelledGraph &g, std::span<const std::size_t> degrees,
    std::uint64_t budget = default_enumeration_budget);

struct HoroballRow {
  std::size_t degree = 0;
  std::uint64_t covers = 0;
  std::uint64_t with_property = 0;
  double fraction = 0.0;
  double std_error = 0.0;
  bool exact = false;
  /// Failing covers whose short lift is also a tangling witness.
  std::uint64_t failures_tangled = 0;
  /// First few failures, in enumeration or sample order.
  std::vector<HoroballWitness> witnesses;
};

inline constexpr std::size_t default_witness_limit = 5;

/// Exhaustive over the transitive homomorphisms of degree n.
HoroballRow horoball_exact(const BaseSurface &surface, double L,
                           std::size_t degree,
                           std::uint64_t budget = default_enumeration_budget,
                           std::size_t witness_limit = default_witness_limit);
/// Monte Carlo over uniformly random transitive homomorphisms.
HoroballRow horoball_mc(const BaseSurface &surface, double L,
                        std::size_t degree, const MonteCarloConfig &config,
                        std::size_t witness_limit = default_witness_limit);

/// The carrier construction pipeline for one tangled instance: carrier
/// graph, its label quotient, and the folded carrier.
struct CarrierDemo {
  CarrierResult carrier;
  CarrierResult quotient;
  LabelledGraph folded;
  /// Chi of carrier, quotient and folded graph, in that order.
  std::array<long long, 3> chi{};
  /// distinct_powers(w1, w2); the folded graph need not have chi < 0
  /// otherwise.
  bool hypothesis_holds = false;
};

CarrierDemo carrier_demo(const Word &w1, const Word &w2,
                         const Homomorphism &phi, Point k);

} // namespace tangle
