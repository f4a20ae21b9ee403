#include "tangle/experiment.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>

namespace tangle {

namespace {

// Splits [0, samples) into contiguous blocks, runs `work(lo, hi)` on each in
// its own thread and returns the block results in index order.
template <class Work>
auto run_sharded(std::uint64_t samples, unsigned threads, Work &&work) {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t shards =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, samples));
  std::vector<Result> results(shards);
  if (shards == 1) {
    results[0] = work(0, samples);
    return results;
  }
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t lo = samples * s / shards;
      const std::uint64_t hi = samples * (s + 1) / shards;
      pool.emplace_back([&, s, lo, hi] {
        try {
          results[s] = work(lo, hi);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return results;
}

void require_hypothesis(const Word &w1, const Word &w2) {
  if (!distinct_powers(w1, w2))
    throw HypothesisViolation(
        "w1 = '" + to_string(w1) + "' and w2 = '" + to_string(w2) +
        "' commute (or one is trivial), so their powers are not all distinct");
}

void require_samples(const MonteCarloConfig &config) {
  if (config.samples == 0)
    throw InvalidArgument("Monte Carlo runs need at least one sample");
}

FractionEstimate exact_estimate(std::size_t degree, std::uint64_t hits,
                                std::uint64_t total) {
  return {degree, hits, total,
          total == 0 ? 0.0
                     : static_cast<double>(hits) / static_cast<double>(total),
          0.0, true};
}

FractionEstimate mc_estimate(std::size_t degree, std::uint64_t hits,
                             std::uint64_t total) {
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  return {degree, hits, total, p,
          std::sqrt(p * (1.0 - p) / static_cast<double>(total)), false};
}

Homomorphism draw(SplitMix64 &rng, int rank, std::size_t degree,
                  bool transitive_only, std::uint64_t max_attempts) {
  return transitive_only
             ? sample_transitive_hom(rng, rank, degree, max_attempts)
             : sample_hom(rng, rank, degree);
}

struct HoroballShard {
  std::uint64_t with_property = 0;
  std::uint64_t failures_tangled = 0;
  std::vector<HoroballWitness> witnesses;
};

void record_cover(HoroballShard &shard, const Homomorphism &phi,
                  const BaseSurface &surface, double L,
                  std::size_t witness_limit) {
  const HoroballReport report = has_L_horoball(phi, surface, L);
  if (report.decision) {
    ++shard.with_property;
    return;
  }
  const auto witness = horoball_failure_witness(phi, surface, L);
  if (!witness)
    throw Error("internal: failing cover without a short lift");
  if (witness->tangled)
    ++shard.failures_tangled;
  if (shard.witnesses.size() < witness_limit)
    shard.witnesses.push_back(*witness);
}

} // namespace

std::vector<std::size_t> parse_degree_range(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t colon = text.find(':', pos);
    const std::string_view part =
        text.substr(pos, colon == std::string_view::npos ? text.size() - pos
                                                         : colon - pos);
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw ParseError("malformed degree range '" + std::string(text) + "'",
                       pos);
    parts.push_back(value);
    if (colon == std::string_view::npos)
      break;
    pos = colon + 1;
  }
  if (parts.size() > 3)
    throw ParseError("degree range has more than three fields", 0);
  const std::size_t start = parts[0];
  const std::size_t stop = parts.size() > 1 ? parts[1] : start;
  const std::size_t step = parts.size() > 2 ? parts[2] : 1;
  if (start < 1 || step < 1 || stop < start)
    throw InvalidArgument("degree range must satisfy 1 <= start <= stop and "
                          "step >= 1");
  std::vector<std::size_t> degrees;
  for (std::size_t n = start; n <= stop; n += step)
    degrees.push_back(n);
  return degrees;
}

FractionEstimate exact_tangled_fraction(const Word &w1, const Word &w2,
                                        std::uint64_t R, std::size_t degree,
                                        bool transitive_only,
                                        std::uint64_t budget) {
  require_hypothesis(w1, w2);
  HomEnumerator homs(w1.rank(), degree, budget);
  std::uint64_t hits = 0, total = 0;
  while (homs.next()) {
    const Homomorphism &phi = homs.current();
    if (transitive_only && !is_transitive(phi))
      continue;
    ++total;
    if (is_tangled(phi, w1, w2, R))
      ++hits;
  }
  return exact_estimate(degree, hits, total);
}

FractionEstimate mc_tangled_fraction(const Word &w1, const Word &w2,
                                     std::uint64_t R, std::size_t degree,
                                     bool transitive_only,
                                     const MonteCarloConfig &config) {
  require_hypothesis(w1, w2);
  require_samples(config);
  const auto shards = run_sharded(
      config.samples, config.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          SplitMix64 rng = SplitMix64::substream(config.seed, i);
          const Homomorphism phi = draw(rng, w1.rank(), degree,
                                        transitive_only, config.max_attempts);
          if (is_tangled(phi, w1, w2, R))
            ++hits;
        }
        return hits;
      });
  std::uint64_t hits = 0;
  for (auto h : shards)
    hits += h;
  return mc_estimate(degree, hits, config.samples);
}

FractionEstimate exact_transitive_fraction(int rank, std::size_t degree,
                                           std::uint64_t budget) {
  HomEnumerator homs(rank, degree, budget);
  std::uint64_t hits = 0;
  while (homs.next())
    if (is_transitive(homs.current()))
      ++hits;
  return exact_estimate(degree, hits, homs.size());
}

FractionEstimate mc_transitive_fraction(int rank, std::size_t degree,
                                        const MonteCarloConfig &config) {
  require_samples(config);
  const auto shards = run_sharded(
      config.samples, config.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          SplitMix64 rng = SplitMix64::substream(config.seed, i);
          if (is_transitive(sample_hom(rng, rank, degree)))
            ++hits;
        }
        return hits;
      });
  std::uint64_t hits = 0;
  for (auto h : shards)
    hits += h;
  return mc_estimate(degree, hits, config.samples);
}

std::vector<CountBoundRow> verify_count_bound(
    const LabelledGraph &g, std::span<const std::size_t> degrees,
    std::uint64_t budget) {
  namespace mp = boost::multiprecision;
  std::vector<CountBoundRow> rows;
  for (std::size_t n : degrees) {
    CountBoundRow row;
    row.degree = n;
    row.exact = carried_count_exact(g, n, budget);
    const CountBound bound = carried_count_bound(g, n);
    row.bound = bound.exact_bound;
    row.constant = bound.ratio_constant;
    row.chi = euler_characteristic(g);
    const auto homs = *hom_space_size(g.rank(), n);
    row.exact_ratio =
        static_cast<double>(row.exact) / static_cast<double>(homs);
    row.bound_ratio = mp::cpp_rational(row.bound, homs).convert_to<double>();
    row.holds = mp::cpp_int(row.exact) <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

HoroballRow horoball_exact(const BaseSurface &surface, double L,
                           std::size_t degree, std::uint64_t budget,
                           std::size_t witness_limit) {
  HomEnumerator homs(surface.rank(), degree, budget);
  HoroballShard shard;
  std::uint64_t covers = 0;
  while (homs.next()) {
    if (!is_transitive(homs.current()))
      continue;
    ++covers;
    record_cover(shard, homs.current(), surface, L, witness_limit);
  }
  HoroballRow row;
  row.degree = degree;
  row.covers = covers;
  row.with_property = shard.with_property;
  row.fraction = covers == 0 ? 0.0
                             : static_cast<double>(shard.with_property) /
                                   static_cast<double>(covers);
  row.exact = true;
  row.failures_tangled = shard.failures_tangled;
  row.witnesses = std::move(shard.witnesses);
  return row;
}

HoroballRow horoball_mc(const BaseSurface &surface, double L,
                        std::size_t degree, const MonteCarloConfig &config,
                        std::size_t witness_limit) {
  require_samples(config);
  const auto shards = run_sharded(
      config.samples, config.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        HoroballShard shard;
        for (std::uint64_t i = lo; i < hi; ++i) {
          SplitMix64 rng = SplitMix64::substream(config.seed, i);
          const Homomorphism phi = sample_transitive_hom(
              rng, surface.rank(), degree, config.max_attempts);
          record_cover(shard, phi, surface, L, witness_limit);
        }
        return shard;
      });

  HoroballRow row;
  row.degree = degree;
  row.covers = config.samples;
  for (const auto &shard : shards) {
    row.with_property += shard.with_property;
    row.failures_tangled += shard.failures_tangled;
    for (const auto &w : shard.witnesses)
      if (row.witnesses.size() < witness_limit)
        row.witnesses.push_back(w);
  }
  const FractionEstimate e =
      mc_estimate(degree, row.with_property, config.samples);
  row.fraction = e.estimate;
  row.std_error = e.std_error;
  return row;
}

CarrierDemo carrier_demo(const Word &w1, const Word &w2,
                         const Homomorphism &phi, Point k) {
  CarrierResult carrier = build_carrier(w1, w2, phi, k);
  CarrierResult quotient = quotient_by_labels(carrier);
  LabelledGraph folded = dedup_fold(quotient.graph);
  const std::array<long long, 3> chi{euler_characteristic(carrier.graph),
                                     euler_characteristic(quotient.graph),
                                     euler_characteristic(folded)};
  return {std::move(carrier), std::move(quotient), std::move(folded), chi,
          distinct_powers(w1, w2)};
}

} // namespace tangle
