#pragma once

#include "tangle/homomorphism.hpp"
#include "tangle/labelled_graph.hpp"
#include "tangle/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace tangle {

/// f : V(G) -> [n]; `labels[v]` is the label of vertex v.
struct VertexLabelling {
  std::vector<Point> labels;

  Point operator[](std::size_t v) const { return labels.at(v); }
  std::size_t size() const noexcept { return labels.size(); }
  bool is_injective() const;

  friend bool operator==(const VertexLabelling &,
                         const VertexLabelling &) = default;
};

/// A labelled graph together with a compatible vertex labelling.
struct CarrierResult {
  LabelledGraph graph;
  VertexLabelling labelling;
  std::size_t basepoint = 0;
};

/// phi(s_{h(e)})(f(src e)) == f(dst e) for every edge.
bool is_f_compatible(const LabelledGraph &g, const VertexLabelling &f,
                     const Homomorphism &phi);

/// An injective f making g f-compatible with phi, if any. Among those, the
/// one with the smallest label on vertex 0 is returned.
std::optional<VertexLabelling> carries(const LabelledGraph &g,
                                       const Homomorphism &phi);

/// The two-petal graph through v0 spelling w1 and w2, labelled by
/// propagating f(v0) = k along the walks. k must be a common fixed point of
/// phi(w1) and phi(w2); HypothesisViolation otherwise.
CarrierResult build_carrier(const Word &w1, const Word &w2,
                            const Homomorphism &phi, Point k);

/// Identifies vertices with equal labels. Quotient vertices are numbered by
/// increasing label, so the induced labelling is strictly increasing.
CarrierResult quotient_by_labels(const CarrierResult &carrier);

/// Exact bound n!/(n-|V|)! * prod_l (n-|E_l|)! on the number of carried
/// homomorphisms, and the constant C with bound/(n!)^m == C * n^chi.
struct CountBound {
  boost::multiprecision::cpp_int exact_bound;
  boost::multiprecision::cpp_rational ratio_constant;
};

CountBound carried_count_bound(const LabelledGraph &g, std::size_t degree);

/// Number of phi in Hom_{m,n} carried by g, by exhaustive enumeration.
std::uint64_t carried_count_exact(
    const LabelledGraph &g, std::size_t degree,
    std::uint64_t budget = default_enumeration_budget);

} // namespace tangle
