#pragma once

#include "tangle/random.hpp"
#include "tangle/word.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace tangle {

/// Directed edge src -> dst carrying a generator label in [1, rank]. An edge's
/// id is its position in the owning graph's edge list.
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  int label = 1;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Valid graphs have no two edges sharing (src, dst, label). Prefolded graphs
/// may, and only exist between a vertex quotient and the fold that follows.
enum class GraphState { Valid, Prefolded };

/// Weakly connected directed multigraph on vertices {0, ..., V-1} with edges
/// labelled by the generators of F_rank.
class LabelledGraph {
public:
  /// Throws InvalidArgument when the graph is disconnected, an endpoint or
  /// label is out of range, or `state == Valid` but an edge is duplicated.
  LabelledGraph(int rank, std::size_t vertex_count, std::vector<Edge> edges,
                GraphState state = GraphState::Valid);

  /// One vertex, no edges.
  static LabelledGraph point(int rank);

  int rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  GraphState state() const noexcept { return state_; }

  /// |E_l(G)|.
  std::size_t label_count(int label) const;

  friend bool operator==(const LabelledGraph &, const LabelledGraph &) = default;

private:
  int rank_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  GraphState state_;
};

bool is_weakly_connected(std::size_t vertex_count, std::span<const Edge> edges);
bool has_duplicate_edges(std::span<const Edge> edges);

/// Connected and free of duplicated (src, dst, label) triples.
bool is_valid(const LabelledGraph &g);

/// |V(G)| - |E(G)|.
long long euler_characteristic(const LabelledGraph &g);

/// Collapses every group of edges sharing (src, dst, label) to one edge.
/// Throws InvalidArgument if two edges share (src, label) but not dst.
LabelledGraph dedup_fold(const LabelledGraph &g);
/// As above; `priority` is a permutation of the edge ids, and within each
/// duplicate group the edge listed first survives. Survivors keep the
/// priority order.
LabelledGraph dedup_fold(const LabelledGraph &g,
                         std::span<const std::size_t> priority);

struct RootedGraph {
  LabelledGraph graph;
  std::size_t basepoint = 0;
};

/// Wedge of one subdivided cycle per nonempty word at vertex 0. Each word is
/// walked rightmost letter first; s_l crosses a label-l edge forwards and
/// s_l^{-1} crosses one backwards. The result may be prefolded.
RootedGraph wedge_of_words(std::span<const Word> words);

/// Stallings folding: identifies same-label edges sharing a source or a
/// target until the graph is folded. Pairs are folded in the first order
/// found.
RootedGraph stallings_fold(const LabelledGraph &g, std::size_t basepoint);
/// As above, folding a uniformly chosen foldable pair at every step.
RootedGraph stallings_fold(const LabelledGraph &g, std::size_t basepoint,
                           SplitMix64 &rng);
RootedGraph stallings_fold(std::span<const Word> words);

/// Rank of pi_1 of a connected graph, 1 - chi.
long long cycle_rank(const LabelledGraph &g);

/// Relabels vertices in breadth-first order from `root`, visiting incident
/// edges by (label, outgoing before incoming), and sorts the edges. Two folded
/// graphs are label-respecting isomorphic with matching roots iff their
/// canonical forms are equal. Throws InvalidArgument when some vertex has two
/// incident edges with the same label and direction.
LabelledGraph canonical_form(const LabelledGraph &g, std::size_t root);

} // namespace tangle
