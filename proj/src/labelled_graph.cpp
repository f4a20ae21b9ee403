#include "tangle/labelled_graph.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace tangle {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller representative wins so that results do not depend on the
  // order of unions.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

GraphState state_of(std::span<const Edge> edges) {
  return has_duplicate_edges(edges) ? GraphState::Prefolded
                                    : GraphState::Valid;
}

// Folds until no two live edges with a common label share an endpoint
// class. `choose` picks among the candidate pairs.
template <class Choose>
RootedGraph fold_impl(const LabelledGraph &g, std::size_t basepoint,
                      Choose &&choose) {
  if (basepoint >= g.vertex_count())
    throw InvalidArgument("basepoint outside the vertex set");
  const auto edges = g.edges();
  DisjointSets classes(g.vertex_count());
  std::vector<bool> alive(edges.size(), true);

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i])
        continue;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!alive[j] || edges[i].label != edges[j].label)
          continue;
        if (classes.find(edges[i].src) == classes.find(edges[j].src) ||
            classes.find(edges[i].dst) == classes.find(edges[j].dst))
          candidates.emplace_back(i, j);
      }
    }
    if (candidates.empty())
      break;
    const auto [i, j] = candidates[choose(candidates.size())];
    classes.unite(edges[i].src, edges[j].src);
    classes.unite(edges[i].dst, edges[j].dst);
    alive[j] = false;
  }

  std::vector<std::size_t> rename(g.vertex_count(), g.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = classes.find(v);
    if (rename[r] == g.vertex_count())
      rename[r] = next++;
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i])
      out.push_back({rename[classes.find(edges[i].src)],
                     rename[classes.find(edges[i].dst)], edges[i].label});
  return {LabelledGraph(g.rank(), next, std::move(out)),
          rename[classes.find(basepoint)]};
}

} // namespace

LabelledGraph::LabelledGraph(int rank, std::size_t vertex_count,
                             std::vector<Edge> edges, GraphState state)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)),
      state_(state) {
  if (rank < 1)
    throw InvalidArgument("graph rank must be at least 1");
  if (vertex_count == 0)
    throw InvalidArgument("a graph needs at least one vertex");
  for (const Edge &e : edges_) {
    if (e.src >= vertex_count || e.dst >= vertex_count)
      throw InvalidArgument("edge endpoint outside the vertex set");
    if (e.label < 1 || e.label > rank)
      throw InvalidArgument("edge label " + std::to_string(e.label) +
                            " outside [1, " + std::to_string(rank) + "]");
  }
  if (!is_weakly_connected(vertex_count, edges_))
    throw InvalidArgument("graph is not weakly connected");
  if (state == GraphState::Valid && has_duplicate_edges(edges_))
    throw InvalidArgument("two edges share endpoints and label");
}

LabelledGraph LabelledGraph::point(int rank) {
  return LabelledGraph(rank, 1, {});
}

std::size_t LabelledGraph::label_count(int label) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [label](const Edge &e) { return e.label == label; }));
}

bool is_weakly_connected(std::size_t vertex_count,
                         std::span<const Edge> edges) {
  if (vertex_count == 0)
    return false;
  DisjointSets classes(vertex_count);
  for (const Edge &e : edges)
    classes.unite(e.src, e.dst);
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (classes.find(v) != 0)
      return false;
  return true;
}

bool has_duplicate_edges(std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

bool is_valid(const LabelledGraph &g) {
  return is_weakly_connected(g.vertex_count(), g.edges()) &&
         !has_duplicate_edges(g.edges());
}

long long euler_characteristic(const LabelledGraph &g) {
  return static_cast<long long>(g.vertex_count()) -
         static_cast<long long>(g.edge_count());
}

LabelledGraph dedup_fold(const LabelledGraph &g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return dedup_fold(g, order);
}

LabelledGraph dedup_fold(const LabelledGraph &g,
                         std::span<const std::size_t> priority) {
  const auto edges = g.edges();
  if (priority.size() != edges.size())
    throw InvalidArgument("fold priority must list every edge once");
  std::vector<bool> listed(edges.size(), false);
  for (std::size_t id : priority) {
    if (id >= edges.size() || listed[id])
      throw InvalidArgument("fold priority must list every edge once");
    listed[id] = true;
  }

  // (src, label) -> dst must be a function, otherwise the input did not come
  // from a compatible labelling with an injective quotient.
  std::vector<std::tuple<std::size_t, int, std::size_t>> heads;
  heads.reserve(edges.size());
  for (const Edge &e : edges)
    heads.emplace_back(e.src, e.label, e.dst);
  std::sort(heads.begin(), heads.end());
  for (std::size_t i = 1; i < heads.size(); ++i) {
    const auto &[s0, l0, d0] = heads[i - 1];
    const auto &[s1, l1, d1] = heads[i];
    if (s0 == s1 && l0 == l1 && d0 != d1)
      throw InvalidArgument("edges leaving vertex " + std::to_string(s0) +
                            " with label " + std::to_string(l0) +
                            " end at different vertices; cannot fold");
  }

  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (std::size_t id : priority) {
    const Edge &e = edges[id];
    if (std::find(kept.begin(), kept.end(), e) == kept.end())
      kept.push_back(e);
  }
  return LabelledGraph(g.rank(), g.vertex_count(), std::move(kept));
}

RootedGraph wedge_of_words(std::span<const Word> words) {
  if (words.empty())
    throw InvalidArgument("wedge_of_words needs at least one word");
  const int rank = words.front().rank();
  std::size_t vertices = 1;
  std::vector<Edge> edges;
  for (const Word &w : words) {
    if (w.rank() != rank)
      throw InvalidArgument("words have different ranks");
    const auto letters = w.letters();
    std::size_t here = 0;
    for (std::size_t t = letters.size(); t-- > 0;) {
      const std::size_t there = t == 0 ? 0 : vertices++;
      const Letter x = letters[t];
      if (x.sign == Sign::Plus)
        edges.push_back({here, there, x.generator});
      else
        edges.push_back({there, here, x.generator});
      here = there;
    }
  }
  return {LabelledGraph(rank, vertices, edges, state_of(edges)), 0};
}

RootedGraph stallings_fold(const LabelledGraph &g, std::size_t basepoint) {
  return fold_impl(g, basepoint, [](std::size_t) { return std::size_t{0}; });
}

RootedGraph stallings_fold(const LabelledGraph &g, std::size_t basepoint,
                           SplitMix64 &rng) {
  return fold_impl(g, basepoint, [&rng](std::size_t count) {
    return static_cast<std::size_t>(uniform_below(rng, count));
  });
}

RootedGraph stallings_fold(std::span<const Word> words) {
  const RootedGraph wedge = wedge_of_words(words);
  return stallings_fold(wedge.graph, wedge.basepoint);
}

long long cycle_rank(const LabelledGraph &g) {
  return 1 - euler_characteristic(g);
}

LabelledGraph canonical_form(const LabelledGraph &g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  if (root >= n)
    throw InvalidArgument("root outside the vertex set");
  const auto edges = g.edges();

  // Incident edges per vertex keyed by (label, direction); direction 0 is
  // outgoing, 1 incoming. A loop is both.
  struct Incidence {
    int label;
    int direction;
    std::size_t other;
  };
  std::vector<std::vector<Incidence>> incident(n);
  for (const Edge &e : edges) {
    incident[e.src].push_back({e.label, 0, e.dst});
    incident[e.dst].push_back({e.label, 1, e.src});
  }
  for (auto &list : incident) {
    std::sort(list.begin(), list.end(), [](const auto &a, const auto &b) {
      return std::tie(a.label, a.direction) < std::tie(b.label, b.direction);
    });
    for (std::size_t i = 1; i < list.size(); ++i)
      if (list[i].label == list[i - 1].label &&
          list[i].direction == list[i - 1].direction)
        throw InvalidArgument("canonical_form requires a folded graph");
  }

  std::vector<std::size_t> rename(n, n);
  std::deque<std::size_t> queue{root};
  rename[root] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const Incidence &inc : incident[v])
      if (rename[inc.other] == n) {
        rename[inc.other] = next++;
        queue.push_back(inc.other);
      }
  }

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge &e : edges)
    out.push_back({rename[e.src], rename[e.dst], e.label});
  std::sort(out.begin(), out.end());
  return LabelledGraph(g.rank(), n, std::move(out));
}

} // namespace tangle
