#include "tangle/carrier.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace tangle {

namespace mp = boost::multiprecision;

namespace {

void check_labelling(const LabelledGraph &g, const VertexLabelling &f,
                     const Homomorphism &phi) {
  if (g.rank() != phi.rank())
    throw InvalidArgument("graph rank " + std::to_string(g.rank()) +
                          " does not match homomorphism rank " +
                          std::to_string(phi.rank()));
  if (f.size() != g.vertex_count())
    throw InvalidArgument("labelling size does not match the vertex count");
  for (Point k : f.labels)
    if (k < 1 || k > phi.degree())
      throw InvalidArgument("vertex label " + std::to_string(k) +
                            " outside [1, " + std::to_string(phi.degree()) +
                            "]");
}

// Propagation schedule for a connected graph: a breadth-first spanning tree
// from vertex 0 and the remaining edges to check once every vertex has a
// label. Once f(0) is chosen compatibility forces every other label.
class Propagation {
public:
  explicit Propagation(const LabelledGraph &g) : graph_(g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> incident(n);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident[edges[i].src].push_back(i);
      incident[edges[i].dst].push_back(i);
    }
    std::vector<bool> reached(n, false), used(edges.size(), false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t i : incident[v]) {
        if (used[i])
          continue;
        const Edge &e = edges[i];
        const bool forward = e.src == v;
        const std::size_t other = forward ? e.dst : e.src;
        if (!reached[other]) {
          used[i] = true;
          reached[other] = true;
          tree_.push_back({i, forward});
          queue.push_back(other);
        }
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!used[i])
        checks_.push_back(i);
  }

  /// Fills `f` from f[0] = seed; false on an inconsistent edge.
  bool propagate(const Homomorphism &phi, Point seed,
                 std::vector<Point> &f) const {
    const auto edges = graph_.edges();
    f.assign(graph_.vertex_count(), 0);
    f[0] = seed;
    for (const auto &[id, forward] : tree_) {
      const Edge &e = edges[id];
      if (forward)
        f[e.dst] = phi.image(e.label)(f[e.src]);
      else
        f[e.src] = phi.inverse_image(e.label)(f[e.dst]);
    }
    for (std::size_t id : checks_) {
      const Edge &e = edges[id];
      if (phi.image(e.label)(f[e.src]) != f[e.dst])
        return false;
    }
    return true;
  }

  std::optional<VertexLabelling> find_injective(const Homomorphism &phi) {
    const std::size_t n = phi.degree();
    if (graph_.vertex_count() > n)
      return std::nullopt;
    stamp_.assign(n + 1, 0);
    for (Point seed = 1; seed <= n; ++seed) {
      if (!propagate(phi, seed, scratch_))
        continue;
      ++generation_;
      bool injective = true;
      for (Point k : scratch_) {
        if (stamp_[k] == generation_) {
          injective = false;
          break;
        }
        stamp_[k] = generation_;
      }
      if (injective)
        return VertexLabelling{scratch_};
    }
    return std::nullopt;
  }

private:
  struct TreeStep {
    std::size_t edge;
    bool forward;
  };
  const LabelledGraph &graph_;
  std::vector<TreeStep> tree_;
  std::vector<std::size_t> checks_;
  std::vector<Point> scratch_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t generation_ = 0;
};

mp::cpp_int big_factorial(std::size_t n) {
  mp::cpp_int r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace

bool VertexLabelling::is_injective() const {
  std::vector<Point> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_f_compatible(const LabelledGraph &g, const VertexLabelling &f,
                     const Homomorphism &phi) {
  check_labelling(g, f, phi);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge &e) {
    return phi.image(e.label)(f.labels[e.src]) == f.labels[e.dst];
  });
}

std::optional<VertexLabelling> carries(const LabelledGraph &g,
                                       const Homomorphism &phi) {
  if (!is_valid(g))
    throw InvalidArgument("carries requires a valid edge labelled graph");
  if (g.rank() != phi.rank())
    throw InvalidArgument("graph rank does not match homomorphism rank");
  return Propagation(g).find_injective(phi);
}

CarrierResult build_carrier(const Word &w1, const Word &w2,
                            const Homomorphism &phi, Point k) {
  if (w1.rank() != phi.rank() || w2.rank() != phi.rank())
    throw InvalidArgument("word rank does not match homomorphism rank");
  if (k < 1 || k > phi.degree())
    throw InvalidArgument("point " + std::to_string(k) + " outside [1, " +
                          std::to_string(phi.degree()) + "]");
  if (phi.apply(w1, k) != k || phi.apply(w2, k) != k)
    throw HypothesisViolation("point " + std::to_string(k) +
                              " is not a common fixed point of phi(w1) and "
                              "phi(w2)");

  const std::array<Word, 2> words{w1, w2};
  RootedGraph wedge = wedge_of_words(words);

  // wedge_of_words creates vertices in walk order, so each new vertex is the
  // head (or tail, for inverse letters) of the edge just created.
  std::vector<Point> f(wedge.graph.vertex_count(), 0);
  f[0] = k;
  std::size_t edge = 0;
  const auto edges = wedge.graph.edges();
  for (const Word &w : words) {
    const auto letters = w.letters();
    Point label = k;
    for (std::size_t t = letters.size(); t-- > 0; ++edge) {
      const Letter x = letters[t];
      label = x.sign == Sign::Plus ? phi.image(x.generator)(label)
                                   : phi.inverse_image(x.generator)(label);
      const Edge &e = edges[edge];
      const std::size_t there = x.sign == Sign::Plus ? e.dst : e.src;
      f[there] = label;
    }
  }

  CarrierResult result{std::move(wedge.graph), VertexLabelling{std::move(f)},
                       wedge.basepoint};
  if (!is_f_compatible(result.graph, result.labelling, phi))
    throw Error("internal: carrier labelling is not compatible");
  return result;
}

CarrierResult quotient_by_labels(const CarrierResult &carrier) {
  const auto &labels = carrier.labelling.labels;
  std::map<Point, std::size_t> index;
  for (Point k : labels)
    index.emplace(k, 0);
  std::size_t next = 0;
  std::vector<Point> induced;
  for (auto &[k, id] : index) {
    id = next++;
    induced.push_back(k);
  }

  std::vector<Edge> edges;
  edges.reserve(carrier.graph.edge_count());
  for (const Edge &e : carrier.graph.edges())
    edges.push_back({index[labels[e.src]], index[labels[e.dst]], e.label});
  const GraphState state =
      has_duplicate_edges(edges) ? GraphState::Prefolded : GraphState::Valid;
  return {LabelledGraph(carrier.graph.rank(), next, std::move(edges), state),
          VertexLabelling{std::move(induced)},
          index[labels[carrier.basepoint]]};
}

CountBound carried_count_bound(const LabelledGraph &g, std::size_t degree) {
  if (!is_valid(g))
    throw InvalidArgument("carried_count_bound requires a valid graph");
  const std::size_t n = degree;
  CountBound result{0, 0};
  if (g.vertex_count() > n)
    return result;
  // With an injective f, same-label edges have distinct sources, so a label
  // used more than n times admits no carried homomorphism.
  for (int l = 1; l <= g.rank(); ++l)
    if (g.label_count(l) > n)
      return result;

  mp::cpp_int bound = big_factorial(n) / big_factorial(n - g.vertex_count());
  for (int l = 1; l <= g.rank(); ++l)
    bound *= big_factorial(n - g.label_count(l));
  result.exact_bound = bound;

  mp::cpp_int hom_count = mp::pow(big_factorial(n), g.rank());
  const long long chi = euler_characteristic(g);
  const mp::cpp_int n_power =
      mp::pow(mp::cpp_int(n), static_cast<unsigned>(chi < 0 ? -chi : chi));
  // ratio / n^chi
  result.ratio_constant =
      chi < 0 ? mp::cpp_rational(bound * n_power, hom_count)
              : mp::cpp_rational(bound, hom_count * n_power);
  return result;
}

std::uint64_t carried_count_exact(const LabelledGraph &g, std::size_t degree,
                                  std::uint64_t budget) {
  if (!is_valid(g))
    throw InvalidArgument("carried_count_exact requires a valid graph");
  HomEnumerator homs(g.rank(), degree, budget);
  if (g.vertex_count() > degree)
    return 0;
  Propagation propagation(g);
  std::uint64_t count = 0;
  while (homs.next())
    if (propagation.find_injective(homs.current()))
      ++count;
  return count;
}

} // namespace tangle
