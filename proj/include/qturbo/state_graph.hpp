#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qturbo/seed.hpp"
#include "qturbo/symplectic.hpp"

namespace qturbo {

/// Limits on state-diagram enumeration. Exceeding them raises BudgetError.
struct EnumerationBudget {
  std::size_t max_memory = 8;
  std::size_t max_edges = std::size_t{1} << 24;
};

/// Edge M -> M' labeled (L, P), generated by input (M : L : S^z) with
/// (P : M') = (M : L : S^z) U. All labels are packed Pauli words.
struct DiagramEdge {
  std::uint32_t from;
  std::uint32_t to;
  std::uint32_t logical;
  std::uint32_t stabilizer_z;
  std::uint64_t physical;
  int logical_weight;
  int physical_weight;
};

/// State diagram on the 4^m memory states. Edges are stored grouped by source in
/// lexicographic (M, L, S^z) order, so the out-edges of M are a contiguous range.
class StateDiagram {
 public:
  explicit StateDiagram(const SeedTransformation& seed, EnumerationBudget budget = {});

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t out_degree() const { return out_degree_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  std::span<const DiagramEdge> out_edges(std::uint32_t vertex) const {
    return {edges_.data() + static_cast<std::size_t>(vertex) * out_degree_, out_degree_};
  }

  /// Unique zero-physical-weight edge ending at `vertex`, if any. There is never
  /// more than one; the constructor checks it.
  std::optional<std::size_t> zero_physical_in_edge(std::uint32_t vertex) const {
    const auto e = zero_in_[vertex];
    return e == kNone ? std::nullopt : std::optional<std::size_t>(e);
  }

  std::string vertex_label(std::uint32_t vertex) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t n_, k_, m_;
  std::size_t num_vertices_;
  std::size_t out_degree_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::size_t> zero_in_;
};

/// Builds the diagram; equivalent to the StateDiagram constructor.
StateDiagram build_state_diagram(const SeedTransformation& seed, EnumerationBudget budget = {});

struct ZeroWeightCycle {
  std::vector<std::uint32_t> vertices;  // in traversal order, starting at the smallest
  std::vector<std::size_t> edges;       // edges[i] goes vertices[i] -> vertices[i+1 mod len]
  int logical_weight = 0;
};

/// Every elementary cycle of the zero-physical-weight subgraph, ordered by smallest vertex.
std::vector<ZeroWeightCycle> zero_weight_cycles(const StateDiagram& d);

/// Cycle structure shared by the predicates and the spectrum computation.
struct CycleStructure {
  std::vector<ZeroWeightCycle> cycles;
  std::vector<int> cycle_of_vertex;    // index into cycles, or -1
  std::vector<bool> edge_on_cycle;     // per diagram edge
};
CycleStructure analyze_cycles(const StateDiagram& d);

bool is_non_catastrophic(const StateDiagram& d);
bool is_completely_non_catastrophic(const StateDiagram& d);
/// First zero-physical-weight cycle with non-zero logical weight, if any.
std::optional<ZeroWeightCycle> catastrophic_cycle(const StateDiagram& d);

/// Recursive encoder test: true iff no admissible path of total logical weight 1,
/// starting at a vertex on a zero-physical-weight cycle, can run through a complete
/// zero-physical-weight cycle while keeping total logical weight 1.
bool is_recursive(const StateDiagram& d);

/// Quasi-recursive test: every single-qubit logical impulse (3k of them) drives the
/// memory, under identity inputs afterwards, into a cycle that keeps emitting
/// non-identity physical output.
bool is_quasi_recursive(const SeedTransformation& seed);

/// Zero-physical-weight subgraph on the vertex set V0^perp, V0 = S0 + N0.
struct KernelGraph {
  Subspace s{0};   // row space of Sigma_M
  Subspace s0{0};  // smallest mu_M-stable subspace containing s
  Subspace n0{0};  // union of Null(mu_M^i)
  Subspace v0{0};  // s0 + n0
  std::vector<std::uint32_t> vertices;  // packed memory states of V0^perp, sorted
  std::vector<std::size_t> edges;       // diagram edge indices, both ends in V0^perp

  bool contains_vertex(std::uint32_t v) const;
  std::size_t in_degree(const StateDiagram& d, std::uint32_t v) const;
  std::size_t out_degree(const StateDiagram& d, std::uint32_t v) const;
  bool has_logical_edge(const StateDiagram& d) const;
};

KernelGraph kernel_graph(const SeedTransformation& seed, const StateDiagram& d);

/// Follows the cycle argument on the kernel graph: start at an edge with non-zero
/// logical weight and walk forward until the start vertex recurs. Returns the
/// resulting zero-physical-weight cycle, which has non-zero logical weight.
std::optional<ZeroWeightCycle> exhibit_logical_kernel_cycle(const StateDiagram& d,
                                                            const KernelGraph& g);

/// Graphviz export. With zero_weight_only, only zero-physical-weight edges are drawn.
std::string to_dot(const StateDiagram& d, bool zero_weight_only = false);
std::string to_dot(const StateDiagram& d, const KernelGraph& g);

}  // namespace qturbo
