#include "qturbo/state_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

std::uint64_t spread_z(std::uint64_t s, std::size_t count) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < count; ++i) {
    out |= ((s >> i) & 1U) << (2 * i + 1);
  }
  return out;
}

std::string label(std::size_t qubits, std::uint64_t value) {
  if (qubits == 0) {
    return "-";
  }
  return PauliString::from_packed(qubits, value).str();
}

}  // namespace

StateDiagram::StateDiagram(const SeedTransformation& seed, EnumerationBudget budget)
    : n_(seed.n()), k_(seed.k()), m_(seed.m()) {
  if (m_ > budget.max_memory) {
    throw BudgetError("state diagram with m = " + std::to_string(m_) +
                      " exceeds the memory budget m <= " + std::to_string(budget.max_memory));
  }
  if (2 * k_ + (n_ - k_) >= 32) {
    throw BudgetError("state diagram out-degree 4^k 2^(n-k) is too large");
  }
  num_vertices_ = std::size_t{1} << (2 * m_);
  out_degree_ = std::size_t{1} << (2 * k_ + (n_ - k_));
  if (num_vertices_ * out_degree_ > budget.max_edges) {
    throw BudgetError("state diagram needs " + std::to_string(num_vertices_ * out_degree_) +
                      " edges, budget is " + std::to_string(budget.max_edges));
  }
  edges_.reserve(num_vertices_ * out_degree_);
  zero_in_.assign(num_vertices_, kNone);
  const std::size_t num_logical = std::size_t{1} << (2 * k_);
  const std::size_t num_stab = std::size_t{1} << (n_ - k_);
  for (std::uint32_t mem = 0; mem < num_vertices_; ++mem) {
    for (std::uint32_t l = 0; l < num_logical; ++l) {
      for (std::uint32_t s = 0; s < num_stab; ++s) {
        const std::uint64_t out = seed.apply(seed.pack_input(mem, l, spread_z(s, n_ - k_)));
        DiagramEdge e{};
        e.from = mem;
        e.to = static_cast<std::uint32_t>(seed.memory_part(out));
        e.logical = l;
        e.stabilizer_z = s;
        e.physical = seed.physical_part(out);
        e.logical_weight = packed::weight(l);
        e.physical_weight = packed::weight(e.physical);
        if (e.physical == 0) {
          if (zero_in_[e.to] != kNone) {
            throw std::logic_error("two zero-physical-weight edges share an endpoint");
          }
          zero_in_[e.to] = edges_.size();
        }
        edges_.push_back(e);
      }
    }
  }
}

std::string StateDiagram::vertex_label(std::uint32_t vertex) const { return label(m_, vertex); }

StateDiagram build_state_diagram(const SeedTransformation& seed, EnumerationBudget budget) {
  return StateDiagram(seed, budget);
}

CycleStructure analyze_cycles(const StateDiagram& d) {
  const std::size_t nv = d.num_vertices();
  CycleStructure cs;
  cs.cycle_of_vertex.assign(nv, -1);
  cs.edge_on_cycle.assign(d.edges().size(), false);

  // Zero-physical in-degree is at most one, so predecessors form a functional graph.
  std::vector<std::uint8_t> state(nv, 0);  // 0 new, 1 on current walk, 2 finished
  for (std::uint32_t start = 0; start < nv; ++start) {
    std::vector<std::uint32_t> walk;
    std::uint32_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      const auto in = d.zero_physical_in_edge(v);
      if (!in) {
        break;
      }
      v = d.edges()[*in].from;
    }
    if (state[v] == 1 && d.zero_physical_in_edge(v)) {
      // v closes a cycle: walk from v onwards lists it in predecessor order.
      const auto it = std::find(walk.begin(), walk.end(), v);
      std::vector<std::uint32_t> rev(it, walk.end());
      std::reverse(rev.begin(), rev.end());
      std::rotate(rev.begin(), std::min_element(rev.begin(), rev.end()), rev.end());
      ZeroWeightCycle c;
      c.vertices = rev;
      for (std::size_t i = 0; i < rev.size(); ++i) {
        const auto e = *d.zero_physical_in_edge(rev[(i + 1) % rev.size()]);
        c.edges.push_back(e);
        c.logical_weight += d.edges()[e].logical_weight;
      }
      cs.cycles.push_back(std::move(c));
    }
    for (std::uint32_t w : walk) {
      state[w] = 2;
    }
  }
  std::sort(cs.cycles.begin(), cs.cycles.end(),
            [](const ZeroWeightCycle& a, const ZeroWeightCycle& b) {
              return a.vertices.front() < b.vertices.front();
            });
  for (std::size_t c = 0; c < cs.cycles.size(); ++c) {
    for (std::uint32_t v : cs.cycles[c].vertices) {
      cs.cycle_of_vertex[v] = static_cast<int>(c);
    }
    for (std::size_t e : cs.cycles[c].edges) {
      cs.edge_on_cycle[e] = true;
    }
  }
  return cs;
}

std::vector<ZeroWeightCycle> zero_weight_cycles(const StateDiagram& d) {
  return analyze_cycles(d).cycles;
}

std::optional<ZeroWeightCycle> catastrophic_cycle(const StateDiagram& d) {
  for (auto& c : zero_weight_cycles(d)) {
    if (c.logical_weight > 0) {
      return c;
    }
  }
  return std::nullopt;
}

bool is_non_catastrophic(const StateDiagram& d) { return !catastrophic_cycle(d).has_value(); }

bool is_completely_non_catastrophic(const StateDiagram& d) {
  const auto cycles = zero_weight_cycles(d);
  return cycles.size() == 1 && cycles[0].vertices.size() == 1 && cycles[0].vertices[0] == 0;
}

bool is_recursive(const StateDiagram& d) {
  const auto cs = analyze_cycles(d);
  const std::size_t nv = d.num_vertices();
  // Search states (vertex, logical weight so far in {0, 1}).
  std::vector<bool> seen(2 * nv, false);
  std::deque<std::pair<std::uint32_t, int>> queue;
  auto push = [&](std::uint32_t v, int w) {
    if (!seen[2 * v + w]) {
      seen[2 * v + w] = true;
      queue.emplace_back(v, w);
    }
  };
  for (std::uint32_t s = 0; s < nv; ++s) {
    if (cs.cycle_of_vertex[s] < 0) {
      continue;
    }
    for (const auto& e : d.out_edges(s)) {
      const std::size_t idx = static_cast<std::size_t>(&e - d.edges().data());
      if (!cs.edge_on_cycle[idx] && e.logical_weight <= 1) {
        push(e.to, e.logical_weight);
      }
    }
  }
  while (!queue.empty()) {
    const auto [v, w] = queue.front();
    queue.pop_front();
    if (const int c = cs.cycle_of_vertex[v]; c >= 0 && w + cs.cycles[c].logical_weight == 1) {
      return false;
    }
    for (const auto& e : d.out_edges(v)) {
      if (w + e.logical_weight <= 1) {
        push(e.to, w + e.logical_weight);
      }
    }
  }
  return true;
}

bool is_quasi_recursive(const SeedTransformation& seed) {
  for (std::size_t j = 0; j < seed.k(); ++j) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      std::uint64_t out = seed.apply(seed.pack_input(0, std::uint64_t{to_xz(p)} << (2 * j), 0));
      std::uint64_t mem = seed.memory_part(out);
      std::unordered_map<std::uint64_t, std::size_t> first_seen;
      std::vector<std::uint64_t> emitted;
      while (!first_seen.contains(mem)) {
        first_seen.emplace(mem, emitted.size());
        out = seed.apply(seed.pack_input(mem, 0, 0));
        emitted.push_back(seed.physical_part(out));
        mem = seed.memory_part(out);
      }
      const bool emits = std::any_of(emitted.begin() + static_cast<std::ptrdiff_t>(first_seen[mem]),
                                     emitted.end(), [](std::uint64_t v) { return v != 0; });
      if (!emits) {
        return false;
      }
    }
  }
  return seed.k() > 0;
}

bool KernelGraph::contains_vertex(std::uint32_t v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::size_t KernelGraph::in_degree(const StateDiagram& d, std::uint32_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](std::size_t e) { return d.edges()[e].to == v; }));
}

std::size_t KernelGraph::out_degree(const StateDiagram& d, std::uint32_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](std::size_t e) { return d.edges()[e].from == v; }));
}

bool KernelGraph::has_logical_edge(const StateDiagram& d) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](std::size_t e) { return d.edges()[e].logical_weight > 0; });
}

KernelGraph kernel_graph(const SeedTransformation& seed, const StateDiagram& d) {
  const std::size_t bits = 2 * seed.m();
  KernelGraph g;
  g.s = Subspace::span(bits, seed.sigma_memory().row_vectors());

  const BinaryMatrix mu = seed.mu_memory();
  g.s0 = g.s;
  while (true) {
    Subspace grown = g.s0 + g.s0.image(mu);
    if (grown.dimension() == g.s0.dimension()) {
      break;
    }
    g.s0 = std::move(grown);
  }

  g.n0 = Subspace(bits);
  BinaryMatrix power = mu;
  for (std::size_t i = 1; i <= std::max<std::size_t>(bits, 1); ++i) {
    g.n0 = g.n0 + Subspace::span(bits, power.left_null_space());
    power = power * mu;
  }
  g.v0 = g.s0 + g.n0;

  for (const auto& v : g.v0.orthogonal_complement().elements()) {
    g.vertices.push_back(static_cast<std::uint32_t>(v.read(0, bits)));
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  std::vector<bool> member(d.num_vertices(), false);
  for (auto v : g.vertices) {
    member[v] = true;
  }
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edges()[e];
    if (edge.physical == 0 && member[edge.from] && member[edge.to]) {
      g.edges.push_back(e);
    }
  }
  return g;
}

std::optional<ZeroWeightCycle> exhibit_logical_kernel_cycle(const StateDiagram& d,
                                                            const KernelGraph& g) {
  const auto first = std::find_if(g.edges.begin(), g.edges.end(), [&](std::size_t e) {
    return d.edges()[e].logical_weight > 0;
  });
  if (first == g.edges.end()) {
    return std::nullopt;
  }
  std::unordered_map<std::uint32_t, std::size_t> next_edge;
  for (std::size_t e : g.edges) {
    next_edge.try_emplace(d.edges()[e].from, e);
  }
  ZeroWeightCycle c;
  const std::uint32_t start = d.edges()[*first].from;
  c.vertices.push_back(start);
  c.edges.push_back(*first);
  c.logical_weight = d.edges()[*first].logical_weight;
  std::uint32_t v = d.edges()[*first].to;
  for (std::size_t steps = 0; steps <= g.vertices.size(); ++steps) {
    if (v == start) {
      return c;
    }
    const auto it = next_edge.find(v);
    if (it == next_edge.end()) {
      return std::nullopt;
    }
    c.vertices.push_back(v);
    c.edges.push_back(it->second);
    c.logical_weight += d.edges()[it->second].logical_weight;
    v = d.edges()[it->second].to;
  }
  return std::nullopt;
}

std::string to_dot(const StateDiagram& d, bool zero_weight_only) {
  std::ostringstream out;
  out << "digraph state_diagram {\n";
  for (std::uint32_t v = 0; v < d.num_vertices(); ++v) {
    out << "  s" << v << " [label=\"" << d.vertex_label(v) << "\"];\n";
  }
  for (const auto& e : d.edges()) {
    if (zero_weight_only && e.physical != 0) {
      continue;
    }
    out << "  s" << e.from << " -> s" << e.to << " [label=\"(" << label(d.k(), e.logical) << "|"
        << label(d.n(), e.physical) << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const StateDiagram& d, const KernelGraph& g) {
  std::ostringstream out;
  out << "digraph kernel_graph {\n";
  for (auto v : g.vertices) {
    out << "  s" << v << " [label=\"" << d.vertex_label(v) << "\"];\n";
  }
  for (std::size_t idx : g.edges) {
    const auto& e = d.edges()[idx];
    out << "  s" << e.from << " -> s" << e.to << " [label=\"(" << label(d.k(), e.logical) << "|"
        << label(d.n(), e.physical) << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qturbo
