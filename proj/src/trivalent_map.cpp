#include "modsub/trivalent_map.hpp"

#include <sstream>

namespace modsub {

std::vector<std::vector<point_t>> TrivalentMap::faces() const { return cycles(compose(involution_, rotation_)); }

std::size_t TrivalentMap::face_count() const { return cycle_count(compose(involution_, rotation_)); }

TrivalentMap TrivalentMap::unrooted() const { return TrivalentMap(rotation_, involution_, std::nullopt); }

TrivalentMap to_map(const CosetPair& pair) {
  if (!fixed_points(pair.phi()).empty()) throw HasTorsion("to_map: phi has a fixed point");
  if (!fixed_points(pair.psi()).empty()) throw HasTorsion("to_map: psi has a fixed point");
  return TrivalentMap(pair.psi(), pair.phi(), point_t{0});
}

CuspSplit face_degrees(const TrivalentMap& m) {
  return CuspSplit(cycle_type(compose(m.edge_involution(), m.vertex_rotation())));
}

std::uint32_t euler_genus(const TrivalentMap& m) {
  const auto chi = static_cast<std::int64_t>(m.vertex_count()) - static_cast<std::int64_t>(m.edge_count()) +
                   static_cast<std::int64_t>(m.face_count());
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw std::logic_error("euler_genus: Euler characteristic " + std::to_string(chi) + " is not 2 - 2g");
  }
  return static_cast<std::uint32_t>((2 - chi) / 2);
}

SchreierGraph to_schreier(const CosetPair& pair) {
  SchreierGraph g;
  g.nodes = pair.mu();
  for (point_t x = 0; x < pair.mu(); ++x) {
    const point_t y = pair.phi()(x);
    if (x < y) g.blue_pairs.emplace_back(x, y);
    g.red_arcs.emplace_back(x, pair.psi()(x));
  }
  return g;
}

CosetPair from_schreier(const SchreierGraph& graph) {
  if (graph.nodes == 0) throw std::invalid_argument("from_schreier: empty graph");
  std::vector<point_t> phi(graph.nodes);
  std::vector<point_t> psi(graph.nodes);
  std::vector<bool> has_red(graph.nodes, false);
  for (std::size_t i = 0; i < graph.nodes; ++i) phi[i] = static_cast<point_t>(i);
  for (auto [x, y] : graph.blue_pairs) {
    if (x >= graph.nodes || y >= graph.nodes || x == y || phi[x] != x || phi[y] != y) {
      throw std::invalid_argument("from_schreier: blue pairs do not form a matching");
    }
    phi[x] = y;
    phi[y] = x;
  }
  for (auto [x, y] : graph.red_arcs) {
    if (x >= graph.nodes || y >= graph.nodes || has_red[x]) {
      throw std::invalid_argument("from_schreier: node without exactly one red out-arc");
    }
    has_red[x] = true;
    psi[x] = y;
  }
  for (bool b : has_red) {
    if (!b) throw std::invalid_argument("from_schreier: node without exactly one red out-arc");
  }
  return CosetPair::validate(Permutation(std::move(phi)), Permutation(std::move(psi)));
}

std::string export_dot(const SchreierGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t x = 0; x < graph.nodes; ++x) out << "  x" << x << ";\n";
  for (auto [x, y] : graph.blue_pairs) {
    out << "  x" << x << " -> x" << y << " [color=blue, dir=none];\n";
  }
  for (auto [x, y] : graph.red_arcs) {
    out << "  x" << x << " -> x" << y << " [color=red];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const TrivalentMap& m, const std::string& name) {
  const auto verts = m.vertices();
  std::vector<std::size_t> vertex_of(m.dart_count());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (point_t d : verts[v]) vertex_of[d] = v;
  }

  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (m.root_dart()) out << "  // root dart " << *m.root_dart() << "\n";
  for (std::size_t v = 0; v < verts.size(); ++v) {
    out << "  v" << v << ";  // rotation (";
    for (std::size_t k = 0; k < verts[v].size(); ++k) {
      if (k) out << ' ';
      out << verts[v][k];
    }
    out << ")\n";
  }
  for (const auto& e : m.edges()) {
    const point_t a = e.front();
    const point_t b = e.back();
    out << "  v" << vertex_of[a] << " -- v" << vertex_of[b] << " [label=\"" << a << ":" << b << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace modsub
