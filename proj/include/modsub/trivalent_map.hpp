#ifndef MODSUB_TRIVALENT_MAP_HPP
#define MODSUB_TRIVALENT_MAP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modsub/coset_pair.hpp"

namespace modsub {

class HasTorsion : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Rotation system of a trivalent map on an oriented surface. Darts are the
/// cosets; the vertex rotation lists darts counter-clockwise around each
/// vertex and the edge involution pairs the two darts of an edge.
class TrivalentMap {
public:
  const Permutation& vertex_rotation() const noexcept { return rotation_; }
  const Permutation& edge_involution() const noexcept { return involution_; }
  std::optional<point_t> root_dart() const noexcept { return root_; }
  std::size_t dart_count() const noexcept { return rotation_.degree(); }

  /// Vertex i is the i-th rotation cycle, in order of smallest dart.
  std::vector<std::vector<point_t>> vertices() const { return cycles(rotation_); }
  std::vector<std::vector<point_t>> edges() const { return cycles(involution_); }
  /// Face walks: cycles of edge_involution * vertex_rotation.
  std::vector<std::vector<point_t>> faces() const;

  std::size_t vertex_count() const { return cycle_count(rotation_); }
  std::size_t edge_count() const { return cycle_count(involution_); }
  std::size_t face_count() const;

  /// The same map without a distinguished dart.
  TrivalentMap unrooted() const;

private:
  TrivalentMap(Permutation rotation, Permutation involution, std::optional<point_t> root)
      : rotation_(std::move(rotation)), involution_(std::move(involution)), root_(root) {}

  Permutation rotation_;
  Permutation involution_;
  std::optional<point_t> root_;

  friend TrivalentMap to_map(const CosetPair&);
};

/// Vertices are psi-orbits, edges phi-orbits, faces cycles of phi*psi; the
/// root is dart 0. Throws HasTorsion if phi or psi has a fixed point.
TrivalentMap to_map(const CosetPair& pair);

/// Face degrees, sorted descending; equals the cusp split of the source pair.
CuspSplit face_degrees(const TrivalentMap& m);

/// g with V - E + F = 2 - 2g. Throws std::logic_error if no such g >= 0.
std::uint32_t euler_genus(const TrivalentMap& m);

/// Coset graph: blue pairs {x, phi(x)} and red arcs x -> psi(x). Fixed points
/// of phi have no blue pair; fixed points of psi give red self-loops.
struct SchreierGraph {
  std::size_t nodes = 0;
  /// Unordered pairs stored as (smaller, larger), ascending.
  std::vector<std::pair<point_t, point_t>> blue_pairs;
  /// Arcs (x, psi(x)) for every x, ascending by x.
  std::vector<std::pair<point_t, point_t>> red_arcs;

  friend bool operator==(const SchreierGraph&, const SchreierGraph&) = default;
};

SchreierGraph to_schreier(const CosetPair& pair);

/// Recovers the pair; throws std::invalid_argument (or InvalidPair) when the
/// graph does not describe a valid pair.
CosetPair from_schreier(const SchreierGraph& graph);

/// DOT text: nodes x0.., blue undirected edges for phi, red arcs for psi.
std::string export_dot(const SchreierGraph& graph, const std::string& name = "schreier");

/// DOT text: vertex nodes v0.., one edge per phi-orbit labeled by its darts,
/// and a comment per vertex giving its counter-clockwise dart rotation.
std::string export_dot(const TrivalentMap& m, const std::string& name = "map");

}  // namespace modsub

#endif  // MODSUB_TRIVALENT_MAP_HPP
