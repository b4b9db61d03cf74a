#pragma once

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hedra/dyadic.hpp"
#include "hedra/farey.hpp"
#include "hedra/triangulation.hpp"

namespace hedra {

// Element of Thompson's group T: an orientation-preserving PL circle
// bijection with dyadic breakpoints and power-of-2 slopes, held in canonical
// form (no breakpoint with continuous slope; rigid rotations, including the
// identity, are anchored as the one-breakpoint map at 0).
class PLCircleMap {
 public:
  static PLCircleMap identity();
  // Builds from breakpoint/image lists: breaks strictly increasing in [0,1),
  // images distinct in [0,1) in the same cyclic order, every slope a power of
  // 2.  The result is canonicalized.  Throws std::invalid_argument otherwise.
  static PLCircleMap from_breakpoints(std::vector<Dyadic> breaks,
                                      std::vector<Dyadic> images);

  const std::vector<Dyadic>& breakpoints() const { return breaks_; }
  const std::vector<Dyadic>& images() const { return images_; }
  // slope on [breaks[i], breaks[i+1]) is 2^slope_exponents()[i].
  std::vector<int> slope_exponents() const;
  bool is_identity() const;

  bool operator==(const PLCircleMap&) const = default;

  // Partition-pair text "dom=...; ran=...; shift=k".
  std::string to_string() const;
  static PLCircleMap parse(const std::string& text);
  std::string to_json() const;

 private:
  PLCircleMap() = default;
  std::vector<Dyadic> breaks_;
  std::vector<Dyadic> images_;
};

// The half-rotation t -> t + 1/2 (the boundary shadow of the disc's
// pi-rotation).
PLCircleMap tau();

// Pair of Farey polygons with a corner correspondence: domain cell i maps
// affinely onto range cell (i + shift) mod m.
struct PartitionPair {
  DyadicPartition domain;
  DyadicPartition range;
  int shift = 0;

  std::string to_string() const;
  static PartitionPair parse(const std::string& text);
};

// Throws std::invalid_argument if the partitions have different sizes.
PLCircleMap from_partition_pair(const PartitionPair& pp);

// Canonical partition-pair presentation: the coarsest standard-dyadic
// refinement of the breakpoints (plus 0 and g^{-1}(0)) whose image cells are
// standard; both partitions contain 0.  Round-trips through
// from_partition_pair.
PartitionPair to_partition_pair(const PLCircleMap& g);

PLCircleMap compose(const PLCircleMap& g, const PLCircleMap& h);  // g after h
PLCircleMap inverse(const PLCircleMap& g);
// Exact image of t (mod-1 reduced first).
Dyadic evaluate(const PLCircleMap& g, const Dyadic& t);

// from_partition_pair(P, P, m/k): a torsion element whose order divides k.
// Throws std::invalid_argument unless k divides |P|.
PLCircleMap rotation_element(const DyadicPartition& p, int k);

// Smallest d in [1, cap] with g^d = identity, or nullopt.
std::optional<int> order(const PLCircleMap& g, int cap);

bool commutes(const PLCircleMap& g, const PLCircleMap& h);

// For g commuting with tau (so g(t + 1/2) = g(t) + 1/2): the descended map
// s -> 2 (g(s/2) mod 1/2) on the half-length circle.  A homomorphism from the
// centralizer of tau onto T with kernel {identity, tau}.  Throws
// std::invalid_argument if g does not commute with tau.
PLCircleMap quotient_mod_tau(const PLCircleMap& g);

// Section of quotient_mod_tau: the tau-commuting map g(t) = h(2t)/2 on
// [0,1/2) extended periodically; quotient_mod_tau(lift_to_double_cover(h))
// equals h.
PLCircleMap lift_to_double_cover(const PLCircleMap& h);

// rho g rho with rho(t) = -t (mod 1): the orientation-reversing outer
// involution of T (the extension to T.2).
PLCircleMap conjugate_by_reflection(const PLCircleMap& g);

// All dyadic partitions with 2..max_cells cells (there are
// Catalan(1)+...+Catalan(max_cells-1) of them), sorted.
std::vector<DyadicPartition> enumerate_dyadic_partitions(int max_cells);

// Random partition with `cells` cells and depth <= 4, built by repeated
// midpoint splits driven by rng() values.
DyadicPartition random_dyadic_partition(std::mt19937& rng, int cells);
// Random element from a partition pair with 2..8 cells, depth <= 4, uniform
// shift.
PLCircleMap random_element(std::mt19937& rng);

// Vertex of the infinite associahedron: a finite retriangulation of the
// dyadic Farey tessellation, stored as a full triangulation of the standard
// 2^stage-gon (polygon vertex j at circle position j/2^stage) at the minimal
// stage >= 2 representing it.
class StageVertex {
 public:
  StageVertex(int stage, PartialTriangulation triangulation);

  int stage() const { return stage_; }
  const PartialTriangulation& triangulation() const { return triangulation_; }

  // The same vertex re-expressed at a deeper stage: relabel j -> 2j and
  // insert the fan of background arcs around the new odd corners.
  StageVertex refined(int stage) const;

  bool operator==(const StageVertex&) const = default;
  std::strong_ordering operator<=>(const StageVertex& o) const;

  std::string to_json() const;
  static StageVertex from_json(const std::string& text);

 private:
  int stage_ = 2;
  PartialTriangulation triangulation_{4, {}};
};

// The background tessellation's own vertex at the given stage: the
// triangulation of the 2^k-gon whose chords are exactly the dyadic Farey
// arcs of depth <= k (canonicalizes to the stage-2 square with diagonal
// {0,2}).
PartialTriangulation stage_triangulation(int stage);

// Whether u and v differ by exactly one diagonal flip (at a common stage).
bool flip_adjacent(const StageVertex& u, const StageVertex& v);

// Whether the vertex is fixed by the half-rotation tau (t -> t + 1/2).
bool is_centrally_symmetric(const StageVertex& v);

// The action of T on vertices: corners map by evaluate(g, .), chords map to
// chords between image corners, and the result is canonicalized.
StageVertex act_on_vertex(const PLCircleMap& g, const StageVertex& v);

}  // namespace hedra
