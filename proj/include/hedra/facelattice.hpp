#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hedra/triangulation.hpp"

namespace hedra {

// Face lattice of the associahedron (faces = partial triangulations of a convex
// n-gon ordered by reverse inclusion) or of the cyclohedron (centrally symmetric
// partial triangulations of a 2m-gon).  The face at rank r has dim - r diagonals
// (resp. orbit classes), so vertices (rank 0) are the full (symmetric)
// triangulations and the unique top cell is the empty set at rank dim.
class FaceLattice {
 public:
  FaceLattice(int n, bool symmetric, std::vector<PartialTriangulation> faces);

  int n() const { return n_; }
  bool symmetric() const { return symmetric_; }
  // Dimension of the polytope: n-3 for the associahedron on an n-gon,
  // n/2 - 1 for the cyclohedron on an n-gon (n even).
  int dim() const { return dim_; }

  // Faces sorted by (rank ascending, then lexicographically by diagonal list).
  // Includes the top cell (the empty partial triangulation) at rank dim().
  const std::vector<PartialTriangulation>& faces() const { return faces_; }

  int rank(std::size_t face_index) const;
  // Index of the face equal to `face`, or -1 if not present.
  std::ptrdiff_t index_of(const PartialTriangulation& face) const;

  // Covering relations: cover_pairs()[k] = {i, j} with face i covered by face j
  // (rank(j) == rank(i) + 1 and faces[j] ⊂ faces[i] as diagonal sets).
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_pairs() const {
    return covers_;
  }
  const std::vector<std::vector<std::size_t>>& covers_up() const {
    return covers_up_;
  }
  const std::vector<std::vector<std::size_t>>& covers_down() const {
    return covers_down_;
  }

  // Indices of faces of the given rank, contiguous in faces().
  std::pair<std::size_t, std::size_t> rank_range(int rank) const;

  // Vertex indices (rank-0 faces) lying below the given face, i.e. the full
  // triangulations refining it.
  std::vector<std::size_t> vertices_below(std::size_t face_index) const;

  std::string to_json() const;

 private:
  int n_ = 0;
  bool symmetric_ = false;
  int dim_ = 0;
  std::vector<PartialTriangulation> faces_;
  std::vector<std::size_t> rank_offset_;  // rank_offset_[r] = first index of rank r
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> covers_up_;
  std::vector<std::vector<std::size_t>> covers_down_;
};

// Builds the full face lattice.  Throws capacity_error above kFaceCap.
FaceLattice build_face_lattice(int n, bool symmetric);

// f-vector (f_0, ..., f_{dim-1}): number of faces of each rank, excluding the
// top cell, which is reported separately.
struct FVector {
  int n = 0;
  bool symmetric = false;
  int dim = 0;
  std::vector<std::uint64_t> counts;  // counts[r] = #faces of rank r, r < dim
  std::uint64_t top_cells = 1;

  std::string to_json() const;
};

FVector f_vector(int n, bool symmetric);
FVector f_vector(const FaceLattice& lattice);

enum class TwoFaceKind { Square, Pentagon, Hexagon };

std::string to_string(TwoFaceKind kind);

// Classifies a rank-2 face by the number of vertices below it (4, 5 or 6).
// Throws std::invalid_argument if the face is not rank 2 in the lattice.
TwoFaceKind classify_two_face(const FaceLattice& lattice,
                              const PartialTriangulation& face);

// Same classification computed locally from the face itself, without counting
// lattice vertices: each non-triangle region left by the face's diagonals is a
// quadrilateral, pentagon, or (in the symmetric case) a centrally symmetric
// hexagon; the face's shape follows from those regions.
TwoFaceKind classify_two_face_local(int n, bool symmetric,
                                    const PartialTriangulation& face);

// Flip graph: vertices are the (symmetric) triangulations in lattice order,
// edges connect triangulations differing by one (orbit) flip.
struct FlipGraph {
  int n = 0;
  bool symmetric = false;
  std::vector<PartialTriangulation> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j

  std::string to_dot() const;
  std::string to_json() const;
};

FlipGraph flip_graph(int n, bool symmetric);

// Doubling map on faces: the partial triangulation of an n-gon whose vertices
// are relabelled j -> 2j inside a 2n-gon, together with the n short chords
// {2j, 2j+2} cutting off the odd vertices.  Injective, order-preserving, and
// sends centrally symmetric faces to centrally symmetric faces.
PartialTriangulation embed_into_double(const PartialTriangulation& face);

}  // namespace hedra
