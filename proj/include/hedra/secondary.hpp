#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hedra/triangulation.hpp"

namespace hedra {

inline constexpr double kDefaultTolerance = 1e-9;

// Formats with 12 significant digits (shortest form, printf %.12g).
std::string format_significant(double value, int digits = 12);

// Vertices of the regular n-gon inscribed in the unit circle, vertex j at
// angle 2*pi*j/n.
struct StandardPolygon {
  int n = 0;
  std::vector<double> x;
  std::vector<double> y;

  static StandardPolygon make(int n);
  // Area of the triangle on polygon vertices (i, j, k) by the shoelace formula.
  double triangle_area(int i, int j, int k) const;
  double area() const;
};

// GKZ coordinate vector of a full triangulation: coords[i] = total area of the
// triangles incident to vertex i.
struct GkzVector {
  int n = 0;
  std::vector<double> coords;
};

// Throws std::invalid_argument unless `t` is a full triangulation.
GkzVector gkz_vector(const PartialTriangulation& t);

// Dimension of the affine span of a point set: rank of {p - p0} computed by
// Gaussian elimination with full pivoting and absolute pivot threshold `tol`.
int affine_dimension(const std::vector<std::vector<double>>& points,
                     double tol = kDefaultTolerance);

// GKZ vectors of all (symmetric) triangulations of the n-gon, in the
// enumeration order of enumerate_triangulations / enumerate_symmetric_*.
std::vector<GkzVector> gkz_vertices(int n, bool symmetric);

// The half-turn j -> j + n/2 acting on GKZ coordinates of the n-gon (n even):
// fixed vectors are exactly those with coords[i] == coords[i + n/2].
bool tau_fixed(const GkzVector& v, double tol = kDefaultTolerance);

// Numerical check that relabelling j -> 2j plus the ring of ear triangles
// embeds the GKZ vertices of the n-gon into those of the 2n-gon by a pure
// translation (hence isometrically).
struct EmbeddingReport {
  int n = 0;
  std::vector<double> translation;      // common difference vector, length 2n
  double max_translation_deviation = 0; // max |diff - translation| over pairs
  double max_distance_deviation = 0;    // max |d_2n(img) - d_n(src)| over pairs

  bool ok(double tol = kDefaultTolerance) const {
    return max_translation_deviation <= tol && max_distance_deviation <= tol;
  }
};

EmbeddingReport check_embedding_isometry(int n);

// JSON document listing every (symmetric) triangulation with its GKZ vector.
std::string gkz_json(int n, bool symmetric);

// OFF model of the 3-dimensional cases: the associahedron of the hexagon
// (n = 6, symmetric = false) and the cyclohedron of the octagon (n = 8,
// symmetric = true), with GKZ vertices projected orthonormally onto their
// 3-dimensional affine span.  Throws std::invalid_argument for other inputs.
std::string off_3d(int n, bool symmetric);

}  // namespace hedra
