#include "hedra/secondary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hedra/facelattice.hpp"

namespace hedra {

std::string format_significant(double value, int digits) {
  if (value == 0) value = 0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

StandardPolygon StandardPolygon::make(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  StandardPolygon p;
  p.n = n;
  p.x.resize(static_cast<std::size_t>(n));
  p.y.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double angle = 2.0 * std::numbers::pi * j / n;
    p.x[static_cast<std::size_t>(j)] = std::cos(angle);
    p.y[static_cast<std::size_t>(j)] = std::sin(angle);
  }
  return p;
}

double StandardPolygon::triangle_area(int i, int j, int k) const {
  auto xi = x[static_cast<std::size_t>(i)], yi = y[static_cast<std::size_t>(i)];
  auto xj = x[static_cast<std::size_t>(j)], yj = y[static_cast<std::size_t>(j)];
  auto xk = x[static_cast<std::size_t>(k)], yk = y[static_cast<std::size_t>(k)];
  return 0.5 * std::abs((xj - xi) * (yk - yi) - (xk - xi) * (yj - yi));
}

double StandardPolygon::area() const {
  double twice = 0;
  for (int j = 0; j < n; ++j) {
    int k = (j + 1) % n;
    twice += x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k)] -
             x[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(j)];
  }
  return 0.5 * std::abs(twice);
}

GkzVector gkz_vector(const PartialTriangulation& t) {
  if (!t.is_triangulation())
    throw std::invalid_argument("GKZ vector requires a full triangulation");
  StandardPolygon poly = StandardPolygon::make(t.n());
  GkzVector v;
  v.n = t.n();
  v.coords.assign(static_cast<std::size_t>(t.n()), 0.0);
  for (const auto& tri : triangles_of(t)) {
    double area = poly.triangle_area(tri[0], tri[1], tri[2]);
    for (int corner : tri) v.coords[static_cast<std::size_t>(corner)] += area;
  }
  return v;
}

int affine_dimension(const std::vector<std::vector<double>>& points,
                     double tol) {
  if (points.size() <= 1) return 0;
  std::size_t d = points[0].size();
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d)
      throw std::invalid_argument("points of mixed dimension");
    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(row));
  }

  std::vector<char> row_used(rows.size(), 0), col_used(d, 0);
  int rank = 0;
  for (;;) {
    double best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (col_used[j]) continue;
        if (std::abs(rows[i][j]) > best) {
          best = std::abs(rows[i][j]);
          bi = i;
          bj = j;
        }
      }
    }
    if (best <= tol) break;
    ++rank;
    row_used[bi] = 1;
    col_used[bj] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (row_used[i] || rows[i][bj] == 0) continue;
      double factor = rows[i][bj] / rows[bi][bj];
      for (std::size_t j = 0; j < d; ++j) rows[i][j] -= factor * rows[bi][j];
    }
  }
  return rank;
}

std::vector<GkzVector> gkz_vertices(int n, bool symmetric) {
  std::vector<PartialTriangulation> ts = symmetric
                                             ? enumerate_symmetric_triangulations(n)
                                             : enumerate_triangulations(n);
  std::vector<GkzVector> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(gkz_vector(t));
  return out;
}

bool tau_fixed(const GkzVector& v, double tol) {
  if (v.n % 2 != 0)
    throw std::invalid_argument("half-turn needs an even polygon");
  int m = v.n / 2;
  for (int i = 0; i < v.n; ++i)
    if (std::abs(v.coords[static_cast<std::size_t>(i)] -
                 v.coords[static_cast<std::size_t>((i + m) % v.n)]) > tol)
      return false;
  return true;
}

EmbeddingReport check_embedding_isometry(int n) {
  std::vector<PartialTriangulation> ts = enumerate_triangulations(n);
  std::vector<GkzVector> src, img;
  src.reserve(ts.size());
  img.reserve(ts.size());
  for (const auto& t : ts) {
    src.push_back(gkz_vector(t));
    img.push_back(gkz_vector(embed_into_double(t)));
  }

  EmbeddingReport report;
  report.n = n;
  std::size_t dims = static_cast<std::size_t>(2 * n);
  auto padded_diff = [&](std::size_t i) {
    std::vector<double> diff(dims);
    for (int j = 0; j < 2 * n; ++j) {
      double padded = (j % 2 == 0) ? src[i].coords[static_cast<std::size_t>(j / 2)] : 0.0;
      diff[static_cast<std::size_t>(j)] =
          img[i].coords[static_cast<std::size_t>(j)] - padded;
    }
    return diff;
  };

  report.translation = padded_diff(0);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    std::vector<double> diff = padded_diff(i);
    for (std::size_t j = 0; j < dims; ++j)
      report.max_translation_deviation =
          std::max(report.max_translation_deviation,
                   std::abs(diff[j] - report.translation[j]));
  }

  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      double d_src = 0, d_img = 0;
      for (int k = 0; k < n; ++k) {
        double delta = src[i].coords[static_cast<std::size_t>(k)] -
                       src[j].coords[static_cast<std::size_t>(k)];
        d_src += delta * delta;
      }
      for (std::size_t k = 0; k < dims; ++k) {
        double delta = img[i].coords[k] - img[j].coords[k];
        d_img += delta * delta;
      }
      d_src = std::sqrt(d_src);
      d_img = std::sqrt(d_img);
      report.max_distance_deviation =
          std::max(report.max_distance_deviation,
                   std::abs(d_img - d_src) / d_src);
    }
  return report;
}

std::string gkz_json(int n, bool symmetric) {
  std::vector<PartialTriangulation> ts = symmetric
                                             ? enumerate_symmetric_triangulations(n)
                                             : enumerate_triangulations(n);
  std::ostringstream out;
  out << "{\"n\":" << n << ",\"symmetric\":" << (symmetric ? "true" : "false")
      << ",\"vertices\":[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out << ',';
    out << "{\"triangulation\":[";
    const auto& ds = ts[i].diagonals();
    for (std::size_t k = 0; k < ds.size(); ++k) {
      if (k) out << ',';
      out << '[' << ds[k].a << ',' << ds[k].b << ']';
    }
    out << "],\"gkz\":[";
    GkzVector v = gkz_vector(ts[i]);
    for (std::size_t k = 0; k < v.coords.size(); ++k) {
      if (k) out << ',';
      out << format_significant(v.coords[k]);
    }
    out << "]}";
  }
  out << "]}";
  return out.str();
}

namespace {

// First three orthonormal directions spanning the points' affine hull.
std::vector<std::vector<double>> orthonormal_span_basis(
    const std::vector<GkzVector>& verts) {
  std::vector<std::vector<double>> basis;
  std::size_t d = verts[0].coords.size();
  for (std::size_t i = 1; i < verts.size() && basis.size() < 3; ++i) {
    std::vector<double> v(d);
    for (std::size_t j = 0; j < d; ++j)
      v[j] = verts[i].coords[j] - verts[0].coords[j];
    for (const auto& b : basis) {
      double dot = 0;
      for (std::size_t j = 0; j < d; ++j) dot += v[j] * b[j];
      for (std::size_t j = 0; j < d; ++j) v[j] -= dot * b[j];
    }
    double norm = 0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    if (norm > 1e-9) {
      for (double& c : v) c /= norm;
      basis.push_back(std::move(v));
    }
  }
  if (basis.size() != 3)
    throw std::invalid_argument("affine span is not 3-dimensional");
  return basis;
}

}  // namespace

std::string off_3d(int n, bool symmetric) {
  bool associahedron_case = (n == 6 && !symmetric);
  bool cyclohedron_case = (n == 8 && symmetric);
  if (!associahedron_case && !cyclohedron_case)
    throw std::invalid_argument(
        "3-dimensional OFF export exists only for the hexagon associahedron "
        "(n=6) and the octagon cyclohedron (n=8, symmetric)");

  FaceLattice lat = build_face_lattice(n, symmetric);
  auto [v0, v1] = lat.rank_range(0);
  std::vector<GkzVector> verts;
  for (std::size_t i = v0; i < v1; ++i)
    verts.push_back(gkz_vector(lat.faces()[i]));
  std::vector<std::vector<double>> basis = orthonormal_span_basis(verts);

  auto [f0, f1] = lat.rank_range(2);
  auto [e0, e1] = lat.rank_range(1);
  std::size_t vcount = v1 - v0, fcount = f1 - f0, ecount = e1 - e0;

  std::ostringstream out;
  out << "OFF\n" << vcount << ' ' << fcount << ' ' << ecount << '\n';
  for (const GkzVector& v : verts) {
    for (std::size_t k = 0; k < 3; ++k) {
      double coord = 0;
      for (std::size_t j = 0; j < v.coords.size(); ++j)
        coord += (v.coords[j] - verts[0].coords[j]) * basis[k][j];
      out << (k ? " " : "") << format_significant(coord);
    }
    out << '\n';
  }

  for (std::size_t f = f0; f < f1; ++f) {
    // Order the facet's vertices into a boundary cycle using its edges.
    std::vector<std::size_t> cycle_verts = lat.vertices_below(f);
    std::map<std::size_t, std::vector<std::size_t>> neighbor;
    for (std::size_t e : lat.covers_down()[f]) {
      std::vector<std::size_t> ends = lat.vertices_below(e);
      neighbor[ends[0]].push_back(ends[1]);
      neighbor[ends[1]].push_back(ends[0]);
    }
    std::size_t start = *std::min_element(cycle_verts.begin(), cycle_verts.end());
    std::vector<std::size_t> cycle{start};
    std::size_t prev = start;
    std::size_t cur = std::min(neighbor[start][0], neighbor[start][1]);
    while (cur != start) {
      cycle.push_back(cur);
      std::size_t next =
          neighbor[cur][0] == prev ? neighbor[cur][1] : neighbor[cur][0];
      prev = cur;
      cur = next;
    }
    out << cycle.size();
    for (std::size_t v : cycle) out << ' ' << (v - v0);
    out << '\n';
  }
  return out.str();
}

}  // namespace hedra
