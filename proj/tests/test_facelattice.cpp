#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hedra/errors.hpp"
#include "hedra/facelattice.hpp"

using namespace hedra;

namespace {

bool is_superset(const PartialTriangulation& big,
                 const PartialTriangulation& small) {
  return std::includes(big.diagonals().begin(), big.diagonals().end(),
                       small.diagonals().begin(), small.diagonals().end());
}

bool graph_connected(std::size_t vertex_count,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (vertex_count == 0) return true;
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == vertex_count;
}

long long euler_sum(const FVector& fv) {
  long long sum = 0;
  for (int r = 0; r < fv.dim; ++r)
    sum += (r % 2 == 0 ? 1 : -1) * static_cast<long long>(fv.counts[(std::size_t)r]);
  return sum;
}

}  // namespace

TEST_CASE("segment lattices: the square in both modes") {
  FaceLattice as1 = build_face_lattice(4, false);
  CHECK(as1.dim() == 1);
  CHECK(as1.faces().size() == 3);
  CHECK(as1.to_json() ==
        "{\"n\":4,\"symmetric\":false,\"dim\":1,\"faces\":["
        "{\"diagonals\":[[0,2]],\"rank\":0},"
        "{\"diagonals\":[[1,3]],\"rank\":0},"
        "{\"diagonals\":[],\"rank\":1}],"
        "\"covers\":[[0,2],[1,2]]}");
  // Both square triangulations are centrally symmetric, so the symmetric
  // lattice has the same three faces and the same covers.
  FaceLattice cy1 = build_face_lattice(4, true);
  CHECK(cy1.dim() == 1);
  CHECK(cy1.faces().size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(cy1.faces()[i].diagonals() == as1.faces()[i].diagonals());
  CHECK(cy1.cover_pairs() == as1.cover_pairs());
}

TEST_CASE("pentagon associahedron") {
  FaceLattice lat = build_face_lattice(5, false);
  CHECK(lat.dim() == 2);
  CHECK(lat.faces().size() == 11);  // 5  vertices + 5 edges + top
  FVector fv = f_vector(lat);
  CHECK(fv.counts == std::vector<std::uint64_t>{5, 5});
  CHECK(fv.top_cells == 1);
  CHECK(f_vector(5, false).counts == fv.counts);

  auto [t0, t1] = lat.rank_range(2);
  REQUIRE(t1 - t0 == 1);
  CHECK(lat.vertices_below(t0).size() == 5);
  PartialTriangulation top(5, {});
  CHECK(classify_two_face(lat, top) == TwoFaceKind::Pentagon);
  CHECK(classify_two_face_local(5, false, top) == TwoFaceKind::Pentagon);
}

TEST_CASE("hexagon associahedron f-vector and 2-face census") {
  FVector fv = f_vector(6, false);
  CHECK(fv.dim == 3);
  CHECK(fv.counts == std::vector<std::uint64_t>{14, 21, 9});
  CHECK(fv.top_cells == 1);

  FaceLattice lat = build_face_lattice(6, false);
  auto [lo, hi] = lat.rank_range(2);
  int squares = 0, pentagons = 0, hexagons = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    TwoFaceKind by_count = classify_two_face(lat, lat.faces()[i]);
    TwoFaceKind by_regions = classify_two_face_local(6, false, lat.faces()[i]);
    CHECK(by_count == by_regions);
    if (by_count == TwoFaceKind::Square) ++squares;
    if (by_count == TwoFaceKind::Pentagon) ++pentagons;
    if (by_count == TwoFaceKind::Hexagon) ++hexagons;
  }
  CHECK(squares == 3);
  CHECK(pentagons == 6);
  CHECK(hexagons == 0);
}

TEST_CASE("hexagon cyclohedron is a hexagon") {
  FVector fv = f_vector(6, true);
  CHECK(fv.dim == 2);
  CHECK(fv.counts == std::vector<std::uint64_t>{6, 6});
  CHECK(fv.top_cells == 1);

  FlipGraph g = flip_graph(6, true);
  CHECK(g.vertices.size() == 6);
  CHECK(g.edges.size() == 6);
  std::map<std::size_t, int> degree;
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (auto [v, d] : degree) CHECK(d == 2);
  CHECK(graph_connected(6, g.edges));
}

TEST_CASE("octagon cyclohedron statistics") {
  FVector fv = f_vector(8, true);
  CHECK(fv.dim == 3);
  CHECK(fv.counts == std::vector<std::uint64_t>{20, 30, 12});

  FaceLattice lat = build_face_lattice(8, true);
  auto [lo, hi] = lat.rank_range(2);
  std::vector<std::size_t> hex_faces;
  int squares = 0, pentagons = 0, hexagons = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    TwoFaceKind by_count = classify_two_face(lat, lat.faces()[i]);
    CHECK(by_count == classify_two_face_local(8, true, lat.faces()[i]));
    if (by_count == TwoFaceKind::Square) ++squares;
    if (by_count == TwoFaceKind::Pentagon) ++pentagons;
    if (by_count == TwoFaceKind::Hexagon) {
      ++hexagons;
      hex_faces.push_back(i);
    }
  }
  CHECK(squares == 4);
  CHECK(pentagons == 4);
  CHECK(hexagons == 4);

  // Hexagon incidence.  A vertex lies on one hexagon per diagonal (non-
  // boundary) edge of the triangle flanking its central diagonal, so on two
  // hexagons exactly when that triangle's other two edges are both
  // diagonals — one such "fan" vertex per central diagonal choice — and on
  // one hexagon otherwise.  (24 = 4 hexagons x 6 corners spread over 20
  // vertices as 4 x 2 + 16 x 1.)
  std::map<std::size_t, std::vector<std::size_t>> hexagons_at_vertex;
  for (std::size_t h : hex_faces)
    for (std::size_t v : lat.vertices_below(h)) hexagons_at_vertex[v].push_back(h);
  auto [v0, v1] = lat.rank_range(0);
  int with_two = 0, with_one = 0;
  for (std::size_t v = v0; v < v1; ++v) {
    REQUIRE(hexagons_at_vertex[v].size() >= 1);
    REQUIRE(hexagons_at_vertex[v].size() <= 2);
    if (hexagons_at_vertex[v].size() == 1) {
      ++with_one;
      continue;
    }
    ++with_two;
    // Where two hexagons meet a vertex, they share exactly one edge: the
    // edge flipping the vertex's central diagonal.
    std::size_t h1 = hexagons_at_vertex[v][0];
    std::size_t h2 = hexagons_at_vertex[v][1];
    std::vector<std::size_t> shared;
    for (std::size_t e : lat.covers_down()[h1])
      for (std::size_t e2 : lat.covers_down()[h2])
        if (e == e2) shared.push_back(e);
    REQUIRE(shared.size() == 1);
    std::vector<Diagonal> expected;
    for (const Diagonal& d : lat.faces()[v].diagonals())
      if (tau_diagonal(d, 8) != d) expected.push_back(d);
    CHECK(lat.faces()[shared[0]].diagonals() == expected);
  }
  CHECK(with_two == 4);
  CHECK(with_one == 16);
}

TEST_CASE("Euler relation and closed-form counts") {
  for (int n = 5; n <= 9; ++n) {
    FVector fv = f_vector(n, false);
    CHECK(euler_sum(fv) == 1 + (fv.dim % 2 == 0 ? -1 : 1));
    CHECK(fv.counts[0] == catalan(n - 2));
    // Facets correspond to single diagonals.
    CHECK(fv.counts[(std::size_t)fv.dim - 1] ==
          static_cast<std::uint64_t>(n * (n - 3) / 2));
    CHECK(fv.top_cells == 1);
  }
  for (int n = 6; n <= 10; n += 2) {
    FVector fv = f_vector(n, true);
    int m = n / 2;
    CHECK(euler_sum(fv) == 1 + (fv.dim % 2 == 0 ? -1 : 1));
    CHECK(fv.counts[0] == binomial(2 * (m - 1), m - 1));
    // Facets correspond to single orbits: m central diagonals plus m(m-2)/1
    // mirror pairs... counted directly: m + m(m-2) = m(m-1).
    CHECK(fv.counts[(std::size_t)fv.dim - 1] ==
          static_cast<std::uint64_t>(m * (m - 1)));
    CHECK(fv.top_cells == 1);
  }
}

TEST_CASE("flip graph equals the lattice 1-skeleton") {
  for (auto [n, symmetric] : std::vector<std::pair<int, bool>>{
           {4, false}, {5, false}, {6, false}, {7, false}, {8, false},
           {4, true}, {6, true}, {8, true}, {10, true}}) {
    FlipGraph g = flip_graph(n, symmetric);
    FaceLattice lat = build_face_lattice(n, symmetric);
    FVector fv = f_vector(lat);

    REQUIRE(g.vertices.size() == fv.counts[0]);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      CHECK(g.vertices[i].diagonals() == lat.faces()[i].diagonals());
    if (fv.dim >= 1) {
      auto [e0, e1] = lat.rank_range(1);
      CHECK(g.edges.size() == e1 - e0);
      std::set<std::pair<std::size_t, std::size_t>> lattice_edges;
      for (std::size_t e = e0; e < e1; ++e) {
        std::vector<std::size_t> ends = lat.vertices_below(e);
        REQUIRE(ends.size() == 2);
        lattice_edges.insert({ends[0], ends[1]});
      }
      std::set<std::pair<std::size_t, std::size_t>> graph_edges(
          g.edges.begin(), g.edges.end());
      CHECK(lattice_edges == graph_edges);
    }

    // Simple polytope: every vertex has degree dim.
    std::map<std::size_t, int> degree;
    for (auto [a, b] : g.edges) {
      ++degree[a];
      ++degree[b];
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      CHECK(degree[i] == fv.dim);
    CHECK(graph_connected(g.vertices.size(), g.edges));
  }
}

TEST_CASE("pentagon flip graph is a 5-cycle") {
  FlipGraph g = flip_graph(5, false);
  CHECK(g.vertices.size() == 5);
  CHECK(g.edges.size() == 5);
  CHECK(graph_connected(5, g.edges));
}

TEST_CASE("embedding a polygon's faces into the doubled polygon") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<PartialTriangulation> faces =
        enumerate_partial_triangulations(n);
    std::set<std::vector<Diagonal>> images;
    for (const PartialTriangulation& f : faces) {
      PartialTriangulation e = embed_into_double(f);
      CHECK(e.n() == 2 * n);
      CHECK(e.diagonals().size() ==
            f.diagonals().size() + static_cast<std::size_t>(n));
      CHECK(e.is_triangulation() == f.is_triangulation());
      if (n % 2 == 0 && is_centrally_symmetric(f))
        CHECK(is_centrally_symmetric(e));
      images.insert(e.diagonals());
    }
    CHECK(images.size() == faces.size());  // injective
  }

  // Order isomorphism onto the image: inclusion agrees before and after.
  for (int n = 4; n <= 6; ++n) {
    std::vector<PartialTriangulation> faces =
        enumerate_partial_triangulations(n);
    for (const PartialTriangulation& f : faces)
      for (const PartialTriangulation& g : faces) {
        bool before = is_superset(f, g);
        bool after = is_superset(embed_into_double(f), embed_into_double(g));
        CHECK(before == after);
      }
  }

  // Images are genuine faces of the doubled polygon's lattice.
  for (int n = 4; n <= 5; ++n) {
    FaceLattice big = build_face_lattice(2 * n, false);
    for (const PartialTriangulation& f : enumerate_partial_triangulations(n))
      CHECK(big.index_of(embed_into_double(f)) >= 0);
  }
}

TEST_CASE("lattice bookkeeping: index_of, rank ranges, determinism") {
  FaceLattice lat = build_face_lattice(7, false);
  std::size_t total = 0;
  for (int r = 0; r <= lat.dim(); ++r) {
    auto [lo, hi] = lat.rank_range(r);
    total += hi - lo;
    for (std::size_t i = lo; i < hi; ++i) CHECK(lat.rank(i) == r);
  }
  CHECK(total == lat.faces().size());
  for (std::size_t i = 0; i < lat.faces().size(); ++i)
    CHECK(lat.index_of(lat.faces()[i]) == static_cast<std::ptrdiff_t>(i));
  CHECK(lat.index_of(PartialTriangulation(9, {})) == -1);
  CHECK(lat.to_json() == build_face_lattice(7, false).to_json());

  FlipGraph square = flip_graph(4, false);
  CHECK(square.to_dot() ==
        "graph flipgraph {\n"
        "  v0 [label=\"{0,2}\"];\n"
        "  v1 [label=\"{1,3}\"];\n"
        "  v0 -- v1;\n"
        "}\n");
  CHECK(square.to_json() ==
        "{\"n\":4,\"symmetric\":false,\"vertices\":[[[0,2]],[[1,3]]],"
        "\"edges\":[[0,1]]}");
}

TEST_CASE("classification error paths") {
  FaceLattice lat = build_face_lattice(6, false);
  // Rank 0 and rank 1 faces are not 2-faces.
  auto [v0, v1] = lat.rank_range(0);
  CHECK_THROWS_AS(classify_two_face(lat, lat.faces()[v0]),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_two_face_local(6, false, lat.faces()[v0]),
                  std::invalid_argument);
  // Wrong polygon entirely.
  CHECK_THROWS_AS(classify_two_face(lat, PartialTriangulation(5, {})),
                  std::invalid_argument);
  // Asymmetric face cannot be classified in the symmetric lattice.
  CHECK_THROWS_AS(
      classify_two_face_local(8, true, PartialTriangulation(8, {{0, 2}})),
      std::invalid_argument);
}
