#include "hedra/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iterator>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hedra/dyadic.hpp"
#include "hedra/facelattice.hpp"
#include "hedra/farey.hpp"
#include "hedra/rational.hpp"
#include "hedra/secondary.hpp"
#include "hedra/thompson.hpp"
#include "hedra/triangulation.hpp"

namespace hedra {
namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// 1. Triangulation counts for the n-gon, n = 3..12, against Catalan(n-2).
Outcome criterion_triangulation_counts() {
  std::ostringstream bad;
  unsigned long long last = 0;
  for (int n = 3; n <= 12; ++n) {
    unsigned long long got = enumerate_triangulations(n).size();
    unsigned long long want = catalan(n - 2);
    last = got;
    if (got != want)
      bad << " n=" << n << " counted " << got << ", Catalan gives " << want
          << ";";
  }
  if (!bad.str().empty()) return {false, "mismatches:" + bad.str()};
  return {true, "counts equal Catalan(n-2) for n=3..12 (n=12: " +
                    std::to_string(last) + ")"};
}

// 2. Centrally symmetric triangulation counts for the 2m-gon, 2m = 4..12,
// against C(2m-2, m-1), with the small cases pinned to 2, 6, 20.
Outcome criterion_symmetric_counts() {
  const unsigned long long pinned[] = {2, 6, 20};
  std::ostringstream bad, seen;
  for (int n2 = 4; n2 <= 12; n2 += 2) {
    int m = n2 / 2;
    unsigned long long got = enumerate_symmetric_triangulations(n2).size();
    unsigned long long want = binomial(2 * (m - 1), m - 1);
    seen << (n2 > 4 ? ", " : "") << got;
    if (got != want)
      bad << " 2m=" << n2 << " counted " << got << ", binomial gives " << want
          << ";";
    if (n2 <= 8 && got != pinned[m - 2])
      bad << " 2m=" << n2 << " counted " << got << ", pinned value is "
          << pinned[m - 2] << ";";
  }
  if (!bad.str().empty()) return {false, "mismatches:" + bad.str()};
  return {true,
          "counts " + seen.str() + " equal C(2m-2, m-1) for 2m=4..12"};
}

// 3. The three-dimensional cyclohedron: f-vector (20, 30, 12), two-face
// census 4 squares + 4 pentagons + 4 hexagons, and every vertex on exactly
// two hexagons sharing exactly one edge.
Outcome criterion_cyclohedron_two_faces() {
  FaceLattice cy = build_face_lattice(8, true);
  FVector fv = f_vector(cy);
  bool fv_ok = fv.counts == std::vector<std::uint64_t>{20, 30, 12};

  auto [lo2, hi2] = cy.rank_range(2);
  int squares = 0, pentagons = 0;
  std::vector<std::size_t> hexagons;
  for (std::size_t i = lo2; i < hi2; ++i) {
    switch (classify_two_face(cy, cy.faces()[i])) {
      case TwoFaceKind::Square: ++squares; break;
      case TwoFaceKind::Pentagon: ++pentagons; break;
      case TwoFaceKind::Hexagon: hexagons.push_back(i); break;
    }
  }
  bool census_ok = squares == 4 && pentagons == 4 && hexagons.size() == 4;

  auto [lo0, hi0] = cy.rank_range(0);
  std::map<std::size_t, std::vector<std::size_t>> hexagons_at;
  for (std::size_t v = lo0; v < hi0; ++v) hexagons_at[v];
  for (std::size_t h : hexagons)
    for (std::size_t v : cy.vertices_below(h)) hexagons_at[v].push_back(h);

  std::map<std::size_t, int> histogram;  // #incident hexagons -> #vertices
  bool all_on_two = true, pairs_share_one_edge = true;
  for (const auto& [v, hs] : hexagons_at) {
    ++histogram[hs.size()];
    if (hs.size() != 2) {
      all_on_two = false;
      continue;
    }
    auto e1 = cy.covers_down()[hs[0]];
    auto e2 = cy.covers_down()[hs[1]];
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    std::vector<std::size_t> shared;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) pairs_share_one_edge = false;
  }

  std::ostringstream d;
  d << "f-vector (" << fv.counts[0] << ", " << fv.counts[1] << ", "
    << fv.counts[2] << ")" << (fv_ok ? "" : " [expected (20, 30, 12)]")
    << "; two-faces " << squares << " squares, " << pentagons
    << " pentagons, " << hexagons.size() << " hexagons"
    << (census_ok ? "" : " [expected 4/4/4]") << "; hexagon incidence:";
  for (const auto& [count, vertices] : histogram)
    d << " " << vertices << " vertices on " << count << ",";
  if (all_on_two && pairs_share_one_edge)
    d << " every vertex on two hexagons sharing one edge";
  else
    d << " required: every vertex on exactly two hexagons sharing one edge";
  return {fv_ok && census_ok && all_on_two && pairs_share_one_edge, d.str()};
}

// 4. Affine dimension of the GKZ vertex set: n-3 for the full family and
// m-1 for the symmetric family of the 2m-gon.
Outcome criterion_gkz_dimensions() {
  std::ostringstream bad;
  auto dimension = [](const std::vector<GkzVector>& vs) {
    std::vector<std::vector<double>> pts;
    pts.reserve(vs.size());
    for (const GkzVector& v : vs) pts.push_back(v.coords);
    return affine_dimension(pts, kTol);
  };
  for (int n = 4; n <= 10; ++n) {
    int d = dimension(gkz_vertices(n, false));
    if (d != n - 3)
      bad << " n=" << n << " dim " << d << " (expected " << n - 3 << ");";
  }
  for (int n = 4; n <= 10; n += 2) {
    int d = dimension(gkz_vertices(n, true));
    if (d != n / 2 - 1)
      bad << " symmetric n=" << n << " dim " << d << " (expected "
          << n / 2 - 1 << ");";
  }
  if (!bad.str().empty()) return {false, "mismatches:" + bad.str()};
  return {true,
          "affine dimension n-3 for n=4..10 and n/2-1 for the symmetric "
          "family, pivot tolerance 1e-9"};
}

// 5. The coordinate sum of every GKZ vector of a fixed polygon is constant.
Outcome criterion_gkz_conservation() {
  double worst = 0;
  for (int n = 3; n <= 10; ++n) {
    std::vector<GkzVector> vs = gkz_vertices(n, false);
    double base = std::accumulate(vs[0].coords.begin(), vs[0].coords.end(), 0.0);
    for (const GkzVector& v : vs) {
      double sum = std::accumulate(v.coords.begin(), v.coords.end(), 0.0);
      worst = std::max(worst, std::abs(sum - base));
    }
  }
  std::string detail = "coordinate sums constant per polygon for n=3..10, "
                       "max deviation " +
                       format_significant(worst, 3) + " (tolerance 1e-9)";
  return {worst < kTol, detail};
}

// 6. A GKZ vector is fixed by the half-turn exactly when its triangulation is
// centrally symmetric.
Outcome criterion_tau_fixed_equivalence() {
  std::size_t checked = 0;
  for (int n2 = 4; n2 <= 10; n2 += 2) {
    for (const PartialTriangulation& t : enumerate_triangulations(n2)) {
      ++checked;
      if (tau_fixed(gkz_vector(t), kTol) != is_centrally_symmetric(t)) {
        std::ostringstream d;
        d << "equivalence fails for " << t.to_json();
        return {false, d.str()};
      }
    }
  }
  return {true, "half-turn-fixed GKZ <=> centrally symmetric on all " +
                    std::to_string(checked) + " triangulations, 2m <= 10"};
}

// 7. Doubling the polygon embeds GKZ vertices by a pure translation, hence
// isometrically.
Outcome criterion_embedding_isometry() {
  double worst_translation = 0, worst_distance = 0;
  bool ok = true;
  for (int n = 4; n <= 6; ++n) {
    EmbeddingReport rep = check_embedding_isometry(n);
    worst_translation =
        std::max(worst_translation, rep.max_translation_deviation);
    worst_distance = std::max(worst_distance, rep.max_distance_deviation);
    ok = ok && rep.ok(kTol);
  }
  std::string detail =
      "translation-only embedding for n=4,5,6; max deviation " +
      format_significant(worst_translation, 3) + " (translation), " +
      format_significant(worst_distance, 3) + " (pairwise distance)";
  return {ok, detail};
}

// 8. The boundary map from the extended rational line onto the unit circle:
// pinned images for 0, 1, infinity, 1/3 and exact unit norm for all reduced
// fractions with denominator <= 50.
Outcome criterion_halfplane_disc() {
  struct Probe {
    Rational t, x, y;
    const char* label;
  };
  const Probe probes[] = {
      {Rational(0, 1), Rational(1, 1), Rational(0, 1), "0"},
      {Rational(1, 1), Rational(0, 1), Rational(1, 1), "1"},
      {Rational(1, 0), Rational(-1, 1), Rational(0, 1), "infinity"},
      {Rational(1, 3), Rational(3, 5), Rational(4, 5), "1/3"},
  };
  std::ostringstream bad;
  for (const Probe& p : probes) {
    DiscPoint d = halfplane_to_disc(p.t);
    if (!(d.x == p.x && d.y == p.y))
      bad << " " << p.label << " maps to (" << d.x.to_string() << ", "
          << d.y.to_string() << ") but (" << p.x.to_string() << ", "
          << p.y.to_string() << ") is required;";
  }

  const Rational one(1, 1);
  std::size_t checked = 1;
  DiscPoint inf = halfplane_to_disc(Rational(1, 0));
  bool circle_ok = inf.x * inf.x + inf.y * inf.y == one;
  for (int q = 1; q <= 50; ++q)
    for (int p = -50; p <= 50; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      DiscPoint d = halfplane_to_disc(Rational(p, q));
      ++checked;
      if (!(d.x * d.x + d.y * d.y == one)) circle_ok = false;
    }
  if (!circle_ok) bad << " unit-norm identity fails;";

  if (!bad.str().empty()) return {false, "mismatches:" + bad.str()};
  return {true, "pinned images hold and x^2+y^2=1 exactly on " +
                    std::to_string(checked) + " boundary points"};
}

// 9. Group structure of the dyadic PL circle maps: axioms and canonical-form
// closure on seeded samples, order bounds for all rotation elements of
// partitions with at most 6 cells, and tau^2 = id.
Outcome criterion_group_axioms() {
  std::mt19937 rng(20240817);
  const PLCircleMap id = PLCircleMap::identity();
  const int samples = 200;
  for (int i = 0; i < samples; ++i) {
    PLCircleMap g = random_element(rng);
    PLCircleMap h = random_element(rng);
    PLCircleMap k = random_element(rng);
    if (compose(compose(g, h), k) != compose(g, compose(h, k)))
      return {false, "associativity fails on sample " + std::to_string(i)};
    if (compose(g, id) != g || compose(id, g) != g)
      return {false, "identity laws fail on sample " + std::to_string(i)};
    if (!compose(g, inverse(g)).is_identity() ||
        !compose(inverse(g), g).is_identity())
      return {false, "inverse laws fail on sample " + std::to_string(i)};
    for (const PLCircleMap& c :
         {compose(g, h), inverse(g), conjugate_by_reflection(g)})
      if (PLCircleMap::from_breakpoints(c.breakpoints(), c.images()) != c)
        return {false, "canonical-form closure fails on sample " +
                           std::to_string(i)};
  }

  int rotations = 0;
  for (const DyadicPartition& p : enumerate_dyadic_partitions(6)) {
    int m = p.size();
    for (int k = 1; k <= m; ++k) {
      if (m % k != 0) continue;
      ++rotations;
      std::optional<int> d = order(rotation_element(p, k), k);
      if (!d || k % *d != 0)
        return {false, "rotation element of " + p.to_string() + " with k=" +
                           std::to_string(k) + " has order not dividing k"};
    }
  }

  if (!compose(tau(), tau()).is_identity())
    return {false, "half-rotation squared is not the identity"};
  return {true, "axioms and closure on " + std::to_string(samples) +
                    " seeded samples (seed 20240817); order divides k for " +
                    std::to_string(rotations) +
                    " rotation elements; half-rotation squared = id"};
}

// 10. The half-rotation quotient is a homomorphism on the centralizer of the
// half-rotation with kernel exactly {id, tau}.
Outcome criterion_quotient_homomorphism() {
  std::mt19937 rng(20240818);
  const PLCircleMap t = tau();
  if (!quotient_mod_tau(t).is_identity() ||
      !quotient_mod_tau(PLCircleMap::identity()).is_identity())
    return {false, "id and the half-rotation must lie in the kernel"};

  const int pairs = 50;
  for (int i = 0; i < pairs; ++i) {
    PLCircleMap g = lift_to_double_cover(random_element(rng));
    if (rng() & 1u) g = compose(t, g);
    PLCircleMap h = lift_to_double_cover(random_element(rng));
    if (rng() & 1u) h = compose(t, h);
    if (!commutes(g, t) || !commutes(h, t))
      return {false, "lifted sample " + std::to_string(i) +
                         " does not commute with the half-rotation"};
    if (quotient_mod_tau(compose(g, h)) !=
        compose(quotient_mod_tau(g), quotient_mod_tau(h)))
      return {false, "homomorphism fails on pair " + std::to_string(i)};
    bool in_kernel = quotient_mod_tau(g).is_identity();
    if (in_kernel != (g == PLCircleMap::identity() || g == t))
      return {false, "kernel differs from {id, half-rotation} on sample " +
                         std::to_string(i)};
  }
  return {true, "homomorphism with kernel {id, half-rotation} on " +
                    std::to_string(pairs) + " commuting pairs (seed 20240818)"};
}

// 11. The action on tessellation vertices respects composition, preserves
// flip adjacency, and preserves central symmetry exactly for elements
// commuting with the half-rotation.
Outcome criterion_action_coherence() {
  std::mt19937 rng(20240819);
  auto random_stage_triangulation = [&rng](int stage, int flips) {
    PartialTriangulation t = stage_triangulation(stage);
    for (int i = 0; i < flips; ++i) {
      const auto& ds = t.diagonals();
      t = flip(t, ds[rng() % ds.size()]);
    }
    return t;
  };

  const int trials = 12;
  for (int trial = 0; trial < trials; ++trial) {
    int stage = 2 + static_cast<int>(rng() % 3);
    PartialTriangulation t = random_stage_triangulation(stage, 6);
    StageVertex v(stage, t);
    PLCircleMap g = random_element(rng);
    PLCircleMap h = random_element(rng);
    if (act_on_vertex(compose(g, h), v) !=
        act_on_vertex(g, act_on_vertex(h, v)))
      return {false, "composition fails on trial " + std::to_string(trial)};
    const auto& ds = t.diagonals();
    StageVertex u(stage, flip(t, ds[rng() % ds.size()]));
    if (!flip_adjacent(v, u))
      return {false, "flip neighbour construction fails on trial " +
                         std::to_string(trial)};
    if (!flip_adjacent(act_on_vertex(g, v), act_on_vertex(g, u)))
      return {false,
              "flip adjacency not preserved on trial " + std::to_string(trial)};
  }

  std::set<StageVertex> symmetric_vertices;
  for (const PartialTriangulation& t4 : enumerate_symmetric_triangulations(4))
    symmetric_vertices.insert(StageVertex(2, t4));
  for (const PartialTriangulation& t8 : enumerate_symmetric_triangulations(8))
    symmetric_vertices.insert(StageVertex(3, t8));

  const int commuting_samples = 10;
  for (int i = 0; i < commuting_samples; ++i) {
    PLCircleMap g = lift_to_double_cover(random_element(rng));
    if (rng() & 1u) g = compose(tau(), g);
    for (const StageVertex& v : symmetric_vertices)
      if (!is_centrally_symmetric(act_on_vertex(g, v)))
        return {false, "half-rotation-commuting sample " + std::to_string(i) +
                           " breaks central symmetry"};
  }

  PLCircleMap r = rotation_element(
      DyadicPartition({Dyadic(0, 0), Dyadic(1, 1), Dyadic(3, 2)}), 3);
  StageVertex tilted(2, PartialTriangulation(4, {{1, 3}}));
  if (commutes(r, tau()))
    return {false, "order-3 witness unexpectedly commutes with the "
                   "half-rotation"};
  if (is_centrally_symmetric(act_on_vertex(r, tilted)))
    return {false, "order-3 witness fails to break central symmetry"};

  return {true, "composition and flip adjacency on " + std::to_string(trials) +
                    " trials at stages 2..4; central symmetry preserved by " +
                    std::to_string(commuting_samples) +
                    " commuting samples over " +
                    std::to_string(symmetric_vertices.size()) +
                    " symmetric vertices and broken by the order-3 witness "
                    "(seed 20240819)"};
}

using CriterionFn = Outcome (*)();

constexpr CriterionFn kCriteria[] = {
    criterion_triangulation_counts, criterion_symmetric_counts,
    criterion_cyclohedron_two_faces, criterion_gkz_dimensions,
    criterion_gkz_conservation,     criterion_tau_fixed_equivalence,
    criterion_embedding_isometry,   criterion_halfplane_disc,
    criterion_group_axioms,         criterion_quotient_homomorphism,
    criterion_action_coherence,
};

constexpr int kCriterionCount = static_cast<int>(std::size(kCriteria));

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "triangulation counts",
      "symmetric triangulation counts",
      "cyclohedron two-face geometry",
      "secondary-polytope dimensions",
      "gkz coordinate conservation",
      "tau-fixed symmetry equivalence",
      "doubling embedding isometry",
      "halfplane-to-disc boundary map",
      "circle-map group axioms",
      "half-rotation quotient witness",
      "vertex action coherence",
  };
  return names;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount)
    throw std::invalid_argument("unknown criterion id: " + std::to_string(id));
  CriterionResult result;
  result.id = id;
  result.name = criterion_names()[static_cast<std::size_t>(id - 1)];
  try {
    Outcome o = kCriteria[id - 1]();
    result.pass = o.pass;
    result.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("unexpected exception: ") + e.what();
  }
  return result;
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> suites = {
      {"triangulations", {1, 2}}, {"facelattice", {3}},
      {"secondary", {4, 5, 6, 7}}, {"farey", {8}},
      {"thompson", {9, 10, 11}},
  };
  auto it = suites.find(suite);
  if (it != suites.end()) return it->second;
  char* end = nullptr;
  long id = std::strtol(suite.c_str(), &end, 10);
  if (end && *end == '\0' && !suite.empty() && id >= 1 && id <= kCriterionCount)
    return {static_cast<int>(id)};
  throw std::invalid_argument("unknown verification suite: " + suite);
}

int run_verification(std::ostream& out,
                     const std::optional<std::string>& suite) {
  std::vector<int> ids;
  if (suite) {
    ids = suite_criteria(*suite);
  } else {
    ids.resize(static_cast<std::size_t>(kCriterionCount));
    std::iota(ids.begin(), ids.end(), 1);
  }
  int failures = 0;
  for (int id : ids) {
    CriterionResult r = run_criterion(id);
    if (!r.pass) ++failures;
    out << (r.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << r.id << ' '
        << r.name << " :: " << r.detail << '\n';
  }
  out << ids.size() - static_cast<std::size_t>(failures) << " of "
      << ids.size() << " criteria passed, " << failures << " failed\n";
  return failures;
}

}  // namespace hedra
