#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hedra/errors.hpp"
#include "hedra/thompson.hpp"

using namespace hedra;

namespace {

Dyadic dy(std::int64_t n, int e) { return Dyadic(n, e); }

PLCircleMap non_torsion_witness() {
  return from_partition_pair(
      PartitionPair{DyadicPartition({dy(0, 0), dy(1, 2), dy(1, 1)}),
                    DyadicPartition({dy(0, 0), dy(1, 1), dy(3, 2)}), 0});
}

PLCircleMap three_cycle() {
  return rotation_element(DyadicPartition({dy(0, 0), dy(1, 1), dy(3, 2)}), 3);
}

}  // namespace

TEST_CASE("breakpoint data validation") {
  CHECK_THROWS_AS(PLCircleMap::from_breakpoints({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints({dy(0, 0)}, {dy(0, 0), dy(1, 1)}),
      std::invalid_argument);
  // Breaks out of range or out of order.
  CHECK_THROWS_AS(PLCircleMap::from_breakpoints({dy(1, 0)}, {dy(0, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLCircleMap::from_breakpoints({dy(-1, 2)}, {dy(0, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints({dy(1, 1), dy(1, 2)}, {dy(0, 0), dy(1, 1)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints({dy(0, 0), dy(0, 0)}, {dy(0, 0), dy(1, 1)}),
      std::invalid_argument);
  // Duplicate images.
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints({dy(0, 0), dy(1, 1)}, {dy(1, 2), dy(1, 2)}),
      std::invalid_argument);
  // Images out of cyclic order (two descents).
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints(
          {dy(0, 0), dy(1, 2), dy(1, 1), dy(3, 2)},
          {dy(0, 0), dy(1, 1), dy(1, 2), dy(3, 2)}),
      std::invalid_argument);
  // Slope 2/3 is not a power of 2.
  CHECK_THROWS_AS(
      PLCircleMap::from_breakpoints({dy(0, 0), dy(1, 2)}, {dy(0, 0), dy(1, 1)}),
      std::invalid_argument);
}

TEST_CASE("canonical forms") {
  PLCircleMap id = PLCircleMap::identity();
  CHECK(id.is_identity());
  CHECK(id.breakpoints() == std::vector<Dyadic>{dy(0, 0)});
  CHECK(id.images() == std::vector<Dyadic>{dy(0, 0)});
  CHECK(id.slope_exponents() == std::vector<int>{0});

  // A fake breakpoint with no slope change is removed; the result is the
  // identity presented canonically.
  PLCircleMap same =
      PLCircleMap::from_breakpoints({dy(0, 0), dy(1, 2)}, {dy(0, 0), dy(1, 2)});
  CHECK(same == id);

  // Rotations anchor their single breakpoint at 0.
  PLCircleMap rot =
      PLCircleMap::from_breakpoints({dy(1, 2)}, {dy(1, 1)});
  CHECK(rot.breakpoints() == std::vector<Dyadic>{dy(0, 0)});
  CHECK(rot.images() == std::vector<Dyadic>{dy(1, 2)});

  // A rotation presented with redundant breakpoints collapses.
  PLCircleMap rot2 = PLCircleMap::from_breakpoints(
      {dy(0, 0), dy(1, 2), dy(1, 1)}, {dy(1, 1), dy(3, 2), dy(0, 0)});
  CHECK(rot2.breakpoints() == std::vector<Dyadic>{dy(0, 0)});
  CHECK(rot2.images() == std::vector<Dyadic>{dy(1, 1)});
  CHECK(rot2 == tau());

  // Elements need not break at 0.
  PLCircleMap g = PLCircleMap::from_breakpoints(
      {dy(1, 2), dy(1, 1), dy(3, 2)}, {dy(1, 2), dy(1, 1), dy(0, 0)});
  CHECK(g.breakpoints() ==
        std::vector<Dyadic>{dy(1, 2), dy(1, 1), dy(3, 2)});
  CHECK(g.slope_exponents() == std::vector<int>{0, 1, -1});
}

TEST_CASE("half rotation") {
  PLCircleMap t = tau();
  CHECK(t.breakpoints() == std::vector<Dyadic>{dy(0, 0)});
  CHECK(t.images() == std::vector<Dyadic>{dy(1, 1)});
  CHECK_FALSE(t.is_identity());
  CHECK(compose(t, t).is_identity());
  CHECK(order(t, 10) == 2);
  CHECK(evaluate(t, dy(0, 0)) == dy(1, 1));
  CHECK(evaluate(t, dy(3, 2)) == dy(1, 2));
}

TEST_CASE("three-cycle rotation element") {
  PLCircleMap r = three_cycle();
  CHECK(r.breakpoints() == std::vector<Dyadic>{dy(0, 0), dy(1, 1), dy(3, 2)});
  CHECK(r.images() == std::vector<Dyadic>{dy(1, 1), dy(3, 2), dy(0, 0)});
  CHECK(r.slope_exponents() == std::vector<int>{-1, 0, 1});
  CHECK(evaluate(r, dy(0, 0)) == dy(1, 1));
  CHECK(evaluate(r, dy(1, 2)) == dy(5, 3));
  CHECK(evaluate(r, dy(1, 1)) == dy(3, 2));
  CHECK(evaluate(r, dy(3, 2)) == dy(0, 0));
  CHECK(evaluate(r, dy(7, 3)) == dy(1, 2));
  CHECK(order(r, 10) == 3);
  CHECK(compose(compose(r, r), r).is_identity());
  CHECK_FALSE(commutes(tau(), r));

  // Arguments are reduced mod 1 before evaluation.
  CHECK(evaluate(r, dy(5, 2)) == evaluate(r, dy(1, 2)));
  CHECK(evaluate(r, dy(-3, 2)) == evaluate(r, dy(1, 2)));
}

TEST_CASE("composition, inverse, associativity") {
  PLCircleMap r = three_cycle(), t = tau(), w = non_torsion_witness();
  CHECK(evaluate(compose(t, r), dy(0, 0)) == dy(0, 0));
  CHECK(compose(r, inverse(r)).is_identity());
  CHECK(compose(inverse(r), r).is_identity());
  CHECK(compose(PLCircleMap::identity(), w) == w);
  CHECK(compose(w, PLCircleMap::identity()) == w);
  CHECK(inverse(PLCircleMap::identity()).is_identity());
  CHECK(inverse(t) == t);

  std::mt19937 rng(12345);
  std::vector<PLCircleMap> pool = {r, t, w, PLCircleMap::identity()};
  for (int i = 0; i < 12; ++i) pool.push_back(random_element(rng));
  for (int trial = 0; trial < 60; ++trial) {
    const PLCircleMap& a = pool[rng() % pool.size()];
    const PLCircleMap& b = pool[rng() % pool.size()];
    const PLCircleMap& c = pool[rng() % pool.size()];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
  for (const PLCircleMap& a : pool) {
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
    // Pointwise agreement of composition with evaluation.
    for (const PLCircleMap& b : pool)
      for (int j = 0; j < 8; ++j) {
        Dyadic x(j, 3);
        CHECK(evaluate(compose(a, b), x) == evaluate(a, evaluate(b, x)));
      }
  }
}

TEST_CASE("torsion detection") {
  CHECK(order(PLCircleMap::identity(), 5) == 1);
  CHECK(order(tau(), 10) == 2);
  CHECK(order(three_cycle(), 10) == 3);
  CHECK(order(non_torsion_witness(), 64) == std::nullopt);
  CHECK_THROWS_AS(order(tau(), 0), std::invalid_argument);

  // Rotation elements of every enumerated partition have order dividing k.
  for (const DyadicPartition& p : enumerate_dyadic_partitions(4)) {
    int m = p.size();
    for (int k = 1; k <= m; ++k) {
      if (m % k != 0) {
        CHECK_THROWS_AS(rotation_element(p, k), std::invalid_argument);
        continue;
      }
      std::optional<int> d = order(rotation_element(p, k), k);
      REQUIRE(d.has_value());
      CHECK(k % *d == 0);
    }
  }
}

TEST_CASE("quotient by the half rotation") {
  CHECK(quotient_mod_tau(tau()).is_identity());
  CHECK(quotient_mod_tau(PLCircleMap::identity()).is_identity());
  PLCircleMap quarter = PLCircleMap::from_breakpoints({dy(0, 0)}, {dy(1, 2)});
  CHECK(quotient_mod_tau(quarter) == tau());
  CHECK_THROWS_AS(quotient_mod_tau(three_cycle()), std::invalid_argument);

  std::mt19937 rng(777);
  PLCircleMap t = tau();
  for (int trial = 0; trial < 50; ++trial) {
    PLCircleMap a = random_element(rng), b = random_element(rng);
    PLCircleMap g = lift_to_double_cover(a);
    PLCircleMap h = lift_to_double_cover(b);
    if (rng() % 2) g = compose(g, t);
    if (rng() % 2) h = compose(h, t);
    REQUIRE(commutes(g, t));
    REQUIRE(commutes(h, t));
    // The quotient is a homomorphism on the centralizer of tau.
    CHECK(quotient_mod_tau(compose(g, h)) ==
          compose(quotient_mod_tau(g), quotient_mod_tau(h)));
    // Kernel: exactly the identity and tau itself.
    CHECK(quotient_mod_tau(g).is_identity() ==
          (g.is_identity() || g == t));
  }
}

TEST_CASE("lift to the double cover") {
  CHECK(lift_to_double_cover(PLCircleMap::identity()).is_identity());
  CHECK(lift_to_double_cover(tau()) ==
        PLCircleMap::from_breakpoints({dy(0, 0)}, {dy(1, 2)}));

  std::mt19937 rng(888);
  for (int trial = 0; trial < 25; ++trial) {
    PLCircleMap h = random_element(rng);
    PLCircleMap g = lift_to_double_cover(h);
    CHECK(commutes(g, tau()));
    CHECK(quotient_mod_tau(g) == h);
    // Lifting is a homomorphism only up to the deck transformation: the two
    // lifts of any element differ by tau, so the lift of a composition equals
    // the composition of lifts possibly multiplied by tau.
    PLCircleMap h2 = random_element(rng);
    PLCircleMap composed_lift = lift_to_double_cover(compose(h, h2));
    PLCircleMap lifted_composition = compose(g, lift_to_double_cover(h2));
    CHECK((composed_lift == lifted_composition ||
           composed_lift == compose(tau(), lifted_composition)));
    CHECK(quotient_mod_tau(lifted_composition) == compose(h, h2));
  }
}

TEST_CASE("reflection conjugation") {
  CHECK(conjugate_by_reflection(PLCircleMap::identity()).is_identity());
  CHECK(conjugate_by_reflection(tau()) == tau());
  // Conjugating the three-cycle reflects its cell structure: the reflected
  // map sends [0,1/4]->[1/2,1] (doubling), [1/4,1/2]->[0,1/4], [1/2,1]->[1/4,1/2].
  PLCircleMap r = three_cycle();
  PLCircleMap reflected = PLCircleMap::from_breakpoints(
      {dy(0, 0), dy(1, 2), dy(1, 1)}, {dy(1, 1), dy(0, 0), dy(1, 2)});
  CHECK(conjugate_by_reflection(r) == reflected);
  CHECK(conjugate_by_reflection(r) != inverse(r));

  std::mt19937 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    PLCircleMap g = random_element(rng), h = random_element(rng);
    CHECK(conjugate_by_reflection(conjugate_by_reflection(g)) == g);
    CHECK(conjugate_by_reflection(compose(g, h)) ==
          compose(conjugate_by_reflection(g), conjugate_by_reflection(h)));
    // Conjugation preserves torsion order.
    std::optional<int> d = order(g, 6);
    CHECK(order(conjugate_by_reflection(g), 6) == d);
  }
}

TEST_CASE("partition pair presentations") {
  CHECK(tau().to_string() == "dom=0,1/2; ran=0,1/2; shift=1");
  CHECK(PLCircleMap::identity().to_string() == "dom=0,1/2; ran=0,1/2; shift=0");
  CHECK(three_cycle().to_string() == "dom=0,1/2,3/4; ran=0,1/2,3/4; shift=1");

  CHECK(PLCircleMap::parse("dom=0,1/2;ran=0,1/2;shift=1") == tau());
  CHECK(PLCircleMap::parse(" dom = 0, 1/2 ; ran = 0, 1/2 ; shift = 1 ") ==
        tau());
  CHECK_THROWS_AS(PLCircleMap::parse("dom=0,1/2; ran=0,1/2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLCircleMap::parse("dom=0,1/2; ran=0,1/2; shift=x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLCircleMap::parse("dom=0,1/2; ran=0,1/4,1/2; shift=0"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLCircleMap::parse("foo=0,1/2; ran=0,1/2; shift=0"),
                  std::invalid_argument);

  // Negative and oversized shifts are reduced mod the cell count.
  PartitionPair pp = to_partition_pair(three_cycle());
  PartitionPair wrapped{pp.domain, pp.range, pp.shift + 3};
  CHECK(from_partition_pair(wrapped) == three_cycle());
  PartitionPair negative{pp.domain, pp.range, pp.shift - 3};
  CHECK(from_partition_pair(negative) == three_cycle());

  CHECK_THROWS_AS(
      from_partition_pair(PartitionPair{
          DyadicPartition({dy(0, 0), dy(1, 1)}),
          DyadicPartition({dy(0, 0), dy(1, 2), dy(1, 1)}), 0}),
      std::invalid_argument);

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    PLCircleMap g = random_element(rng);
    CHECK(from_partition_pair(to_partition_pair(g)) == g);
    CHECK(PLCircleMap::parse(g.to_string()) == g);
  }

  // The canonical presentation's partitions both contain 0.
  PLCircleMap no_zero_break = PLCircleMap::from_breakpoints(
      {dy(1, 2), dy(1, 1), dy(3, 2)}, {dy(1, 2), dy(1, 1), dy(0, 0)});
  PartitionPair canon = to_partition_pair(no_zero_break);
  CHECK(canon.domain.point(0) == dy(0, 0));
  CHECK(canon.range.point(0) == dy(0, 0));
  CHECK(from_partition_pair(canon) == no_zero_break);
}

TEST_CASE("element json") {
  CHECK(three_cycle().to_json() ==
        "{\"breakpoints\":[\"0\",\"1/2\",\"3/4\"],"
        "\"images\":[\"1/2\",\"3/4\",\"0\"],"
        "\"slope_exponents\":[-1,0,1]}");
  CHECK(PLCircleMap::identity().to_json() ==
        "{\"breakpoints\":[\"0\"],\"images\":[\"0\"],"
        "\"slope_exponents\":[0]}");
}

TEST_CASE("partition enumeration") {
  std::vector<DyadicPartition> all = enumerate_dyadic_partitions(6);
  CHECK(all.size() == 64);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::map<int, int> by_size;
  for (const DyadicPartition& p : all) {
    ++by_size[p.size()];
    CHECK(validate_dyadic_partition(p.points()));
    CHECK(p.point(0) == dy(0, 0));
  }
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 2);
  CHECK(by_size[4] == 5);
  CHECK(by_size[5] == 14);
  CHECK(by_size[6] == 42);
  std::set<DyadicPartition> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());

  CHECK(enumerate_dyadic_partitions(2).size() == 1);
  CHECK_THROWS_AS(enumerate_dyadic_partitions(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_dyadic_partitions(13), capacity_error);
}

TEST_CASE("random generation is seed-deterministic") {
  std::mt19937 a(20240817), b(20240817);
  for (int i = 0; i < 10; ++i) CHECK(random_element(a) == random_element(b));

  std::mt19937 rng(555);
  for (int cells = 2; cells <= 16; ++cells) {
    DyadicPartition p = random_dyadic_partition(rng, cells);
    CHECK(p.size() == cells);
    for (const Dyadic& pt : p.points()) CHECK(pt.depth() <= 4);
  }
  CHECK_THROWS_AS(random_dyadic_partition(rng, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_dyadic_partition(rng, 17), std::invalid_argument);
}

TEST_CASE("stage vertex canonical form") {
  StageVertex square(2, PartialTriangulation(4, {{0, 2}}));
  CHECK(square.stage() == 2);
  CHECK(square.triangulation().diagonals() == std::vector<Diagonal>{{0, 2}});

  // The background triangulation at any stage canonicalizes to the square.
  for (int k = 2; k <= 5; ++k) {
    PartialTriangulation bg = stage_triangulation(k);
    CHECK(bg.n() == (1 << k));
    CHECK(bg.is_triangulation());
    CHECK(StageVertex(k, bg) == square);
  }

  // A refined presentation of the other square vertex also collapses.
  StageVertex other(2, PartialTriangulation(4, {{1, 3}}));
  StageVertex refined_other =
      StageVertex(3, PartialTriangulation(
                         8, {{0, 2}, {2, 4}, {4, 6}, {0, 6}, {2, 6}}));
  CHECK(refined_other == other);

  // Refinement is the inverse of canonicalization.
  StageVertex r3 = other.refined(3);
  CHECK(r3.stage() == 3);
  CHECK(r3.triangulation().n() == 8);
  CHECK(StageVertex(3, r3.triangulation()) == other);
  CHECK(other.refined(2) == other);
  CHECK_THROWS_AS(r3.refined(2), std::invalid_argument);

  // Vertices genuinely at stage 3 stay there.
  StageVertex deep(3, PartialTriangulation(
                          8, {{0, 4}, {1, 4}, {2, 4}, {4, 6}, {0, 6}}));
  CHECK(deep.stage() == 3);

  CHECK_THROWS_AS(StageVertex(1, PartialTriangulation(4, {{0, 2}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(StageVertex(2, PartialTriangulation(4, {})),
                  std::invalid_argument);
  CHECK_THROWS_AS(StageVertex(2, PartialTriangulation(8, {{0, 4}})),
                  std::invalid_argument);

  CHECK(square < other);
  CHECK(other < deep);
}

TEST_CASE("stage vertex json") {
  StageVertex square(2, PartialTriangulation(4, {{0, 2}}));
  CHECK(square.to_json() ==
        "{\"stage\":2,\"triangulation\":{\"diagonals\":[[0,2]],\"n\":4}}");
  CHECK(StageVertex::from_json(square.to_json()) == square);
  StageVertex deep(3, PartialTriangulation(
                          8, {{0, 4}, {1, 4}, {2, 4}, {4, 6}, {0, 6}}));
  CHECK(StageVertex::from_json(deep.to_json()) == deep);
  // Non-canonical input is canonicalized on parse.
  CHECK(StageVertex::from_json(
            "{\"stage\":3,\"triangulation\":{\"diagonals\":"
            "[[0,2],[2,4],[4,6],[0,6],[0,4]],\"n\":8}}") == square);
  CHECK_THROWS_AS(StageVertex::from_json("{\"stage\":2}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(StageVertex::from_json("not json"), std::invalid_argument);
}

TEST_CASE("flip adjacency across stages") {
  StageVertex sq(2, PartialTriangulation(4, {{0, 2}}));
  StageVertex other(2, PartialTriangulation(4, {{1, 3}}));
  CHECK(flip_adjacent(sq, other));
  CHECK(flip_adjacent(other, sq));
  CHECK_FALSE(flip_adjacent(sq, sq));

  // Flipping one background ring of the refined square gives a stage-3
  // vertex adjacent to the square itself.
  StageVertex deep(3, PartialTriangulation(
                          8, {{0, 4}, {1, 4}, {2, 4}, {4, 6}, {0, 6}}));
  CHECK(flip_adjacent(sq, deep));
  CHECK(flip_adjacent(deep, sq));
  CHECK_FALSE(flip_adjacent(other, deep));

  // Two flips apart is not adjacent.
  StageVertex far(3, PartialTriangulation(
                         8, {{0, 4}, {1, 4}, {2, 4}, {0, 5}, {0, 6}}));
  CHECK_FALSE(flip_adjacent(far, sq));
  CHECK(flip_adjacent(far, deep));
}

TEST_CASE("central symmetry of vertices") {
  CHECK(is_centrally_symmetric(StageVertex(2, PartialTriangulation(4, {{0, 2}}))));
  CHECK(is_centrally_symmetric(StageVertex(2, PartialTriangulation(4, {{1, 3}}))));
  CHECK_FALSE(is_centrally_symmetric(
      StageVertex(3, PartialTriangulation(
                         8, {{0, 4}, {1, 4}, {2, 4}, {4, 6}, {0, 6}}))));
}

TEST_CASE("action on stage vertices") {
  StageVertex sq(2, PartialTriangulation(4, {{0, 2}}));
  StageVertex other(2, PartialTriangulation(4, {{1, 3}}));
  PLCircleMap r = three_cycle(), t = tau(), id = PLCircleMap::identity();

  CHECK(act_on_vertex(id, sq) == sq);
  CHECK(act_on_vertex(id, other) == other);
  CHECK(act_on_vertex(t, sq) == sq);
  CHECK(act_on_vertex(t, other) == other);

  // The three-cycle fixes the square's vertex but moves the other one to a
  // genuinely deeper, asymmetric vertex.
  CHECK(act_on_vertex(r, sq) == sq);
  StageVertex moved = act_on_vertex(r, other);
  CHECK(moved.stage() == 3);
  CHECK_FALSE(is_centrally_symmetric(moved));
  CHECK(moved == StageVertex(3, PartialTriangulation(
                                    8, {{0, 2}, {2, 4}, {0, 4}, {0, 5}, {0, 6}})));

  // Orbit under the order-3 element closes up.
  StageVertex back = act_on_vertex(r, act_on_vertex(r, moved));
  CHECK(back == other);

  // Action is a homomorphism: (g h) . v = g . (h . v).
  std::mt19937 rng(31337);
  std::vector<StageVertex> verts = {sq, other, moved};
  for (int trial = 0; trial < 10; ++trial) {
    PLCircleMap g = random_element(rng), h = random_element(rng);
    const StageVertex& v = verts[rng() % verts.size()];
    CHECK(act_on_vertex(compose(g, h), v) == act_on_vertex(g, act_on_vertex(h, v)));
    CHECK(act_on_vertex(inverse(g), act_on_vertex(g, v)) == v);
  }

  // The action preserves flip adjacency.
  for (int trial = 0; trial < 8; ++trial) {
    PLCircleMap g = random_element(rng);
    CHECK(flip_adjacent(act_on_vertex(g, sq), act_on_vertex(g, other)));
  }

  // tau-commuting elements preserve central symmetry.
  for (int trial = 0; trial < 8; ++trial) {
    PLCircleMap g = lift_to_double_cover(random_element(rng));
    CHECK(is_centrally_symmetric(act_on_vertex(g, sq)));
    CHECK(is_centrally_symmetric(act_on_vertex(g, other)));
  }
}
