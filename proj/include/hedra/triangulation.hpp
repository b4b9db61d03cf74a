#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hedra/errors.hpp"

namespace hedra {

// Vertices of the convex n-gon are labelled 0..n-1 counterclockwise.
// A diagonal joins two non-adjacent vertices; boundary edges are implicit.
struct Diagonal {
  int a = 0;
  int b = 0;  // stored with a < b
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

bool is_valid_diagonal(const Diagonal& d, int n);
Diagonal make_diagonal(int a, int b, int n);  // canonicalizes order, validates
Diagonal rotate_diagonal(const Diagonal& d, int shift, int n);
Diagonal reflect_diagonal(const Diagonal& d, int n);  // j -> (n - j) mod n

// True iff the open chords cross in the interior. Diagonals sharing an
// endpoint do not cross.
bool crosses(const Diagonal& d1, const Diagonal& d2, int n);

// A set of pairwise noncrossing diagonals of the n-gon, kept sorted.
// Empty set = the whole polygon; n-3 diagonals = a triangulation.
class PartialTriangulation {
 public:
  PartialTriangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool is_triangulation() const {
    return static_cast<int>(diagonals_.size()) == n_ - 3;
  }
  bool contains(const Diagonal& d) const;

  std::string to_json() const;  // {"n":N,"diagonals":[[a,b],...]}
  static PartialTriangulation from_json(std::string_view text);

  friend auto operator<=>(const PartialTriangulation&,
                          const PartialTriangulation&) = default;

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
};

unsigned long long catalan(int k);         // k <= 33
unsigned long long binomial(int n, int k);

// Exhaustive enumeration limits. Triangulations of the 16-gon number
// Catalan(14) = 2,674,440; partial triangulations grow much faster
// (super-Catalan), hence the lower face cap.
inline constexpr int kTriangulationCap = 16;
inline constexpr int kFaceCap = 12;

// Visits every triangulation once; the diagonal list passed to the callback is
// scratch storage in visitation order, not sorted.
void for_each_triangulation(
    int n, const std::function<void(const std::vector<Diagonal>&)>& fn);

// Sorted lexicographically on the sorted diagonal lists.
std::vector<PartialTriangulation> enumerate_triangulations(int n);
std::vector<PartialTriangulation> enumerate_partial_triangulations(int n);

// Central symmetry of the 2m-gon: vertex j -> j + m.
Diagonal tau_diagonal(const Diagonal& d, int n2);
bool is_centrally_symmetric(const PartialTriangulation& pt);
std::vector<PartialTriangulation> enumerate_symmetric_triangulations(int n2);
std::vector<PartialTriangulation> enumerate_symmetric_partial_triangulations(
    int n2);

// Orbit of a diagonal under the central symmetry: a single central diagonal
// {a, a+m} or a symmetric pair {d, tau(d)}.
struct SymmetricOrbit {
  int n2 = 0;
  std::vector<Diagonal> members;  // sorted; size 1 or 2

  bool is_central() const { return members.size() == 1; }
  static SymmetricOrbit of(const Diagonal& d, int n2);
  friend auto operator<=>(const SymmetricOrbit&, const SymmetricOrbit&) =
      default;
};

std::vector<SymmetricOrbit> orbits_of(const PartialTriangulation& pt);

// Exchanges d for the opposite diagonal of the quadrilateral formed by the two
// triangles adjacent to d. Requires a full triangulation containing d.
PartialTriangulation flip(const PartialTriangulation& t, const Diagonal& d);

// Flips a whole orbit: the central diagonal alone, or both members of a
// symmetric pair. Maps centrally symmetric triangulations to centrally
// symmetric triangulations.
PartialTriangulation symmetric_flip(const PartialTriangulation& t,
                                    const SymmetricOrbit& orbit);

// Faces of the polygon subdivision induced by the diagonals, each as a
// counterclockwise vertex list. For a full triangulation these are the n-2
// triangles.
std::vector<std::vector<int>> regions_of(const PartialTriangulation& pt);
std::vector<std::array<int, 3>> triangles_of(const PartialTriangulation& t);

}  // namespace hedra
