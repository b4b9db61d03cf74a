#include "hedra/triangulation.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace hedra {

namespace {

// Fast path used by the enumerators: inputs already canonical (a < b).
inline bool crosses_unchecked(const Diagonal& d1, const Diagonal& d2) {
  if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b)
    return false;
  const bool in1 = d1.a < d2.a && d2.a < d1.b;
  const bool in2 = d1.a < d2.b && d2.b < d1.b;
  return in1 != in2;
}

void check_polygon_size(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
}

void check_even(int n2, const char* what) {
  if (n2 % 2 != 0)
    throw std::invalid_argument(std::string(what) +
                                " requires an even polygon");
}

}  // namespace

bool is_valid_diagonal(const Diagonal& d, int n) {
  if (n < 3) return false;
  if (d.a < 0 || d.b >= n || d.a >= d.b) return false;
  if (d.b - d.a < 2) return false;             // boundary edge or degenerate
  if (d.a == 0 && d.b == n - 1) return false;  // boundary edge 0,n-1
  return true;
}

Diagonal make_diagonal(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  Diagonal d{a, b};
  if (!is_valid_diagonal(d, n))
    throw std::invalid_argument("not a diagonal of the " + std::to_string(n) +
                                "-gon: {" + std::to_string(a) + "," +
                                std::to_string(b) + "}");
  return d;
}

Diagonal rotate_diagonal(const Diagonal& d, int shift, int n) {
  int a = ((d.a + shift) % n + n) % n;
  int b = ((d.b + shift) % n + n) % n;
  return make_diagonal(a, b, n);
}

Diagonal reflect_diagonal(const Diagonal& d, int n) {
  int a = (n - d.a) % n;
  int b = (n - d.b) % n;
  return make_diagonal(a, b, n);
}

bool crosses(const Diagonal& d1, const Diagonal& d2, int n) {
  if (!is_valid_diagonal(d1, n) || !is_valid_diagonal(d2, n))
    throw std::invalid_argument("crosses: invalid diagonal");
  return crosses_unchecked(d1, d2);
}

PartialTriangulation::PartialTriangulation(int n,
                                           std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  check_polygon_size(n_);
  for (Diagonal& d : diagonals_) {
    if (d.a > d.b) std::swap(d.a, d.b);
    if (!is_valid_diagonal(d, n_))
      throw std::invalid_argument("invalid diagonal in partial triangulation");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  for (std::size_t i = 1; i < diagonals_.size(); ++i)
    if (diagonals_[i - 1] == diagonals_[i])
      throw std::invalid_argument("duplicate diagonal");
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (crosses_unchecked(diagonals_[i], diagonals_[j]))
        throw std::invalid_argument("crossing diagonals");
}

bool PartialTriangulation::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::string PartialTriangulation::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& arr = j["diagonals"] = nlohmann::json::array();
  for (const Diagonal& d : diagonals_) arr.push_back({d.a, d.b});
  return j.dump();
}

PartialTriangulation PartialTriangulation::from_json(std::string_view text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Diagonal> ds;
    for (const auto& e : j.at("diagonals")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("diagonal entries must be pairs");
      ds.push_back(make_diagonal(e[0].get<int>(), e[1].get<int>(), n));
    }
    return PartialTriangulation(n, std::move(ds));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad triangulation JSON: ") +
                                e.what());
  }
}

unsigned long long catalan(int k) {
  if (k < 0 || k > 33) throw std::invalid_argument("catalan: k out of range");
  unsigned long long c = 1;
  for (int i = 0; i < k; ++i)  // C(k+1) = C(k) * 2(2k+1)/(k+2)
    c = c * 2 * (2ull * i + 1) / (i + 2);
  return c;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// Enumerates by repeatedly picking the apex of the triangle attached to the
// base edge of each pending contiguous span [i..j]; every triangulation is
// produced exactly once.
void triangulate_spans(std::vector<std::pair<int, int>>& pending,
                       std::vector<Diagonal>& acc,
                       const std::function<void(const std::vector<Diagonal>&)>& fn) {
  if (pending.empty()) {
    fn(acc);
    return;
  }
  const auto [i, j] = pending.back();
  pending.pop_back();
  for (int k = i + 1; k < j; ++k) {
    const std::size_t mark_p = pending.size();
    const std::size_t mark_a = acc.size();
    if (k - i >= 2) {
      acc.push_back({i, k});
      pending.push_back({i, k});
    }
    if (j - k >= 2) {
      acc.push_back({k, j});
      pending.push_back({k, j});
    }
    triangulate_spans(pending, acc, fn);
    pending.resize(mark_p);
    acc.resize(mark_a);
  }
  pending.push_back({i, j});
}

}  // namespace

void for_each_triangulation(
    int n, const std::function<void(const std::vector<Diagonal>&)>& fn) {
  check_polygon_size(n);
  if (n > kTriangulationCap)
    throw capacity_error("triangulation enumeration capped at n = " +
                         std::to_string(kTriangulationCap));
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  std::vector<Diagonal> acc;
  triangulate_spans(pending, acc, fn);
}

std::vector<PartialTriangulation> enumerate_triangulations(int n) {
  check_polygon_size(n);
  if (n > kTriangulationCap)
    throw capacity_error("triangulation enumeration capped at n = " +
                         std::to_string(kTriangulationCap));
  std::vector<PartialTriangulation> out;
  out.reserve(catalan(n - 2));
  for_each_triangulation(n, [&](const std::vector<Diagonal>& ds) {
    out.emplace_back(n, ds);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Diagonal> all_diagonals(int n) {
  std::vector<Diagonal> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) out.push_back({a, b});
  return out;
}

void noncrossing_subsets(const std::vector<Diagonal>& all, std::size_t start,
                         std::vector<Diagonal>& acc,
                         const std::function<void(const std::vector<Diagonal>&)>& fn) {
  fn(acc);
  for (std::size_t i = start; i < all.size(); ++i) {
    bool ok = true;
    for (const Diagonal& d : acc)
      if (crosses_unchecked(all[i], d)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    acc.push_back(all[i]);
    noncrossing_subsets(all, i + 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PartialTriangulation> enumerate_partial_triangulations(int n) {
  check_polygon_size(n);
  if (n > kFaceCap)
    throw capacity_error("partial-triangulation enumeration capped at n = " +
                         std::to_string(kFaceCap));
  std::vector<PartialTriangulation> out;
  std::vector<Diagonal> acc;
  noncrossing_subsets(all_diagonals(n), 0, acc,
                      [&](const std::vector<Diagonal>& ds) {
                        out.emplace_back(n, ds);
                      });
  // The DFS above emits in lexicographic prefix order already.
  return out;
}

Diagonal tau_diagonal(const Diagonal& d, int n2) {
  check_even(n2, "tau_diagonal");
  return rotate_diagonal(d, n2 / 2, n2);
}

bool is_centrally_symmetric(const PartialTriangulation& pt) {
  check_even(pt.n(), "is_centrally_symmetric");
  for (const Diagonal& d : pt.diagonals())
    if (!pt.contains(tau_diagonal(d, pt.n()))) return false;
  return true;
}

std::vector<PartialTriangulation> enumerate_symmetric_triangulations(int n2) {
  check_even(n2, "enumerate_symmetric_triangulations");
  std::vector<PartialTriangulation> out;
  for_each_triangulation(n2, [&](const std::vector<Diagonal>& ds) {
    PartialTriangulation t(n2, ds);
    if (is_centrally_symmetric(t)) out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricOrbit SymmetricOrbit::of(const Diagonal& d, int n2) {
  check_even(n2, "SymmetricOrbit");
  if (!is_valid_diagonal(d, n2))
    throw std::invalid_argument("SymmetricOrbit: invalid diagonal");
  Diagonal t = tau_diagonal(d, n2);
  SymmetricOrbit o;
  o.n2 = n2;
  if (t == d)
    o.members = {d};
  else
    o.members = {std::min(d, t), std::max(d, t)};
  return o;
}

std::vector<SymmetricOrbit> orbits_of(const PartialTriangulation& pt) {
  if (!is_centrally_symmetric(pt))
    throw std::invalid_argument("orbits_of: not centrally symmetric");
  std::set<SymmetricOrbit> seen;
  for (const Diagonal& d : pt.diagonals())
    seen.insert(SymmetricOrbit::of(d, pt.n()));
  return {seen.begin(), seen.end()};
}

std::vector<PartialTriangulation> enumerate_symmetric_partial_triangulations(
    int n2) {
  check_even(n2, "enumerate_symmetric_partial_triangulations");
  check_polygon_size(n2);
  if (n2 > kFaceCap)
    throw capacity_error("partial-triangulation enumeration capped at n = " +
                         std::to_string(kFaceCap));
  std::set<SymmetricOrbit> orbit_set;
  for (const Diagonal& d : all_diagonals(n2))
    orbit_set.insert(SymmetricOrbit::of(d, n2));
  const std::vector<SymmetricOrbit> orbits(orbit_set.begin(), orbit_set.end());

  std::vector<PartialTriangulation> out;
  std::vector<Diagonal> acc;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.emplace_back(n2, acc);
    for (std::size_t i = start; i < orbits.size(); ++i) {
      bool ok = true;
      for (const Diagonal& m : orbits[i].members) {
        for (const Diagonal& d : acc)
          if (crosses_unchecked(m, d)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) continue;
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), orbits[i].members.begin(),
                 orbits[i].members.end());
      self(self, i + 1);
      acc.resize(mark);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Apex of the triangle of t attached to chord {a,b} on the side of the cyclic
// interval (a..b). Unique in a full triangulation.
int apex_on_side(const PartialTriangulation& t, int a, int b) {
  const int n = t.n();
  auto is_edge = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    if (y - x == 1 || (x == 0 && y == n - 1)) return true;  // boundary
    return t.contains(Diagonal{x, y});
  };
  for (int c = (a + 1) % n; c != b; c = (c + 1) % n)
    if (is_edge(a, c) && is_edge(c, b)) return c;
  throw std::logic_error("apex_on_side: no apex found");
}

}  // namespace

PartialTriangulation flip(const PartialTriangulation& t, const Diagonal& d) {
  if (!t.is_triangulation())
    throw std::invalid_argument("flip: requires a full triangulation");
  if (!t.contains(d))
    throw std::invalid_argument("flip: diagonal not in triangulation");
  const int c1 = apex_on_side(t, d.a, d.b);
  const int c2 = apex_on_side(t, d.b, d.a);
  std::vector<Diagonal> ds;
  ds.reserve(t.diagonals().size());
  for (const Diagonal& e : t.diagonals())
    if (!(e == d)) ds.push_back(e);
  ds.push_back(make_diagonal(c1, c2, t.n()));
  return PartialTriangulation(t.n(), std::move(ds));
}

PartialTriangulation symmetric_flip(const PartialTriangulation& t,
                                    const SymmetricOrbit& orbit) {
  if (orbit.n2 != t.n())
    throw std::invalid_argument("symmetric_flip: polygon size mismatch");
  if (!t.is_triangulation() || !is_centrally_symmetric(t))
    throw std::invalid_argument(
        "symmetric_flip: requires a centrally symmetric triangulation");
  for (const Diagonal& m : orbit.members)
    if (!t.contains(m))
      throw std::invalid_argument("symmetric_flip: orbit not in triangulation");
  // A non-central pair never bounds a common triangle, so the two flips do
  // not interfere.
  PartialTriangulation r = t;
  for (const Diagonal& m : orbit.members) r = flip(r, m);
  return r;
}

namespace {

void split_region(std::vector<int> verts, std::vector<Diagonal> diags,
                  std::vector<std::vector<int>>& out) {
  if (diags.empty()) {
    out.push_back(std::move(verts));
    return;
  }
  const Diagonal d = diags.front();
  diags.erase(diags.begin());
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] == d.a) ia = i;
    if (verts[i] == d.b) ib = i;
  }
  if (ia > ib) std::swap(ia, ib);
  std::vector<int> side1(verts.begin() + ia, verts.begin() + ib + 1);
  std::vector<int> side2(verts.begin() + ib, verts.end());
  side2.insert(side2.end(), verts.begin(), verts.begin() + ia + 1);

  auto contains = [](const std::vector<int>& vs, int v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  std::vector<Diagonal> d1, d2;
  for (const Diagonal& e : diags) {
    if (contains(side1, e.a) && contains(side1, e.b))
      d1.push_back(e);
    else
      d2.push_back(e);
  }
  split_region(std::move(side1), std::move(d1), out);
  split_region(std::move(side2), std::move(d2), out);
}

}  // namespace

std::vector<std::vector<int>> regions_of(const PartialTriangulation& pt) {
  std::vector<int> verts(pt.n());
  for (int i = 0; i < pt.n(); ++i) verts[i] = i;
  std::vector<std::vector<int>> out;
  split_region(std::move(verts), pt.diagonals(), out);
  return out;
}

std::vector<std::array<int, 3>> triangles_of(const PartialTriangulation& t) {
  if (!t.is_triangulation())
    throw std::invalid_argument("triangles_of: requires a full triangulation");
  std::vector<std::array<int, 3>> tris;
  for (auto& r : regions_of(t)) {
    std::sort(r.begin(), r.end());
    tris.push_back({r[0], r[1], r[2]});
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

}  // namespace hedra
