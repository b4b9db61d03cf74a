#include "hedra/thompson.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hedra/errors.hpp"
#include "hedra/facelattice.hpp"

namespace hedra {

namespace {

// Index of the linear cell [breaks[i], breaks[i+1]) containing tm (in [0,1));
// positions below breaks[0] fall into the wrap-around cell.
std::size_t cell_index(const std::vector<Dyadic>& breaks, const Dyadic& tm) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), tm);
  if (it == breaks.begin()) return breaks.size() - 1;
  return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

// Per-cell slope exponents of raw breakpoint data; throws if some cell's
// image/domain length ratio is not a power of 2.
std::vector<int> compute_slopes(const std::vector<Dyadic>& breaks,
                                const std::vector<Dyadic>& images) {
  std::size_t m = breaks.size();
  if (m == 1) return {0};
  std::vector<int> exps(m);
  for (std::size_t i = 0; i < m; ++i) {
    Dyadic dgap = (breaks[(i + 1) % m] - breaks[i]).mod1();
    Dyadic igap = (images[(i + 1) % m] - images[i]).mod1();
    if (dgap.num() != igap.num())
      throw std::invalid_argument("slope is not a power of 2");
    exps[i] = dgap.exp() - igap.exp();
  }
  return exps;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

PLCircleMap PLCircleMap::identity() {
  return from_breakpoints({Dyadic::zero()}, {Dyadic::zero()});
}

PLCircleMap PLCircleMap::from_breakpoints(std::vector<Dyadic> breaks,
                                          std::vector<Dyadic> images) {
  if (breaks.empty()) throw std::invalid_argument("no breakpoints");
  if (breaks.size() != images.size())
    throw std::invalid_argument("breakpoint/image count mismatch");
  for (const Dyadic& b : breaks)
    if (b < Dyadic::zero() || !(b < Dyadic::one()))
      throw std::invalid_argument("breakpoints must lie in [0,1)");
  for (const Dyadic& v : images)
    if (v < Dyadic::zero() || !(v < Dyadic::one()))
      throw std::invalid_argument("images must lie in [0,1)");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i - 1] < breaks[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  std::size_t m = breaks.size();
  if (m >= 2) {
    int descents = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Dyadic& cur = images[i];
      const Dyadic& nxt = images[(i + 1) % m];
      if (nxt == cur) throw std::invalid_argument("images must be distinct");
      if (nxt < cur) ++descents;
    }
    if (descents != 1)
      throw std::invalid_argument(
          "images must preserve the cyclic order of the circle");
  }
  compute_slopes(breaks, images);  // validates the power-of-2 slope condition

  // Canonicalize: drop breakpoints where the slope does not actually change.
  bool changed = true;
  while (changed && breaks.size() >= 2) {
    changed = false;
    std::vector<int> exps = compute_slopes(breaks, images);
    std::size_t mm = breaks.size();
    for (std::size_t i = 0; i < mm; ++i) {
      if (exps[(i + mm - 1) % mm] == exps[i]) {
        breaks.erase(breaks.begin() + static_cast<std::ptrdiff_t>(i));
        images.erase(images.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (breaks.size() == 1) {  // rigid rotation: anchor at 0
    Dyadic c = (images[0] - breaks[0]).mod1();
    breaks = {Dyadic::zero()};
    images = {c};
  }
  PLCircleMap g;
  g.breaks_ = std::move(breaks);
  g.images_ = std::move(images);
  return g;
}

std::vector<int> PLCircleMap::slope_exponents() const {
  return compute_slopes(breaks_, images_);
}

bool PLCircleMap::is_identity() const {
  return breaks_.size() == 1 && breaks_[0] == Dyadic::zero() &&
         images_[0] == Dyadic::zero();
}

PLCircleMap tau() { return PLCircleMap::from_breakpoints({Dyadic::zero()}, {Dyadic::half()}); }

Dyadic evaluate(const PLCircleMap& g, const Dyadic& t) {
  Dyadic tm = t.mod1();
  const std::vector<Dyadic>& breaks = g.breakpoints();
  std::size_t i = cell_index(breaks, tm);
  Dyadic diff = (tm - breaks[i]).mod1();
  return (g.images()[i] + diff.times_pow2(g.slope_exponents()[i])).mod1();
}

PLCircleMap inverse(const PLCircleMap& g) {
  std::vector<std::pair<Dyadic, Dyadic>> pairs;
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i)
    pairs.push_back({g.images()[i], g.breakpoints()[i]});
  std::sort(pairs.begin(), pairs.end());
  std::vector<Dyadic> breaks, images;
  for (const auto& [v, b] : pairs) {
    breaks.push_back(v);
    images.push_back(b);
  }
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

PLCircleMap compose(const PLCircleMap& g, const PLCircleMap& h) {
  std::set<Dyadic> bset(h.breakpoints().begin(), h.breakpoints().end());
  PLCircleMap hinv = inverse(h);
  for (const Dyadic& b : g.breakpoints()) bset.insert(evaluate(hinv, b));
  std::vector<Dyadic> breaks(bset.begin(), bset.end());
  std::vector<Dyadic> images;
  images.reserve(breaks.size());
  for (const Dyadic& b : breaks) images.push_back(evaluate(g, evaluate(h, b)));
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

PartitionPair to_partition_pair(const PLCircleMap& g) {
  std::set<Dyadic> bset(g.breakpoints().begin(), g.breakpoints().end());
  bset.insert(Dyadic::zero());
  bset.insert(evaluate(inverse(g), Dyadic::zero()));
  std::vector<Dyadic> points(bset.begin(), bset.end());

  if (points.size() == 1) {  // identity: split the full circle at 1/2
    DyadicPartition split({Dyadic::zero(), Dyadic::half()});
    return PartitionPair{split, split, 0};
  }

  // Pass 1: cover each interval between consecutive points by the greedy
  // largest-first run of standard dyadic intervals.
  std::vector<std::pair<Dyadic, int>> cells;  // (start in [0,1), depth)
  for (std::size_t i = 0; i < points.size(); ++i) {
    Dyadic a = points[i];
    Dyadic b = i + 1 < points.size() ? points[i + 1]
                                     : points[0] + Dyadic::one();
    Dyadic cur = a;
    while (cur < b) {
      Dyadic len = b - cur;
      int k0 = len.exp() -
               (std::bit_width(static_cast<unsigned long long>(len.num())) - 1);
      int k = std::max(cur.depth(), k0);
      cells.push_back({cur.mod1(), k});
      cur = cur + Dyadic(1, k);
    }
  }

  // Pass 2: halve cells until every image cell is standard: a domain cell of
  // depth k with slope 2^e maps onto [g(a), g(a) + 2^{e-k}], standard exactly
  // when g(a) is a multiple of 2^{e-k}.
  const std::vector<Dyadic>& gbreaks = g.breakpoints();
  std::vector<int> gexps = g.slope_exponents();
  std::size_t idx = 0;
  while (idx < cells.size()) {
    auto [a, k] = cells[idx];
    int e = gexps[cell_index(gbreaks, a)];
    if (evaluate(g, a).depth() > k - e) {
      cells[idx].second = k + 1;
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                   {a + Dyadic(1, k + 1), k + 1});
    } else {
      ++idx;
    }
  }

  std::vector<Dyadic> dom, ran;
  for (const auto& [a, k] : cells) {
    dom.push_back(a);
    ran.push_back(evaluate(g, a));
  }
  std::sort(ran.begin(), ran.end());
  Dyadic g0 = evaluate(g, Dyadic::zero());
  int shift = static_cast<int>(
      std::lower_bound(ran.begin(), ran.end(), g0) - ran.begin());
  return PartitionPair{DyadicPartition(std::move(dom)),
                       DyadicPartition(std::move(ran)), shift};
}

PLCircleMap from_partition_pair(const PartitionPair& pp) {
  int m = pp.domain.size();
  if (pp.range.size() != m)
    throw std::invalid_argument("partition sizes differ");
  int s = ((pp.shift % m) + m) % m;
  std::vector<Dyadic> breaks = pp.domain.points();
  std::vector<Dyadic> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images.push_back(pp.range.point((i + s) % m));
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

std::string PartitionPair::to_string() const {
  return "dom=" + domain.to_string() + "; ran=" + range.to_string() +
         "; shift=" + std::to_string(shift);
}

PartitionPair PartitionPair::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    parts.push_back(semi == std::string::npos ? text.substr(pos)
                                              : text.substr(pos, semi - pos));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (parts.size() != 3)
    throw std::invalid_argument(
        "element text needs dom=...; ran=...; shift=...");
  std::string values[3];
  const char* keys[3] = {"dom", "ran", "shift"};
  for (int i = 0; i < 3; ++i) {
    std::string part = trimmed(parts[static_cast<std::size_t>(i)]);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos || trimmed(part.substr(0, eq)) != keys[i])
      throw std::invalid_argument("expected " + std::string(keys[i]) +
                                  "=... in element text");
    values[i] = part.substr(eq + 1);
  }
  std::string shift_text = trimmed(values[2]);
  std::size_t used = 0;
  int shift = 0;
  try {
    shift = std::stoi(shift_text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad shift: " + shift_text);
  }
  if (used != shift_text.size())
    throw std::invalid_argument("bad shift: " + shift_text);
  return PartitionPair{DyadicPartition::parse(values[0]),
                       DyadicPartition::parse(values[1]), shift};
}

std::string PLCircleMap::to_string() const {
  return to_partition_pair(*this).to_string();
}

PLCircleMap PLCircleMap::parse(const std::string& text) {
  return from_partition_pair(PartitionPair::parse(text));
}

std::string PLCircleMap::to_json() const {
  std::ostringstream out;
  out << "{\"breakpoints\":[";
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (i) out << ',';
    out << '"' << breaks_[i].to_string() << '"';
  }
  out << "],\"images\":[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << '"' << images_[i].to_string() << '"';
  }
  out << "],\"slope_exponents\":[";
  std::vector<int> exps = slope_exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out << ',';
    out << exps[i];
  }
  out << "]}";
  return out.str();
}

PLCircleMap rotation_element(const DyadicPartition& p, int k) {
  if (k < 1 || p.size() % k != 0)
    throw std::invalid_argument("k must divide the partition size");
  return from_partition_pair(PartitionPair{p, p, p.size() / k});
}

std::optional<int> order(const PLCircleMap& g, int cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  PLCircleMap power = g;
  for (int d = 1; d <= cap; ++d) {
    if (power.is_identity()) return d;
    if (d == cap) break;
    try {
      power = compose(g, power);
    } catch (const capacity_error&) {
      // Iterates of an infinite-order element deepen without bound; once they
      // leave the representable dyadic range no later power can be the
      // identity at this scale, so the bounded search reports absence.
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool commutes(const PLCircleMap& g, const PLCircleMap& h) {
  return compose(g, h) == compose(h, g);
}

PLCircleMap quotient_mod_tau(const PLCircleMap& g) {
  if (!commutes(g, tau()))
    throw std::invalid_argument(
        "quotient requires an element commuting with the half-rotation");
  std::vector<Dyadic> breaks, images;
  for (const Dyadic& b : g.breakpoints()) {
    if (!(b < Dyadic::half())) continue;
    breaks.push_back(b.times_pow2(1));
    images.push_back(evaluate(g, b).times_pow2(1).mod1());
  }
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

PLCircleMap lift_to_double_cover(const PLCircleMap& h) {
  // Unwrap the image sequence into [0, 2) before halving: past the single
  // cyclic descent the images continue one full turn up, and folding that
  // turn away would break continuity of the lifted map.
  const auto& hb = h.breakpoints();
  const auto& hi = h.images();
  std::vector<Dyadic> lifted;
  lifted.reserve(hi.size());
  Dyadic turn = Dyadic::zero();
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (i > 0 && hi[i] < hi[i - 1]) turn = Dyadic::one();
    lifted.push_back(hi[i] + turn);
  }
  std::vector<Dyadic> breaks, images;
  for (std::size_t i = 0; i < hb.size(); ++i) {
    breaks.push_back(hb[i].times_pow2(-1));
    images.push_back(lifted[i].times_pow2(-1).mod1());
  }
  std::size_t m = breaks.size();
  for (std::size_t i = 0; i < m; ++i) {
    breaks.push_back(breaks[i] + Dyadic::half());
    images.push_back((images[i] + Dyadic::half()).mod1());
  }
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

PLCircleMap conjugate_by_reflection(const PLCircleMap& g) {
  std::vector<std::pair<Dyadic, Dyadic>> pairs;
  for (const Dyadic& b : g.breakpoints())
    pairs.push_back({(-b).mod1(), (-evaluate(g, b)).mod1()});
  std::sort(pairs.begin(), pairs.end());
  std::vector<Dyadic> breaks, images;
  for (const auto& [nb, ni] : pairs) {
    breaks.push_back(nb);
    images.push_back(ni);
  }
  return PLCircleMap::from_breakpoints(std::move(breaks), std::move(images));
}

namespace {

// All standard tilings of [a, a + 2^{-k}] with at most `budget` pieces, each
// given by its sorted list of left endpoints.
std::vector<std::vector<Dyadic>> standard_tilings(const Dyadic& a, int k,
                                                  int budget) {
  std::vector<std::vector<Dyadic>> out;
  out.push_back({a});
  if (budget >= 2) {
    Dyadic mid = a + Dyadic(1, k + 1);
    for (const auto& left : standard_tilings(a, k + 1, budget - 1))
      for (const auto& right :
           standard_tilings(mid, k + 1, budget - static_cast<int>(left.size()))) {
        std::vector<Dyadic> tiling = left;
        tiling.insert(tiling.end(), right.begin(), right.end());
        out.push_back(std::move(tiling));
      }
  }
  return out;
}

}  // namespace

std::vector<DyadicPartition> enumerate_dyadic_partitions(int max_cells) {
  if (max_cells < 2) throw std::invalid_argument("need at least 2 cells");
  if (max_cells > 12) throw capacity_error("partition enumeration too large");
  std::vector<DyadicPartition> out;
  for (const auto& tiling : standard_tilings(Dyadic::zero(), 0, max_cells))
    if (tiling.size() >= 2) out.push_back(DyadicPartition(tiling));
  std::sort(out.begin(), out.end());
  return out;
}

DyadicPartition random_dyadic_partition(std::mt19937& rng, int cells) {
  if (cells < 2 || cells > 16)
    throw std::invalid_argument("cell count must be between 2 and 16");
  std::vector<std::pair<Dyadic, int>> parts = {{Dyadic::zero(), 0}};
  while (static_cast<int>(parts.size()) < cells) {
    std::size_t idx = rng() % parts.size();
    while (parts[idx].second >= 4) idx = (idx + 1) % parts.size();
    auto [a, k] = parts[idx];
    parts[idx].second = k + 1;
    parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                 {a + Dyadic(1, k + 1), k + 1});
  }
  std::vector<Dyadic> points;
  points.reserve(parts.size());
  for (const auto& [a, k] : parts) points.push_back(a);
  return DyadicPartition(std::move(points));
}

PLCircleMap random_element(std::mt19937& rng) {
  int m = 2 + static_cast<int>(rng() % 7);
  DyadicPartition dom = random_dyadic_partition(rng, m);
  DyadicPartition ran = random_dyadic_partition(rng, m);
  int shift = static_cast<int>(rng() % static_cast<unsigned>(m));
  return from_partition_pair(PartitionPair{dom, ran, shift});
}

StageVertex::StageVertex(int stage, PartialTriangulation triangulation)
    : stage_(stage), triangulation_(std::move(triangulation)) {
  if (stage_ < 2) throw std::invalid_argument("stage must be at least 2");
  if (stage_ > 25) throw capacity_error("stage too deep");
  if (triangulation_.n() != (1 << stage_))
    throw std::invalid_argument("stage vertex needs a 2^stage-gon");
  if (!triangulation_.is_triangulation())
    throw std::invalid_argument("stage vertex needs a full triangulation");

  // Canonical form: coarsen while no diagonal touches an odd polygon vertex.
  // Then every odd vertex is an ear cut off by the short chord {2j, 2j+2},
  // and dropping those chords and halving labels undoes one refinement.
  while (stage_ > 2) {
    bool all_even = true;
    for (const Diagonal& d : triangulation_.diagonals())
      if (d.a % 2 != 0 || d.b % 2 != 0) {
        all_even = false;
        break;
      }
    if (!all_even) break;
    int n = triangulation_.n();
    std::vector<Diagonal> coarser;
    for (const Diagonal& d : triangulation_.diagonals()) {
      if (d.b - d.a == 2 || d.b - d.a == n - 2) continue;
      coarser.push_back({d.a / 2, d.b / 2});
    }
    triangulation_ = PartialTriangulation(n / 2, std::move(coarser));
    --stage_;
  }
}

StageVertex StageVertex::refined(int stage) const {
  if (stage < stage_)
    throw std::invalid_argument("cannot refine to a shallower stage");
  if (stage > 25) throw capacity_error("stage too deep");
  StageVertex out = *this;
  while (out.stage_ < stage) {
    out.triangulation_ = embed_into_double(out.triangulation_);
    ++out.stage_;
  }
  return out;
}

std::strong_ordering StageVertex::operator<=>(const StageVertex& o) const {
  if (auto c = stage_ <=> o.stage_; c != 0) return c;
  return triangulation_ <=> o.triangulation_;
}

std::string StageVertex::to_json() const {
  return "{\"stage\":" + std::to_string(stage_) +
         ",\"triangulation\":" + triangulation_.to_json() + "}";
}

StageVertex StageVertex::from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    int stage = j.at("stage").get<int>();
    PartialTriangulation tri =
        PartialTriangulation::from_json(j.at("triangulation").dump());
    return StageVertex(stage, std::move(tri));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad stage vertex JSON: ") +
                                e.what());
  }
}

PartialTriangulation stage_triangulation(int stage) {
  if (stage < 2) throw std::invalid_argument("stage must be at least 2");
  if (stage > 25) throw capacity_error("stage too deep");
  PartialTriangulation t(4, {{0, 2}});
  for (int k = 2; k < stage; ++k) t = embed_into_double(t);
  return t;
}

bool flip_adjacent(const StageVertex& u, const StageVertex& v) {
  if (u == v) return false;
  int stage = std::max(u.stage(), v.stage());
  PartialTriangulation a = u.refined(stage).triangulation();
  PartialTriangulation b = v.refined(stage).triangulation();
  std::vector<Diagonal> only_a, only_b;
  std::set_difference(a.diagonals().begin(), a.diagonals().end(),
                      b.diagonals().begin(), b.diagonals().end(),
                      std::back_inserter(only_a));
  std::set_difference(b.diagonals().begin(), b.diagonals().end(),
                      a.diagonals().begin(), a.diagonals().end(),
                      std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) return false;
  return flip(a, only_a[0]) == b;
}

bool is_centrally_symmetric(const StageVertex& v) {
  return is_centrally_symmetric(v.triangulation());
}

namespace {

int circle_position_to_corner(const Dyadic& y, int stage) {
  Dyadic scaled = y.times_pow2(stage);
  return static_cast<int>(scaled.num() << (-scaled.exp()));
}

}  // namespace

StageVertex act_on_vertex(const PLCircleMap& g, const StageVertex& v) {
  const std::vector<Dyadic>& gbreaks = g.breakpoints();
  std::vector<int> gexps = g.slope_exponents();

  int K = std::max(v.stage(), 2);
  for (const Dyadic& b : gbreaks) K = std::max(K, b.depth());

  // Deepen the grid until every grid cell maps onto a standard interval:
  // cell j of depth K with slope 2^e has image length 2^{e-K}, standard
  // exactly when its left image endpoint is a multiple of 2^{e-K}.
  int K2 = K;
  for (;; ++K) {
    if (K > 25) throw capacity_error("action exceeds stage capacity");
    bool ok = true;
    K2 = 0;
    for (long long j = 0; j < (1ll << K); ++j) {
      Dyadic a(j, K);
      int c = K - gexps[cell_index(gbreaks, a)];
      if (evaluate(g, a).depth() > c) {
        ok = false;
        break;
      }
      K2 = std::max(K2, c);
    }
    if (ok) break;
  }

  int n2 = 1 << K2;
  std::vector<Diagonal> image;

  // Chords of the refined vertex map to chords between image corners.
  PartialTriangulation refined = v.refined(K).triangulation();
  for (const Diagonal& d : refined.diagonals()) {
    int a = circle_position_to_corner(evaluate(g, Dyadic(d.a, K)), K2);
    int b = circle_position_to_corner(evaluate(g, Dyadic(d.b, K)), K2);
    image.push_back(make_diagonal(a, b, n2));
  }

  // Each grid cell's image is a standard interval of depth c; fill it with
  // the background fan: one chord per standard subinterval of depth c..K2-1.
  for (long long j = 0; j < (1ll << K); ++j) {
    Dyadic a(j, K);
    int c = K - gexps[cell_index(gbreaks, a)];
    Dyadic y = evaluate(g, a);
    for (int cc = c; cc < K2; ++cc)
      for (long long i = 0; i < (1ll << (cc - c)); ++i) {
        Dyadic lo = (y + Dyadic(i, cc)).mod1();
        Dyadic hi = (y + Dyadic(i + 1, cc)).mod1();
        image.push_back(make_diagonal(circle_position_to_corner(lo, K2),
                                      circle_position_to_corner(hi, K2), n2));
      }
  }

  return StageVertex(K2, PartialTriangulation(n2, std::move(image)));
}

}  // namespace hedra
