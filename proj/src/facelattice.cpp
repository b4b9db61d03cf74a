#include "hedra/facelattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hedra/errors.hpp"

namespace hedra {

namespace {

// Number of diagonal orbits (symmetric case) or diagonals (otherwise).
std::size_t generator_count(const PartialTriangulation& f, bool symmetric) {
  if (!symmetric) return f.diagonals().size();
  return orbits_of(f).size();
}

std::string diagonal_list_json(const PartialTriangulation& f) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const Diagonal& d : f.diagonals()) {
    if (!first) out << ',';
    first = false;
    out << '[' << d.a << ',' << d.b << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

FaceLattice::FaceLattice(int n, bool symmetric,
                         std::vector<PartialTriangulation> faces)
    : n_(n), symmetric_(symmetric), faces_(std::move(faces)) {
  if (symmetric_ && n_ % 2 != 0)
    throw std::invalid_argument("symmetric lattice requires an even polygon");
  dim_ = symmetric_ ? n_ / 2 - 1 : n_ - 3;

  std::vector<int> ranks(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].n() != n_)
      throw std::invalid_argument("face of the wrong polygon");
    int r = dim_ - static_cast<int>(generator_count(faces_[i], symmetric_));
    if (r < 0) throw std::invalid_argument("face below rank 0");
    ranks[i] = r;
  }

  std::vector<std::size_t> order(faces_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return faces_[a].diagonals() < faces_[b].diagonals();
  });
  std::vector<PartialTriangulation> sorted;
  sorted.reserve(faces_.size());
  for (std::size_t i : order) sorted.push_back(std::move(faces_[i]));
  faces_ = std::move(sorted);

  rank_offset_.assign(static_cast<std::size_t>(dim_) + 2, faces_.size());
  for (std::size_t i = faces_.size(); i-- > 0;) {
    int r = dim_ - static_cast<int>(generator_count(faces_[i], symmetric_));
    rank_offset_[static_cast<std::size_t>(r)] = i;
  }
  // Ranks with no faces inherit the next offset.
  for (std::size_t r = rank_offset_.size() - 1; r-- > 0;)
    if (rank_offset_[r] > rank_offset_[r + 1]) rank_offset_[r] = rank_offset_[r + 1];

  std::map<std::vector<Diagonal>, std::size_t> index;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    index[faces_[i].diagonals()] = i;

  covers_up_.assign(faces_.size(), {});
  covers_down_.assign(faces_.size(), {});
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const PartialTriangulation& f = faces_[i];
    if (f.diagonals().empty()) continue;
    std::vector<std::vector<Diagonal>> removals;
    if (!symmetric_) {
      for (std::size_t k = 0; k < f.diagonals().size(); ++k) {
        std::vector<Diagonal> rest = f.diagonals();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        removals.push_back(std::move(rest));
      }
    } else {
      for (const SymmetricOrbit& orbit : orbits_of(f)) {
        std::vector<Diagonal> rest;
        for (const Diagonal& d : f.diagonals()) {
          bool in_orbit = false;
          for (const Diagonal& m : orbit.members)
            if (m == d) in_orbit = true;
          if (!in_orbit) rest.push_back(d);
        }
        removals.push_back(std::move(rest));
      }
    }
    for (auto& rest : removals) {
      auto it = index.find(rest);
      if (it == index.end())
        throw std::invalid_argument("face lattice is not closed under removal");
      covers_.push_back({i, it->second});
      covers_up_[i].push_back(it->second);
      covers_down_[it->second].push_back(i);
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto& v : covers_up_) std::sort(v.begin(), v.end());
  for (auto& v : covers_down_) std::sort(v.begin(), v.end());
}

int FaceLattice::rank(std::size_t face_index) const {
  return dim_ - static_cast<int>(
                    generator_count(faces_.at(face_index), symmetric_));
}

std::pair<std::size_t, std::size_t> FaceLattice::rank_range(int r) const {
  if (r < 0 || r > dim_) throw std::invalid_argument("rank out of range");
  return {rank_offset_[static_cast<std::size_t>(r)],
          rank_offset_[static_cast<std::size_t>(r) + 1]};
}

std::ptrdiff_t FaceLattice::index_of(const PartialTriangulation& face) const {
  if (face.n() != n_) return -1;
  if (symmetric_ && !is_centrally_symmetric(face)) return -1;
  int cnt = static_cast<int>(generator_count(face, symmetric_));
  int r = dim_ - cnt;
  if (r < 0 || r > dim_) return -1;
  auto [lo, hi] = rank_range(r);
  auto begin = faces_.begin() + static_cast<std::ptrdiff_t>(lo);
  auto end = faces_.begin() + static_cast<std::ptrdiff_t>(hi);
  auto it = std::lower_bound(begin, end, face.diagonals(),
                             [](const PartialTriangulation& f,
                                const std::vector<Diagonal>& key) {
                               return f.diagonals() < key;
                             });
  if (it == end || it->diagonals() != face.diagonals()) return -1;
  return it - faces_.begin();
}

std::vector<std::size_t> FaceLattice::vertices_below(
    std::size_t face_index) const {
  std::vector<char> seen(faces_.size(), 0);
  std::vector<std::size_t> stack{face_index};
  std::vector<std::size_t> verts;
  seen.at(face_index) = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (rank(i) == 0) {
      verts.push_back(i);
      continue;
    }
    for (std::size_t j : covers_down_[i])
      if (!seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::string FaceLattice::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << n_ << ",\"symmetric\":" << (symmetric_ ? "true" : "false")
      << ",\"dim\":" << dim_ << ",\"faces\":[";
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (i) out << ',';
    out << "{\"diagonals\":" << diagonal_list_json(faces_[i])
        << ",\"rank\":" << rank(i) << '}';
  }
  out << "],\"covers\":[";
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    if (k) out << ',';
    out << '[' << covers_[k].first << ',' << covers_[k].second << ']';
  }
  out << "]}";
  return out.str();
}

FaceLattice build_face_lattice(int n, bool symmetric) {
  std::vector<PartialTriangulation> faces =
      symmetric ? enumerate_symmetric_partial_triangulations(n)
                : enumerate_partial_triangulations(n);
  return FaceLattice(n, symmetric, std::move(faces));
}

FVector f_vector(int n, bool symmetric) {
  std::vector<PartialTriangulation> faces =
      symmetric ? enumerate_symmetric_partial_triangulations(n)
                : enumerate_partial_triangulations(n);
  FVector fv;
  fv.n = n;
  fv.symmetric = symmetric;
  fv.dim = symmetric ? n / 2 - 1 : n - 3;
  fv.counts.assign(static_cast<std::size_t>(fv.dim), 0);
  fv.top_cells = 0;
  for (const PartialTriangulation& f : faces) {
    int r = fv.dim - static_cast<int>(generator_count(f, symmetric));
    if (r == fv.dim)
      ++fv.top_cells;
    else
      ++fv.counts.at(static_cast<std::size_t>(r));
  }
  return fv;
}

FVector f_vector(const FaceLattice& lattice) {
  FVector fv;
  fv.n = lattice.n();
  fv.symmetric = lattice.symmetric();
  fv.dim = lattice.dim();
  fv.counts.assign(static_cast<std::size_t>(fv.dim), 0);
  auto [lo, hi] = lattice.rank_range(fv.dim);
  fv.top_cells = hi - lo;
  for (int r = 0; r < fv.dim; ++r) {
    auto [a, b] = lattice.rank_range(r);
    fv.counts[static_cast<std::size_t>(r)] = b - a;
  }
  return fv;
}

std::string FVector::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << n << ",\"symmetric\":" << (symmetric ? "true" : "false")
      << ",\"dim\":" << dim << ",\"counts\":[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i];
  }
  out << "],\"top_cells\":" << top_cells << '}';
  return out.str();
}

std::string to_string(TwoFaceKind kind) {
  switch (kind) {
    case TwoFaceKind::Square: return "square";
    case TwoFaceKind::Pentagon: return "pentagon";
    case TwoFaceKind::Hexagon: return "hexagon";
  }
  throw std::invalid_argument("unknown 2-face kind");
}

TwoFaceKind classify_two_face(const FaceLattice& lattice,
                              const PartialTriangulation& face) {
  std::ptrdiff_t idx = lattice.index_of(face);
  if (idx < 0) throw std::invalid_argument("face not in the lattice");
  if (lattice.rank(static_cast<std::size_t>(idx)) != 2)
    throw std::invalid_argument("face is not rank 2");
  std::size_t verts =
      lattice.vertices_below(static_cast<std::size_t>(idx)).size();
  switch (verts) {
    case 4: return TwoFaceKind::Square;
    case 5: return TwoFaceKind::Pentagon;
    case 6: return TwoFaceKind::Hexagon;
    default:
      throw std::invalid_argument("rank-2 face with impossible vertex count");
  }
}

TwoFaceKind classify_two_face_local(int n, bool symmetric,
                                    const PartialTriangulation& face) {
  if (face.n() != n) throw std::invalid_argument("face of the wrong polygon");
  int dim;
  std::size_t generators;
  if (symmetric) {
    if (!is_centrally_symmetric(face))
      throw std::invalid_argument("face is not centrally symmetric");
    dim = n / 2 - 1;
    generators = orbits_of(face).size();
  } else {
    dim = n - 3;
    generators = face.diagonals().size();
  }
  if (dim - static_cast<int>(generators) != 2)
    throw std::invalid_argument("face is not rank 2");

  bool has_pentagon = false;
  for (const std::vector<int>& region : regions_of(face)) {
    if (region.size() == 5) has_pentagon = true;
    if (region.size() == 6 && symmetric) {
      std::set<int> verts(region.begin(), region.end());
      bool invariant = true;
      for (int v : verts)
        if (!verts.count((v + n / 2) % n)) invariant = false;
      if (invariant) return TwoFaceKind::Hexagon;
    }
  }
  return has_pentagon ? TwoFaceKind::Pentagon : TwoFaceKind::Square;
}

FlipGraph flip_graph(int n, bool symmetric) {
  FlipGraph g;
  g.n = n;
  g.symmetric = symmetric;
  g.vertices = symmetric ? enumerate_symmetric_triangulations(n)
                         : enumerate_triangulations(n);
  std::map<std::vector<Diagonal>, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index[g.vertices[i].diagonals()] = i;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const PartialTriangulation& t = g.vertices[i];
    if (!symmetric) {
      for (const Diagonal& d : t.diagonals()) {
        std::size_t j = index.at(flip(t, d).diagonals());
        edges.insert({std::min(i, j), std::max(i, j)});
      }
    } else {
      for (const SymmetricOrbit& orbit : orbits_of(t)) {
        std::size_t j = index.at(symmetric_flip(t, orbit).diagonals());
        edges.insert({std::min(i, j), std::max(i, j)});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::string FlipGraph::to_dot() const {
  std::ostringstream out;
  out << "graph flipgraph {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << "  v" << i << " [label=\"";
    const auto& ds = vertices[i].diagonals();
    for (std::size_t k = 0; k < ds.size(); ++k) {
      if (k) out << ',';
      out << '{' << ds[k].a << ',' << ds[k].b << '}';
    }
    out << "\"];\n";
  }
  for (const auto& [i, j] : edges)
    out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string FlipGraph::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << n << ",\"symmetric\":" << (symmetric ? "true" : "false")
      << ",\"vertices\":[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out << ',';
    out << diagonal_list_json(vertices[i]);
  }
  out << "],\"edges\":[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) out << ',';
    out << '[' << edges[k].first << ',' << edges[k].second << ']';
  }
  out << "]}";
  return out.str();
}

PartialTriangulation embed_into_double(const PartialTriangulation& face) {
  int n = face.n();
  std::vector<Diagonal> ds;
  ds.reserve(face.diagonals().size() + static_cast<std::size_t>(n));
  for (const Diagonal& d : face.diagonals())
    ds.push_back(Diagonal{2 * d.a, 2 * d.b});
  for (int j = 0; j < n; ++j)
    ds.push_back(make_diagonal(2 * j, (2 * j + 2) % (2 * n), 2 * n));
  return PartialTriangulation(2 * n, std::move(ds));
}

}  // namespace hedra
