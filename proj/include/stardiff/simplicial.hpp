#pragma once

// Finite abstract simplicial complexes stored by their facets, together with
// closed stars, open complements, the poset of distinct closed stars and the
// order complex of that poset.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stardiff/error.hpp"

namespace stardiff {

using Vertex = std::uint32_t;

/// Hard capacity of the bit-set face representation.
inline constexpr std::size_t kMaxVertices = 32;
/// Largest complex accepted from user input.
inline constexpr std::size_t kMaxInputVertices = 20;

/// A finite set of vertices, stored as a bit mask over [0, 32).
class Face {
 public:
  constexpr Face() = default;

  static constexpr Face from_bits(std::uint32_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }

  static Face of(std::initializer_list<Vertex> vertices) {
    return of(std::vector<Vertex>(vertices));
  }

  static Face of(const std::vector<Vertex>& vertices) {
    Face f;
    for (Vertex v : vertices) {
      if (v >= kMaxVertices) throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v) + " exceeds capacity");
      f.bits_ |= std::uint32_t{1} << v;
    }
    return f;
  }

  static constexpr Face vertex(Vertex v) { return from_bits(std::uint32_t{1} << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// dim(∅) = -1.
  constexpr int dim() const { return static_cast<int>(size()) - 1; }
  constexpr bool contains(Vertex v) const { return v < kMaxVertices && ((bits_ >> v) & 1u) != 0; }
  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  /// One past the largest vertex, 0 for the empty face.
  constexpr std::size_t span() const { return bits_ == 0 ? 0 : 32 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Vertex>(std::countr_zero(b)));
    return out;
  }

  constexpr Face operator|(Face o) const { return from_bits(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return from_bits(bits_ & o.bits_); }
  constexpr Face minus(Face o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr Face shifted(std::size_t offset) const { return from_bits(bits_ << offset); }

  constexpr bool operator==(const Face&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical face order: by size, then lexicographically by sorted vertex list.
inline bool face_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // The lowest differing vertex decides; whichever face owns it is smaller.
  const std::uint32_t diff = a.bits() ^ b.bits();
  const std::uint32_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

struct FaceLess {
  bool operator()(Face a, Face b) const { return face_less(a, b); }
};

inline std::string to_string(Face f, bool one_based = true) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : f.vertices()) {
    if (!first) out += ",";
    out += std::to_string(one_based ? v + 1 : v);
    first = false;
  }
  return out + "}";
}

/// A finite simplicial complex on vertices [0, n), represented by its facets.
/// Complexes built from user input have no ghost vertices; subcomplexes such as
/// closed stars keep the ambient vertex count and may omit vertices.
class SimplicialComplex {
 public:
  /// Validated construction from user input.
  static SimplicialComplex build(std::size_t n_vertices, std::vector<Face> facets) {
    if (n_vertices > kMaxInputVertices) {
      throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxInputVertices) + " vertices supported");
    }
    SimplicialComplex k = subcomplex(n_vertices, std::move(facets));
    Face covered;
    for (Face f : k.facets_) covered = covered | f;
    for (Vertex v = 0; v < n_vertices; ++v) {
      if (!covered.contains(v)) throw Error(ErrorKind::GhostVertex, "vertex " + std::to_string(v + 1) + " lies in no facet");
    }
    return k;
  }

  /// Construction without the ghost-vertex check; used for subcomplexes.
  static SimplicialComplex subcomplex(std::size_t n_vertices, std::vector<Face> facets) {
    if (n_vertices > kMaxVertices) throw Error(ErrorKind::TooLarge, "vertex count exceeds capacity");
    if (facets.empty()) throw Error(ErrorKind::EmptyComplex, "a complex needs at least one facet");
    for (Face f : facets) {
      if (f.span() > n_vertices) throw Error(ErrorKind::BadIndex, "facet " + to_string(f) + " has out-of-range vertex");
    }
    std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
      // Larger faces first so that containment only needs to look backwards.
      if (a.size() != b.size()) return a.size() > b.size();
      return face_less(a, b);
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Face> maximal;
    for (Face f : facets) {
      bool dominated = std::any_of(maximal.begin(), maximal.end(), [f](Face g) { return f.subset_of(g); });
      if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), FaceLess{});
    SimplicialComplex k;
    k.n_ = n_vertices;
    k.facets_ = std::move(maximal);
    return k;
  }

  std::size_t num_vertices() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  void check_in_range(Face f) const {
    if (f.span() > n_) throw Error(ErrorKind::BadIndex, "face " + to_string(f) + " has out-of-range vertex");
  }

  bool is_face(Face f) const {
    check_in_range(f);
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
  }

  void require_face(Face f) const {
    if (!is_face(f)) throw Error(ErrorKind::NotAFace, to_string(f) + " is not a face");
  }

  int dim() const {
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.dim());
    return d;
  }

  /// All faces, including ∅, in canonical order.
  std::vector<Face> faces() const {
    std::vector<std::uint32_t> masks;
    for (Face f : facets_) {
      const std::uint32_t full = f.bits();
      // Enumerate all submasks of the facet.
      for (std::uint32_t s = full;; s = (s - 1) & full) {
        masks.push_back(s);
        if (s == 0) break;
      }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Face> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(Face::from_bits(m));
    std::sort(out.begin(), out.end(), FaceLess{});
    return out;
  }

  /// Indices (into facets()) of the facets containing f.
  std::vector<std::size_t> facets_containing(Face f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (f.subset_of(facets_[i])) out.push_back(i);
    }
    return out;
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    return n_ == other.n_ &&
           std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return other.is_face(f); });
  }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex() = default;

  std::size_t n_ = 0;
  std::vector<Face> facets_;
};

/// st(σ, K) = {τ : τ ∪ σ ∈ K}; its facets are the facets of K containing σ.
inline SimplicialComplex closed_star(const SimplicialComplex& k, Face sigma) {
  k.require_face(sigma);
  std::vector<Face> facets;
  for (std::size_t i : k.facets_containing(sigma)) facets.push_back(k.facets()[i]);
  return SimplicialComplex::subcomplex(k.num_vertices(), std::move(facets));
}

/// U_σ(K) = K \ st(σ, K), in canonical face order.
inline std::vector<Face> open_complement(const SimplicialComplex& k, Face sigma) {
  k.require_face(sigma);
  std::vector<Face> out;
  for (Face tau : k.faces()) {
    if (!k.is_face(tau | sigma)) out.push_back(tau);
  }
  return out;
}

/// st(τ) ⊆ st(σ), decided by inclusion of the facet sets containing each face.
inline bool star_leq(const SimplicialComplex& k, Face tau, Face sigma) {
  k.require_face(tau);
  k.require_face(sigma);
  const auto lower = k.facets_containing(tau);
  const auto upper = k.facets_containing(sigma);
  return std::includes(upper.begin(), upper.end(), lower.begin(), lower.end());
}

/// (f_{-1}, f_0, ..., f_{dim K}).
inline std::vector<std::uint64_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(k.dim() + 2), 0);
  for (Face face : k.faces()) ++f[face.size()];
  return f;
}

/// Simplicial join; the vertices of `b` are renumbered after those of `a`.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t n = a.num_vertices() + b.num_vertices();
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "join exceeds vertex capacity");
  std::vector<Face> facets;
  for (Face f : a.facets()) {
    for (Face g : b.facets()) facets.push_back(f | g.shifted(a.num_vertices()));
  }
  return SimplicialComplex::subcomplex(n, std::move(facets));
}

/// Full simplex on n vertices.
inline SimplicialComplex simplex(std::size_t n) {
  return SimplicialComplex::build(n, {Face::from_bits(n == 32 ? ~0u : (std::uint32_t{1} << n) - 1)});
}

struct StarNode {
  /// Smallest face (canonical order) with this star.
  Face representative;
  /// Indices of the facets of K forming the star.
  std::vector<std::size_t> facet_ids;
  /// Every face of K whose closed star is this node.
  std::vector<Face> faces;
};

/// The distinct closed stars of K ordered by containment. Node 0 is always
/// st(∅) = K; remaining nodes follow the canonical order of their representatives.
class StarPoset {
 public:
  explicit StarPoset(SimplicialComplex k) : complex_(std::move(k)) {
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (Face f : complex_.faces()) {  // canonical order, so ∅ comes first
      auto ids = complex_.facets_containing(f);
      auto [it, inserted] = seen.emplace(ids, nodes_.size());
      const std::size_t node = it->second;
      if (inserted) nodes_.push_back(StarNode{f, std::move(ids), {}});
      nodes_[node].faces.push_back(f);
      index_.emplace(f.bits(), node);
    }
    const std::size_t m = nodes_.size();
    leq_.assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto& lo = nodes_[i].facet_ids;
        const auto& hi = nodes_[j].facet_ids;
        leq_[i * m + j] = std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
      }
    }
  }

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<StarNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  /// Node index of st(∅) = K.
  static constexpr std::size_t whole() { return 0; }

  std::size_t node_of(Face f) const {
    auto it = index_.find(f.bits());
    if (it == index_.end()) {
      complex_.check_in_range(f);
      throw Error(ErrorKind::NotAFace, to_string(f) + " is not a face");
    }
    return it->second;
  }

  /// st(node i) ⊆ st(node j).
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * nodes_.size() + j]; }

  SimplicialComplex star(std::size_t i) const {
    std::vector<Face> facets;
    for (std::size_t id : nodes_[i].facet_ids) facets.push_back(complex_.facets()[id]);
    return SimplicialComplex::subcomplex(complex_.num_vertices(), std::move(facets));
  }

  /// Indices of nodes other than st(∅).
  std::vector<std::size_t> proper_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < nodes_.size(); ++i) out.push_back(i);
    return out;
  }

  /// Covering pairs (lower, upper) of the full poset.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t m = nodes_.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !leq(i, j)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < m && covered; ++k) {
          if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
        }
        if (covered) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  SimplicialComplex complex_;
  std::vector<StarNode> nodes_;
  std::vector<bool> leq_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

inline std::shared_ptr<const StarPoset> star_poset(const SimplicialComplex& k) {
  return std::make_shared<const StarPoset>(k);
}

/// Order complex of the proper part of the star poset. Vertex i is proper node
/// i + 1 of `poset`; facets are the maximal chains. With no proper nodes the
/// result is the complex {∅} on zero vertices.
inline SimplicialComplex nerve_complex(const StarPoset& poset) {
  const std::size_t m = poset.size() - 1;
  if (m == 0) return SimplicialComplex::subcomplex(0, {Face{}});
  if (m > kMaxVertices) throw Error(ErrorKind::TooLarge, "too many proper stars for the nerve complex");
  std::vector<std::vector<std::size_t>> up(m);
  std::vector<bool> has_lower(m, false);
  for (auto [lo, hi] : poset.covers()) {
    if (lo == StarPoset::whole() || hi == StarPoset::whole()) continue;
    up[lo - 1].push_back(hi - 1);
    has_lower[hi - 1] = true;
  }
  std::vector<Face> chains;
  std::vector<std::pair<std::size_t, Face>> stack;
  for (std::size_t v = 0; v < m; ++v) {
    if (!has_lower[v]) stack.emplace_back(v, Face::vertex(static_cast<Vertex>(v)));
  }
  while (!stack.empty()) {
    auto [v, chain] = stack.back();
    stack.pop_back();
    if (up[v].empty()) {
      chains.push_back(chain);
      continue;
    }
    for (std::size_t w : up[v]) stack.emplace_back(w, chain | Face::vertex(static_cast<Vertex>(w)));
  }
  return SimplicialComplex::subcomplex(m, std::move(chains));
}

inline SimplicialComplex nerve_complex(const SimplicialComplex& k) { return nerve_complex(StarPoset(k)); }

}  // namespace stardiff
