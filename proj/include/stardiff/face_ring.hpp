#pragma once

// Squarefree monomial ideals of k[x_1..x_n] and the dictionary between them and
// subcomplexes: face ideals, ideals of closed stars, minimal primes.
//
// Ideals live in the polynomial ring. An ideal of R_K = k[X]/I_K is stored by
// its generators that are faces of K (see reduce_mod); its preimage in k[X] is
// that ideal plus I_K.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "stardiff/error.hpp"
#include "stardiff/simplicial.hpp"

namespace stardiff {

using Exponents = std::vector<std::uint32_t>;

inline Face support(const Exponents& e) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) bits |= std::uint32_t{1} << i;
  }
  return Face::from_bits(bits);
}

/// Exponent vector of x_σ.
inline Exponents indicator(Face f, std::size_t n) {
  Exponents e(n, 0);
  for (Vertex v : f.vertices()) e[v] = 1;
  return e;
}

/// Keep only the inclusion-minimal faces (divisibility-minimal squarefree monomials).
inline std::vector<Face> minimalize(std::vector<Face> gens) {
  std::sort(gens.begin(), gens.end(), FaceLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Face> out;
  for (Face g : gens) {
    if (std::none_of(out.begin(), out.end(), [g](Face h) { return h.subset_of(g); })) out.push_back(g);
  }
  return out;
}

class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal(std::size_t n, std::vector<Face> generators) : n_(n) {
    for (Face g : generators) {
      if (g.span() > n) throw Error(ErrorKind::BadIndex, "generator " + to_string(g) + " out of range");
    }
    gens_ = minimalize(std::move(generators));
  }

  static SquarefreeMonomialIdeal zero(std::size_t n) { return {n, {}}; }
  static SquarefreeMonomialIdeal unit(std::size_t n) { return {n, {Face{}}}; }

  std::size_t num_vars() const { return n_; }
  /// Divisibility antichain in canonical face order.
  const std::vector<Face>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }

  /// x_f ∈ I.
  bool contains(Face f) const {
    return std::any_of(gens_.begin(), gens_.end(), [f](Face g) { return g.subset_of(f); });
  }

  bool operator==(const SquarefreeMonomialIdeal&) const = default;

 private:
  std::size_t n_;
  std::vector<Face> gens_;
};

inline void require_same_ambient(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw Error(ErrorKind::AmbientMismatch, "ideals live in different polynomial rings");
}

/// I_K: generated by the minimal non-faces of K.
inline SquarefreeMonomialIdeal face_ideal(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  std::vector<Face> gens;
  for (Face f : k.faces()) {
    for (Vertex v = 0; v < n; ++v) {
      if (f.contains(v)) continue;
      const Face s = f | Face::vertex(v);
      if (k.is_face(s)) continue;
      const auto verts = s.vertices();
      const bool minimal = std::all_of(verts.begin(), verts.end(),
                                       [&](Vertex u) { return k.is_face(s.minus(Face::vertex(u))); });
      if (minimal) gens.push_back(s);
    }
  }
  return {n, std::move(gens)};
}

/// I_{st(σ)} as an ideal of R_K: generated by x_τ for the minimal τ in U_σ.
inline SquarefreeMonomialIdeal star_face_ideal(const SimplicialComplex& k, Face sigma) {
  return {k.num_vertices(), open_complement(k, sigma)};
}

/// One prime ⟨x_i : i ∉ F⟩ per facet F, in facet order.
inline std::vector<SquarefreeMonomialIdeal> minimal_primes(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  std::vector<SquarefreeMonomialIdeal> out;
  for (Face facet : k.facets()) {
    std::vector<Face> vars;
    for (Vertex v = 0; v < n; ++v) {
      if (!facet.contains(v)) vars.push_back(Face::vertex(v));
    }
    out.emplace_back(n, std::move(vars));
  }
  return out;
}

enum class CombineMode { Sum, Intersection };

inline SquarefreeMonomialIdeal combine(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b,
                                       CombineMode mode) {
  require_same_ambient(a, b);
  std::vector<Face> gens;
  if (mode == CombineMode::Sum) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  } else {
    // lcm of squarefree monomials is the union of supports.
    for (Face f : a.generators()) {
      for (Face g : b.generators()) gens.push_back(f | g);
    }
  }
  return {a.num_vars(), std::move(gens)};
}

/// Fold `combine` over a nonempty list.
inline SquarefreeMonomialIdeal combine_all(const std::vector<SquarefreeMonomialIdeal>& ideals, CombineMode mode) {
  if (ideals.empty()) throw Error(ErrorKind::EmptyComplex, "combine_all needs at least one ideal");
  SquarefreeMonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = combine(acc, ideals[i], mode);
  return acc;
}

/// Some generator divides m.
inline bool monomial_in_ideal(const Exponents& m, const SquarefreeMonomialIdeal& ideal) {
  if (m.size() != ideal.num_vars()) throw Error(ErrorKind::AmbientMismatch, "monomial has wrong number of variables");
  return ideal.contains(support(m));
}

/// Faces σ with x_σ ∉ I, as a subcomplex on the same vertex set.
inline SimplicialComplex dual_complex(const SquarefreeMonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  if (n > kMaxInputVertices) throw Error(ErrorKind::TooLarge, "dual complex enumeration limited to 20 variables");
  std::vector<Face> faces;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (!ideal.contains(Face::from_bits(m))) faces.push_back(Face::from_bits(m));
  }
  if (faces.empty()) throw Error(ErrorKind::EmptyComplex, "the unit ideal has the void complex as its dual");
  return SimplicialComplex::subcomplex(n, std::move(faces));
}

/// The R_K-level form of I: drop generators lying in I_K (the non-faces).
inline SquarefreeMonomialIdeal reduce_mod(const SquarefreeMonomialIdeal& ideal, const SimplicialComplex& k) {
  if (ideal.num_vars() != k.num_vertices()) throw Error(ErrorKind::AmbientMismatch, "ideal and complex disagree on n");
  std::vector<Face> gens;
  for (Face g : ideal.generators()) {
    if (k.is_face(g)) gens.push_back(g);
  }
  return {ideal.num_vars(), std::move(gens)};
}

}  // namespace stardiff
