#pragma once

// Characteristic-p structure of R_K: multiplicities of the star summands of R
// as an R^q-module, the Hilbert–Kunz function, and operators of D(R) written as
// R^q-linear block matrices over the monomial generators x^a (0 <= a_i < q).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stardiff/dideals.hpp"
#include "stardiff/error.hpp"
#include "stardiff/face_ring.hpp"
#include "stardiff/field.hpp"
#include "stardiff/simplicial.hpp"
#include "stardiff/weyl.hpp"

namespace stardiff {

/// Largest number of level-q generators a block matrix may have.
inline constexpr std::uint64_t kMaxGenerators = 5000;

inline void require_prime_power(std::uint64_t q) {
  if (prime_of_power(q) == 0) throw Error(ErrorKind::BadQ, std::to_string(q) + " is not a prime power >= 2");
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

struct FrobeniusDecomposition {
  std::uint64_t q = 0;
  /// m_st(σ)(q) per star node, indexed like StarPoset::nodes().
  std::vector<BigInt> multiplicities;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& m : multiplicities) sum += m;
    return sum;
  }
};

/// m_st(σ)(q) = Σ over faces α with st(α) = st(σ) of (q-1)^(dim α + 1).
inline FrobeniusDecomposition multiplicities(const StarPoset& poset, std::uint64_t q) {
  require_prime_power(q);
  FrobeniusDecomposition d{q, {}};
  for (const StarNode& node : poset.nodes()) {
    BigInt m = 0;
    for (Face alpha : node.faces) m += big_pow(q - 1, alpha.size());
    d.multiplicities.push_back(m);
  }
  return d;
}

inline FrobeniusDecomposition multiplicities(const SimplicialComplex& k, std::uint64_t q) {
  return multiplicities(StarPoset(k), q);
}

class HKPolynomial {
 public:
  explicit HKPolynomial(std::vector<std::uint64_t> f_vector) : f_(std::move(f_vector)) {}

  /// (f_{-1}, ..., f_{dim K}).
  const std::vector<std::uint64_t>& coefficients() const { return f_; }
  /// Krull dimension of R_K, i.e. dim K + 1.
  std::size_t dim() const { return f_.size() - 1; }
  /// HK(q) = Σ_i f_i (q-1)^(i+1).
  BigInt evaluate(std::uint64_t q) const {
    BigInt sum = 0;
    for (std::size_t i = 0; i < f_.size(); ++i) sum += BigInt(f_[i]) * big_pow(q - 1, i);
    return sum;
  }
  /// Leading coefficient in q: the number of top-dimensional faces.
  std::uint64_t e_hk() const { return f_.back(); }

 private:
  std::vector<std::uint64_t> f_;
};

inline HKPolynomial hk_polynomial(const SimplicialComplex& k) { return HKPolynomial(f_vector(k)); }

/// Length of R/m^[q]: the number of monomials x^a with every a_i < q and supp(a) a face.
inline std::uint64_t hk_bruteforce(const SimplicialComplex& k, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::BadQ, "q must be at least 2");
  const std::size_t n = k.num_vertices();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(q);
  if (total > 5e7) throw Error(ErrorKind::TooLarge, "brute-force count too large");
  std::uint64_t count = 0;
  Exponents a(n, 0);
  while (true) {
    if (k.is_face(support(a))) ++count;
    std::size_t i = 0;
    while (i < n && ++a[i] == q) a[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// st(σ ∪ τ) when σ ∪ τ is a face, otherwise nothing (the zero block).
inline std::optional<std::size_t> block_support(const StarPoset& poset, Face sigma, Face tau) {
  const auto& k = poset.complex();
  k.require_face(sigma);
  k.require_face(tau);
  if (!k.is_face(sigma | tau)) return std::nullopt;
  return poset.node_of(sigma | tau);
}

/// J(st σ, st τ): ⟨x_{σ∪τ}⟩ when σ ∪ τ is a face, else zero.
inline TwoSidedIdeal j_ideal(const IdealLattice& lattice, Face sigma, Face tau) {
  const auto node = block_support(lattice.poset(), sigma, tau);
  return node ? lattice.from_nodes({*node}) : lattice.zero();
}

/// Level-q monomial generators of R as an R^q-module: x^a with a_i < q and
/// supp(a) a face, ordered by total degree and then with x_1 before x_2.
inline std::vector<Exponents> frobenius_generators(const SimplicialComplex& k, std::uint64_t q) {
  const std::size_t n = k.num_vertices();
  std::vector<Exponents> out;
  for (Face f : k.faces()) {
    const auto verts = f.vertices();
    Exponents e(n, 0);
    for (Vertex v : verts) e[v] = 1;
    while (true) {
      out.push_back(e);
      if (out.size() > kMaxGenerators) throw Error(ErrorKind::TooLarge, "more than 5000 generators at this q");
      std::size_t i = 0;
      while (i < verts.size() && ++e[verts[i]] == q) e[verts[i++]] = 1;
      if (i == verts.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Exponents& x, const Exponents& y) {
    const auto dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx < dy;
    return x > y;
  });
  return out;
}

/// An R^q-linear endomorphism of R_K: generator x^a (row) ↦ Σ entry · x^b over
/// generators x^b (columns). Entries are polynomials whose exponents are
/// multiples of q.
class BlockMatrix {
 public:
  BlockMatrix(const SimplicialComplex& k, FieldSpec field, std::uint64_t q)
      : complex_(k), field_(field), q_(q), generators_(frobenius_generators(k, q)), rows_(generators_.size()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) index_.emplace(generators_[i], i);
  }

  const SimplicialComplex& complex() const { return complex_; }
  const FieldSpec& field() const { return field_; }
  std::uint64_t q() const { return q_; }
  const std::vector<Exponents>& generators() const { return generators_; }
  /// Nonzero entries of one row, keyed by column.
  const std::map<std::size_t, Polynomial>& row(std::size_t r) const { return rows_[r]; }

  std::optional<std::size_t> generator_index(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Split an image polynomial into block entries of row r.
  void set_row_from_image(std::size_t r, const Polynomial& image) {
    auto& row = rows_[r];
    row.clear();
    for (const auto& [e, c] : image.terms()) {
      Exponents rem(e.size()), quot(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        rem[i] = static_cast<std::uint32_t>(e[i] % q_);
        quot[i] = static_cast<std::uint32_t>(e[i] - rem[i]);
      }
      const auto col = generator_index(rem);
      if (!col) throw Error(ErrorKind::NotAFace, "image monomial not supported on a face");
      auto [it, inserted] = row.try_emplace(*col, field_, e.size());
      it->second.add_term(c, std::move(quot));
      if (it->second.is_zero()) row.erase(it);
    }
  }

  /// The matrix applied to a polynomial of R_K (R^q-linear extension).
  Polynomial act(const Polynomial& poly) const {
    const std::size_t n = complex_.num_vertices();
    Polynomial out(field_, n);
    const Polynomial input = poly.reduced(complex_);
    for (const auto& [e, c] : input.terms()) {
      Exponents rem(n), quot(n);
      for (std::size_t i = 0; i < n; ++i) {
        rem[i] = static_cast<std::uint32_t>(e[i] % q_);
        quot[i] = e[i] - rem[i];
      }
      const auto r = generator_index(rem);
      if (!r) continue;
      for (const auto& [col, entry] : rows_[*r]) {
        const Exponents& g = generators_[col];
        for (const auto& [f, d] : entry.terms()) {
          Exponents m(n);
          for (std::size_t i = 0; i < n; ++i) m[i] = quot[i] + f[i] + g[i];
          out.add_term(c * d, std::move(m));
        }
      }
    }
    return out.reduced(complex_);
  }

  std::size_t nonzero_blocks() const {
    std::size_t count = 0;
    for (const auto& row : rows_) count += row.size();
    return count;
  }

  bool operator==(const BlockMatrix& other) const {
    return complex_ == other.complex_ && field_ == other.field_ && q_ == other.q_ && generators_ == other.generators_ &&
           rows_ == other.rows_;
  }

 private:
  SimplicialComplex complex_;
  FieldSpec field_;
  std::uint64_t q_;
  std::vector<Exponents> generators_;
  std::map<Exponents, std::size_t> index_;
  std::vector<std::map<std::size_t, Polynomial>> rows_;
};

inline void require_level(const FieldSpec& field, std::uint64_t q) {
  require_prime_power(q);
  if (field.characteristic() != prime_of_power(q)) {
    throw Error(ErrorKind::FieldMismatch, "q = " + std::to_string(q) + " is not a power of the characteristic");
  }
}

/// The block matrix of an operator of D(R_K) of order < q over F_p, q = p^r.
inline BlockMatrix operator_matrix(const SimplicialComplex& k, const WeylElement& elt, std::uint64_t q) {
  require_level(elt.field(), q);
  if (elt.num_vars() != k.num_vertices()) throw Error(ErrorKind::AmbientMismatch, "element and complex differ in n");
  if (elt.order() >= q) throw Error(ErrorKind::QTooSmall, "operator order must be below q");
  for (const WeylTerm& t : elt.terms()) {
    if (!in_dR_traves(k, t.a, t.b)) throw Error(ErrorKind::NotInDR, "a term of the element is not in D(R)");
  }
  BlockMatrix m(k, elt.field(), q);
  for (std::size_t r = 0; r < m.generators().size(); ++r) {
    m.set_row_from_image(r, apply(elt, Polynomial::monomial(elt.field(), m.generators()[r]), &k));
  }
  return m;
}

/// Checks the matrix against the operator on every generator x^a and on every
/// x^(a + q c) with c ∈ {0, 1}^n.
inline bool matrix_reproduces(const BlockMatrix& m, const WeylElement& elt) {
  const auto& k = m.complex();
  const std::size_t n = k.num_vertices();
  const std::uint32_t q = static_cast<std::uint32_t>(m.q());
  for (const Exponents& a : m.generators()) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      Exponents e = a;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) e[i] += q;
      }
      const auto mono = Polynomial::monomial(elt.field(), e);
      if (!(m.act(mono) == apply(elt, mono, &k))) return false;
    }
  }
  return true;
}

/// Re-express a level-q matrix on the level-pq generators, using only the matrix.
inline BlockMatrix reblock(const BlockMatrix& m, std::uint64_t p) {
  if (p != m.field().characteristic()) throw Error(ErrorKind::FieldMismatch, "re-blocking factor must be the characteristic");
  BlockMatrix out(m.complex(), m.field(), m.q() * p);
  for (std::size_t r = 0; r < out.generators().size(); ++r) {
    out.set_row_from_image(r, m.act(Polynomial::monomial(m.field(), out.generators()[r])));
  }
  return out;
}

/// Every nonzero block (x^a → x^b) has σ = supp(a), τ = supp(b) with σ ∪ τ a face,
/// and each image monomial entry·x^b has its star inside the down-set of `ideal`.
inline bool blocks_respect_supports(const BlockMatrix& m, const IdealLattice& lattice, const TwoSidedIdeal& ideal) {
  const auto& gens = m.generators();
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (const auto& [col, entry] : m.row(r)) {
      if (!block_support(lattice.poset(), support(gens[r]), support(gens[col]))) return false;
      for (const auto& [f, c] : entry.terms()) {
        Exponents image = f;
        for (std::size_t i = 0; i < image.size(); ++i) image[i] += gens[col][i];
        if (!ideal.contains_face(support(image))) return false;
      }
    }
  }
  return true;
}

}  // namespace stardiff
