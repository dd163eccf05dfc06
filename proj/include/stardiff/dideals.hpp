#pragma once

// Two-sided ideals of D(R_K). A proper ideal is a down-closed set of proper
// closed stars; ⟨x_σ⟩ is the down-set below st(σ), and ⟨x_σ⟩ is the unit ideal
// exactly when st(σ) = K. Sums and intersections are unions and intersections
// of down-sets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stardiff/error.hpp"
#include "stardiff/face_ring.hpp"
#include "stardiff/simplicial.hpp"
#include "stardiff/weyl.hpp"

namespace stardiff {

class TwoSidedIdeal {
 public:
  const std::shared_ptr<const StarPoset>& poset() const { return poset_; }
  bool is_unit() const { return unit_; }
  bool is_zero() const { return !unit_ && down_.none(); }

  /// Bit i set iff star node i lies in the down-set. Bit 0 (st(∅) = K) is never set.
  const boost::dynamic_bitset<>& down_set() const { return down_; }

  bool contains_node(std::size_t node) const { return unit_ || down_.test(node); }
  /// x_σ ∈ I.
  bool contains_face(Face sigma) const { return contains_node(poset_->node_of(sigma)); }

  /// Maximal nodes of the down-set, ascending.
  std::vector<std::size_t> maximal_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = down_.find_first(); i != boost::dynamic_bitset<>::npos; i = down_.find_next(i)) {
      bool maximal = true;
      for (std::size_t j = down_.find_first(); j != boost::dynamic_bitset<>::npos && maximal; j = down_.find_next(j)) {
        if (j != i && poset_->leq(i, j)) maximal = false;
      }
      if (maximal) out.push_back(i);
    }
    return out;
  }

  /// Canonical generators x_σ, one representative face per maximal node. The
  /// unit ideal is generated by x_∅ = 1.
  std::vector<Face> generators() const {
    if (unit_) return {Face{}};
    std::vector<Face> out;
    for (std::size_t node : maximal_nodes()) out.push_back(poset_->nodes()[node].representative);
    std::sort(out.begin(), out.end(), FaceLess{});
    return out;
  }

  bool operator==(const TwoSidedIdeal& other) const {
    return same_ambient(other) && unit_ == other.unit_ && down_ == other.down_;
  }

  bool same_ambient(const TwoSidedIdeal& other) const {
    return poset_ == other.poset_ || poset_->complex() == other.poset_->complex();
  }

 private:
  friend class IdealLattice;
  friend TwoSidedIdeal combine(const TwoSidedIdeal&, const TwoSidedIdeal&, CombineMode);
  TwoSidedIdeal(std::shared_ptr<const StarPoset> poset, bool unit, boost::dynamic_bitset<> down)
      : poset_(std::move(poset)), unit_(unit), down_(std::move(down)) {}

  std::shared_ptr<const StarPoset> poset_;
  bool unit_ = false;
  boost::dynamic_bitset<> down_;
};

inline void require_same_ambient(const TwoSidedIdeal& a, const TwoSidedIdeal& b) {
  if (!a.same_ambient(b)) throw Error(ErrorKind::AmbientMismatch, "ideals belong to different complexes");
}

/// I ⊆ J.
inline bool is_subideal(const TwoSidedIdeal& i, const TwoSidedIdeal& j) {
  require_same_ambient(i, j);
  if (j.is_unit()) return true;
  if (i.is_unit()) return false;
  return i.down_set().is_subset_of(j.down_set());
}

struct DStableIdeals {
  /// Closure of {I_st(σ)} under sum and intersection, as ideals of R_K.
  std::vector<SquarefreeMonomialIdeal> ideals;
  /// Whether the same set arises as intersections of sums of minimal primes.
  bool agrees_with_minimal_primes = false;
};

/// Sort key for R_K-ideals: generator count, then generators in face order.
inline bool ideal_less(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
  const auto& x = a.generators();
  const auto& y = b.generators();
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), face_less);
}

/// The ideal lattice of D(R_K) for one complex.
class IdealLattice {
 public:
  static constexpr std::size_t kDefaultCap = 20;

  explicit IdealLattice(const SimplicialComplex& k, std::size_t cap = kDefaultCap)
      : poset_(star_poset(k)), cap_(cap) {}

  const SimplicialComplex& complex() const { return poset_->complex(); }
  const StarPoset& poset() const { return *poset_; }
  const std::shared_ptr<const StarPoset>& poset_ptr() const { return poset_; }
  std::size_t num_proper() const { return poset_->size() - 1; }

  TwoSidedIdeal zero() const { return {poset_, false, boost::dynamic_bitset<>(poset_->size())}; }
  TwoSidedIdeal unit() const { return {poset_, true, boost::dynamic_bitset<>(poset_->size())}; }

  /// Down-closure of a set of nodes; unit if st(∅) is among them.
  TwoSidedIdeal from_nodes(const std::vector<std::size_t>& nodes) const {
    boost::dynamic_bitset<> down(poset_->size());
    for (std::size_t top : nodes) {
      if (top == StarPoset::whole()) return unit();
      for (std::size_t i = 1; i < poset_->size(); ++i) {
        if (poset_->leq(i, top)) down.set(i);
      }
    }
    return {poset_, false, std::move(down)};
  }

  /// ⟨x_σ⟩.
  TwoSidedIdeal principal(Face sigma) const { return from_nodes({poset_->node_of(sigma)}); }

  /// Ideal generated by a sum of monomial operators: each term c·x^a ∂^(b) of D(R)
  /// contributes ⟨x_supp(a)⟩; terms with x^a ∈ I_K vanish in D(R).
  TwoSidedIdeal of_element(const WeylElement& elt) const {
    const auto& k = complex();
    if (elt.num_vars() != k.num_vertices()) throw Error(ErrorKind::AmbientMismatch, "element and complex differ in n");
    std::vector<std::size_t> tops;
    for (const WeylTerm& t : elt.terms()) {
      if (!in_dR_traves(k, t.a, t.b)) throw Error(ErrorKind::NotInDR, "a term of the element is not in D(R)");
      const Face s = support(t.a);
      if (k.is_face(s)) tops.push_back(poset_->node_of(s));
    }
    if (tops.empty()) throw Error(ErrorKind::ZeroElement, "element vanishes in D(R)");
    return from_nodes(tops);
  }

  /// The extension to D(R) of an ideal J of R_K. Generators that are non-faces lie in I_K and drop out.
  TwoSidedIdeal extension(const SquarefreeMonomialIdeal& j) const {
    if (j.num_vars() != complex().num_vertices()) throw Error(ErrorKind::AmbientMismatch, "ideal and complex differ in n");
    std::vector<std::size_t> tops;
    for (Face g : j.generators()) {
      if (complex().is_face(g)) tops.push_back(poset_->node_of(g));
    }
    return from_nodes(tops);
  }

  /// Kernel of D(R) → D(R)[1/x_σ]: the extension of I_st(σ).
  TwoSidedIdeal localization_kernel(Face sigma) const { return extension(star_face_ideal(complex(), sigma)); }

  /// The R_K-ideal generated by all x_τ with st(τ) in the down-set.
  SquarefreeMonomialIdeal contract(const TwoSidedIdeal& ideal) const {
    const std::size_t n = complex().num_vertices();
    if (ideal.is_unit()) return SquarefreeMonomialIdeal::unit(n);
    std::vector<Face> gens;
    const auto& down = ideal.down_set();
    for (std::size_t i = down.find_first(); i != boost::dynamic_bitset<>::npos; i = down.find_next(i)) {
      const auto& faces = poset_->nodes()[i].faces;
      gens.insert(gens.end(), faces.begin(), faces.end());
    }
    return {n, std::move(gens)};
  }

  /// Every two-sided ideal other than the unit ideal, zero first, ordered by
  /// down-set size and then by the bit pattern over proper nodes.
  std::vector<TwoSidedIdeal> enumerate() const {
    const std::size_t p = num_proper();
    if (p > cap_) throw Error(ErrorKind::TooLarge, std::to_string(p) + " proper stars exceed the cap of " + std::to_string(cap_));
    if (p > 31) throw Error(ErrorKind::TooLarge, "enumeration limited to 31 proper stars");
    std::vector<std::uint32_t> below(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        if (poset_->leq(j + 1, i + 1)) below[i] |= std::uint32_t{1} << j;
      }
    }
    std::vector<std::uint32_t> masks;
    const std::uint64_t limit = std::uint64_t{1} << p;
    for (std::uint64_t m = 0; m < limit; ++m) {
      const auto mask = static_cast<std::uint32_t>(m);
      bool closed = true;
      for (std::uint32_t rest = mask; rest != 0 && closed; rest &= rest - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(rest));
        closed = (below[i] & ~mask) == 0;
      }
      if (closed) masks.push_back(mask);
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<TwoSidedIdeal> out;
    out.reserve(masks.size());
    for (std::uint32_t mask : masks) {
      boost::dynamic_bitset<> down(poset_->size());
      for (std::size_t i = 0; i < p; ++i) {
        if ((mask >> i) & 1u) down.set(i + 1);
      }
      out.push_back(TwoSidedIdeal(poset_, false, std::move(down)));
    }
    return out;
  }

  /// D-stable ideals of R_K: closure of the star ideals I_st(σ) under sum and
  /// intersection, cross-checked against intersections of sums of minimal primes.
  DStableIdeals d_stable_ideals() const {
    if (num_proper() > cap_) throw Error(ErrorKind::TooLarge, "too many proper stars for the D-stable closure");
    const auto& k = complex();
    std::vector<SquarefreeMonomialIdeal> seeds;
    for (const StarNode& node : poset_->nodes()) seeds.push_back(star_face_ideal(k, node.representative));
    DStableIdeals result;
    result.ideals = close_under(k, seeds, true, true);

    std::vector<SquarefreeMonomialIdeal> primes;
    for (const auto& prime : minimal_primes(k)) primes.push_back(reduce_mod(prime, k));
    const auto sums = close_under(k, primes, true, false);
    const auto traves = close_under(k, sums, false, true);
    result.agrees_with_minimal_primes = traves == result.ideals;
    return result;
  }

 private:
  static std::vector<SquarefreeMonomialIdeal> close_under(const SimplicialComplex& k,
                                                          std::vector<SquarefreeMonomialIdeal> ideals, bool sums,
                                                          bool intersections) {
    auto less = [](const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) { return ideal_less(a, b); };
    std::set<SquarefreeMonomialIdeal, decltype(less)> seen(less);
    std::vector<SquarefreeMonomialIdeal> all;
    for (auto& i : ideals) {
      if (seen.insert(i).second) all.push_back(i);
    }
    // New ideals are combined with everything found so far until nothing new appears.
    for (std::size_t next = 0; next < all.size(); ++next) {
      for (std::size_t j = 0; j <= next; ++j) {
        for (int mode = 0; mode < 2; ++mode) {
          if ((mode == 0 && !sums) || (mode == 1 && !intersections)) continue;
          auto c = reduce_mod(combine(all[next], all[j], mode == 0 ? CombineMode::Sum : CombineMode::Intersection), k);
          if (seen.insert(c).second) all.push_back(std::move(c));
        }
      }
    }
    std::sort(all.begin(), all.end(), less);
    return all;
  }

  std::shared_ptr<const StarPoset> poset_;
  std::size_t cap_;
};

/// Sum (union of down-sets) or intersection (meet of down-sets).
inline TwoSidedIdeal combine(const TwoSidedIdeal& a, const TwoSidedIdeal& b, CombineMode mode) {
  require_same_ambient(a, b);
  if (mode == CombineMode::Sum) {
    if (a.is_unit()) return a;
    if (b.is_unit()) return b;
    return TwoSidedIdeal(a.poset(), false, a.down_set() | b.down_set());
  }
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  return TwoSidedIdeal(a.poset(), false, a.down_set() & b.down_set());
}

}  // namespace stardiff
