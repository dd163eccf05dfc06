#pragma once

// Normal-form arithmetic in the divided-power Weyl algebra over Q or F_p, its
// action on k[x_1..x_n] (optionally reduced modulo a face ideal), and the two
// membership criteria for D(R_K) plus an action-based oracle.
//
// Elements are finite sums c·x^a ∂^(b) with every x to the left of every ∂.
// Terms are keyed by (b, a) so iteration order is the lexicographic (b, a) order.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stardiff/error.hpp"
#include "stardiff/face_ring.hpp"
#include "stardiff/field.hpp"
#include "stardiff/simplicial.hpp"

namespace stardiff {

inline std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// e >= f componentwise.
inline bool dominates(const Exponents& e, const Exponents& f) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < f[i]) return false;
  }
  return true;
}

struct WeylTerm {
  Rational coeff;
  Exponents a;  // x-part
  Exponents b;  // divided-power ∂-part
};

class WeylElement {
 public:
  using Key = std::pair<Exponents, Exponents>;  // (b, a)

  WeylElement(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  static WeylElement monomial(FieldSpec field, Exponents a, Exponents b, const Rational& coeff = 1) {
    WeylElement u(field, a.size());
    u.add_term(coeff, std::move(a), std::move(b));
    return u;
  }
  static WeylElement one(FieldSpec field, std::size_t n) { return monomial(field, Exponents(n, 0), Exponents(n, 0)); }
  /// x_i^power.
  static WeylElement x(FieldSpec field, std::size_t n, std::size_t i, std::uint32_t power = 1) {
    Exponents a(n, 0);
    a.at(i) = power;
    return monomial(field, std::move(a), Exponents(n, 0));
  }
  /// ∂_i^(power).
  static WeylElement d(FieldSpec field, std::size_t n, std::size_t i, std::uint32_t power = 1) {
    Exponents b(n, 0);
    b.at(i) = power;
    return monomial(field, Exponents(n, 0), std::move(b));
  }

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// max |b| over the terms; 0 for the zero element.
  std::uint64_t order() const {
    std::uint64_t ord = 0;
    for (const auto& [key, c] : terms_) ord = std::max(ord, total_degree(key.first));
    return ord;
  }

  std::vector<WeylTerm> terms() const {
    std::vector<WeylTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.push_back({c, key.second, key.first});
    return out;
  }

  /// Coefficient of x^a ∂^(b), zero when absent.
  Rational coefficient(const Exponents& a, const Exponents& b) const {
    auto it = terms_.find({b, a});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Rational& coeff, Exponents a, Exponents b) {
    if (a.size() != n_ || b.size() != n_) throw Error(ErrorKind::AmbientMismatch, "term has wrong number of variables");
    const Rational c = field_.reduce(coeff);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({std::move(b), std::move(a)}, c);
    if (!inserted) {
      it->second = field_.reduce(it->second + c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  WeylElement& operator+=(const WeylElement& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(c, key.second, key.first);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(-c, key.second, key.first);
    return *this;
  }
  friend WeylElement operator+(WeylElement u, const WeylElement& v) { return u += v; }
  friend WeylElement operator-(WeylElement u, const WeylElement& v) { return u -= v; }
  friend WeylElement operator*(const Rational& s, const WeylElement& u) {
    WeylElement out(u.field_, u.n_);
    for (const auto& [key, c] : u.terms_) out.add_term(s * c, key.second, key.first);
    return out;
  }

  void require_compatible(const WeylElement& other) const {
    if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + other.field_.name());
    if (n_ != other.n_) throw Error(ErrorKind::AmbientMismatch, "elements have different numbers of variables");
  }

  bool operator==(const WeylElement& other) const {
    return field_ == other.field_ && n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::map<Key, Rational> terms_;
};

namespace detail {

// Per-variable pieces of x^a1 ∂^(b1) · x^a2 ∂^(b2):
//   ∂^(b1) x^a2 = Σ_j C(a2, j) x^(a2-j) ∂^(b1-j),  ∂^(s) ∂^(b2) = C(s+b2, b2) ∂^(s+b2).
struct VarChoice {
  std::uint32_t x;
  std::uint32_t d;
  BigInt coeff;
};

inline std::vector<VarChoice> var_choices(std::uint32_t a1, std::uint32_t b1, std::uint32_t a2, std::uint32_t b2) {
  std::vector<VarChoice> out;
  for (std::uint32_t j = 0; j <= std::min(b1, a2); ++j) {
    const std::uint32_t s = b1 - j;
    out.push_back({a1 + a2 - j, s + b2, binomial(a2, j) * binomial(s + b2, b2)});
  }
  return out;
}

}  // namespace detail

/// Normal-form product u·v.
inline WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  u.require_compatible(v);
  const std::size_t n = u.num_vars();
  WeylElement out(u.field(), n);
  for (const WeylTerm& s : u.terms()) {
    for (const WeylTerm& t : v.terms()) {
      std::vector<std::vector<detail::VarChoice>> choices(n);
      for (std::size_t i = 0; i < n; ++i) choices[i] = detail::var_choices(s.a[i], s.b[i], t.a[i], t.b[i]);
      std::vector<std::size_t> pick(n, 0);
      Exponents a(n), b(n);
      while (true) {
        BigInt c = 1;
        for (std::size_t i = 0; i < n; ++i) {
          const auto& ch = choices[i][pick[i]];
          a[i] = ch.x;
          b[i] = ch.d;
          c *= ch.coeff;
        }
        out.add_term(s.coeff * t.coeff * Rational(c), a, b);
        std::size_t i = 0;
        while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return out;
}

inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return multiply(u, v); }

/// [u, v] = uv - vu.
inline WeylElement commutator(const WeylElement& u, const WeylElement& v) { return multiply(u, v) - multiply(v, u); }

/// A polynomial in k[x_1..x_n] (or its image in R_K).
class Polynomial {
 public:
  Polynomial(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  static Polynomial monomial(FieldSpec field, Exponents e, const Rational& coeff = 1) {
    Polynomial p(field, e.size());
    p.add_term(coeff, std::move(e));
    return p;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Rational& coeff, Exponents e) {
    if (e.size() != n_) throw Error(ErrorKind::AmbientMismatch, "monomial has wrong number of variables");
    const Rational c = field_.reduce(coeff);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = field_.reduce(it->second + c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(c, e);
    return *this;
  }

  /// Drop monomials whose support is a non-face of K.
  Polynomial reduced(const SimplicialComplex& k) const {
    Polynomial out(field_, n_);
    for (const auto& [e, c] : terms_) {
      if (k.is_face(support(e))) out.terms_.emplace(e, c);
    }
    return out;
  }

  bool operator==(const Polynomial& other) const {
    return field_ == other.field_ && n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::map<Exponents, Rational> terms_;
};

/// Coefficient of the action x^a ∂^(b) • x^c = C(c, b) x^(c-b+a); zero unless c >= b.
inline Rational action_coefficient(const FieldSpec& field, const Exponents& b, const Exponents& c) {
  if (!dominates(c, b)) return 0;
  Rational coeff = 1;
  for (std::size_t i = 0; i < c.size() && coeff != 0; ++i) coeff = field.reduce(coeff * binomial_in(field, c[i], b[i]));
  return coeff;
}

/// op • poly. With a complex supplied both the input and the result are read in R_K.
inline Polynomial apply(const WeylElement& op, const Polynomial& poly, const SimplicialComplex* k = nullptr) {
  if (!(op.field() == poly.field())) throw Error(ErrorKind::FieldMismatch, "operator and polynomial fields differ");
  if (op.num_vars() != poly.num_vars()) throw Error(ErrorKind::AmbientMismatch, "operator and polynomial differ in n");
  if (k != nullptr && k->num_vertices() != op.num_vars()) throw Error(ErrorKind::AmbientMismatch, "complex differs in n");
  const Polynomial input = k != nullptr ? poly.reduced(*k) : poly;
  Polynomial out(op.field(), op.num_vars());
  for (const WeylTerm& t : op.terms()) {
    for (const auto& [c, coeff] : input.terms()) {
      const Rational act = action_coefficient(op.field(), t.b, c);
      if (act == 0) continue;
      Exponents e(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) e[i] = c[i] - t.b[i] + t.a[i];
      out.add_term(t.coeff * coeff * act, std::move(e));
    }
  }
  return k != nullptr ? out.reduced(*k) : out;
}

inline void require_length(const SimplicialComplex& k, const Exponents& e) {
  if (e.size() != k.num_vertices()) throw Error(ErrorKind::AmbientMismatch, "exponent vector length differs from n");
}

/// Membership of x^a ∂^(b) in D(R_K): for every minimal prime P, x^a ∈ P or x^b ∉ P.
/// The answer does not depend on the field.
inline bool in_dR_traves(const SimplicialComplex& k, const Exponents& a, const Exponents& b) {
  require_length(k, a);
  require_length(k, b);
  const Face sa = support(a), sb = support(b);
  for (const auto& prime : minimal_primes(k)) {
    if (!prime.contains(sa) && prime.contains(sb)) return false;
  }
  return true;
}

inline bool in_dR_traves(const SimplicialComplex& k, const Exponents& a, const Exponents& b, const FieldSpec&) {
  return in_dR_traves(k, a, b);
}

/// Star form of the criterion: st(supp a) ⊆ st(supp b). Both supports must be faces.
inline bool in_dR_star(const SimplicialComplex& k, const Exponents& a, const Exponents& b) {
  require_length(k, a);
  require_length(k, b);
  const Face sa = support(a), sb = support(b);
  if (!k.is_face(sa) || !k.is_face(sb)) {
    throw Error(ErrorKind::SupportNotAFace, "supports " + to_string(sa) + ", " + to_string(sb) + " must both be faces");
  }
  return star_leq(k, sa, sb);
}

/// All (a, b) with entries <= max_exp, supp(a) a face, and x^a ∂^(b) ∈ D(R_K),
/// ordered lexicographically by (a, b).
inline std::vector<std::pair<Exponents, Exponents>> dR_basis_up_to(const SimplicialComplex& k, const FieldSpec& field,
                                                                   std::uint32_t max_exp) {
  (void)field;
  const std::size_t n = k.num_vertices();
  double count = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) count *= max_exp + 1.0;
  if (count > 2e7) throw Error(ErrorKind::TooLarge, "basis enumeration too large");
  std::vector<Exponents> vectors;
  Exponents e(n, 0);
  while (true) {
    vectors.push_back(e);
    std::size_t i = n;
    while (i > 0 && ++e[i - 1] > max_exp) e[--i] = 0;
    if (i == 0) break;
  }
  std::vector<std::pair<Exponents, Exponents>> out;
  for (const auto& a : vectors) {
    if (!k.is_face(support(a))) continue;
    for (const auto& b : vectors) {
      if (in_dR_traves(k, a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::uint32_t default_oracle_bound(const Exponents& b) {
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(3, total_degree(b) + 2));
}

struct OracleVerdict {
  bool preserved = true;
  /// A monomial x^c ∈ I_K with x^a ∂^(b) • x^c ∉ I_K.
  std::optional<Exponents> witness;
};

/// Does x^a ∂^(b) map I_K into I_K? Checked on every x^c ∈ I_K with c_i <= bound.
/// Monomials with C(c, b) = 0 in the field (in particular any c ≱ b) map to 0 and
/// are skipped without evaluation.
inline OracleVerdict preserves_face_ideal_oracle(const SimplicialComplex& k, const Exponents& a, const Exponents& b,
                                                 const FieldSpec& field, std::uint32_t bound) {
  require_length(k, a);
  require_length(k, b);
  const std::size_t n = k.num_vertices();
  if (n > kMaxInputVertices) throw Error(ErrorKind::TooLarge, "oracle limited to 20 variables");
  const SquarefreeMonomialIdeal ik = face_ideal(k);
  std::vector<bool> in_ik(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < in_ik.size(); ++m) in_ik[m] = ik.contains(Face::from_bits(m));

  // Admissible values of c_i: those with C(c_i, b_i) nonzero in the field. Only
  // whether c_i > 0 and whether c_i > b_i affect the supports, so the smallest
  // admissible value of each kind stands in for the rest.
  std::vector<std::vector<std::uint32_t>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    int last_kind = -1;
    for (std::uint32_t c = b[i]; c <= bound; ++c) {
      const int kind = (c > 0 ? 1 : 0) + (c > b[i] ? 2 : 0);
      if (kind == last_kind || binomial_in(field, c, b[i]) == 0) continue;
      values[i].push_back(c);
      last_kind = kind;
    }
    if (values[i].empty()) return {};
  }
  const std::uint32_t supp_a = support(a).bits();
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::uint32_t src = 0, dst = supp_a;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t c = values[i][pick[i]];
      if (c > 0) src |= std::uint32_t{1} << i;
      if (c > b[i]) dst |= std::uint32_t{1} << i;
    }
    if (in_ik[src] && !in_ik[dst]) {
      Exponents c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = values[i][pick[i]];
      return {false, std::move(c)};
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == values[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return {};
}

inline OracleVerdict preserves_face_ideal_oracle(const SimplicialComplex& k, const Exponents& a, const Exponents& b,
                                                 const FieldSpec& field) {
  return preserves_face_ideal_oracle(k, a, b, field, default_oracle_bound(b));
}

// ---------------------------------------------------------------------------
// Text form: `c x[i]^e ... d[j]^(e) ...` terms joined by ` + ` / ` - `,
// 1-based indices. The printer emits every coefficient; the parser also accepts
// a missing coefficient, `*` between factors and bare exponents.

inline std::string coefficient_string(const Rational& c) {
  std::string s = boost::multiprecision::numerator(c).str();
  if (boost::multiprecision::denominator(c) != 1) s += "/" + boost::multiprecision::denominator(c).str();
  return s;
}

inline std::string to_string(const WeylElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const WeylTerm& t : u.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    out += coefficient_string(c);
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i] == 0) continue;
      out += " x[" + std::to_string(i + 1) + "]";
      if (t.a[i] > 1) out += "^" + std::to_string(t.a[i]);
    }
    for (std::size_t i = 0; i < t.b.size(); ++i) {
      if (t.b[i] == 0) continue;
      out += " d[" + std::to_string(i + 1) + "]";
      if (t.b[i] > 1) out += "^(" + std::to_string(t.b[i]) + ")";
    }
  }
  return out;
}

namespace detail {

class WeylParser {
 public:
  WeylParser(const std::string& text, FieldSpec field, std::size_t n) : s_(text), field_(field), n_(n) {}

  WeylElement parse() {
    WeylElement out(field_, n_);
    skip_ws();
    if (s_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) fail("empty expression");
        break;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(out, negative);
      first = false;
    }
    return out;
  }

 private:
  void parse_term(WeylElement& out, bool negative) {
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num(read_digits());
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        den = BigInt(read_digits());
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      has_coeff = true;
    }
    Exponents a(n_, 0), b(n_, 0);
    bool has_factor = false;
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      const char c = peek();
      if (c != 'x' && c != 'd') break;
      ++pos_;
      expect('[');
      const std::size_t idx = std::stoul(read_digits());
      expect(']');
      if (idx == 0 || idx > n_) throw Error(ErrorKind::BadIndex, "variable index " + std::to_string(idx) + " out of range");
      std::uint32_t power = 1;
      if (peek() == '^') {
        ++pos_;
        const bool paren = peek() == '(';
        if (paren) ++pos_;
        power = static_cast<std::uint32_t>(std::stoul(read_digits()));
        if (paren) expect(')');
      }
      (c == 'x' ? a : b)[idx - 1] += power;
      has_factor = true;
    }
    if (!has_coeff && !has_factor) fail("expected a term");
    out.add_term(negative ? -coeff : coeff, std::move(a), std::move(b));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  std::string s_;
  std::size_t pos_ = 0;
  FieldSpec field_;
  std::size_t n_;
};

}  // namespace detail

inline WeylElement parse_weyl(const std::string& text, FieldSpec field, std::size_t n) {
  return detail::WeylParser(text, field, n).parse();
}

}  // namespace stardiff
