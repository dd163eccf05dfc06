// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "stardiff/stardiff.hpp"

using namespace stardiff;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() == 10) failures.push_back("...");
  }
};

int failed_criteria = 0;

void report(int id, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failures.empty();
  if (!ok) ++failed_criteria;
  std::printf("%s criterion %d: %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), t.checks, secs);
  for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
}

Exponents e_(std::size_t n, std::initializer_list<std::size_t> ones) {
  Exponents e(n, 0);
  for (auto i : ones) e[i] = 1;
  return e;
}

WeylElement mono(const FieldSpec& f, const Exponents& a, const Exponents& b) { return WeylElement::monomial(f, a, b); }

std::string pair_name(const Exponents& a, const Exponents& b) {
  return exponents_to_json(a).dump() + "/" + exponents_to_json(b).dump();
}

void membership_triangle(Tally& t) {
  const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec(2), FieldSpec(3)};
  for (const auto& [name, k] : corpus::full()) {
    const std::size_t n = k.num_vertices();
    const auto vectors = corpus::all_vectors(n, 2);
    const auto ik = face_ideal(k);
    for (const auto& field : fields) {
      for (const auto& a : vectors) {
        for (const auto& b : vectors) {
          const bool traves = in_dR_traves(k, a, b, field);
          const auto oracle = preserves_face_ideal_oracle(k, a, b, field);
          t.expect(traves == oracle.preserved, name + " " + field.name() + " traves/oracle " + pair_name(a, b));
          if (k.is_face(support(a)) && k.is_face(support(b))) {
            t.expect(in_dR_star(k, a, b) == traves, name + " star/traves " + pair_name(a, b));
          }
          if (oracle.witness) {
            // The witness must really be sent outside I_K by the action.
            const auto image = apply(mono(field, a, b), Polynomial::monomial(field, *oracle.witness));
            bool escapes = false;
            for (const auto& [e, c] : image.terms()) escapes = escapes || !monomial_in_ideal(e, ik);
            t.expect(monomial_in_ideal(*oracle.witness, ik) && escapes, name + " witness " + pair_name(a, b));
          }
        }
      }
    }
  }
}

void examples(Tally& t) {
  const auto ka = corpus::k_a(), kb = corpus::k_b(), kc = corpus::k_c();
  const FieldSpec q0;

  // K_A: membership is exactly supp(b) ⊆ supp(a), so the generators are x_i^a ∂_i^(b).
  for (const auto& [a, b] : dR_basis_up_to(ka, q0, 1)) {
    t.expect(support(b).subset_of(support(a)), "K_A basis pair " + pair_name(a, b));
  }
  std::size_t expected = 0;
  for (const auto& a : corpus::all_vectors(3, 1)) {
    for (const auto& b : corpus::all_vectors(3, 1)) {
      if (ka.is_face(support(a)) && support(b).subset_of(support(a))) ++expected;
    }
  }
  t.expect(dR_basis_up_to(ka, q0, 1).size() == expected, "K_A basis count");
  t.expect(!in_dR_traves(ka, e_(3, {0}), e_(3, {1})), "K_A x_1 d_2 excluded");

  // K_B: the only cross-index first-order generators are x_1 d_2 and x_4 d_3.
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j && in_dR_traves(kb, e_(4, {i}), e_(4, {j}))) cross.emplace_back(i, j);
    }
  }
  t.expect(cross == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {3, 2}}, "K_B cross generators");

  // K_C: st(x_1) ⊂ st(x_2) ⊂ st(x_5) ⊃ st(x_3) ⊃ st(x_4), with st(x_5) = K.
  auto v = [](Vertex i) { return Face::vertex(i); };
  auto strict = [&](Face lo, Face hi) { return star_leq(kc, lo, hi) && !star_leq(kc, hi, lo); };
  t.expect(strict(v(0), v(1)), "st(x_1) < st(x_2)");
  t.expect(strict(v(1), v(4)), "st(x_2) < st(x_5)");
  t.expect(strict(v(2), v(4)), "st(x_3) < st(x_5)");
  t.expect(strict(v(3), v(2)), "st(x_4) < st(x_3)");
  t.expect(closed_star(kc, v(4)) == kc, "st(x_5) = K");
  t.expect(in_dR_star(kc, e_(5, {0}), e_(5, {4})), "x_1 d_5 in D(R_C)");

  // K_B localization kernels.
  const IdealLattice lb(kb);
  auto kernel_contract = [&](Face s) { return lb.contract(lb.localization_kernel(s)); };
  const SquarefreeMonomialIdeal x3x4(4, {v(2), v(3)}), x4(4, {v(3)}), x1x4(4, {v(0), v(3)});
  t.expect(star_face_ideal(kb, v(0)) == x3x4 && kernel_contract(v(0)) == x3x4, "kernel at x_1 is <x_3,x_4>");
  t.expect(star_face_ideal(kb, v(1)) == x4 && kernel_contract(v(1)) == x4, "kernel at x_2 is <x_4>");
  const Face x2x3 = Face::of({1, 2});
  t.expect(star_face_ideal(kb, x2x3) == x1x4 && kernel_contract(x2x3) == x1x4, "kernel at x_2x_3 is <x_1,x_4>");
  const SquarefreeMonomialIdeal listed(4, {v(1), v(2)});
  t.expect(!(kernel_contract(x2x3) == listed), "listed (x_2,x_3) is not a kernel");
  std::printf("    note: kernel at x_2x_3 computes to %s; the listed value (x_2,x_3) is not reproduced\n",
              ideal_label(kernel_contract(x2x3)).c_str());
}

void identities(Tally& t) {
  std::mt19937 rng(20240611);
  const FieldSpec q0;
  const std::size_t n = 3;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = corpus::random_vector(rng, n, 4), b = corpus::random_vector(rng, n, 4);
    const std::size_t i = rng() % n;
    const auto euler = WeylElement::x(q0, n, i) * WeylElement::d(q0, n, i);
    const auto u = mono(q0, a, b);
    const Rational c = Rational(static_cast<long>(a[i])) - Rational(static_cast<long>(b[i]));
    t.expect(commutator(euler, u) == c * u, "euler " + pair_name(a, b));
  }
  for (std::uint64_t p : {2u, 3u}) {
    const FieldSpec fp(p);
    std::uint32_t pr = 1;
    for (int r = 0; r <= 2; ++r, pr *= p) {
      const auto lhs = commutator(WeylElement::x(fp, 2, 0) * WeylElement::d(fp, 2, 0, pr), WeylElement::x(fp, 2, 0, pr));
      t.expect(lhs == WeylElement::x(fp, 2, 0), "frobenius commutator p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto a = corpus::random_vector(rng, n, 3), b = corpus::random_vector(rng, n, 3);
    const std::size_t j = rng() % n;
    if (b[j] == 0) b[j] = 1 + rng() % 3;
    Exponents lower = b;
    --lower[j];
    t.expect(commutator(mono(q0, a, b), WeylElement::x(q0, n, j)) == mono(q0, a, lower), "lowering " + pair_name(a, b));
  }
  for (std::uint32_t a = 2; a <= 6; ++a) {
    const auto xa = WeylElement::x(q0, 1, 0, a);
    const auto xd2 = WeylElement::x(q0, 1, 0) * WeylElement::d(q0, 1, 0, 2);
    const auto x2d3 = WeylElement::x(q0, 1, 0, 2) * WeylElement::d(q0, 1, 0, 3);
    const Rational scale = Rational(12) / Rational(a * (a * a - 1));
    const auto rhs = scale * (Rational(a - 1, 2) * commutator(xd2, xa) - commutator(x2d3, xa) + Rational(a) * (xa * xd2));
    t.expect(rhs == WeylElement::x(q0, 1, 0, a - 1), "descent a=" + std::to_string(a));
  }
}

void hilbert_kunz(Tally& t) {
  for (const auto& [name, k] : corpus::full()) {
    const auto poly = hk_polynomial(k);
    const StarPoset poset(k);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
      const BigInt f = poly.evaluate(q);
      t.expect(f == BigInt(hk_bruteforce(k, q)), name + " brute q=" + std::to_string(q));
      t.expect(f == multiplicities(poset, q).total(), name + " multiplicities q=" + std::to_string(q));
    }
    std::uint64_t top = 0;
    for (Face facet : k.facets()) top += facet.dim() == k.dim();
    t.expect(poly.e_hk() == top, name + " e_HK");
  }
  t.expect(hk_polynomial(corpus::k_a()).e_hk() == 3, "e_HK(K_A) = 3");
  t.expect(hk_polynomial(corpus::k_b()).e_hk() == 3, "e_HK(K_B) = 3");
  t.expect(hk_polynomial(corpus::k_a()).evaluate(2) == 7, "HK(2) on K_A = 7");
  t.expect(hk_polynomial(corpus::k_b()).evaluate(2) == 8, "HK(2) on K_B = 8");
}

void reconstruction(Tally& t) {
  for (const auto& [name, k] : corpus::full()) {
    const IdealLattice lattice(k);
    for (Face tau : k.faces()) {
      if (closed_star(k, tau) == k) continue;
      std::optional<TwoSidedIdeal> meet;
      for (Face sigma : k.faces()) {
        if (k.is_face(tau | sigma)) continue;
        const auto kernel = lattice.localization_kernel(sigma);
        meet = meet ? combine(*meet, kernel, CombineMode::Intersection) : kernel;
      }
      t.expect(meet && *meet == lattice.principal(tau), name + " tau=" + to_string(tau));
    }
  }
  t.expect(IdealLattice(corpus::k_b()).enumerate().size() == 13, "K_B lattice has 13 down-sets");
  t.expect(IdealLattice(corpus::k_c()).enumerate().size() == 13, "K_C lattice has 13 down-sets");
}

void translation(Tally& t) {
  const FieldSpec q0;
  for (const auto& [name, k] : corpus::full()) {
    const IdealLattice lattice(k);
    const std::size_t n = k.num_vertices();
    const auto faces = k.faces();
    for (Face s : faces) {
      if (closed_star(k, s) == k) continue;
      const auto x_sigma = mono(q0, indicator(s, n), Exponents(n, 0));
      t.expect(j_ideal(lattice, s, s) == lattice.of_element(x_sigma), name + " J(st " + to_string(s) + ")");
    }
    for (Face s : faces) {
      for (Face u : faces) {
        const auto j = j_ideal(lattice, s, u);
        const auto meet = combine(lattice.principal(s), lattice.principal(u), CombineMode::Intersection);
        t.expect(j == meet, name + " J(" + to_string(s) + "," + to_string(u) + ")");
        t.expect(j.is_zero() == !k.is_face(s | u), name + " zero J(" + to_string(s) + "," + to_string(u) + ")");
      }
    }
  }
}

void matrices(Tally& t) {
  const FieldSpec f2(2);
  for (const auto& [name, k] : std::vector<corpus::Named>{{"K_A", corpus::k_a()}, {"K_B", corpus::k_b()}}) {
    const IdealLattice lattice(k);
    for (const auto& [a, b] : dR_basis_up_to(k, f2, 1)) {
      const auto elt = mono(f2, a, b);
      for (std::uint64_t q : {2, 4}) {
        if (elt.order() >= q) continue;
        const std::string tag = name + " " + to_string(elt) + " q=" + std::to_string(q);
        const auto m = operator_matrix(k, elt, q);
        t.expect(matrix_reproduces(m, elt), tag + " reproduces");
        const auto direct = operator_matrix(k, elt, 2 * q);
        t.expect(reblock(m, 2) == direct, tag + " reblock");
        t.expect(blocks_respect_supports(m, lattice, lattice.of_element(elt)), tag + " supports");
      }
    }
  }
}

void d_stable(Tally& t) {
  for (const auto& [name, k] : corpus::full()) {
    const IdealLattice lattice(k);
    const auto stable = lattice.d_stable_ideals();
    std::vector<SquarefreeMonomialIdeal> contracted;
    for (const auto& i : lattice.enumerate()) contracted.push_back(lattice.contract(i));
    std::sort(contracted.begin(), contracted.end(), ideal_less);
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
    t.expect(contracted == stable.ideals, name + " contractions");
    t.expect(stable.agrees_with_minimal_primes, name + " minimal primes");
    for (Face s : k.faces()) {
      const auto i = star_face_ideal(k, s);
      t.expect(lattice.contract(lattice.extension(i)) == i, name + " contract/extend " + to_string(s));
    }
  }
}

void distinctness(Tally& t) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& k : corpus::all_complexes(n)) {
      const IdealLattice lattice(k);
      const auto ideals = lattice.enumerate();
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
          bool separated = false;
          for (Face g : ideals[i].generators()) separated = separated || !ideals[j].contains_face(g);
          for (Face g : ideals[j].generators()) separated = separated || !ideals[i].contains_face(g);
          t.expect(separated, corpus::describe(k) + " ideals " + std::to_string(i) + "," + std::to_string(j));
          t.expect(!(lattice.contract(ideals[i]) == lattice.contract(ideals[j])),
                   corpus::describe(k) + " contractions " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  report(1, "membership criteria agree with the face-ideal oracle", membership_triangle);
  report(2, "worked examples on K_A, K_B, K_C", examples);
  report(3, "Weyl algebra identities", identities);
  report(4, "Hilbert-Kunz formula, brute force and multiplicities agree", hilbert_kunz);
  report(5, "principal ideals from localization kernels", reconstruction);
  report(6, "J ideals match the monomial description", translation);
  report(7, "operator block matrices", matrices);
  report(8, "D-stable ideals are the contractions", d_stable);
  report(9, "distinct down-sets give distinct ideals", distinctness);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s runtime: %.2fs (limit 60s)\n", secs < 60 ? "PASS" : "FAIL", secs);
  return failed_criteria == 0 && secs < 60 ? 0 : 1;
}
