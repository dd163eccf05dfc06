#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace stardiff;
using corpus::error_of;

namespace {

Face f(std::initializer_list<Vertex> vs) { return Face::of(vs); }

TEST(Face, OrderAndPrinting) {
  EXPECT_TRUE(face_less(Face{}, f({0})));
  EXPECT_TRUE(face_less(f({2}), f({0, 1})));
  EXPECT_TRUE(face_less(f({0, 2}), f({1, 2})));
  EXPECT_FALSE(face_less(f({1}), f({1})));
  EXPECT_EQ(to_string(f({0, 2})), "{1,3}");
  EXPECT_EQ(to_string(Face{}), "{}");
  EXPECT_EQ(Face{}.dim(), -1);
  EXPECT_EQ(f({3, 1}).vertices(), (std::vector<Vertex>{1, 3}));
}

TEST(Build, BoundaryOfTriangle) {
  const auto k = corpus::k_a();
  EXPECT_EQ(k.facets().size(), 3u);
  EXPECT_EQ(k.dim(), 1);
  EXPECT_FALSE(k.is_face(f({0, 1, 2})));
  EXPECT_TRUE(k.is_face(Face{}));
}

TEST(Build, PointHasTwoFaces) {
  const auto k = SimplicialComplex::build(1, {f({0})});
  EXPECT_EQ(k.faces(), (std::vector<Face>{Face{}, f({0})}));
}

TEST(Build, MinimizesThenRejectsGhost) {
  EXPECT_EQ(error_of([] { SimplicialComplex::build(3, {f({0, 1}), f({0})}); }), ErrorKind::GhostVertex);
  const auto k = SimplicialComplex::build(2, {f({0, 1}), f({0}), f({0, 1})});
  EXPECT_EQ(k.facets(), (std::vector<Face>{f({0, 1})}));
}

TEST(Build, Errors) {
  EXPECT_EQ(error_of([] { SimplicialComplex::build(2, {}); }), ErrorKind::EmptyComplex);
  EXPECT_EQ(error_of([] { SimplicialComplex::build(2, {f({0, 4})}); }), ErrorKind::BadIndex);
  EXPECT_EQ(error_of([] { SimplicialComplex::build(21, {f({0})}); }), ErrorKind::TooLarge);
  EXPECT_EQ(error_of([] { corpus::k_a().is_face(f({5})); }), ErrorKind::BadIndex);
}

TEST(Build, EmptyFaceOnlyIsAllowed) {
  const auto k = SimplicialComplex::build(0, {Face{}});
  EXPECT_EQ(k.dim(), -1);
  EXPECT_EQ(f_vector(k), (std::vector<std::uint64_t>{1}));
}

TEST(Stars, ClosedStar) {
  const auto kb = corpus::k_b();
  EXPECT_EQ(closed_star(kb, f({1})).facets(), (std::vector<Face>{f({0, 1}), f({1, 2})}));
  EXPECT_EQ(closed_star(kb, Face{}), kb);
  const auto kc = corpus::k_c();
  EXPECT_EQ(closed_star(kc, f({4})), kc);
  EXPECT_EQ(error_of([&] { closed_star(kb, f({0, 2})); }), ErrorKind::NotAFace);
}

TEST(Stars, OpenComplement) {
  EXPECT_EQ(open_complement(corpus::k_b(), f({1})), (std::vector<Face>{f({3}), f({2, 3})}));
  EXPECT_TRUE(open_complement(corpus::k_a(), Face{}).empty());
  EXPECT_EQ(open_complement(corpus::k_a(), f({0, 1})), (std::vector<Face>{f({2}), f({0, 2}), f({1, 2})}));
}

TEST(Stars, Leq) {
  const auto kc = corpus::k_c();
  EXPECT_TRUE(star_leq(kc, f({0}), f({1})));
  EXPECT_TRUE(star_leq(kc, f({0, 1}), f({0})));
  EXPECT_FALSE(star_leq(corpus::k_b(), f({0}), f({3})));
  EXPECT_EQ(error_of([&] { star_leq(kc, f({0, 3}), f({0})); }), ErrorKind::NotAFace);
}

TEST(StarPoset, KB) {
  const StarPoset p(corpus::k_b());
  ASSERT_EQ(p.size(), 6u);
  std::vector<Face> reps;
  for (const auto& node : p.nodes()) reps.push_back(node.representative);
  EXPECT_EQ(reps, (std::vector<Face>{Face{}, f({0}), f({1}), f({2}), f({3}), f({1, 2})}));
  EXPECT_EQ(p.node_of(f({0, 1})), p.node_of(f({0})));
  std::vector<std::pair<std::size_t, std::size_t>> proper;
  for (auto c : p.covers()) {
    if (c.second != StarPoset::whole()) proper.push_back(c);
  }
  EXPECT_EQ(proper, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {4, 3}, {5, 2}, {5, 3}}));
}

TEST(StarPoset, PointAndKC) {
  EXPECT_EQ(StarPoset(corpus::point()).size(), 1u);
  const StarPoset pc(corpus::k_c());
  EXPECT_EQ(pc.size(), 6u);
  EXPECT_EQ(pc.node_of(f({4})), StarPoset::whole());
}

TEST(FVector, Examples) {
  EXPECT_EQ(f_vector(corpus::k_a()), (std::vector<std::uint64_t>{1, 3, 3}));
  EXPECT_EQ(f_vector(simplex(2)), (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(f_vector(corpus::k_b()), (std::vector<std::uint64_t>{1, 4, 3}));
}

TEST(Join, ConeOverKB) {
  const auto kc = join(corpus::k_b(), corpus::point());
  EXPECT_EQ(kc, corpus::k_c());
  EXPECT_EQ(closed_star(kc, f({4})), kc);
  EXPECT_EQ(join(corpus::point(), corpus::point()).facets(), (std::vector<Face>{f({0, 1})}));
}

TEST(Nerve, Examples) {
  const auto nb = nerve_complex(corpus::k_b());
  EXPECT_EQ(nb.num_vertices(), 5u);
  EXPECT_EQ(nb.facets().size(), 4u);
  EXPECT_EQ(nb.dim(), 1);
  const auto np = nerve_complex(corpus::point());
  EXPECT_EQ(np.facets(), (std::vector<Face>{Face{}}));
  const auto na = nerve_complex(corpus::k_a());
  EXPECT_EQ(na.num_vertices(), 6u);
  EXPECT_EQ(f_vector(na), (std::vector<std::uint64_t>{1, 6, 6}));
}

// Star facts checked on every face pair of every corpus complex.
TEST(Properties, StarFacts) {
  for (const auto& [name, k] : corpus::full()) {
    const auto faces = k.faces();
    for (Face s : faces) {
      for (Face t : faces) {
        SCOPED_TRACE(name + " " + to_string(s) + " " + to_string(t));
        const auto ss = closed_star(k, s), st = closed_star(k, t);
        if (s.subset_of(t)) EXPECT_TRUE(st.is_subcomplex_of(ss));
        EXPECT_EQ(ss.is_face(t), st.is_face(s));
        EXPECT_EQ(star_leq(k, t, s), st.is_subcomplex_of(ss));
        if (k.is_face(s | t)) {
          const auto both = k.facets_containing(s | t);
          std::vector<std::size_t> meet;
          const auto a = k.facets_containing(s), b = k.facets_containing(t);
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
          EXPECT_EQ(meet, both);
        }
        if (t.size() == 1 && !s.contains(t.vertices()[0]) && k.is_face(s | t)) {
          EXPECT_EQ(closed_star(k, s | t), closed_star(ss, t));
        }
      }
    }
  }
}

TEST(Properties, PosetIsPartialOrder) {
  for (const auto& [name, k] : corpus::full()) {
    const StarPoset p(k);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(p.leq(i, i));
      EXPECT_TRUE(p.leq(i, StarPoset::whole()));
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (i != j) EXPECT_FALSE(p.leq(i, j) && p.leq(j, i)) << name;
        for (std::size_t l = 0; l < p.size(); ++l) {
          if (p.leq(i, j) && p.leq(j, l)) EXPECT_TRUE(p.leq(i, l)) << name;
        }
      }
    }
    std::size_t total = 0;
    for (const auto& node : p.nodes()) total += node.faces.size();
    EXPECT_EQ(total, k.faces().size()) << name;
  }
}

}  // namespace
