#pragma once

// JSON and DOT serialization. Vertices are 1-based in every external format.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stardiff/dideals.hpp"
#include "stardiff/error.hpp"
#include "stardiff/face_ring.hpp"
#include "stardiff/frobenius.hpp"
#include "stardiff/simplicial.hpp"

namespace stardiff {

using Json = nlohmann::ordered_json;

inline Json face_to_json(Face f) {
  Json out = Json::array();
  for (Vertex v : f.vertices()) out.push_back(v + 1);
  return out;
}

inline Json exponents_to_json(const Exponents& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

inline Json complex_to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (Face f : k.facets()) facets.push_back(face_to_json(f));
  return Json{{"n_vertices", k.num_vertices()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
  try {
    const auto n = j.at("n_vertices").get<std::int64_t>();
    if (n < 0) throw Error(ErrorKind::Parse, "n_vertices must be nonnegative");
    std::vector<Face> facets;
    for (const auto& facet : j.at("facets")) {
      std::vector<Vertex> verts;
      for (const auto& v : facet) {
        const auto i = v.get<std::int64_t>();
        if (i < 1 || i > static_cast<std::int64_t>(kMaxVertices)) {
          throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(i) + " out of range");
        }
        verts.push_back(static_cast<Vertex>(i - 1));
      }
      facets.push_back(Face::of(verts));
    }
    return SimplicialComplex::build(static_cast<std::size_t>(n), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline SimplicialComplex complex_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return complex_from_json(j);
}

inline SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return complex_from_string(ss.str());
}

inline Json ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
  Json gens = Json::array();
  for (Face g : ideal.generators()) gens.push_back(face_to_json(g));
  return Json{{"unit", ideal.is_unit()}, {"generators", gens}};
}

inline Json ideal_to_json(const TwoSidedIdeal& ideal) {
  Json gens = Json::array();
  for (Face g : ideal.generators()) gens.push_back(face_to_json(g));
  return Json{{"unit", ideal.is_unit()}, {"generators", gens}};
}

/// x_σ as text, e.g. "x1x3"; the empty face is "1".
inline std::string monomial_label(Face f) {
  if (f.empty()) return "1";
  std::string out;
  for (Vertex v : f.vertices()) out += "x" + std::to_string(v + 1);
  return out;
}

inline std::string ideal_label(const std::vector<Face>& gens, bool unit) {
  if (unit) return "<1>";
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += monomial_label(gens[i]);
  }
  return out + ">";
}

inline std::string ideal_label(const SquarefreeMonomialIdeal& i) { return ideal_label(i.generators(), i.is_unit()); }
inline std::string ideal_label(const TwoSidedIdeal& i) { return ideal_label(i.generators(), i.is_unit()); }

inline std::string star_label(const StarNode& node) { return "st(" + to_string(node.representative) + ")"; }

inline Json star_poset_to_json(const StarPoset& poset) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const StarNode& node = poset.nodes()[i];
    Json faces = Json::array();
    for (Face f : node.faces) faces.push_back(face_to_json(f));
    Json facets = Json::array();
    for (auto id : node.facet_ids) facets.push_back(face_to_json(poset.complex().facets()[id]));
    nodes.push_back(Json{{"id", i}, {"representative", face_to_json(node.representative)}, {"faces", faces},
                         {"facets", facets}});
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back(Json::array({lo, hi}));
  return Json{{"nodes", nodes}, {"covers", covers}};
}

/// Hasse diagram, edges pointing from the smaller star to the larger one.
inline std::string star_poset_dot(const StarPoset& poset) {
  std::ostringstream out;
  out << "digraph stars {\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << star_label(poset.nodes()[i]) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

/// Hasse diagram of a family of two-sided ideals ordered by inclusion.
inline std::string lattice_dot(const std::vector<TwoSidedIdeal>& ideals) {
  const std::size_t m = ideals.size();
  std::vector<std::vector<bool>> sub(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub[i][j] = i != j && is_subideal(ideals[i], ideals[j]) && !(ideals[i] == ideals[j]);
  }
  std::ostringstream out;
  out << "digraph ideals {\n";
  for (std::size_t i = 0; i < m; ++i) out << "  i" << i << " [label=\"" << ideal_label(ideals[i]) << "\"];\n";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!sub[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k) cover = !(sub[i][k] && sub[k][j]);
      if (cover) out << "  i" << i << " -> i" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

/// The nerve complex as an undirected graph on its 1-skeleton, vertices labelled by star.
inline std::string nerve_dot(const StarPoset& poset, const SimplicialComplex& nerve) {
  std::ostringstream out;
  out << "graph nerve {\n";
  for (std::size_t v = 0; v < nerve.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << star_label(poset.nodes()[v + 1]) << "\"];\n";
  }
  for (Face f : nerve.faces()) {
    if (f.size() != 2) continue;
    const auto vs = f.vertices();
    out << "  v" << vs[0] << " -- v" << vs[1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string big_to_string(const BigInt& x) { return x.str(); }

inline Json frobenius_report(const StarPoset& poset, std::uint64_t q) {
  const auto d = multiplicities(poset, q);
  Json entries = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    entries.push_back(Json{{"star_generators", face_to_json(poset.nodes()[i].representative)},
                           {"m", big_to_string(d.multiplicities[i])}});
  }
  return Json{{"q", q}, {"multiplicities", entries}, {"hk", big_to_string(d.total())}};
}

inline std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

/// Blocks keyed by "row -> column" generator exponent vectors.
inline Json matrix_to_json(const BlockMatrix& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(exponents_to_json(g));
  Json blocks = Json::array();
  for (std::size_t r = 0; r < m.generators().size(); ++r) {
    for (const auto& [col, entry] : m.row(r)) {
      Json terms = Json::array();
      for (const auto& [e, c] : entry.terms()) {
        terms.push_back(Json{{"coeff", rational_string(c)}, {"exponents", exponents_to_json(e)}});
      }
      blocks.push_back(Json{{"row", exponents_to_json(m.generators()[r])},
                            {"col", exponents_to_json(m.generators()[col])},
                            {"entry", terms}});
    }
  }
  return Json{{"q", m.q()}, {"field", m.field().name()}, {"generators", gens}, {"blocks", blocks}};
}

}  // namespace stardiff
