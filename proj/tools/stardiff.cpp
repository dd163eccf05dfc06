// stardiff: command-line front end.
//
//   stardiff <subcommand> complex.json [options] [--format json|dot|text]
//
// Exit status: 0 success, 2 invalid input, 3 two computations of the same
// quantity disagree.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stardiff/stardiff.hpp"

namespace {

using namespace stardiff;

constexpr int kDisagree = 3;
constexpr int kInvalid = 2;

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "not an integer: '" + item + "'");
    }
  }
  return out;
}

Face parse_face(const std::string& text, const SimplicialComplex& k) {
  std::vector<Vertex> verts;
  for (auto v : parse_list(text)) {
    if (v < 1 || v > static_cast<std::int64_t>(k.num_vertices())) {
      throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v) + " out of range");
    }
    verts.push_back(static_cast<Vertex>(v - 1));
  }
  return Face::of(verts);
}

Exponents parse_exponents(const std::string& text, std::size_t n) {
  const auto values = parse_list(text);
  if (values.size() != n) throw Error(ErrorKind::AmbientMismatch, "expected " + std::to_string(n) + " exponents");
  Exponents e;
  for (auto v : values) {
    if (v < 0) throw Error(ErrorKind::Parse, "exponents must be nonnegative");
    e.push_back(static_cast<std::uint32_t>(v));
  }
  return e;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string faces_text(const std::vector<Face>& faces) {
  std::string out;
  for (std::size_t i = 0; i < faces.size(); ++i) out += (i ? " " : "") + to_string(faces[i]);
  return out;
}

void unsupported(const std::string& format) {
  throw Error(ErrorKind::Parse, "format '" + format + "' is not available for this subcommand");
}

struct Options {
  std::string complex_path;
  std::string format = "text";
  std::string face;
  std::string a, b;
  std::string op;
  std::uint64_t characteristic = 0;
  std::uint64_t q = 2;
};

int cmd_stars(const SimplicialComplex& k, const Options& o) {
  const StarPoset poset(k);
  if (o.format == "json") {
    std::cout << star_poset_to_json(poset).dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << star_poset_dot(poset);
  } else {
    for (const StarNode& node : poset.nodes()) std::cout << star_label(node) << ": " << faces_text(node.faces) << "\n";
    for (const auto& [lo, hi] : poset.covers()) {
      std::cout << star_label(poset.nodes()[lo]) << " < " << star_label(poset.nodes()[hi]) << "\n";
    }
  }
  return 0;
}

int cmd_gens(const SimplicialComplex& k, const Options& o) {
  const StarPoset poset(k);
  std::vector<Face> gens;
  for (std::size_t i : poset.proper_nodes()) gens.push_back(poset.nodes()[i].representative);
  if (o.format == "json") {
    Json arr = Json::array();
    for (Face g : gens) arr.push_back(face_to_json(g));
    std::cout << Json{{"generators", arr}}.dump(2) << "\n";
  } else if (o.format == "text") {
    for (Face g : gens) std::cout << monomial_label(g) << "\n";
  } else {
    unsupported(o.format);
  }
  return 0;
}

int cmd_lattice(const SimplicialComplex& k, const Options& o) {
  const IdealLattice lattice(k);
  const auto ideals = lattice.enumerate();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& i : ideals) arr.push_back(ideal_to_json(i));
    std::cout << Json{{"count", ideals.size()}, {"ideals", arr}}.dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << lattice_dot(ideals);
  } else {
    std::cout << ideals.size() << " ideals\n";
    for (const auto& i : ideals) std::cout << ideal_label(i) << "\n";
  }
  return 0;
}

int cmd_localize(const SimplicialComplex& k, const Options& o) {
  const IdealLattice lattice(k);
  const Face sigma = parse_face(o.face, k);
  // The kernel is the extension of I_st(s); "generators" lists that R-ideal.
  const auto extended = star_face_ideal(k, sigma);
  const auto kernel = lattice.localization_kernel(sigma);
  if (o.format == "json") {
    Json j = ideal_to_json(extended);
    Json canonical = Json::array();
    for (Face g : kernel.generators()) canonical.push_back(face_to_json(g));
    Json down = Json::array();
    for (std::size_t i = 0; i < lattice.poset().size(); ++i) {
      if (kernel.contains_node(i)) down.push_back(face_to_json(lattice.poset().nodes()[i].representative));
    }
    j["canonical_generators"] = canonical;
    j["down_set"] = down;
    std::cout << j.dump() << "\n";
  } else if (o.format == "text") {
    std::cout << "extension of " << ideal_label(extended) << " = " << ideal_label(kernel) << "\n";
  } else {
    unsupported(o.format);
  }
  return 0;
}

int cmd_dstable(const SimplicialComplex& k, const Options& o) {
  const IdealLattice lattice(k);
  const auto stable = lattice.d_stable_ideals();
  std::vector<SquarefreeMonomialIdeal> contracted;
  for (const auto& i : lattice.enumerate()) contracted.push_back(lattice.contract(i));
  std::sort(contracted.begin(), contracted.end(), ideal_less);
  contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
  const bool agree_contract = contracted == stable.ideals;
  const bool agree = agree_contract && stable.agrees_with_minimal_primes;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& i : stable.ideals) arr.push_back(ideal_to_json(i));
    std::cout << Json{{"count", stable.ideals.size()},
                      {"ideals", arr},
                      {"minimal_primes_agree", stable.agrees_with_minimal_primes},
                      {"contractions_agree", agree_contract}}
                     .dump(2)
              << "\n";
  } else if (o.format == "text") {
    std::cout << stable.ideals.size() << " D-stable ideals\n";
    for (const auto& i : stable.ideals) std::cout << ideal_label(i) << "\n";
    std::cout << "minimal primes agree: " << yes_no(stable.agrees_with_minimal_primes)
              << ", contractions agree: " << yes_no(agree_contract) << "\n";
  } else {
    unsupported(o.format);
  }
  return agree ? 0 : kDisagree;
}

int cmd_member(const SimplicialComplex& k, const Options& o) {
  const FieldSpec field(o.characteristic);
  const Exponents a = parse_exponents(o.a, k.num_vertices());
  const Exponents b = parse_exponents(o.b, k.num_vertices());
  const bool traves = in_dR_traves(k, a, b, field);
  std::optional<bool> star;
  if (k.is_face(support(a)) && k.is_face(support(b))) star = in_dR_star(k, a, b);
  const auto oracle = preserves_face_ideal_oracle(k, a, b, field);
  const bool agree = traves == oracle.preserved && (!star || *star == traves);
  if (o.format == "json") {
    Json j{{"in_dR", traves}, {"traves", traves}, {"star", star ? Json(*star) : Json(nullptr)},
           {"oracle", oracle.preserved}, {"agree", agree}};
    if (oracle.witness) j["witness"] = exponents_to_json(*oracle.witness);
    std::cout << j.dump() << "\n";
  } else if (o.format == "text") {
    std::cout << "in D(R): " << yes_no(traves) << " (traves=" << yes_no(traves)
              << ", star=" << (star ? yes_no(*star) : "n/a") << ", oracle=" << yes_no(oracle.preserved) << ")\n";
    if (!agree) std::cout << "criteria disagree\n";
  } else {
    unsupported(o.format);
  }
  return agree ? 0 : kDisagree;
}

int cmd_hk(const SimplicialComplex& k, const Options& o) {
  require_prime_power(o.q);
  const BigInt formula = hk_polynomial(k).evaluate(o.q);
  const BigInt brute = hk_bruteforce(k, o.q);
  const BigInt summands = multiplicities(k, o.q).total();
  const bool agree = formula == brute && formula == summands;
  if (o.format == "json") {
    std::cout << Json{{"q", o.q},
                      {"formula", formula.str()},
                      {"brute_force", brute.str()},
                      {"multiplicity_sum", summands.str()},
                      {"e_hk", hk_polynomial(k).e_hk()},
                      {"agree", agree}}
                     .dump()
              << "\n";
  } else if (o.format == "text") {
    std::cout << "HK(" << o.q << "): formula " << formula << ", brute force " << brute << ", multiplicity sum "
              << summands << ", " << (agree ? "agree" : "DISAGREE") << "\n";
  } else {
    unsupported(o.format);
  }
  return agree ? 0 : kDisagree;
}

int cmd_frob(const SimplicialComplex& k, const Options& o) {
  const StarPoset poset(k);
  const auto report = frobenius_report(poset, o.q);
  const bool agree = BigInt(report["hk"].get<std::string>()) == hk_polynomial(k).evaluate(o.q);
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (o.format == "text") {
    const auto d = multiplicities(poset, o.q);
    for (std::size_t i = 0; i < poset.size(); ++i) {
      std::cout << star_label(poset.nodes()[i]) << ": " << d.multiplicities[i] << "\n";
    }
    std::cout << "total " << d.total() << "\n";
  } else {
    unsupported(o.format);
  }
  return agree ? 0 : kDisagree;
}

int cmd_matrix(const SimplicialComplex& k, const Options& o) {
  const FieldSpec field(o.characteristic);
  const WeylElement elt = parse_weyl(o.op, field, k.num_vertices());
  const BlockMatrix m = operator_matrix(k, elt, o.q);
  const bool agree = matrix_reproduces(m, elt);
  if (o.format == "json") {
    Json j = matrix_to_json(m);
    j["reproduces_action"] = agree;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "text") {
    const auto& gens = m.generators();
    for (std::size_t r = 0; r < gens.size(); ++r) {
      for (const auto& [col, entry] : m.row(r)) {
        std::cout << exponents_to_json(gens[r]).dump() << " -> " << exponents_to_json(gens[col]).dump()
                  << ":";
        for (const auto& [e, c] : entry.terms()) std::cout << " " << rational_string(c) << "*" << exponents_to_json(e).dump();
        std::cout << "\n";
      }
    }
  } else {
    unsupported(o.format);
  }
  return agree ? 0 : kDisagree;
}

int cmd_nerve(const SimplicialComplex& k, const Options& o) {
  const StarPoset poset(k);
  const SimplicialComplex nerve = nerve_complex(poset);
  if (o.format == "json") {
    std::cout << complex_to_json(nerve).dump() << "\n";
  } else if (o.format == "dot") {
    std::cout << nerve_dot(poset, nerve);
  } else {
    std::cout << nerve.num_vertices() << " vertices\n";
    for (Face f : nerve.facets()) {
      std::string line;
      for (Vertex v : f.vertices()) line += (line.empty() ? "" : " ") + star_label(poset.nodes()[v + 1]);
      std::cout << "{" << line << "}\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley-Reisner rings and two-sided ideals of their differential operators"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("complex", o.complex_path, "complex JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", o.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    return sub;
  };

  auto* stars = add("stars", "star poset");
  auto* gens = add("gens", "generators x_s of the proper ideals");
  auto* lattice = add("lattice", "all two-sided ideals");
  auto* localize = add("localize", "kernel of localization at x_s");
  localize->add_option("--face", o.face, "face as 1-based vertices, e.g. 1,2")->required();
  auto* dstable = add("dstable", "D-stable ideals of R");
  auto* member = add("member", "is x^a d^(b) in D(R)");
  member->add_option("--a", o.a, "exponents of x")->required();
  member->add_option("--b", o.b, "exponents of d")->required();
  member->add_option("--char", o.characteristic, "0 or a prime")->capture_default_str();
  auto* hk = add("hk", "Hilbert-Kunz function");
  hk->add_option("--q", o.q, "prime power")->required();
  auto* frob = add("frob", "Frobenius summand multiplicities");
  frob->add_option("--q", o.q, "prime power")->required();
  auto* matrix = add("matrix", "block matrix of an operator");
  matrix->add_option("--op", o.op, "operator, e.g. \"x[1] d[2]\"")->required();
  matrix->add_option("--q", o.q, "prime power above the order")->required();
  matrix->add_option("--char", o.characteristic, "prime")->required();
  auto* nerve = add("nerve", "order complex of the proper star poset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    const SimplicialComplex k = load_complex(o.complex_path);
    if (stars->parsed()) return cmd_stars(k, o);
    if (gens->parsed()) return cmd_gens(k, o);
    if (lattice->parsed()) return cmd_lattice(k, o);
    if (localize->parsed()) return cmd_localize(k, o);
    if (dstable->parsed()) return cmd_dstable(k, o);
    if (member->parsed()) return cmd_member(k, o);
    if (hk->parsed()) return cmd_hk(k, o);
    if (frob->parsed()) return cmd_frob(k, o);
    if (matrix->parsed()) return cmd_matrix(k, o);
    if (nerve->parsed()) return cmd_nerve(k, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
