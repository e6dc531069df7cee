#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "unitube/json_io.hpp"
#include "unitube/oracle.hpp"
#include "unitube/perpendicular.hpp"
#include "unitube/proalgebra.hpp"

namespace {

using namespace unitube;

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class Fn>
int with_field(const std::string& field_text, Fn&& fn) {
  if (field_text == "Q" || field_text == "q") return fn(RatField{});
  long long p = 0;
  try {
    p = std::stoll(field_text);
  } catch (const std::exception&) {
    fail(ErrorKind::BadInput, "--field expects a prime or Q");
  }
  if (!is_prime(p)) fail(ErrorKind::BadInput, "--field expects a prime or Q");
  return fn(PrimeField{p});
}

IntervalObject random_object(const Site& s, std::mt19937_64& rng, long long max_winding) {
  auto pick = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  Vertex socle, top;
  switch (s.base()) {
    case BaseOrder::cyclic:
      socle = {pick(0, s.rank() - 1), 0};
      top = {pick(0, s.rank() - 1), 0};
      break;
    case BaseOrder::integers:
      socle = {pick(-20, 20), 0};
      top = {pick(-20, 20), 0};
      break;
    case BaseOrder::int_pairs_lex:
      socle = {pick(-5, 5), pick(-5, 5)};
      top = {pick(-5, 5), pick(-5, 5)};
      break;
    case BaseOrder::finite: {
      long long a = pick(1, s.size()), b = pick(1, s.size());
      socle = {std::min(a, b), 0};
      top = {std::max(a, b), 0};
      break;
    }
  }
  long long winding = s.is_loop() ? pick(0, max_winding) : 0;
  if (!s.is_loop() && s.cmp_vertex(top, socle) < 0) std::swap(socle, top);
  return IntervalObject::make(s, socle, top, winding);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

struct QuiverPatch {
  std::vector<IntervalObject> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;     // irreducible maps
  std::vector<std::pair<std::size_t, std::size_t>> tau_links;  // x -> tau x
};

QuiverPatch ar_neighborhood(const IntervalObject& center, long long radius) {
  std::map<IntervalObject, std::size_t> index;
  QuiverPatch patch;
  auto intern = [&](const IntervalObject& o) {
    auto it = index.find(o);
    if (it != index.end()) return it->second;
    std::size_t id = patch.nodes.size();
    index.emplace(o, id);
    patch.nodes.push_back(o);
    return id;
  };

  intern(center);
  std::vector<IntervalObject> frontier{center};
  for (long long step = 0; step < radius; ++step) {
    std::vector<IntervalObject> next;
    for (const IntervalObject& x : frontier) {
      for (const IntervalObject& y : irreducibles_out(x))
        if (!index.count(y)) next.push_back(y);
      for (const IntervalObject& y : irreducibles_in(x))
        if (!index.count(y)) next.push_back(y);
    }
    for (const IntervalObject& y : next) intern(y);
    frontier = std::move(next);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < patch.nodes.size(); ++i) {
    for (const IntervalObject& y : irreducibles_out(patch.nodes[i])) {
      auto it = index.find(y);
      if (it != index.end() && seen.insert({i, it->second}).second)
        patch.edges.push_back({i, it->second});
    }
    for (const IntervalObject& y : irreducibles_in(patch.nodes[i])) {
      auto it = index.find(y);
      if (it != index.end() && seen.insert({it->second, i}).second)
        patch.edges.push_back({it->second, i});
    }
    if (!patch.nodes[i].is_projective()) {
      auto it = index.find(tau(patch.nodes[i]));
      if (it != index.end()) patch.tau_links.push_back({i, it->second});
    }
  }
  return patch;
}

std::string patch_to_dot(const QuiverPatch& patch) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n";
  os << "  rankdir=RL;\n";
  os << "  node [shape=plaintext];\n";
  for (const IntervalObject& o : patch.nodes)
    os << "  \"" << dot_escape(o.label()) << "\";\n";
  for (const auto& [a, b] : patch.edges)
    os << "  \"" << dot_escape(patch.nodes[a].label()) << "\" -> \""
       << dot_escape(patch.nodes[b].label()) << "\";\n";
  for (const auto& [a, b] : patch.tau_links)
    os << "  \"" << dot_escape(patch.nodes[a].label()) << "\" -> \""
       << dot_escape(patch.nodes[b].label()) << "\" [style=dotted, dir=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of tubes, big tubes and linear-order categories"};
  app.require_subcommand(1);
  int check_status = 0;

  std::string site_text, from_text, to_text, obj_text, keep_text;
  std::string format = "dot", field_text = "1009", kind_text = "identity";
  long long radius = 2, limit = 32, trunc = 8, rank = 2, max_winding = 1;
  long long max_len = 5, size = 3, amount = 1, n_pairs = 500;
  unsigned long long seed = 20240811;

  auto* hom_cmd = app.add_subcommand("hom", "dim and basis window of Hom(from, to)");
  hom_cmd->add_option("--site", site_text, "site JSON")->required();
  hom_cmd->add_option("--from", from_text, "source object JSON")->required();
  hom_cmd->add_option("--to", to_text, "target object JSON")->required();
  hom_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    IntervalObject x = object_from_json(s, parse_json(from_text));
    IntervalObject y = object_from_json(s, parse_json(to_text));
    std::cout << hom_to_json(hom_space(x, y)).dump(2) << "\n";
  });

  auto* ext_cmd = app.add_subcommand("ext", "dim of Ext^1(from, to)");
  ext_cmd->add_option("--site", site_text, "site JSON")->required();
  ext_cmd->add_option("--from", from_text, "source object JSON")->required();
  ext_cmd->add_option("--to", to_text, "target object JSON")->required();
  ext_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    IntervalObject x = object_from_json(s, parse_json(from_text));
    IntervalObject y = object_from_json(s, parse_json(to_text));
    json j;
    j["dim"] = ext_dim(x, y);
    std::cout << j.dump(2) << "\n";
  });

  auto* ar_cmd = app.add_subcommand("ar", "almost split sequence ending at the object");
  ar_cmd->add_option("--site", site_text, "site JSON")->required();
  ar_cmd->add_option("--obj", obj_text, "object JSON")->required();
  ar_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    std::cout << ar_to_json(ar_sequence(object_from_json(s, parse_json(obj_text)))).dump(2)
              << "\n";
  });

  auto* quiver_cmd = app.add_subcommand("ar-quiver", "neighborhood of the AR quiver");
  quiver_cmd->add_option("--site", site_text, "site JSON")->required();
  quiver_cmd->add_option("--center", obj_text, "center object JSON")->required();
  quiver_cmd->add_option("--radius", radius, "irreducible-arrow steps (default 2)");
  quiver_cmd->add_option("--format", format, "dot or json (default dot)");
  quiver_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    QuiverPatch patch = ar_neighborhood(object_from_json(s, parse_json(obj_text)), radius);
    if (format == "dot") {
      std::cout << patch_to_dot(patch);
      return;
    }
    if (format != "json") fail(ErrorKind::BadInput, "--format must be dot or json");
    json j;
    j["nodes"] = json::array();
    for (const IntervalObject& o : patch.nodes) j["nodes"].push_back(object_to_json(o));
    j["edges"] = json::array();
    for (const auto& [a, b] : patch.edges)
      j["edges"].push_back({{"from", patch.nodes[a].label()}, {"to", patch.nodes[b].label()}});
    j["tau"] = json::array();
    for (const auto& [a, b] : patch.tau_links)
      j["tau"].push_back({{"from", patch.nodes[a].label()}, {"to", patch.nodes[b].label()}});
    std::cout << j.dump(2) << "\n";
  });

  auto* sub_cmd = app.add_subcommand("subobjects", "ascending chain of subobjects");
  sub_cmd->add_option("--site", site_text, "site JSON")->required();
  sub_cmd->add_option("--obj", obj_text, "object JSON")->required();
  sub_cmd->add_option("--limit", limit, "max listed subobjects (default 32)");
  sub_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    std::cout
        << chain_to_json(subobject_chain(object_from_json(s, parse_json(obj_text)), limit))
               .dump(2)
        << "\n";
  });

  auto* perp_cmd = app.add_subcommand("perp", "perpendicular subcategory presentation");
  perp_cmd->add_option("--site", site_text, "site JSON")->required();
  perp_cmd->add_option("--keep", keep_text, "JSON list of kept simples")->required();
  perp_cmd->add_option("--obj", obj_text, "optional object JSON to test and reflect");
  perp_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    json keep_json = parse_json(keep_text);
    if (!keep_json.is_array()) fail(ErrorKind::BadInput, "--keep must be a JSON array");
    std::vector<Vertex> keep;
    for (const json& v : keep_json) keep.push_back(vertex_from_json(s, v));
    PerpPresentation pp = PerpPresentation::make(s, keep);
    json j = perp_to_json(pp);
    if (!obj_text.empty()) {
      IntervalObject x = object_from_json(s, parse_json(obj_text));
      j["member"] = pp.contains(x);
      std::optional<IntervalObject> r = pp.reflect(x);
      if (!r) {
        j["reflect"] = nullptr;
      } else {
        j["reflect"] = json{{"inner", object_to_json(*r)},
                            {"ambient", object_to_json(pp.include(*r))}};
      }
    }
    std::cout << j.dump(2) << "\n";
  });

  auto* oracle_cmd = app.add_subcommand("oracle-check", "window formulas vs matrix oracle");
  oracle_cmd->add_option("--rank", rank, "tube rank (default 2)");
  oracle_cmd->add_option("--max-winding", max_winding, "winding bound (default 1)");
  oracle_cmd->add_option("--field", field_text, "prime p or Q (default 1009)");
  oracle_cmd->callback([&] {
    check_status = with_field(field_text, [&](auto field) {
      OracleReport rep = oracle_sweep(rank, (max_winding + 1) * rank, field);
      json j;
      j["rank"] = rep.rank;
      j["pairs"] = rep.pairs;
      j["field"] = field.name();
      j["mismatch_count"] = rep.mismatch_count;
      j["mismatches"] = json::array();
      for (const OracleMismatch& m : rep.mismatches)
        j["mismatches"].push_back({{"from", m.x_label},
                                   {"to", m.y_label},
                                   {"hom", {m.lib_hom, m.oracle_hom}},
                                   {"ext", {m.lib_ext, m.oracle_ext}}});
      std::cout << j.dump(2) << "\n";
      return rep.ok() ? 0 : 3;
    });
  });

  auto* coalg_cmd = app.add_subcommand("coalgebra-check", "coalgebra axioms and algebra duality");
  coalg_cmd->add_option("--rank", rank, "cyclic quiver rank (default 2)");
  coalg_cmd->add_option("--max-len", max_len, "max path length (default 5)");
  coalg_cmd->callback([&] {
    PathCoalgebra c = PathCoalgebra::make(rank, max_len);
    std::string why;
    bool axioms = coalgebra_axioms_ok(c, &why);
    bool dual = axioms && coalgebra_dual_check(c, &why);
    json j;
    j["rank"] = rank;
    j["max_len"] = max_len;
    j["axioms"] = axioms;
    j["dual"] = dual;
    if (!axioms || !dual) j["counterexample"] = why;
    std::cout << j.dump(2) << "\n";
    if (!axioms || !dual) check_status = 3;
  });

  auto* inj_cmd = app.add_subcommand("inj-matrix", "series matrix algebra of injectives");
  inj_cmd->add_option("--size", size, "number of kept simples (default 3)");
  inj_cmd->add_option("--trunc", trunc, "series precision (default 8)");
  inj_cmd->callback([&] {
    SeriesMatrixAlgebra alg = SeriesMatrixAlgebra::make(size, trunc);
    json j;
    j["size"] = size;
    j["trunc"] = trunc;
    json pattern = json::array();
    for (long long i = 0; i < size; ++i) {
      json row = json::array();
      for (long long jj = 0; jj < size; ++jj)
        row.push_back(alg.slot_min_order(i, jj) == 0 ? "k[[x]]" : "xk[[x]]");
      pattern.push_back(row);
    }
    j["pattern"] = pattern;
    json samples = json::array();
    for (long long i = 0; i + 1 < size; ++i) {
      long long j2 = i + 1;
      auto prod = alg.mul(alg.basis(i, j2, 1), alg.basis(j2, (j2 + 1) % size, 1));
      long long tcol = (j2 + 1) % size;
      samples.push_back({{"left", {i, j2, 1}},
                         {"right", {j2, tcol, 1}},
                         {"slot", {i, tcol}},
                         {"order", prod.at(i, tcol).order()}});
    }
    j["samples"] = samples;
    std::cout << j.dump(2) << "\n";
  });

  auto* trans_cmd = app.add_subcommand("transport-check", "invariance under base bijections");
  trans_cmd->add_option("--site", site_text, "site JSON")->required();
  trans_cmd->add_option("--kind", kind_text, "identity|shift|rotate|pair-shift|negate");
  trans_cmd->add_option("--amount", amount, "shift/rotation amount (default 1)");
  trans_cmd->add_option("--pairs", n_pairs, "random pairs to test (default 500)");
  trans_cmd->add_option("--max-winding", max_winding, "winding bound (default 1)");
  trans_cmd->add_option("--seed", seed, "RNG seed");
  trans_cmd->callback([&] {
    Site s = site_from_json(parse_json(site_text));
    VertexBijection bij = VertexBijection::identity();
    if (kind_text == "identity")
      bij = VertexBijection::identity();
    else if (kind_text == "shift")
      bij = VertexBijection::int_shift(amount);
    else if (kind_text == "rotate")
      bij = VertexBijection::cyclic_rotate(amount);
    else if (kind_text == "pair-shift")
      bij = VertexBijection::pair_shift(amount);
    else if (kind_text == "negate")
      bij = VertexBijection::int_negate();
    else
      fail(ErrorKind::BadInput, "unknown --kind " + kind_text);
    Transport t = Transport::make(s, s, bij);

    std::mt19937_64 rng(seed);
    long long mismatches = 0;
    for (long long i = 0; i < n_pairs; ++i) {
      IntervalObject x = random_object(s, rng, max_winding);
      IntervalObject y = random_object(s, rng, max_winding);
      IntervalObject tx = t.apply(x), ty = t.apply(y);
      if (hom_dim(x, y) != hom_dim(tx, ty) || ext_dim(x, y) != ext_dim(tx, ty)) {
        ++mismatches;
        continue;
      }
      if (!x.is_projective() && t.apply(tau(x)) != tau(tx)) ++mismatches;
    }
    json j;
    j["bijection"] = bij.describe();
    j["pairs"] = n_pairs;
    j["mismatches"] = mismatches;
    std::cout << j.dump(2) << "\n";
    if (mismatches != 0) check_status = 3;
  });

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }
  } catch (const unitube::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return check_status;
}
