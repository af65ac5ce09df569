#include "coxdef/jsonio.hpp"

#include <map>

namespace coxdef {

Json matrix_to_json(const CoxeterMatrix& M) {
  Json j;
  j["rank"] = M.rank();
  Json orders = Json::array();
  for (const auto& [pair, m] : M.orders()) {
    Json entry = Json::array({pair.first, pair.second});
    if (m == CoxeterMatrix::kInfinity)
      entry.push_back("inf");
    else
      entry.push_back(m);
    orders.push_back(std::move(entry));
  }
  j["orders"] = std::move(orders);
  return j;
}

CoxeterMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("orders"))
    throw invalid_input("matrix JSON needs \"rank\" and \"orders\"");
  if (!j["rank"].is_number_integer()) throw invalid_input("matrix rank must be an integer");
  const int rank = j["rank"].get<int>();
  std::map<std::pair<int, int>, int> orders;
  for (const Json& entry : j["orders"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw invalid_input("each order entry must be [i, j, m]");
    const int i = entry[0].get<int>();
    const int jj = entry[1].get<int>();
    if (i >= jj) throw invalid_input("order entries must have i < j");
    int m;
    if (entry[2].is_string()) {
      if (entry[2].get<std::string>() != "inf")
        throw invalid_input("order must be an integer >= 2 or \"inf\"");
      m = CoxeterMatrix::kInfinity;
    } else if (entry[2].is_number_integer()) {
      m = entry[2].get<int>();
    } else {
      throw invalid_input("order must be an integer >= 2 or \"inf\"");
    }
    if (!orders.emplace(std::make_pair(i, jj), m).second)
      throw invalid_input("duplicate order entry");
  }
  return CoxeterMatrix(rank, std::move(orders));  // validates completeness
}

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t;
    t["coeff"] = rational_str(c);
    Json exps = Json::array();
    for (const auto& [v, e] : mono)
      exps.push_back(Json::array({"t", v.i, v.j, v.k, e}));
    t["exps"] = std::move(exps);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const CoxeterMatrix& M, const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw invalid_input("polynomial JSON needs \"terms\"");
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const Json& t : j["terms"]) {
    const Rational c = parse_rational(t.at("coeff").get<std::string>());
    Monomial mono;
    for (const Json& x : t.at("exps")) {
      if (!x.is_array() || x.size() != 5 || x[0].get<std::string>() != "t")
        throw invalid_input("exponent entries must be [\"t\", i, j, k, e]");
      const int i = x[1].get<int>(), jj = x[2].get<int>(), k = x[3].get<int>();
      const int e = x[4].get<int>();
      if (i >= jj) throw invalid_input("parameters must be canonical (i < j)");
      if (e == 0) throw invalid_input("exponents must be nonzero");
      const auto [v, sign] = make_param(M, i, jj, k);
      mono.push_back({v, sign * e});
    }
    terms.push_back({std::move(mono), c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json element_to_json(const SymbolicElement& x) {
  Json j;
  j["even"] = x.even();
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms) {
    Json t;
    t["word"] = w;
    t["coeff"] = poly_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SymbolicElement element_from_json(const CoxeterMatrix& M, const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw invalid_input("element JSON needs \"terms\"");
  SymbolicElement x;
  for (const Json& t : j["terms"]) {
    Word w = t.at("word").get<Word>();
    M.check_word(w);
    if (w != canonical_word(M, w))
      throw invalid_input("element words must be canonical reduced words");
    LaurentPoly c = poly_from_json(M, t.at("coeff"));
    if (c.is_zero()) continue;
    auto [it, fresh] = x.terms.emplace(std::move(w), std::move(c));
    if (!fresh) throw invalid_input("duplicate word in element");
  }
  return x;
}

Json pair_element_to_json(const PairElement& x) {
  Json j;
  j["even"] = x.even();
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms) {
    Json t;
    t["word"] = w;
    t["value"] = rational_str(c.val);
    t["sigma_value"] = rational_str(c.tw);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json assignment_to_json(const RationalAssignment& q) {
  Json out = Json::array();
  for (const auto& [v, val] : q) {
    Json e;
    e["param"] = Json::array({v.i, v.j, v.k});
    e["value"] = rational_str(val);
    out.push_back(std::move(e));
  }
  return out;
}

Json obstruction_to_json(const ObstructionRelation& rel) {
  Json j;
  j["triple"] = rel.triple;
  j["D"] = rel.D;
  Json exps = Json::array();
  for (const auto& e : rel.exponents) {
    Json x;
    x["pair"] = Json::array({e.a, e.b});
    x["m"] = e.m;
    x["exponent"] = e.exponent;
    exps.push_back(std::move(x));
  }
  j["exponents"] = std::move(exps);
  j["monomial"] = poly_to_json(rel.monomial);
  return j;
}

Json flatness_to_json(const FlatnessReport& rep) {
  Json j;
  j["flat"] = rep.flat;
  j["offending_triples"] = rep.offending_triples;
  Json obs = Json::array();
  for (const auto& rel : rep.obstructions) obs.push_back(obstruction_to_json(rel));
  j["obstructions"] = std::move(obs);
  return j;
}

Json witness_to_json(const WitnessSearchResult& res) {
  Json j;
  j["found"] = res.witness.has_value();
  j["bound"] = res.bound;
  j["seed"] = res.seed;
  j["words_checked"] = res.words_checked;
  j["triples_checked"] = res.triples_checked;
  j["assignment"] = assignment_to_json(res.assignment);
  if (res.witness) {
    const Witness& w = *res.witness;
    j["kind"] = w.kind == Witness::Kind::strategy ? "strategy" : "associativity";
    if (w.kind == Witness::Kind::strategy) {
      j["word"] = w.word;
      j["strategy_a"] = w.strategy_a;
      j["strategy_b"] = w.strategy_b;
    } else {
      j["triple"] = Json::array({w.triple[0], w.triple[1], w.triple[2]});
    }
    j["lhs"] = pair_element_to_json(w.lhs);
    j["rhs"] = pair_element_to_json(w.rhs);
  }
  return j;
}

Json signature_to_json(const FuchsianSignature& sig) {
  Json orders = Json::array();
  for (int m : sig.orders) {
    if (m == CoxeterMatrix::kInfinity)
      orders.push_back("inf");
    else
      orders.push_back(m);
  }
  Json j;
  j["orders"] = std::move(orders);
  return j;
}

FuchsianSignature signature_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders"))
    throw invalid_input("signature JSON needs \"orders\"");
  FuchsianSignature sig;
  for (const Json& m : j["orders"]) {
    if (m.is_string()) {
      if (m.get<std::string>() != "inf")
        throw invalid_input("signature orders must be integers >= 2 or \"inf\"");
      sig.orders.push_back(CoxeterMatrix::kInfinity);
    } else {
      sig.orders.push_back(m.get<int>());
    }
  }
  validate(sig);
  return sig;
}

Json complex_to_json(const CoxeterMatrix& M, const CellComplex2& c) {
  Json j;
  j["vertices"] = c.vertices.size();
  j["edges"] = c.edges.size();
  j["faces"] = c.faces.size();
  j["euler_characteristic"] = euler_characteristic(c);
  j["full"] = c.full;
  if (!c.full) j["ball_radius"] = c.ball_radius;
  std::map<std::pair<int, int>, std::size_t> by_pair;
  for (const auto& f : c.faces) ++by_pair[{f.i, f.j}];
  Json fb = Json::array();
  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    Json e;
    e["pair"] = Json::array({pair.first, pair.second});
    e["gon"] = 2 * m;
    e["count"] = by_pair.count(pair) ? by_pair[pair] : 0;
    fb.push_back(std::move(e));
  }
  j["faces_by_pair"] = std::move(fb);
  return j;
}

Json orbifold_to_json(const OrbifoldStats& s) {
  Json j;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  Json disks = Json::array();
  for (const auto& d : s.disks) {
    Json e;
    e["pair"] = Json::array({d.i, d.j});
    e["isotropy"] = d.isotropy;
    disks.push_back(std::move(e));
  }
  j["disks"] = std::move(disks);
  return j;
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const auto& a : q.arrows) {
    Json e;
    e["name"] = a.name;
    e["from"] = a.from;
    e["to"] = a.to;
    arrows.push_back(std::move(e));
  }
  j["arrows"] = std::move(arrows);
  j["relations"] = q.relations;
  return j;
}

Json sc_table_to_json(const StructureConstants& table) {
  Json out = Json::array();
  for (std::size_t x = 0; x < table.basis.size(); ++x)
    for (std::size_t y = 0; y < table.basis.size(); ++y) {
      Json e;
      e["x"] = table.basis[x];
      e["y"] = table.basis[y];
      e["product"] = element_to_json(table.products[x][y]);
      out.push_back(std::move(e));
    }
  return out;
}

Json word_to_json(const Word& w) { return Json(w); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw invalid_input("word must be an array of generator indices");
  return j.get<Word>();
}

}  // namespace coxdef
