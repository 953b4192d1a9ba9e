#include "specker/serialize.hpp"

#include "specker/error.hpp"
#include "specker/presentation.hpp"

namespace specker {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Scalar scalar_from_json(const Json& j, Domain domain) {
  Scalar s = j.is_number_integer() ? Scalar(j.get<long>()) : parse_scalar(as_string(j, "scalar"), Domain::rational);
  require_in_domain(s, domain);
  return s;
}

IdElem atoms_to_idem(const AlgebraPtr& alg, const std::vector<std::string>& names) {
  AtomMask bits = 0;
  for (const auto& name : names) {
    auto i = alg->atom_index(name);
    if (!i) bad("unknown atom '" + name + "'");
    bits |= AtomMask{1} << *i;
  }
  return IdElem(alg, bits);
}

}  // namespace

AlgebraPtr algebra_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra must be a JSON object");
  Domain domain = j.contains("domain") ? parse_domain(as_string(j.at("domain"), "domain")) : Domain::integer;
  if (j.contains("atoms")) {
    const Json& atoms = j.at("atoms");
    if (!atoms.is_array()) bad("'atoms' must be an array of names");
    std::vector<std::string> names;
    for (const auto& a : atoms) names.push_back(as_string(a, "atom name"));
    return Algebra::make(std::move(names), domain);
  }
  if (j.contains("free_generators")) {
    const Json& n = j.at("free_generators");
    if (!n.is_number_integer()) bad("'free_generators' must be an integer");
    return Algebra::make_free(n.get<int>(), max_free_generators, domain);
  }
  bad("algebra needs 'atoms' or 'free_generators'");
}

Json algebra_to_json(const Algebra& alg) {
  return Json{{"atoms", alg.atoms()}, {"domain", domain_name(alg.domain())}};
}

IdElem idem_from_json(const AlgebraPtr& alg, const Json& j) {
  if (j.is_array()) {
    std::vector<std::string> names;
    for (const auto& a : j) names.push_back(as_string(a, "atom name"));
    return atoms_to_idem(alg, names);
  }
  std::string text = as_string(j, "element literal");
  if (text == "0") return IdElem::zero(alg);
  if (text == "1") return IdElem::one(alg);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    std::vector<std::string> names;
    std::string inner = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
      std::size_t comma = inner.find(',', start);
      std::string name = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      while (!name.empty() && name.front() == ' ') name.erase(name.begin());
      while (!name.empty() && name.back() == ' ') name.pop_back();
      names.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return atoms_to_idem(alg, names);
  }
  return atoms_to_idem(alg, {text});
}

Json idem_to_json(const IdElem& e) {
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  Json names = Json::array();
  for (std::size_t i = 0; i < e.algebra()->atom_count(); ++i) {
    if ((e.bits() >> i) & 1) names.push_back(e.algebra()->atoms()[i]);
  }
  return names;
}

Element element_from_json(const AlgebraPtr& alg, const Json& j) {
  if (j.is_object() && j.contains("expr")) {
    return normalize_term(*parse_term(as_string(j.at("expr"), "expr")), alg);
  }
  std::string rep = as_string(field(j, "rep"), "rep");
  if (rep == "perp") {
    std::vector<std::pair<Scalar, IdElem>> entries;
    for (const auto& e : field(j, "entries")) {
      entries.emplace_back(scalar_from_json(field(e, "value"), alg->domain()), idem_from_json(alg, field(e, "idem")));
    }
    return perp_normalize(alg, entries);
  }
  if (rep == "flat") {
    std::vector<Step> steps;
    for (const auto& s : field(j, "steps")) {
      steps.push_back({scalar_from_json(field(s, "upto"), alg->domain()), idem_from_json(alg, field(s, "idem")).bits()});
    }
    if (steps.empty()) bad("a flat element needs at least one step");
    return FlatElem::from_decreasing(alg, std::move(steps));
  }
  bad("unknown element representation '" + rep + "'");
}

Json element_to_json(const PerpElem& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries()) {
    entries.push_back({{"value", e.value.to_string()}, {"idem", idem_to_json(IdElem(f.algebra(), e.idem))}});
  }
  return Json{{"rep", "perp"}, {"entries", std::move(entries)}};
}

Json element_to_json(const FlatElem& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    steps.push_back({{"upto", s.upto.to_string()}, {"idem", idem_to_json(IdElem(f.algebra(), s.idem))}});
  }
  return Json{{"rep", "flat"}, {"steps", std::move(steps)}};
}

Json element_to_json(const Element& e) {
  return std::visit([](const auto& x) { return element_to_json(x); }, e);
}

ProxRel proximity_from_json(const AlgebraPtr& alg, const Json& j) {
  if (j.is_object() && j.contains("proximity")) return proximity_from_json(alg, j.at("proximity"));
  if (j.is_string()) {
    if (j.get<std::string>() == "leq") return ProxRel::leq(alg);
    bad("unknown proximity '" + j.get<std::string>() + "'");
  }
  std::vector<std::pair<IdElem, IdElem>> pairs;
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) bad("each proximity pair must be a two-element array");
    pairs.emplace_back(idem_from_json(alg, p[0]), idem_from_json(alg, p[1]));
  }
  return ProxRel::from_pairs(alg, pairs);
}

Json proximity_to_json(const ProxRel& rel) {
  if (rel.is_leq_kind()) return Json{{"proximity", "leq"}};
  Json pairs = Json::array();
  for (const auto& [e, f] : rel.pairs()) {
    pairs.push_back({idem_to_json(IdElem(rel.algebra(), e)), idem_to_json(IdElem(rel.algebra(), f))});
  }
  return Json{{"proximity", {{"pairs", std::move(pairs)}}}};
}

DVMorphism morphism_from_json(const Json& j) {
  auto side = [](const Json& s) {
    AlgebraPtr alg = algebra_from_json(s);
    return s.contains("proximity") ? proximity_from_json(alg, s.at("proximity")) : ProxRel::leq(alg);
  };
  ProxRel source = side(field(j, "source"));
  ProxRel target = side(field(j, "target"));
  const AlgebraPtr& a = source.algebra();
  if (a->atom_count() > table_atom_bound) fail(ErrorCode::too_large, "morphism source algebra too large");
  const Json& map = field(j, "map");
  if (!map.is_object()) bad("'map' must be an object from element literals to element literals");
  std::vector<AtomMask> table(a->element_count(), 0);
  std::vector<bool> seen(a->element_count(), false);
  for (const auto& [key, value] : map.items()) {
    AtomMask e = idem_from_json(a, Json(key)).bits();
    if (seen[e]) bad("element '" + key + "' is mapped twice");
    seen[e] = true;
    table[e] = idem_from_json(target.algebra(), value).bits();
  }
  for (AtomMask e = 0; e < seen.size(); ++e) {
    if (!seen[e]) bad("map has no entry for " + IdElem(a, e).to_string());
  }
  return DVMorphism::from_table(std::move(source), std::move(target), std::move(table));
}

Json morphism_to_json(const DVMorphism& m) {
  auto side = [](const ProxRel& rel) {
    Json s = algebra_to_json(*rel.algebra());
    s["proximity"] = proximity_to_json(rel).at("proximity");
    return s;
  };
  Json map = Json::object();
  const AlgebraPtr& a = m.source().algebra();
  for (AtomMask e = 0; e < a->element_count(); ++e) {
    map[IdElem(a, e).to_string()] = IdElem(m.target().algebra(), m.apply(e)).to_string();
  }
  return Json{{"source", side(m.source())}, {"target", side(m.target())}, {"map", std::move(map)}};
}

Json report_to_json(const ProxReport& r) {
  Json axioms = Json::array();
  for (const auto& o : r.axioms) {
    Json a{{"axiom", o.axiom}, {"passed", o.passed}, {"checked", o.checked}};
    if (!o.passed) a["witness"] = o.witness;
    axioms.push_back(std::move(a));
  }
  return Json{{"subject", r.subject}, {"passed", r.passed()}, {"summary", r.summary()},
              {"samples", r.samples},  {"seed", r.seed},       {"axioms", std::move(axioms)}};
}

}  // namespace specker
