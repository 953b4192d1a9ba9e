#pragma once

#include <variant>

#include <json.hpp>

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/morphisms.hpp"
#include "specker/oracle.hpp"
#include "specker/perp.hpp"
#include "specker/proximity.hpp"
#include "specker/report.hpp"

namespace specker {

using Json = nlohmann::ordered_json;

/// `{"atoms":[...]}` or `{"free_generators":n}`, optional `"domain"`.
AlgebraPtr algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& alg);

/// `"0"`, `"1"`, an atom name, `"[p,q]"`, or `["p","q"]`.
IdElem idem_from_json(const AlgebraPtr& alg, const Json& j);
Json idem_to_json(const IdElem& e);

using Element = std::variant<PerpElem, FlatElem>;

/// `{"rep":"perp",...}`, `{"rep":"flat",...}`, or `{"expr":"..."}` (normalized to perp).
Element element_from_json(const AlgebraPtr& alg, const Json& j);
Json element_to_json(const PerpElem& f);
Json element_to_json(const FlatElem& f);
Json element_to_json(const Element& e);

/// `"leq"`, `{"pairs":[[e,f],...]}`, or either wrapped as `{"proximity":...}`.
ProxRel proximity_from_json(const AlgebraPtr& alg, const Json& j);
Json proximity_to_json(const ProxRel& rel);

/// `{"source":{algebra, "proximity"?}, "target":{...}, "map":{"0":"0",...}}`.
/// Proximities default to ≤; the map must cover every source element.
DVMorphism morphism_from_json(const Json& j);
Json morphism_to_json(const DVMorphism& m);

Json report_to_json(const ProxReport& r);

}  // namespace specker
