#include "specker/specker.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "specker/error.hpp"
#include "specker/morphisms.hpp"
#include "specker/oracle.hpp"
#include "specker/presentation.hpp"
#include "specker/serialize.hpp"
#include "specker/text.hpp"

struct specker_algebra {
  specker::AlgebraPtr alg;
};
struct specker_element {
  specker::Element value;
};
struct specker_proximity {
  specker::ProxRel rel;
};
struct specker_morphism {
  specker::DVMorphism m;
};
struct specker_report {
  specker::ProxReport report;
};

namespace {

using namespace specker;

thread_local std::string last_error;

specker_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return SPECKER_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return SPECKER_ERR_PARSE;
    case ErrorCode::algebra_mismatch: return SPECKER_ERR_ALGEBRA_MISMATCH;
    case ErrorCode::domain: return SPECKER_ERR_DOMAIN;
    case ErrorCode::too_large: return SPECKER_ERR_TOO_LARGE;
    case ErrorCode::unbound_name: return SPECKER_ERR_UNBOUND_NAME;
    case ErrorCode::no_witness: return SPECKER_ERR_NO_WITNESS;
    case ErrorCode::not_devries: return SPECKER_ERR_NOT_DEVRIES;
    case ErrorCode::internal: return SPECKER_ERR_INTERNAL;
  }
  return SPECKER_ERR_INTERNAL;
}

template <class F>
specker_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SPECKER_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return SPECKER_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPECKER_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPECKER_ERR_INTERNAL;
  }
}

specker_status null_argument() {
  last_error = "null argument";
  return SPECKER_ERR_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SampleConfig config_of(const specker_sample_config& c) { return SampleConfig{c.samples, c.coeff_bound, c.seed}; }

FlatElem as_flat(const Element& e) {
  if (const auto* f = std::get_if<FlatElem>(&e)) return *f;
  return alpha(std::get<PerpElem>(e));
}

PerpElem as_perp(const Element& e) {
  if (const auto* f = std::get_if<PerpElem>(&e)) return *f;
  return alpha_inv(std::get<FlatElem>(e));
}

const AlgebraPtr& algebra_of(const Element& e) {
  return std::visit([](const auto& x) -> const AlgebraPtr& { return x.algebra(); }, e);
}

}  // namespace

extern "C" {

const char* specker_version(void) { return "0.1.0"; }

const char* specker_last_error(void) { return last_error.c_str(); }

const char* specker_status_name(specker_status status) {
  switch (status) {
    case SPECKER_OK: return "ok";
    case SPECKER_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SPECKER_ERR_PARSE: return "parse";
    case SPECKER_ERR_ALGEBRA_MISMATCH: return "algebra_mismatch";
    case SPECKER_ERR_DOMAIN: return "domain";
    case SPECKER_ERR_TOO_LARGE: return "too_large";
    case SPECKER_ERR_UNBOUND_NAME: return "unbound_name";
    case SPECKER_ERR_NO_WITNESS: return "no_witness";
    case SPECKER_ERR_NOT_DEVRIES: return "not_devries";
    case SPECKER_ERR_INTERNAL: return "internal";
    case SPECKER_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

void specker_string_free(char* s) { std::free(s); }

specker_sample_config specker_default_config(void) { return specker_sample_config{200, 10, 0}; }

specker_status specker_algebra_from_json(const char* json, specker_algebra** out) {
  if (!json || !out) return null_argument();
  return guard([&] { *out = new specker_algebra{algebra_from_json(Json::parse(json))}; });
}

specker_status specker_algebra_to_json(const specker_algebra* alg, char** out) {
  if (!alg || !out) return null_argument();
  return guard([&] { *out = dup(algebra_to_json(*alg->alg).dump()); });
}

specker_status specker_algebra_element_count(const specker_algebra* alg, uint64_t* out) {
  if (!alg || !out) return null_argument();
  return guard([&] {
    if (alg->alg->atom_count() >= 64) fail(ErrorCode::too_large, "element count does not fit in 64 bits");
    *out = alg->alg->element_count();
  });
}

void specker_algebra_free(specker_algebra* alg) { delete alg; }

specker_status specker_element_from_json(const specker_algebra* alg, const char* json, specker_element** out) {
  if (!alg || !json || !out) return null_argument();
  return guard([&] { *out = new specker_element{element_from_json(alg->alg, Json::parse(json))}; });
}

specker_status specker_element_from_expr(const specker_algebra* alg, const char* expr, specker_element** out) {
  if (!alg || !expr || !out) return null_argument();
  return guard([&] { *out = new specker_element{normalize_term(*parse_term(expr), alg->alg)}; });
}

specker_status specker_element_rep(const specker_element* e, specker_rep* out) {
  if (!e || !out) return null_argument();
  *out = std::holds_alternative<PerpElem>(e->value) ? SPECKER_REP_PERP : SPECKER_REP_FLAT;
  return SPECKER_OK;
}

specker_status specker_element_to_text(const specker_element* e, char** out) {
  if (!e || !out) return null_argument();
  return guard([&] { *out = dup(std::visit([](const auto& x) { return to_text(x); }, e->value)); });
}

specker_status specker_element_to_json(const specker_element* e, char** out) {
  if (!e || !out) return null_argument();
  return guard([&] { *out = dup(element_to_json(e->value).dump()); });
}

specker_status specker_element_pointwise(const specker_element* e, char** out) {
  if (!e || !out) return null_argument();
  return guard([&] { *out = dup(std::visit([](const auto& x) { return stone_eval(x).to_string(); }, e->value)); });
}

specker_status specker_element_convert(const specker_element* e, specker_rep rep, specker_element** out) {
  if (!e || !out) return null_argument();
  return guard([&] {
    if (rep == SPECKER_REP_PERP) *out = new specker_element{as_perp(e->value)};
    else if (rep == SPECKER_REP_FLAT) *out = new specker_element{as_flat(e->value)};
    else fail(ErrorCode::invalid_argument, "unknown representation");
  });
}

specker_status specker_element_binary(specker_binop op, const specker_element* a, const specker_element* b,
                                      specker_element** out) {
  if (!a || !b || !out) return null_argument();
  return guard([&] {
    require_same(algebra_of(a->value), algebra_of(b->value));
    if (std::holds_alternative<PerpElem>(a->value)) {
      const PerpElem& x = std::get<PerpElem>(a->value);
      PerpElem y = as_perp(b->value);
      switch (op) {
        case SPECKER_OP_ADD: *out = new specker_element{perp_add(x, y)}; return;
        case SPECKER_OP_SUB: *out = new specker_element{perp_sub(x, y)}; return;
        case SPECKER_OP_MUL: *out = new specker_element{perp_mul(x, y)}; return;
        case SPECKER_OP_MEET: *out = new specker_element{perp_meet(x, y)}; return;
        case SPECKER_OP_JOIN: *out = new specker_element{perp_join(x, y)}; return;
      }
    } else {
      const FlatElem& x = std::get<FlatElem>(a->value);
      FlatElem y = as_flat(b->value);
      switch (op) {
        case SPECKER_OP_ADD: *out = new specker_element{flat_add(x, y)}; return;
        case SPECKER_OP_SUB: *out = new specker_element{flat_sub(x, y)}; return;
        case SPECKER_OP_MUL: *out = new specker_element{flat_mul_general(x, y)}; return;
        case SPECKER_OP_MEET: *out = new specker_element{flat_meet(x, y)}; return;
        case SPECKER_OP_JOIN: *out = new specker_element{flat_join(x, y)}; return;
      }
    }
    fail(ErrorCode::invalid_argument, "unknown operation");
  });
}

specker_status specker_element_scalar_mul(const char* scalar, const specker_element* e, specker_element** out) {
  if (!scalar || !e || !out) return null_argument();
  return guard([&] {
    Scalar b = parse_scalar(scalar, algebra_of(e->value)->domain());
    if (const auto* f = std::get_if<PerpElem>(&e->value)) *out = new specker_element{perp_scalar_mul(b, *f)};
    else *out = new specker_element{flat_scalar_general(b, std::get<FlatElem>(e->value))};
  });
}

specker_status specker_element_compare(const specker_element* a, const specker_element* b, specker_order* out) {
  if (!a || !b || !out) return null_argument();
  return guard([&] {
    require_same(algebra_of(a->value), algebra_of(b->value));
    bool le = false, ge = false;
    if (std::holds_alternative<PerpElem>(a->value)) {
      PerpElem x = as_perp(a->value), y = as_perp(b->value);
      le = perp_leq(x, y);
      ge = perp_leq(y, x);
    } else {
      FlatElem x = as_flat(a->value), y = as_flat(b->value);
      le = flat_leq(x, y);
      ge = flat_leq(y, x);
    }
    *out = le && ge ? SPECKER_ORDER_EQUAL
           : le     ? SPECKER_ORDER_LEQ
           : ge     ? SPECKER_ORDER_GEQ
                    : SPECKER_ORDER_INCOMPARABLE;
  });
}

void specker_element_free(specker_element* e) { delete e; }

specker_status specker_proximity_from_json(const specker_algebra* alg, const char* json, specker_proximity** out) {
  if (!alg || !json || !out) return null_argument();
  return guard([&] {
    std::string text(json);
    // A bare word such as leq is accepted as shorthand for the JSON string.
    Json j = text == "leq" ? Json("leq") : Json::parse(text);
    *out = new specker_proximity{proximity_from_json(alg->alg, j)};
  });
}

specker_status specker_proximity_to_json(const specker_proximity* rel, char** out) {
  if (!rel || !out) return null_argument();
  return guard([&] { *out = dup(proximity_to_json(rel->rel).dump()); });
}

specker_status specker_proximity_is_devries(const specker_proximity* rel, int* out) {
  if (!rel || !out) return null_argument();
  *out = rel->rel.is_devries() ? 1 : 0;
  return SPECKER_OK;
}

specker_status specker_proximity_check(const specker_proximity* rel, specker_report** out) {
  if (!rel || !out) return null_argument();
  return guard([&] { *out = new specker_report{check_devries(rel->rel)}; });
}

specker_status specker_proximity_enumerate(const specker_algebra* alg, size_t* count, char** json) {
  if (!alg || !count || !json) return null_argument();
  return guard([&] {
    auto found = enumerate_devries(alg->alg);
    Json arr = Json::array();
    for (const auto& rel : found) arr.push_back(proximity_to_json(rel));
    *json = dup(arr.dump());
    *count = found.size();
  });
}

specker_status specker_proximity_lift_check(const specker_proximity* rel, const specker_element* s,
                                            const specker_element* t, int* out) {
  if (!rel || !s || !t || !out) return null_argument();
  return guard([&] { *out = lift_check(rel->rel, as_flat(s->value), as_flat(t->value)) ? 1 : 0; });
}

specker_status specker_proximity_sample(const specker_proximity* rel, specker_sample_config config,
                                        specker_report** out) {
  if (!rel || !out) return null_argument();
  return guard([&] { *out = new specker_report{prox_axiom_sample(rel->rel, config_of(config))}; });
}

void specker_proximity_free(specker_proximity* rel) { delete rel; }

specker_status specker_morphism_from_json(const char* json, specker_morphism** out) {
  if (!json || !out) return null_argument();
  return guard([&] { *out = new specker_morphism{morphism_from_json(Json::parse(json))}; });
}

specker_status specker_morphism_to_json(const specker_morphism* m, char** out) {
  if (!m || !out) return null_argument();
  return guard([&] { *out = dup(morphism_to_json(m->m).dump()); });
}

specker_status specker_morphism_source(const specker_morphism* m, specker_algebra** out) {
  if (!m || !out) return null_argument();
  return guard([&] { *out = new specker_algebra{m->m.source().algebra()}; });
}

specker_status specker_morphism_check(const specker_morphism* m, specker_report** out) {
  if (!m || !out) return null_argument();
  return guard([&] { *out = new specker_report{check_dv_morphism(m->m)}; });
}

specker_status specker_morphism_check_lift(const specker_morphism* m, specker_sample_config config,
                                           specker_report** out) {
  if (!m || !out) return null_argument();
  return guard([&] { *out = new specker_report{check_prox_morphism_sample(lift_morphism(m->m), config_of(config))}; });
}

specker_status specker_morphism_apply(const specker_morphism* m, const specker_element* e, specker_element** out) {
  if (!m || !e || !out) return null_argument();
  return guard([&] { *out = new specker_element{apply_prox_morphism(lift_morphism(m->m), as_flat(e->value))}; });
}

specker_status specker_morphism_compose(const specker_morphism* second, const specker_morphism* first,
                                        specker_morphism** out) {
  if (!second || !first || !out) return null_argument();
  return guard([&] { *out = new specker_morphism{star_compose_dv(second->m, first->m)}; });
}

specker_status specker_morphism_naturality(const specker_morphism* m, specker_sample_config config,
                                           specker_report** out) {
  if (!m || !out) return null_argument();
  return guard([&] { *out = new specker_report{naturality_check(m->m, config_of(config))}; });
}

void specker_morphism_free(specker_morphism* m) { delete m; }

specker_status specker_equivalence_check(const specker_proximity* rel, specker_sample_config config,
                                         specker_report** out) {
  if (!rel || !out) return null_argument();
  return guard([&] { *out = new specker_report{equivalence_check(rel->rel, config_of(config))}; });
}

specker_status specker_oracle_diff(const specker_algebra* alg, specker_sample_config config, int* passed,
                                   char** jsonl) {
  if (!alg || !passed || !jsonl) return null_argument();
  return guard([&] {
    OracleReport r = oracle_diff(alg->alg, config.seed, config.samples, config.coeff_bound);
    *jsonl = dup(r.to_jsonl());
    *passed = r.passed() ? 1 : 0;
  });
}

int specker_report_passed(const specker_report* r) { return r && r->report.passed() ? 1 : 0; }

specker_status specker_report_summary(const specker_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guard([&] { *out = dup(r->report.summary()); });
}

specker_status specker_report_to_json(const specker_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guard([&] { *out = dup(report_to_json(r->report).dump()); });
}

void specker_report_free(specker_report* r) { delete r; }

}  // extern "C"
