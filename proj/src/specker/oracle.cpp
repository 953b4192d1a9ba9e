#include "specker/oracle.hpp"

#include <json.hpp>

#include "specker/error.hpp"
#include "specker/sampling.hpp"
#include "specker/text.hpp"

namespace specker {

bool operator==(const PointFn& a, const PointFn& b) {
  return a.alg->same_as(*b.alg) && a.values == b.values;
}

std::string PointFn::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += alg->atoms()[i] + "↦" + values[i].to_string();
  }
  return out + "}";
}

PointFn stone_eval(const PerpElem& f) {
  const AlgebraPtr& alg = f.algebra();
  PointFn out{alg, std::vector<Scalar>(alg->atom_count())};
  for (std::size_t x = 0; x < alg->atom_count(); ++x) {
    for (const auto& e : f.entries()) {
      if ((e.idem >> x) & 1) out.values[x] = e.value;
    }
  }
  return out;
}

PointFn stone_eval(const FlatElem& f) {
  const AlgebraPtr& alg = f.algebra();
  PointFn out{alg, std::vector<Scalar>(alg->atom_count())};
  for (std::size_t x = 0; x < alg->atom_count(); ++x) {
    for (const auto& s : f.steps()) {
      if ((s.idem >> x) & 1) out.values[x] = s.upto;  // steps ascend, so the last hit is the largest
    }
  }
  return out;
}

PerpElem from_point_fn(const PointFn& f) {
  std::vector<PerpEntry> entries;
  for (std::size_t x = 0; x < f.values.size(); ++x) entries.push_back({f.values[x], AtomMask{1} << x});
  return perp_normalize_masks(f.alg, std::move(entries));
}

PointFn oracle_apply(std::string_view op, const std::vector<PointFn>& args, const std::optional<Scalar>& scalar) {
  const bool unary = op == "neg" || op == "scalar";
  if (args.size() != (unary ? 1u : 2u)) fail(ErrorCode::invalid_argument, "wrong number of arguments for " + std::string(op));
  if (!unary) require_same(args[0].alg, args[1].alg);
  if (op == "scalar" && !scalar) fail(ErrorCode::invalid_argument, "scalar operation needs a scalar");
  PointFn out{args[0].alg, {}};
  for (std::size_t x = 0; x < args[0].values.size(); ++x) {
    const Scalar& a = args[0].values[x];
    if (op == "neg") out.values.push_back(-a);
    else if (op == "scalar") out.values.push_back(*scalar * a);
    else {
      const Scalar& b = args[1].values[x];
      if (op == "add") out.values.push_back(a + b);
      else if (op == "sub") out.values.push_back(a - b);
      else if (op == "mul") out.values.push_back(a * b);
      else if (op == "min") out.values.push_back(min(a, b));
      else if (op == "max") out.values.push_back(max(a, b));
      else fail(ErrorCode::invalid_argument, "unknown oracle operation '" + std::string(op) + "'");
    }
  }
  return out;
}

bool OracleReport::passed() const { return first_mismatch() == nullptr; }

const OracleRecord* OracleReport::first_mismatch() const {
  for (const auto& r : records) {
    if (!r.ok) return &r;
  }
  return nullptr;
}

std::string OracleReport::to_jsonl() const {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j{{"op", r.op}, {"seed", r.seed}, {"case", r.case_index}, {"status", r.ok ? "pass" : "fail"}};
    if (!r.ok) j["witness"] = r.witness;
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

bool pointwise_leq(const PointFn& a, const PointFn& b) {
  for (std::size_t x = 0; x < a.values.size(); ++x) {
    if (b.values[x] < a.values[x]) return false;
  }
  return true;
}

}  // namespace

OracleReport oracle_diff(const AlgebraPtr& alg, std::uint64_t seed, std::size_t samples, long coeff_bound,
                         const OperationTable& ops) {
  OracleReport report;
  report.seed = seed;
  report.samples = samples;
  Rng rng(seed);
  const long k = coeff_bound;

  for (std::size_t i = 0; i < samples; ++i) {
    PerpElem f = random_perp(alg, rng, k);
    PerpElem g = random_perp(alg, rng, k);
    FlatElem u = random_flat(alg, rng, k);
    FlatElem v = random_flat(alg, rng, k);
    FlatElem nu = random_nonneg_flat(alg, rng, k);
    FlatElem nv = random_nonneg_flat(alg, rng, k);
    Scalar b = random_scalar(rng, k, alg->domain());
    Scalar pb = random_positive_scalar(rng, k, alg->domain());
    const PointFn F = stone_eval(f), G = stone_eval(g), U = stone_eval(u), V = stone_eval(v);
    const PointFn NU = stone_eval(nu), NV = stone_eval(nv);

    auto record = [&](const std::string& op, const std::string& inputs, auto&& compute) {
      OracleRecord r{op, seed, i, true, {}};
      try {
        auto [ok, detail] = compute();
        if (!ok) {
          r.ok = false;
          r.witness = inputs + "; " + detail;
        }
      } catch (const Error& e) {
        r.ok = false;
        r.witness = inputs + "; threw: " + e.what();
      }
      report.records.push_back(std::move(r));
    };
    auto compare = [](const PointFn& got, const PointFn& want) {
      return std::pair{got == want, "got " + got.to_string() + ", expected " + want.to_string()};
    };
    auto compare_bool = [](bool got, bool want) {
      return std::pair{got == want, std::string("got ") + (got ? "true" : "false")};
    };
    const std::string fg = "f=" + to_text(f) + " g=" + to_text(g);
    const std::string uv = "f=" + to_text(u) + " g=" + to_text(v);
    const std::string nuv = "f=" + to_text(nu) + " g=" + to_text(nv);

    record("perp_add", fg, [&] { return compare(stone_eval(ops.perp_add(f, g)), oracle_apply("add", {F, G})); });
    record("perp_sub", fg, [&] { return compare(stone_eval(ops.perp_sub(f, g)), oracle_apply("sub", {F, G})); });
    record("perp_mul", fg, [&] { return compare(stone_eval(ops.perp_mul(f, g)), oracle_apply("mul", {F, G})); });
    record("perp_scalar_mul", fg + " b=" + b.to_string(),
           [&] { return compare(stone_eval(ops.perp_scalar_mul(b, f)), oracle_apply("scalar", {F}, b)); });
    record("perp_neg", fg, [&] { return compare(stone_eval(ops.perp_neg(f)), oracle_apply("neg", {F})); });
    record("perp_meet", fg, [&] { return compare(stone_eval(ops.perp_meet(f, g)), oracle_apply("min", {F, G})); });
    record("perp_join", fg, [&] { return compare(stone_eval(ops.perp_join(f, g)), oracle_apply("max", {F, G})); });
    record("perp_leq", fg, [&] { return compare_bool(ops.perp_leq(f, g), pointwise_leq(F, G)); });
    record("alpha", fg, [&] { return compare(stone_eval(ops.alpha(f)), F); });
    record("alpha_inv", uv, [&] { return compare(stone_eval(ops.alpha_inv(u)), U); });
    record("flat_add", uv, [&] { return compare(stone_eval(ops.flat_add(u, v)), oracle_apply("add", {U, V})); });
    record("flat_sub", uv, [&] { return compare(stone_eval(ops.flat_sub(u, v)), oracle_apply("sub", {U, V})); });
    record("flat_scalar_pos", uv + " b=" + pb.to_string(),
           [&] { return compare(stone_eval(ops.flat_scalar_pos(pb, u)), oracle_apply("scalar", {U}, pb)); });
    record("flat_scalar_general", uv + " b=" + b.to_string(),
           [&] { return compare(stone_eval(ops.flat_scalar_general(b, u)), oracle_apply("scalar", {U}, b)); });
    record("flat_mul_nonneg", nuv,
           [&] { return compare(stone_eval(ops.flat_mul_nonneg(nu, nv)), oracle_apply("mul", {NU, NV})); });
    record("flat_mul_general", uv,
           [&] { return compare(stone_eval(ops.flat_mul_general(u, v)), oracle_apply("mul", {U, V})); });
    record("flat_neg", uv, [&] { return compare(stone_eval(ops.flat_neg(u)), oracle_apply("neg", {U})); });
    record("flat_meet", uv, [&] { return compare(stone_eval(ops.flat_meet(u, v)), oracle_apply("min", {U, V})); });
    record("flat_join", uv, [&] { return compare(stone_eval(ops.flat_join(u, v)), oracle_apply("max", {U, V})); });
    record("flat_leq", uv, [&] { return compare_bool(ops.flat_leq(u, v), pointwise_leq(U, V)); });
  }
  return report;
}

}  // namespace specker
