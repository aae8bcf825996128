#include "etype/soliton/soliton_types.hpp"

#include "etype/errors.hpp"

namespace etype::soliton {

using warped::KeyValueRecord;

std::string to_string(LambdaSemantics::Kind kind) {
  switch (kind) {
    case LambdaSemantics::Kind::constant: return "constant";
    case LambdaSemantics::Kind::unconstrained: return "unconstrained";
    case LambdaSemantics::Kind::sigma_k_minus_nu: return "sigma_k-minus-nu";
  }
  return "unknown";
}

EinsteinTypeParams SolitonTypeEntry::params() const {
  const LambdaMode mode = lambda.kind == LambdaSemantics::Kind::constant        ? LambdaMode::constant
                          : lambda.kind == LambdaSemantics::Kind::unconstrained ? LambdaMode::unconstrained
                                                                                : LambdaMode::function_of_r;
  return EinsteinTypeParams(alpha, beta, mu, rho, mode);
}

std::vector<SolitonTypeEntry> soliton_type_table(const SolitonTypeOptions& o) {
  if (o.dimension < 3) throw DimensionError("soliton table needs n >= 3");
  if (o.sigma_index < 1 || o.sigma_index > o.dimension)
    throw InvalidParametersError("k-Yamabe index must satisfy 1 <= k <= n");
  if (o.quasi_k == 0.0) throw InvalidParametersError("quasi-Yamabe constant k must be nonzero");
  using K = LambdaSemantics::Kind;
  return {
      {"gradient Yamabe soliton", 0, 1, 0, 1, {K::constant}},
      {"gradient almost Yamabe soliton", 0, 1, 0, 1, {K::unconstrained}},
      {"gradient k-Yamabe soliton", 0, 1.0 / (2.0 * (o.dimension - 1)), 0, 0,
       {K::sigma_k_minus_nu, o.sigma_index, o.nu}},
      {"gradient conformal soliton", 0, 1, 0, 0, {K::unconstrained}},
      {"gradient quasi-Yamabe soliton", 0, 1, -1.0 / o.quasi_k, 1, {K::constant}},
  };
}

SolitonTypeEntry lookup(const std::string& name, const SolitonTypeOptions& options) {
  for (auto& entry : soliton_type_table(options))
    if (entry.name == name) return entry;
  throw UnknownNameError("unknown soliton type: " + name);
}

KeyValueRecord to_record(const SolitonTypeEntry& e) {
  KeyValueRecord rec;
  rec.set("kind", "soliton-type");
  rec.set("name", e.name);
  rec.set("parameters", std::vector<double>{e.alpha, e.beta, e.mu, e.rho});
  rec.set("lambda", to_string(e.lambda.kind));
  if (e.lambda.kind == LambdaSemantics::Kind::sigma_k_minus_nu) {
    rec.set("sigma_index", static_cast<double>(e.lambda.k));
    rec.set("nu", e.lambda.nu);
  }
  return rec;
}

SolitonTypeEntry soliton_type_from_record(const KeyValueRecord& rec) {
  if (rec.get_or("kind", "") != "soliton-type") throw ParseError("record is not a soliton-type");
  SolitonTypeEntry e;
  e.name = rec.get("name");
  const auto p = rec.get_doubles("parameters");
  if (p.size() != 4) throw ParseError("soliton-type parameters need four values");
  e.alpha = p[0];
  e.beta = p[1];
  e.mu = p[2];
  e.rho = p[3];
  const std::string lam = rec.get("lambda");
  if (lam == "constant") {
    e.lambda.kind = LambdaSemantics::Kind::constant;
  } else if (lam == "unconstrained") {
    e.lambda.kind = LambdaSemantics::Kind::unconstrained;
  } else if (lam == "sigma_k-minus-nu") {
    e.lambda.kind = LambdaSemantics::Kind::sigma_k_minus_nu;
    e.lambda.k = static_cast<int>(rec.get_double("sigma_index"));
    e.lambda.nu = rec.get_double("nu");
  } else {
    throw ParseError("unknown lambda semantics: " + lam);
  }
  return e;
}

KeyValueRecord to_record(const TheoremCase& tc) {
  KeyValueRecord rec;
  rec.set("kind", "theorem-case");
  rec.set("tag", to_string(tc.tag));
  rec.set("a", tc.a);
  rec.set("b", tc.b);
  rec.set("c1", tc.c1);
  rec.set("c", tc.c);
  rec.set("convention", tc.convention == QuadraticConvention::statement ? "statement" : "derivation");
  return rec;
}

TheoremCase theorem_case_from_record(const KeyValueRecord& rec) {
  if (rec.get_or("kind", "") != "theorem-case") throw ParseError("record is not a theorem-case");
  TheoremCase tc;
  tc.tag = parse_case_tag(rec.get("tag"));
  tc.a = rec.get_double("a");
  tc.b = rec.get_double("b");
  tc.c1 = rec.get_double("c1");
  tc.c = rec.get_double("c");
  const std::string conv = rec.get_or("convention", "statement");
  if (conv != "statement" && conv != "derivation") throw ParseError("unknown convention: " + conv);
  tc.convention = conv == "statement" ? QuadraticConvention::statement : QuadraticConvention::derivation;
  if (is_constructive(tc.tag)) tc.validate();
  return tc;
}

}  // namespace etype::soliton
