#include "pnc/json_io.hpp"

namespace pnc {

json to_json(const Integer& v) {
  if (v <= std::numeric_limits<long long>::max() &&
      v >= std::numeric_limits<long long>::min())
    return v.convert_to<long long>();
  return v.str();
}

json to_json(const Rational& q) {
  return json::array({to_json(rat_num(q)), to_json(rat_den(q))});
}

json to_json(const KeySequence& omega) { return json(omega.w); }

json to_json(const LaurentPoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms())
    out.push_back(json::array(
        {to_json(rat_num(c)), to_json(rat_den(c)), e.ex, e.ey}));
  return out;
}

json to_json(const GenericSeries& s) {
  json body = json::array();
  for (const auto& [e, c] : s.body)
    body.push_back(json::array({to_json(rat_num(c)), to_json(rat_den(c)),
                                to_json(rat_num(e)), to_json(rat_den(e))}));
  return json{{"body", body}, {"r", to_json(s.r)}};
}

json to_json(const BasisExpansion& e) {
  json out = json::array();
  for (const auto& [beta, c] : e.terms)
    out.push_back(json{{"beta", beta}, {"coefficient", to_json(c)}});
  return out;
}

json to_json(const SequenceClass& c) {
  return json{{"is_key", c.is_key},
              {"is_primitive", c.is_primitive},
              {"is_algebraic", c.is_algebraic},
              {"is_essential", c.is_essential},
              {"is_normal_form", c.is_normal_form},
              {"violations", c.violations}};
}

json to_json(const GcdLadder& lad) {
  return json{{"d", lad.d}, {"alpha", lad.alpha_}};
}

json to_json(const BoundedRep& rep) {
  return json{{"k", rep.k}, {"beta", rep.beta}};
}

json to_json(const SemigroupDecision& dec) {
  return json{{"member", dec.member}, {"witness", dec.witness}};
}

json to_json(const KeyFormSet& kf) {
  json forms = json::array();
  for (const LaurentPoly& g : kf.g) forms.push_back(to_json(g));
  json th = json::array();
  for (const Rational& t : kf.theta) th.push_back(to_json(t));
  return json{{"omega", to_json(kf.omega)}, {"theta", th}, {"g", forms}};
}

json to_json(const FormalPairs& fp) {
  json out = json::array();
  for (const auto& [q, p] : fp.qp) out.push_back(json::array({q, p}));
  return out;
}

json to_json(const SingularityReport& rep) {
  return json{{"k_canonical", rep.k_canonical},
              {"is_rational", rep.is_rational},
              {"is_elliptic", rep.is_elliptic},
              {"p_g", rep.p_g},
              {"quotient_type", json::array({rep.quotient_type.first,
                                             rep.quotient_type.second})},
              {"gorenstein_index", rep.gorenstein_index},
              {"is_gorenstein", rep.is_gorenstein},
              {"rigid_embedding", rep.rigid_embedding},
              {"algebraic", rep.algebraic},
              {"requires_algebraic", rep.requires_algebraic}};
}

json to_json(const EmbeddingEquations& eq) {
  json eqs = json::array();
  for (const WeightedEquation& g : eq.equations) {
    json mono = json::array();
    for (const auto& [c, exps] :
         equation_monomials(g, static_cast<int>(eq.weights.size()) - 3))
      mono.push_back(json{{"coefficient", to_json(c)}, {"exponents", exps}});
    eqs.push_back(json{{"k", g.k},
                       {"alpha", g.alpha},
                       {"w_power", g.w_power},
                       {"weighted_degree", g.weighted_degree},
                       {"theta", to_json(g.theta)},
                       {"beta", g.beta},
                       {"monomials", mono}});
  }
  return json{{"weights", eq.weights}, {"equations", eqs}};
}

json to_json(const CurveAtInfinityReport& rep) {
  json s = json::array();
  for (const auto& [a, b] : rep.semigroup_S_generators)
    s.push_back(json::array({a, b}));
  return json{{"semigroup_S_generators", s},
              {"tilde_S_generators", rep.tilde_S_generators},
              {"is_smooth_at_Pinf", rep.is_smooth_at_Pinf}};
}

json to_json(const BrentonResult& rep) {
  json fams = json::array();
  for (const BrentonFamily& f : rep.families) {
    json members = json::array();
    for (const KeySequence& w : f.members) members.push_back(to_json(w));
    fams.push_back(json{{"name", f.name},
                        {"ambient_weights", f.ambient},
                        {"members", members}});
  }
  json spec = json::array();
  for (const KeySequence& w : rep.specializations) spec.push_back(to_json(w));
  return json{{"families", fams}, {"specializations", spec}};
}

json to_json(const AutDescriptor& d) {
  json out{{"case", to_string(d.kase)},
           {"torus_rank", d.torus_rank},
           {"finite", d.finite},
           {"unipotent_dim", d.unipotent_dim},
           {"b_free", d.b_free},
           {"f_degree_bound", d.f_degree_bound}};
  out["finite_part_order"] =
      d.finite_part_order ? json(*d.finite_part_order) : json("infinite-dimensional");
  if (d.omega_hat) out["omega_hat"] = *d.omega_hat;
  return out;
}

json to_json(const ModuliReport& rep) {
  json th = json::array();
  for (const ActionExponent& e : rep.theta_exponents)
    th.push_back(json::array({e.mu, -e.beta0}));
  json checks = json::array();
  for (const CheckCoordinate& c : rep.check_coordinates)
    checks.push_back(json{{"stratum", c.stratum},
                          {"value", c.value},
                          {"algebraic", c.algebraic},
                          {"action", json::array({c.exponent.mu, -c.exponent.beta0})}});
  json out{{"mode", to_string(rep.mode)},
           {"n", rep.n},
           {"m", rep.m},
           {"torus_dim", rep.torus_dim},
           {"theta_action_exponents", th},
           {"check_coordinates", checks},
           {"omega_check_sets", rep.omega_check_sets},
           {"omega_check_alg_sets", rep.omega_check_alg_sets},
           {"excluded_sets", rep.excluded_sets}};
  if (rep.b_slot)
    out["b_slot_action"] = json::array({rep.b_slot->mu, -rep.b_slot->beta0});
  return out;
}

json to_json(const G2aReport& rep) {
  return json{{"q_omega", rep.q_omega},
              {"admits_action", rep.admits_action},
              {"picard1_g2a", rep.picard1_g2a},
              {"action_shape", to_string(rep.action_shape)},
              {"translation_param_dim", rep.translation_param_dim}};
}

json to_json(const CoordinateChange& t) {
  json f = json::array();
  for (const auto& [m, c] : t.f)
    f.push_back(json{{"exponent", m}, {"coefficient", to_json(c)}});
  return json{{"a", to_json(t.a)}, {"c", to_json(t.c)}, {"b", to_json(t.b)},
              {"f", f}};
}

json to_json(const NormalizeResult& r) {
  json th = json::array();
  for (const Rational& t : r.key_data.theta) th.push_back(to_json(t));
  return json{{"series", to_json(r.series)},
              {"transform", to_json(r.transform)},
              {"omega", to_json(r.key_data.omega)},
              {"theta", th}};
}

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  fail(Errc::UsageError, "expected an integer");
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_array() && j.size() == 2) {
    Integer n = integer_from_json(j[0]), d = integer_from_json(j[1]);
    if (d == 0) fail(Errc::UsageError, "zero denominator");
    return Rational(n, d);
  }
  fail(Errc::UsageError, "expected a rational as n or [n, d]");
}

KeySequence omega_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2)
    fail(Errc::UsageError, "--omega expects a JSON array of >= 2 integers");
  KeySequence omega;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      fail(Errc::UsageError, "--omega entries must be integers");
    omega.w.push_back(v.get<long long>());
  }
  return omega;
}

ThetaVector theta_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::UsageError, "--theta expects a JSON array");
  ThetaVector out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::UsageError, "polynomial JSON must be an array");
  LaurentPoly f;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4)
      fail(Errc::UsageError, "polynomial terms are [num, den, ex, ey]");
    Integer n = integer_from_json(t[0]), d = integer_from_json(t[1]);
    if (d == 0) fail(Errc::UsageError, "zero denominator");
    f.add_term(t[2].get<long long>(), t[3].get<long long>(), Rational(n, d));
  }
  return f;
}

GenericSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("body") || !j.contains("r"))
    fail(Errc::UsageError, "series JSON must be {\"body\": [...], \"r\": [n, d]}");
  std::map<Rational, Rational> body;
  for (const auto& t : j["body"]) {
    if (!t.is_array() || t.size() != 4)
      fail(Errc::UsageError, "series terms are [a_num, a_den, e_num, e_den]");
    Rational c(integer_from_json(t[0]), integer_from_json(t[1]));
    Rational e(integer_from_json(t[2]), integer_from_json(t[3]));
    if (body.count(e)) fail(Errc::UsageError, "duplicate series exponent");
    body[e] = c;
  }
  return parse_series(body, rational_from_json(j["r"]));
}

}  // namespace pnc
