#include "diagthue/json_io.hpp"

#include <sstream>

#include "diagthue/error.hpp"

namespace diagthue {

namespace {

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  throw Error(ErrorCode::kInvalidInput, "expected a rational string, got " + value.dump());
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::kInvalidInput, std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

int degree_from_json(const Json& spec) {
  const Json& r = field(spec, "r");
  if (!r.is_number_integer() || r.get<long>() < 1 || r.get<long>() > 1000) {
    throw Error(ErrorCode::kInvalidInput, "'r' must be an integer in [1, 1000]");
  }
  return r.get<int>();
}

std::string decimal(const RealBall& ball, int digits) { return ball.center().to_string(digits); }

Json optional_quad(const std::optional<QuadElem>& x) {
  return x ? to_json(*x) : Json(nullptr);
}

}  // namespace

QuadElem quad_from_json(const Json& value, std::int64_t d) {
  if (value.is_string() || value.is_number_integer()) return QuadElem(rational_from_json(value));
  if (!value.is_object()) throw Error(ErrorCode::kInvalidInput, "bad field element " + value.dump());
  if (value.contains("d") && value.at("d").get<std::int64_t>() != d) {
    throw Error(ErrorCode::kInvalidInput, "element " + value.dump() + " lies outside the form's field");
  }
  const Rational a = value.contains("a") ? rational_from_json(value.at("a")) : Rational(0);
  const Rational b = value.contains("b") ? rational_from_json(value.at("b")) : Rational(0);
  if (b != 0 && d == 0) throw Error(ErrorCode::kInvalidInput, "sqrt part given but d = 0");
  return b == 0 ? QuadElem(a) : QuadElem(a, b, d);
}

FormInput parse_form(const Json& spec) {
  const Json& kind = field(spec, "kind");
  const int r = degree_from_json(spec);
  if (kind == "int") {
    const Json& coeffs = field(spec, "coeffs");
    if (!coeffs.is_array()) throw Error(ErrorCode::kInvalidInput, "'coeffs' must be an array");
    std::vector<Integer> c;
    for (const auto& v : coeffs) {
      const Rational q = rational_from_json(v);
      if (!is_integer(q)) throw Error(ErrorCode::kInvalidInput, "coefficients must be integers");
      c.push_back(q.get_num());
    }
    return FormInput{std::nullopt, IntBinaryForm(r, std::move(c))};
  }
  if (kind != "diag") throw Error(ErrorCode::kInvalidInput, "'kind' must be \"diag\" or \"int\"");
  const std::int64_t d = spec.contains("d") ? spec.at("d").get<std::int64_t>() : 0;
  DiagForm form(r, quad_from_json(field(spec, "alpha"), d), quad_from_json(field(spec, "beta"), d),
                quad_from_json(field(spec, "gamma"), d), quad_from_json(field(spec, "delta"), d));
  IntBinaryForm expanded = form.expanded();
  return FormInput{std::move(form), std::move(expanded)};
}

Json form_to_json(const DiagForm& form) {
  return Json{{"kind", "diag"},         {"r", form.r()},
              {"d", form.d()},          {"alpha", to_json(form.alpha())},
              {"beta", to_json(form.beta())},   {"gamma", to_json(form.gamma())},
              {"delta", to_json(form.delta())}};
}

Json form_to_json(const IntBinaryForm& form) {
  Json coeffs = Json::array();
  for (const auto& c : form.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"kind", "int"}, {"r", form.degree()}, {"coeffs", coeffs}};
}

Json to_json(const QuadElem& x) {
  if (x.is_rational()) return to_string(x.a());
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", x.d()}};
}

Json to_json(const RealBall& ball, int digits) {
  return Json{{"center", ball.center().to_string(digits)},
              {"radius", ball.radius().to_string(6, MPFR_RNDU)}};
}

Json to_json(const Ball& ball, int digits) {
  return Json{{"real", to_json(ball.real(), digits)}, {"imag", to_json(ball.imag(), digits)}};
}

Json to_json(const InvariantSet& inv) {
  return Json{{"j", to_json(inv.j)},
              {"j_abs_squared", to_string(inv.j_abs_squared)},
              {"chi", to_json(inv.chi)},
              {"A", to_string(inv.A)},
              {"B", to_string(inv.B)},
              {"C", to_string(inv.C)},
              {"D", to_string(inv.D)},
              {"Delta", to_string(inv.Delta)},
              {"DeltaPrime", to_string(inv.DeltaPrime)}};
}

Json to_json(const FormClass& cls) {
  return Json{{"definite", cls.definite},
              {"even_degree", cls.even_degree},
              {"label", to_string(cls)}};
}

Json to_json(const RootRelation& rel) {
  return Json{{"omega_index", rel.omega_index},
              {"tie_flag", rel.tie_flag},
              {"certified_bits", rel.certified_bits}};
}

Json to_json(const SolutionRecord& rec) {
  const mpfr_prec_t bits = rec.precision;
  return Json{{"x", to_string(rec.x)},
              {"y", to_string(rec.y)},
              {"F", to_string(rec.F_value)},
              {"u", to_json(rec.u)},
              {"v", to_json(rec.v)},
              {"xi", to_json(rec.xi)},
              {"eta", to_json(rec.eta)},
              {"Z_squared", to_json(rec.Z_squared)},
              {"Z_exact", optional_quad(rec.Z_exact)},
              {"Z", to_json(rec.Z(bits))},
              {"zeta_squared", to_json(rec.zeta_squared)},
              {"zeta_exact", optional_quad(rec.zeta_exact)},
              {"zeta", to_json(rec.zeta(bits))},
              {"mu", optional_quad(rec.mu)},
              {"mu_inv", optional_quad(rec.mu_inv)},
              {"epsilon", rec.epsilon ? Json(*rec.epsilon) : Json(nullptr)},
              {"D_sign", rec.D_sign},
              {"omega_index", rec.omega_index},
              {"tie_flag", rec.tie_flag},
              {"precision", rec.precision},
              {"certified_bits", rec.certified_bits}};
}

Json to_json(const OmegaPartition& partition) {
  Json classes = Json::array();
  for (const auto& [k, members] : partition.classes) {
    Json list = Json::array();
    for (const auto& rec : members) list.push_back(Json::array({to_string(rec.x), to_string(rec.y)}));
    classes.push_back(Json{{"omega_index", k}, {"size", members.size()}, {"members", list}});
  }
  return Json{{"total", partition.total()}, {"classes", classes}};
}

Json to_json(const LemmaVerdict& verdict) {
  return Json{{"lemma", to_string(verdict.lemma)},
              {"status", to_string(verdict.status)},
              {"subject", verdict.subject},
              {"hypothesis_trace", verdict.hypothesis_trace},
              {"margin", verdict.margin ? to_json(*verdict.margin) : Json(nullptr)},
              {"log_scale", verdict.log_scale}};
}

Json to_json(const ZkReport& report) {
  return Json{{"verdict", to_json(report.verdict)},
              {"condition_j", report.condition_j},
              {"n", report.n},
              {"log_rhs_slope", to_json(report.log_rhs_slope)},
              {"divergence_n", report.divergence_n ? Json(*report.divergence_n) : Json(nullptr)}};
}

Json to_json(const PropertyQuintuple& p) {
  return Json{{"r", p.r},
              {"a", Json::array({to_string(p.a1), to_string(p.a2), to_string(p.a3),
                                 to_string(p.a4), to_string(p.a5)})},
              {"n", p.n},
              {"g", p.g},
              {"sigma_nonzero", p.sigma_nonzero},
              {"quintuple", p.to_string()}};
}

Json to_json(const InductionStep& step) {
  Json conditions = Json::object();
  static const char* kNames[4] = {"i", "ii", "iii", "iv"};
  for (int i = 0; i < 4; ++i) conditions[kNames[i]] = step.cond[i];
  return Json{{"input", to_json(step.input)},
              {"A1", to_string(step.A1)},
              {"B1", to_string(step.B1)},
              {"B2", to_string(step.B2)},
              {"B3", to_string(step.B3)},
              {"B4", to_string(step.B4)},
              {"premise", step.premise},
              {"conditions", conditions},
              {"successor", step.successor ? Json(step.successor->to_string()) : Json(nullptr)},
              {"successor_state", step.successor ? to_json(*step.successor) : Json(nullptr)}};
}

Json to_json(const HypothesisReport& report) {
  Json exponents = Json::object();
  for (const auto& f : report.threshold.factors()) {
    exponents[to_string(f.base)] = to_string(f.exponent);
  }
  return Json{{"theorem", report.spec.name()},
              {"r", report.spec.r},
              {"h", to_string(report.spec.h)},
              {"delta_prime", to_string(report.delta_prime)},
              {"threshold", report.threshold.to_string()},
              {"threshold_exponents", exponents},
              {"comparison", to_string(report.comparison)},
              {"strict", report.spec.strict()},
              {"verdict", report.verdict},
              {"case_row", to_string(report.case_row)},
              {"predicted_bound", report.predicted_bound},
              {"notes", report.notes}};
}

Json to_json(const ClassSaturation& s) {
  return Json{{"omega_index", s.omega_index},
              {"members", s.members},
              {"applicable", s.applicable},
              {"basis", s.basis},
              {"Z_floor", s.Z_floor ? to_json(*s.Z_floor) : Json(nullptr)},
              {"height_floor", s.height_floor ? to_json(*s.height_floor) : Json(nullptr)},
              {"saturated_within_box", s.saturated_within_box},
              {"label", "saturated within box evidence (heuristic, not a proof)"}};
}

Json to_json(const SolveReport& report) {
  Json solutions = Json::array();
  for (const auto& rec : report.solutions) solutions.push_back(to_json(rec));
  Json saturation = Json::array();
  for (const auto& s : report.saturation) saturation.push_back(to_json(s));
  Json out{{"H", report.H},
           {"h", to_string(report.h)},
           {"qualifier", SolveReport::kQualifier},
           {"N", report.N},
           {"solutions", solutions},
           {"partition", to_json(report.partition)},
           {"saturation", saturation}};
  if (report.theorem_consistency) {
    const auto& tc = *report.theorem_consistency;
    out["theorem_consistency"] = Json{{"verdict", tc.verdict},
                                      {"covered", tc.covered},
                                      {"consistent", tc.consistent},
                                      {"hypothesis", to_json(tc.hypothesis)},
                                      {"evidence", tc.evidence}};
  }
  return out;
}

std::string solutions_csv(const SolveReport& report) {
  std::ostringstream out;
  out << "x,y,F,Z,zeta,omega_index\n";
  for (const auto& rec : report.solutions) {
    out << rec.x << ',' << rec.y << ',' << rec.F_value << ',' << decimal(rec.Z(rec.precision), 17)
        << ',' << decimal(rec.zeta(rec.precision), 17) << ',' << rec.omega_index << '\n';
  }
  return out.str();
}

std::string threshold_csv(const std::vector<ThresholdRow>& rows) {
  std::ostringstream out;
  out << "r,h,log10_main,log10_akss_ii_m4,log10_siegel_l1,min_theorem\n";
  for (const auto& row : rows) {
    out << row.r << ',' << row.h << ',' << decimal(row.log10_main, 12) << ','
        << decimal(row.log10_akss_ii_m4, 12) << ',' << decimal(row.log10_siegel_l1, 12) << ','
        << row.min_theorem << '\n';
  }
  return out.str();
}

}  // namespace diagthue
