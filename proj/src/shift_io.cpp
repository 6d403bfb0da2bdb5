#include "shiftlab/shift_io.hpp"

#include <cmath>

namespace shiftlab {

namespace {

Json exact_real_to_json(const ExactReal& v) {
  if (v.is_exact()) return format_rational(v.exact());
  return v.value();
}

ExactReal exact_real_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return ExactReal(parse_rational(j.get<std::string>()));
  if (j.is_number()) return ExactReal(j.get<double>());
  throw std::invalid_argument("shift schema: " + what + " must be a number or a \"p/q\" string");
}

const Json& expect_field(const Json& j, const std::string& key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument("shift schema: missing \"" + key + "\" in " + ctx);
  return *it;
}

Json family_to_json(const FamilySpec& family) {
  Json out;
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ConstantSpec>) {
          out["family"] = "constant";
          out["params"] = Json{{"c", exact_real_to_json(fam.c)}};
        } else if constexpr (std::is_same_v<T, PeriodicSpec>) {
          out["family"] = "periodic";
          Json ws = Json::array();
          for (const auto& w : fam.weights) ws.push_back(exact_real_to_json(w));
          out["params"] = Json{{"weights", ws}};
        } else if constexpr (std::is_same_v<T, TwoIsoSpec>) {
          out["family"] = "two-iso";
          out["params"] = Json{{"a", exact_real_to_json(fam.a)}};
        } else if constexpr (std::is_same_v<T, PowerTowerSpec>) {
          out["family"] = "power-tower";
          out["params"] = Json{{"x", fam.x}, {"lambda", fam.lambda}};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          out["family"] = "explicit";
          Json ws = Json::array();
          for (const auto& w : fam.weights) ws.push_back(exact_real_to_json(w));
          Json tail;
          switch (fam.tail.kind()) {
            case Tail::Kind::Constant:
              tail["rule"] = "constant";
              tail["c"] = exact_real_to_json(fam.tail.param());
              break;
            case Tail::Kind::RepeatLast:
              tail["rule"] = "repeat-last";
              break;
            case Tail::Kind::TwoIsoExtend:
              tail["rule"] = "two-iso-extend";
              tail["a"] = exact_real_to_json(fam.tail.param());
              break;
          }
          out["params"] = Json{{"weights", ws}, {"tail", tail}};
        }
      },
      family);
  return out;
}

FamilySpec family_from_json(const Json& j) {
  const std::string family = expect_field(j, "family", "shift").get<std::string>();
  const Json& params = expect_field(j, "params", "shift");
  if (family == "constant")
    return ConstantSpec{exact_real_from_json(expect_field(params, "c", "constant params"), "c")};
  if (family == "periodic") {
    const Json& ws = expect_field(params, "weights", "periodic params");
    if (!ws.is_array()) throw std::invalid_argument("shift schema: \"weights\" must be an array");
    std::vector<ExactReal> weights;
    for (const auto& w : ws) weights.push_back(exact_real_from_json(w, "weight"));
    return PeriodicSpec{std::move(weights)};
  }
  if (family == "two-iso")
    return TwoIsoSpec{exact_real_from_json(expect_field(params, "a", "two-iso params"), "a")};
  if (family == "power-tower") {
    const Json& x = expect_field(params, "x", "power-tower params");
    const Json& lam = expect_field(params, "lambda", "power-tower params");
    if (!x.is_number() || !lam.is_number())
      throw std::invalid_argument("shift schema: power-tower x and lambda must be numbers");
    return PowerTowerSpec{x.get<double>(), lam.get<double>()};
  }
  if (family == "explicit") {
    const Json& ws = expect_field(params, "weights", "explicit params");
    if (!ws.is_array()) throw std::invalid_argument("shift schema: \"weights\" must be an array");
    std::vector<ExactReal> weights;
    for (const auto& w : ws) weights.push_back(exact_real_from_json(w, "weight"));
    const Json& tail = expect_field(params, "tail", "explicit params");
    const std::string rule = expect_field(tail, "rule", "tail").get<std::string>();
    if (rule == "constant")
      return ExplicitSpec{std::move(weights),
                          Tail::constant(exact_real_from_json(expect_field(tail, "c", "tail"), "c"))};
    if (rule == "repeat-last") return ExplicitSpec{std::move(weights), Tail::repeat_last()};
    if (rule == "two-iso-extend")
      return ExplicitSpec{std::move(weights), Tail::two_iso_extend(exact_real_from_json(
                                                  expect_field(tail, "a", "tail"), "a"))};
    throw std::invalid_argument("shift schema: unknown tail rule \"" + rule + "\"");
  }
  throw std::invalid_argument("shift schema: unknown family \"" + family + "\"");
}

Json op_to_json(const SequenceOp& op) {
  Json out;
  switch (op.type) {
    case SequenceOp::Type::Aluthge:
      out["kind"] = "aluthge";
      out["lambda"] = exact_real_to_json(op.param);
      break;
    case SequenceOp::Type::Duggal:
      out["kind"] = "duggal";
      break;
    case SequenceOp::Type::Mean:
      out["kind"] = "mean";
      break;
    case SequenceOp::Type::LambdaMean:
      out["kind"] = "lambda-mean";
      out["lambda"] = exact_real_to_json(op.param);
      break;
    case SequenceOp::Type::Scale:
      out["kind"] = "scale";
      out["factor"] = exact_real_to_json(op.param);
      break;
  }
  return out;
}

SequenceOp op_from_json(const Json& j) {
  const std::string kind = expect_field(j, "kind", "transform record").get<std::string>();
  if (kind == "aluthge")
    return {SequenceOp::Type::Aluthge,
            exact_real_from_json(expect_field(j, "lambda", "aluthge record"), "lambda")};
  if (kind == "duggal") return {SequenceOp::Type::Duggal, ExactReal(Rational(1))};
  if (kind == "mean") return {SequenceOp::Type::Mean, ExactReal(Rational(0))};
  if (kind == "lambda-mean")
    return {SequenceOp::Type::LambdaMean,
            exact_real_from_json(expect_field(j, "lambda", "lambda-mean record"), "lambda")};
  if (kind == "scale")
    return {SequenceOp::Type::Scale,
            exact_real_from_json(expect_field(j, "factor", "scale record"), "factor")};
  throw std::invalid_argument("shift schema: unknown transform kind \"" + kind + "\"");
}

}  // namespace

Json shift_to_json(const WeightedShift& shift) {
  const SequenceSpec& spec = shift.weights().spec();
  Json out = family_to_json(spec.family);
  if (shift.has_phases()) {
    Json phases = Json::array();
    for (const auto& z : shift.stored_phases())
      phases.push_back(Json::array({z.real(), z.imag()}));
    out["phases"] = phases;
  }
  if (!spec.ops.empty()) {
    Json ops = Json::array();
    for (const auto& op : spec.ops) ops.push_back(op_to_json(op));
    out["transforms"] = ops;
  }
  return out;
}

WeightedShift shift_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("shift schema: expected a JSON object");
  SequenceSpec spec{family_from_json(j), {}};
  if (auto it = j.find("transforms"); it != j.end()) {
    if (!it->is_array())
      throw std::invalid_argument("shift schema: \"transforms\" must be an array");
    for (const auto& op : *it) spec.ops.push_back(op_from_json(op));
  }
  std::vector<std::complex<double>> phases;
  if (auto it = j.find("phases"); it != j.end()) {
    if (!it->is_array()) throw std::invalid_argument("shift schema: \"phases\" must be an array");
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw std::invalid_argument("shift schema: each phase must be a [re, im] pair");
      phases.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  }
  WeightSequence seq = WeightSequence::from_spec(spec);
  return phases.empty() ? WeightedShift(std::move(seq))
                        : WeightedShift(std::move(seq), std::move(phases));
}

std::string shift_to_string(const WeightedShift& shift) { return shift_to_json(shift).dump(); }

WeightedShift shift_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("shift schema: invalid JSON: ") + e.what());
  }
  return shift_from_json(j);
}

Json defect_report_to_json(const DefectReport& report, std::size_t value_cap) {
  Json out;
  out["m"] = report.m;
  out["n_range"] = Json::array({report.n_lo, report.n_hi});
  out["mode"] = report.mode == DefectMode::ExactRational ? "exact-rational" : "floating";
  out["tol"] = report.tol;
  out["verdict"] = report.all_zero ? "all-zero" : "nonzero-witness";
  if (report.witness) {
    Json w;
    w["n"] = report.witness->n;
    w["value"] = report.witness->value;
    if (report.witness->exact) w["exact"] = format_rational(*report.witness->exact);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  Json values = Json::array();
  const std::size_t count = std::min(value_cap, report.values.size());
  for (std::size_t i = 0; i < count; ++i) values.push_back(report.values[i]);
  out["values"] = values;
  out["values_truncated"] = report.values.size() > count;
  return out;
}

Json power_table_to_json(const PowerNormTable& table) {
  Json out;
  out["powers"] = table.powers;
  out["norms"] = table.norms;
  out["radius_estimates"] = table.radius_estimates;
  out["window_is_lower_bound"] = table.window_is_lower_bound;
  return out;
}

std::string power_table_to_csv(const PowerNormTable& table) {
  std::string out = "n,norm,estimate\n";
  for (std::size_t i = 0; i < table.powers.size(); ++i) {
    out += std::to_string(table.powers[i]);
    out += ",";
    out += format_double(table.norms[i]);
    out += ",";
    out += format_double(table.radius_estimates[i]);
    out += "\n";
  }
  return out;
}

Json verdict_to_json(const TheoremVerdict& verdict) {
  Json out;
  out["id"] = verdict.id;
  out["title"] = verdict.title;
  out["overall"] = verdict.overall();
  Json checks = Json::array();
  for (const auto& c : verdict.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"pass", c.pass}});
  }
  out["checks"] = checks;
  out["notes"] = verdict.notes;
  return out;
}

std::string verdict_to_markdown(const TheoremVerdict& verdict) {
  const auto cell = [](const std::string& text) {
    std::string out;
    for (char ch : text) {
      if (ch == '|') out += '\\';
      out += ch;
    }
    return out;
  };
  std::string out = "## " + verdict.id + " — " + verdict.title + "\n\n";
  out += "| check | expected | observed | pass |\n|---|---|---|---|\n";
  for (const auto& c : verdict.checks) {
    out += "| " + cell(c.name) + " | " + cell(c.expected) + " | " + cell(c.observed) + " | " +
           (c.pass ? "yes" : "NO") + " |\n";
  }
  if (!verdict.notes.empty()) {
    out += "\nnotes:\n";
    for (const auto& n : verdict.notes) out += "- " + n + "\n";
  }
  out += "\noverall: ";
  out += verdict.overall() ? "PASS" : "FAIL";
  out += "\n";
  return out;
}

Json matrix_to_json(const TruncatedMatrix& m) {
  Json out;
  out["dim"] = m.dim();
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const auto z = m.entries(i, j);
      entries.push_back(Json::array({z.real(), z.imag()}));
    }
  out["entries"] = entries;
  out["provenance"] = m.provenance;
  return out;
}

TruncatedMatrix matrix_from_json(const Json& j) {
  const int dim = expect_field(j, "dim", "matrix").get<int>();
  const Json& entries = expect_field(j, "entries", "matrix");
  if (dim < 2 || !entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("matrix schema: entries must hold dim*dim [re, im] pairs");
  Eigen::MatrixXcd m(dim, dim);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int jc = 0; jc < dim; ++jc, ++idx) {
      const Json& e = entries[idx];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix schema: entries must be [re, im] pairs");
      m(i, jc) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  std::string prov = j.contains("provenance") ? j["provenance"].get<std::string>() : "json import";
  return {std::move(m), std::move(prov)};
}

}  // namespace shiftlab
