// shiftlab: weighted shift transforms, m-isometry defects, spectral probes,
// dense truncations, and the verification runners, behind one command-line
// front end. Exit codes: 0 = success, 1 = a verification expectation failed,
// 2 = usage/configuration error. stdout carries the requested artifact,
// stderr the diagnostics.

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftlab/isometry.hpp"
#include "shiftlab/oracle.hpp"
#include "shiftlab/shift_io.hpp"
#include "shiftlab/spectral.hpp"
#include "shiftlab/theorems.hpp"
#include "shiftlab/transforms.hpp"

namespace {

using namespace shiftlab;

struct ShiftFlags {
  std::string family;
  std::string c, a, weights, tail;
  double x = 0.0;
  double tower_lambda = 0.0;
  bool x_set = false, tower_lambda_set = false;
  std::string shift_file, shift_json;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "inline shift family: constant|periodic|two-iso|power-tower|explicit");
    cmd->add_option("--c", c, "constant family weight (rational or decimal)");
    cmd->add_option("--a", a, "two-iso family parameter a > -1 (rational or decimal)");
    cmd->add_option("--weights", weights, "comma-separated weights for periodic/explicit");
    cmd->add_option("--tail", tail,
                    "explicit-family tail: constant:<w> | repeat-last | two-iso-extend:<a>");
    cmd->add_option("--x", x, "power-tower base x > 0")->each([this](const std::string&) {
      x_set = true;
    });
    cmd->add_option("--tower-lambda", tower_lambda, "power-tower exponent parameter in (0,1)")
        ->each([this](const std::string&) { tower_lambda_set = true; });
    cmd->add_option("--shift-file", shift_file, "read the shift from a JSON file");
    cmd->add_option("--shift-json", shift_json, "read the shift from an inline JSON string");
  }
};

std::vector<ExactReal> parse_weight_list(const std::string& text) {
  std::vector<ExactReal> out;
  std::string cell;
  std::istringstream is(text);
  while (std::getline(is, cell, ',')) {
    if (cell.empty()) throw std::invalid_argument("--weights: empty entry");
    out.emplace_back(parse_rational(cell));
  }
  if (out.empty()) throw std::invalid_argument("--weights: no entries");
  return out;
}

Tail parse_tail(const std::string& text) {
  if (text == "repeat-last") return Tail::repeat_last();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string rule = text.substr(0, colon);
    const std::string param = text.substr(colon + 1);
    if (rule == "constant") return Tail::constant(ExactReal(parse_rational(param)));
    if (rule == "two-iso-extend") return Tail::two_iso_extend(ExactReal(parse_rational(param)));
  }
  throw std::invalid_argument(
      "--tail: expected constant:<w>, repeat-last, or two-iso-extend:<a>");
}

WeightedShift build_shift(const ShiftFlags& f) {
  const bool inline_source = !f.family.empty();
  const int sources = int(inline_source) + int(!f.shift_file.empty()) + int(!f.shift_json.empty());
  if (sources != 1)
    throw std::invalid_argument(
        "exactly one shift source required: --family ... | --shift-file | --shift-json");
  if (!f.shift_json.empty()) return shift_from_string(f.shift_json);
  if (!f.shift_file.empty()) {
    std::ifstream in(f.shift_file);
    if (!in) throw std::invalid_argument("--shift-file: cannot open " + f.shift_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return shift_from_string(buf.str());
  }
  if (f.family == "constant") {
    if (f.c.empty()) throw std::invalid_argument("--family constant requires --c");
    return WeightedShift(WeightSequence::constant(ExactReal(parse_rational(f.c))));
  }
  if (f.family == "periodic") {
    if (f.weights.empty()) throw std::invalid_argument("--family periodic requires --weights");
    return WeightedShift(WeightSequence::periodic(parse_weight_list(f.weights)));
  }
  if (f.family == "two-iso") {
    if (f.a.empty()) throw std::invalid_argument("--family two-iso requires --a");
    return WeightedShift(WeightSequence::two_iso(ExactReal(parse_rational(f.a))));
  }
  if (f.family == "power-tower") {
    if (!f.x_set || !f.tower_lambda_set)
      throw std::invalid_argument("--family power-tower requires --x and --tower-lambda");
    return WeightedShift(WeightSequence::power_tower(f.x, f.tower_lambda));
  }
  if (f.family == "explicit") {
    if (f.weights.empty() || f.tail.empty())
      throw std::invalid_argument("--family explicit requires --weights and --tail");
    return WeightedShift(
        WeightSequence::explicit_list(parse_weight_list(f.weights), parse_tail(f.tail)));
  }
  throw std::invalid_argument("--family: unknown family \"" + f.family + "\"");
}

std::string default_format() { return isatty(fileno(stdout)) ? "table" : "json"; }

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("SHIFTLAB_TOL");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v >= 0.0))
    throw std::invalid_argument("SHIFTLAB_TOL: expected a nonnegative number");
  return v;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::invalid_argument("--out: cannot write " + out_file);
  out << text;
}

int cmd_transform(const ShiftFlags& flags, const std::string& kind_name,
                  const std::string& lambda_text, int count, const std::string& format) {
  WeightedShift input = build_shift(flags);
  std::optional<ExactReal> lambda;
  if (!lambda_text.empty()) lambda = ExactReal(parse_rational(lambda_text));

  TransformKind kind = [&] {
    if (kind_name == "aluthge") {
      if (!lambda) throw std::invalid_argument("--kind aluthge requires --lambda");
      return TransformKind::aluthge(*lambda);
    }
    if (kind_name == "duggal") {
      if (lambda) throw std::invalid_argument("--kind duggal takes no --lambda");
      return TransformKind::duggal();
    }
    if (kind_name == "mean") {
      if (lambda) throw std::invalid_argument("--kind mean takes no --lambda");
      return TransformKind::mean();
    }
    if (kind_name == "lambda-mean") {
      if (!lambda) throw std::invalid_argument("--kind lambda-mean requires --lambda");
      return TransformKind::lambda_mean(*lambda);
    }
    throw std::invalid_argument("--kind: unknown transform \"" + kind_name + "\"");
  }();

  WeightedShift output = apply_transform(input, kind);

  if (format == "json") {
    Json j;
    j["kind"] = kind.name();
    if (kind.has_lambda())
      j["lambda"] = kind.lambda().is_exact() ? Json(format_rational(kind.lambda().exact()))
                                             : Json(kind.lambda().value());
    j["input"] = shift_to_json(input);
    j["output"] = shift_to_json(output);
    Json win = Json::array(), wout = Json::array();
    for (Index i = 1; i <= count; ++i) {
      win.push_back(input.weight(i));
      wout.push_back(output.weight(i));
    }
    j["input_weights"] = win;
    j["output_weights"] = wout;
    j["notes"] = output.notes();
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "input:  " << input.describe() << "\n";
  std::cout << "output: " << output.describe() << "\n";
  std::cout << "   j  a_j (input)            b_j (output)\n";
  for (Index i = 1; i <= count; ++i)
    std::cout << "  " << i << "  " << format_double(input.weight(i)) << "  "
              << format_double(output.weight(i)) << "\n";
  for (const auto& note : output.notes()) std::cout << "note: " << note << "\n";
  return 0;
}

int cmd_defect(const ShiftFlags& flags, int m, Index n_max, const std::string& expect,
               const std::string& mode_name, std::optional<double> tol,
               const std::string& format) {
  if (!expect.empty() && expect != "zero" && expect != "nonzero")
    throw std::invalid_argument("--expect: expected zero or nonzero");
  WeightedShift shift = build_shift(flags);
  std::optional<DefectMode> mode;
  if (mode_name == "exact")
    mode = DefectMode::ExactRational;
  else if (mode_name == "float")
    mode = DefectMode::Floating;
  else if (mode_name != "auto")
    throw std::invalid_argument("--mode: expected auto, exact, or float");
  if (!tol) tol = env_tolerance();

  const DefectReport report = is_m_isometry(shift, m, n_max, tol, mode);

  if (format == "json") {
    std::cout << defect_report_to_json(report).dump() << "\n";
  } else {
    std::cout << "shift: " << shift.describe() << "\n";
    std::cout << "m=" << report.m << "  n in [" << report.n_lo << ", " << report.n_hi
              << "]  mode="
              << (report.mode == DefectMode::ExactRational ? "exact-rational" : "floating")
              << "  tol=" << format_double(report.tol) << "\n";
    if (report.all_zero) {
      std::cout << "verdict: all-zero (m-isometry on the tested range)\n";
    } else {
      std::cout << "verdict: nonzero-witness at n=" << report.witness->n
                << " value=" << format_double(report.witness->value);
      if (report.witness->exact)
        std::cout << " (= " << format_rational(*report.witness->exact) << ")";
      std::cout << "\n";
    }
  }

  if (expect == "zero" && !report.all_zero) return 1;
  if (expect == "nonzero" && report.all_zero) return 1;
  return 0;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, const std::string& format) {
  RunnerOptions opts;
  std::vector<TheoremVerdict> verdicts;
  if (all) {
    verdicts = run_all(opts);
  } else {
    if (ids.empty())
      throw std::invalid_argument("verify: pass --theorem <id> (repeatable) or --all");
    for (const auto& id : ids)
      if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
        throw std::invalid_argument("verify: unknown theorem id \"" + id + "\"");
    // fixed output order regardless of request order
    for (const auto& known : theorem_ids())
      if (std::find(ids.begin(), ids.end(), known) != ids.end())
        verdicts.push_back(run_theorem(known, opts));
  }

  bool all_pass = true;
  for (const auto& v : verdicts) all_pass = all_pass && v.overall();

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_to_json(v));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& v : verdicts) std::cout << verdict_to_markdown(v) << "\n";
    std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << verdicts.size()
              << " verdicts)\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_truncate(const ShiftFlags& flags, int dim, const std::string& format,
                 const std::string& out_file) {
  WeightedShift shift = build_shift(flags);
  const TruncatedMatrix m = truncate(shift, dim);
  if (format == "json")
    emit(matrix_to_json(m).dump() + "\n", out_file);
  else
    emit(matrix_to_csv(m), out_file);
  return 0;
}

int cmd_spectral(const ShiftFlags& flags, Index n_max, Index window, Index max_power,
                 const std::string& format, const std::string& out_file) {
  WeightedShift shift = build_shift(flags);
  const SpectralRadiusResult radius = spectral_radius(shift, max_power);
  const PowerNormTable table = power_norm_table(shift, n_max, window);

  if (format == "json") {
    Json j;
    j["shift"] = shift_to_json(shift);
    j["radius"] = radius.value;
    j["radius_exact"] = radius.exact;
    Json est = Json::array();
    for (const auto& [n, e] : radius.estimates) est.push_back(Json::array({n, e}));
    j["radius_estimates"] = est;
    j["table"] = power_table_to_json(table);
    emit(j.dump() + "\n", out_file);
    return 0;
  }
  if (format == "csv") {
    emit(power_table_to_csv(table), out_file);
    return 0;
  }
  std::ostringstream os;
  os << "shift: " << shift.describe() << "\n";
  os << "spectral radius = " << format_double(radius.value)
     << (radius.exact ? " (exact periodic formula)" : " (max-power estimate)") << "\n";
  if (table.window_is_lower_bound)
    os << "note: norms below scan a finite window; they are lower bounds on the true norm\n";
  os << "n,norm,estimate\n";
  for (std::size_t i = 0; i < table.powers.size(); ++i)
    os << table.powers[i] << "," << format_double(table.norms[i]) << ","
       << format_double(table.radius_estimates[i]) << "\n";
  emit(os.str(), out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted shift transforms, m-isometry defects, and verification runners"};
  app.require_subcommand(1);

  auto* t = app.add_subcommand("transform", "apply a transform and preview the weights");
  ShiftFlags t_flags;
  t_flags.add_to(t);
  std::string t_kind, t_lambda, t_format;
  int t_count = 12;
  t->add_option("--kind", t_kind, "aluthge|duggal|mean|lambda-mean")->required();
  t->add_option("--lambda", t_lambda, "transform parameter in [0,1] (rational or decimal)");
  t->add_option("--count", t_count, "weights to preview (default 12)");
  t->add_option("--format", t_format, "table|json")->check(CLI::IsMember({"table", "json"}));

  auto* d = app.add_subcommand("defect", "m-isometry defect report over an index window");
  ShiftFlags d_flags;
  d_flags.add_to(d);
  int d_m = 2;
  Index d_nmax = 256;
  std::string d_expect, d_mode = "auto", d_format;
  double d_tol = -1.0;
  d->add_option("--m", d_m, "defect order m >= 1")->required();
  d->add_option("--n-max", d_nmax, "index horizon (default 256)");
  d->add_option("--expect", d_expect, "zero|nonzero: exit 1 when violated");
  d->add_option("--mode", d_mode, "auto|exact|float (default auto)");
  d->add_option("--tol", d_tol, "floating tolerance override");
  d->add_option("--format", d_format, "table|json")->check(CLI::IsMember({"table", "json"}));

  auto* v = app.add_subcommand("verify", "run the verification suites");
  std::vector<std::string> v_ids;
  bool v_all = false;
  std::string v_format;
  v->add_option("--theorem", v_ids, "result id (2.6, 3.1, 3.2, 3.3, 4.1, 4.2, 4.3, 5.1, 5.2)");
  v->add_flag("--all", v_all, "run every suite");
  v->add_option("--format", v_format, "markdown|json")
      ->check(CLI::IsMember({"markdown", "json"}));

  auto* tr = app.add_subcommand("truncate", "dense truncation export");
  ShiftFlags tr_flags;
  tr_flags.add_to(tr);
  int tr_dim = 16;
  std::string tr_format, tr_out;
  tr->add_option("--dim", tr_dim, "truncation dimension (2..128)")->required();
  tr->add_option("--format", tr_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  tr->add_option("--out", tr_out, "write to file instead of stdout");

  auto* sp = app.add_subcommand("spectral", "power norms and spectral radius");
  ShiftFlags sp_flags;
  sp_flags.add_to(sp);
  Index sp_nmax = 32, sp_window = 4096, sp_maxpower = 256;
  std::string sp_format, sp_out;
  sp->add_option("--n-max", sp_nmax, "largest power in the table (default 32)");
  sp->add_option("--window", sp_window, "sup-scan window for aperiodic families (default 4096)");
  sp->add_option("--max-power", sp_maxpower, "power used for radius estimates (default 256)");
  sp->add_option("--format", sp_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sp->add_option("--out", sp_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*t)
      return cmd_transform(t_flags, t_kind, t_lambda, t_count,
                           t_format.empty() ? default_format() : t_format);
    if (*d)
      return cmd_defect(d_flags, d_m, d_nmax, d_expect, d_mode,
                        d_tol >= 0.0 ? std::optional<double>(d_tol) : std::nullopt,
                        d_format.empty() ? default_format() : d_format);
    if (*v)
      return cmd_verify(v_ids, v_all,
                        v_format.empty() ? (isatty(fileno(stdout)) ? "markdown" : "json")
                                         : v_format);
    if (*tr) return cmd_truncate(tr_flags, tr_dim, tr_format.empty() ? "csv" : tr_format, tr_out);
    if (*sp)
      return cmd_spectral(sp_flags, sp_nmax, sp_window, sp_maxpower,
                          sp_format.empty() ? default_format() : sp_format, sp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
