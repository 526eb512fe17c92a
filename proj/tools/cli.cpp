#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "diagthue/error.hpp"
#include "diagthue/json_io.hpp"

#ifndef DIAGTHUE_VERSION
#define DIAGTHUE_VERSION "unknown"
#endif

namespace diagthue::cli {

namespace {

struct Options {
  std::string form_path;
  std::string h = "1";
  long H = 1000;
  mpfr_prec_t precision = 64;
  std::string theorem = "main";
  std::string out_path;
  std::string format = "json";
  bool timing = false;
  // induction
  int r = 7;
  std::string seed = "default";
  long n = 1;
  int g = 0;
  bool sigma_zero = false;
  long chain_to = 0;
  // table
  std::string r_range = "7..12";
  // verify-lemmas, zk
  long zk_n = 1;
  bool verify_theorem = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read form file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, "malformed JSON in '" + path + "': " + e.what());
  }
}

FormInput load_form(const Options& opt) {
  if (opt.form_path.empty()) throw Error(ErrorCode::kInvalidInput, "--form is required");
  return parse_form(read_json_file(opt.form_path));
}

const DiagForm& require_diag(const FormInput& form, const std::string& command) {
  if (!form.diag) {
    throw Error(ErrorCode::kInvalidInput,
                command + " needs the diagonal datum (form kind \"diag\")");
  }
  return *form.diag;
}

Integer parse_h(const std::string& text) {
  const Integer h = parse_integer(text);
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  return h;
}

PrecisionPolicy policy_for(const Options& opt) {
  PrecisionPolicy policy = PrecisionPolicy::from_environment();
  if (opt.precision < 2) throw Error(ErrorCode::kInvalidInput, "--precision must be at least 2");
  policy.start_bits = opt.precision;
  policy.max_bits = std::max(policy.max_bits, opt.precision);
  return policy;
}

CompareOptions compare_options() {
  CompareOptions options;
  options.digit_budget = digit_budget_from_environment();
  return options;
}

SearchConfig search_config(const Options& opt) {
  SearchConfig cfg;
  cfg.H = opt.H;
  cfg.precision = opt.precision;
  return cfg;
}

PropertyQuintuple parse_seed(const Options& opt) {
  if (opt.seed == "default") {
    return PropertyQuintuple::seed(opt.r, opt.n, opt.g);
  }
  std::string text = opt.seed;
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::kInvalidInput, "--seed must be 'default' or '(a1,a2,a3,a4,a5)'");
  }
  std::vector<Rational> values;
  std::stringstream parts(text.substr(1, text.size() - 2));
  for (std::string item; std::getline(parts, item, ',');) values.push_back(parse_rational(item));
  if (values.size() != 5) throw Error(ErrorCode::kInvalidInput, "--seed needs five entries");
  PropertyQuintuple p{opt.r, values[0], values[1], values[2], values[3], values[4], opt.n, opt.g,
                      !opt.sigma_zero};
  return p;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int r = std::stoi(text);
      return {r, r};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput, "--r must look like 7 or 7..12");
  }
}

std::vector<Integer> parse_h_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream parts(text);
  for (std::string item; std::getline(parts, item, ',');) out.push_back(parse_h(item));
  if (out.empty()) throw Error(ErrorCode::kInvalidInput, "--h needs at least one value");
  return out;
}

class Runner {
 public:
  Runner(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {}

  Json manifest(const Json& parameters) const {
    Json m{{"command", command_},
           {"form", opt_.form_path.empty() ? Json(nullptr) : Json(opt_.form_path)},
           {"parameters", parameters},
           {"output", opt_.out_path.empty() ? Json("stdout") : Json(opt_.out_path)},
           {"tool_version", DIAGTHUE_VERSION}};
    if (opt_.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      m["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return m;
  }

  // Embeds the manifest as the first key.
  Json report(const Json& parameters, const Json& body) const {
    Json out{{"manifest", manifest(parameters)}};
    for (const auto& [k, v] : body.items()) out[k] = v;
    return out;
  }

 private:
  std::string command_;
  const Options& opt_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json parameters(const Options& opt, std::optional<int> r, bool with_h, bool with_box,
                bool with_theorem) {
  Json p = Json::object();
  if (r) p["r"] = *r;
  if (with_h) p["h"] = opt.h;
  if (with_box) p["H"] = opt.H;
  p["precision"] = opt.precision;
  if (with_theorem) p["theorem"] = opt.theorem;
  return p;
}

struct Output {
  std::string text;
  int exit_code = 0;
};

Output dump(const Json& j) { return {j.dump(2) + "\n", 0}; }

Output cmd_expand(const Options& opt) {
  const FormInput form = load_form(opt);
  const Runner run("expand", opt);
  Json body{{"input", form.diag ? form_to_json(*form.diag) : form_to_json(form.integer)},
            {"expanded", form_to_json(form.integer)}};
  return dump(run.report(parameters(opt, form.integer.degree(), false, false, false), body));
}

Output cmd_invariants(const Options& opt) {
  const FormInput form = load_form(opt);
  const DiagForm& diag = require_diag(form, "invariants");
  const Integer h = parse_h(opt.h);
  const Runner run("invariants", opt);
  Json body = to_json(invariants(diag, h));
  body["Delta_resultant"] = to_string(resultant_discriminant(diag.expanded()));
  body["class"] = to_json(classify(diag.expanded()));
  return dump(run.report(parameters(opt, diag.r(), true, false, false), body));
}

Output cmd_check(const Options& opt) {
  const FormInput form = load_form(opt);
  const DiagForm& diag = require_diag(form, "check");
  const Integer h = parse_h(opt.h);
  const ThresholdSpec spec = ThresholdSpec::parse(opt.theorem, diag.r(), h);
  const HypothesisReport report = check_hypothesis(diag, h, spec, compare_options());
  const Runner run("check", opt);
  return dump(run.report(parameters(opt, diag.r(), true, false, true), to_json(report)));
}

Output cmd_solve(const Options& opt) {
  const FormInput form = load_form(opt);
  const Integer h = parse_h(opt.h);
  const SearchConfig cfg = search_config(opt);
  const Runner run("solve", opt);
  const Json params = parameters(opt, form.integer.degree(), true, true, false);
  if (!form.diag) {
    // Raw integer forms: the search alone.
    const auto points = enumerate_points(form.integer, h, cfg);
    if (opt.format == "csv") {
      std::ostringstream csv;
      csv << "x,y,F\n";
      for (const auto& p : points) csv << p.x << ',' << p.y << ',' << p.F << '\n';
      return {csv.str(), 0};
    }
    Json list = Json::array();
    for (const auto& p : points) {
      list.push_back(Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}, {"F", to_string(p.F)}});
    }
    return dump(run.report(params, Json{{"H", opt.H},
                                        {"h", opt.h},
                                        {"qualifier", SolveReport::kQualifier},
                                        {"N", points.size()},
                                        {"solutions", list}}));
  }
  const SolveReport report = opt.verify_theorem ? verify_theorem(*form.diag, h, cfg)
                                                : enumerate(*form.diag, h, cfg);
  if (opt.format == "csv") return {solutions_csv(report), 0};
  return dump(run.report(params, to_json(report)));
}

Output cmd_partition(const Options& opt) {
  const FormInput form = load_form(opt);
  const DiagForm& diag = require_diag(form, "partition");
  const Integer h = parse_h(opt.h);
  const SolveReport report = enumerate(diag, h, search_config(opt));
  Json relations = Json::array();
  for (const auto& rec : report.solutions) {
    relations.push_back(Json{{"x", to_string(rec.x)},
                             {"y", to_string(rec.y)},
                             {"omega_index", rec.omega_index},
                             {"tie_flag", rec.tie_flag},
                             {"certified_bits", rec.certified_bits}});
  }
  const Runner run("partition", opt);
  return dump(run.report(parameters(opt, diag.r(), true, true, false),
                         Json{{"qualifier", SolveReport::kQualifier},
                              {"N", report.N},
                              {"relations", relations},
                              {"partition", to_json(report.partition)}}));
}

Output cmd_verify_lemmas(const Options& opt) {
  const FormInput form = load_form(opt);
  const DiagForm& diag = require_diag(form, "verify-lemmas");
  const Integer h = parse_h(opt.h);
  const PrecisionPolicy policy = policy_for(opt);
  const SolveReport report = enumerate(diag, h, search_config(opt));
  const LemmaContext ctx(diag, h, policy, compare_options());
  const auto verdicts = verify_partition(report.partition, ctx, opt.zk_n);
  Json list = Json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& v : verdicts) {
    list.push_back(to_json(v));
    ++counts[std::string(to_string(v.status))];
  }
  const bool violated = counts["VIOLATED"] > 0;
  const Runner run("verify-lemmas", opt);
  Json params = parameters(opt, diag.r(), true, true, false);
  params["zk_n"] = opt.zk_n;
  Json summary{{"HOLDS", counts["HOLDS"]},
               {"VIOLATED", counts["VIOLATED"]},
               {"NOT_APPLICABLE", counts["NOT_APPLICABLE"]}};
  Output out = dump(run.report(params, Json{{"N", report.N},
                                            {"summary", summary},
                                            {"verdicts", list}}));
  out.exit_code = violated ? 1 : 0;
  return out;
}

Output cmd_zk(const Options& opt) {
  const FormInput form = load_form(opt);
  const DiagForm& diag = require_diag(form, "zk");
  const Integer h = parse_h(opt.h);
  const SolveReport report = enumerate(diag, h, search_config(opt));
  const LemmaContext ctx(diag, h, policy_for(opt), compare_options());
  Json reports = Json::array();
  for (const auto& [k, members] : report.partition.classes) {
    if (members.size() != 3) continue;
    reports.push_back(to_json(zk_bound(make_gap_chain(members, ctx), ctx, opt.n)));
  }
  Json body{{"i7", to_string(zk_i7(diag.r()))},
            {"i8", to_string(zk_i8(diag.r()))},
            {"classes_of_size_3", reports.size()},
            {"reports", reports}};
  const auto e = zk_exponents(diag.r(), opt.n);
  body["exponents"] = Json{{"Z2", to_string(e.z2)},
                           {"two", to_string(e.two)},
                           {"r", to_string(e.r)},
                           {"j", to_string(e.j)},
                           {"h", to_string(e.h)}};
  const Runner run("zk", opt);
  Json params = parameters(opt, diag.r(), true, true, false);
  params["n"] = opt.n;
  return dump(run.report(params, body));
}

Output cmd_induction(const Options& opt) {
  const Runner run("induction", opt);
  Json params{{"r", opt.r}, {"seed", opt.seed}, {"n", opt.n}, {"g", opt.g},
              {"sigma_nonzero", !opt.sigma_zero}};
  if (opt.chain_to > 0) {
    params["chain_to"] = opt.chain_to;
    Json steps = Json::array();
    const auto chain = run_induction(opt.r, !opt.sigma_zero, opt.chain_to);
    for (const auto& step : chain) steps.push_back(to_json(step));
    const bool complete = chain.back().successor.has_value();
    Json body{{"complete", complete}, {"last_n", chain.back().input.n}, {"steps", steps}};
    if (!complete) body["failed"] = chain.back().failed();
    return dump(run.report(params, body));
  }
  const InductionStep step = induction_step(parse_seed(opt));
  return dump(run.report(params, to_json(step)));
}

Output cmd_table(const Options& opt) {
  const auto [r_min, r_max] = parse_range(opt.r_range);
  const auto rows = compare_table(r_min, r_max, parse_h_list(opt.h), 128, compare_options());
  if (opt.format == "csv") return {threshold_csv(rows), 0};
  Json list = Json::array();
  for (const auto& row : rows) {
    list.push_back(Json{{"r", row.r},
                        {"h", to_string(row.h)},
                        {"log10_main", to_json(row.log10_main, 15)},
                        {"log10_akss_ii_m4", to_json(row.log10_akss_ii_m4, 15)},
                        {"log10_siegel_l1", to_json(row.log10_siegel_l1, 15)},
                        {"min_theorem", row.min_theorem}});
  }
  const Runner run("table", opt);
  return dump(run.report(Json{{"r", opt.r_range}, {"h", opt.h}}, Json{{"rows", list}}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact machinery for diagonalizable Thue inequalities", "diagthue"};
  app.require_subcommand(1);
  // "-h" would collide with --h.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", DIAGTHUE_VERSION);

  auto add_common = [&](CLI::App* sub, bool h, bool box) {
    sub->add_option("--form", opt.form_path, "Form specification (JSON)")->required();
    if (h) sub->add_option("--h", opt.h, "Bound h >= 1 on |F(x, y)|");
    if (box) sub->add_option("--H", opt.H, "Search box max(|x|, |y|) <= H")->check(CLI::PositiveNumber);
    sub->add_option("--precision", opt.precision, "Starting precision in bits");
    sub->add_option("--out", opt.out_path, "Write the report here instead of stdout");
    sub->add_flag("--timing", opt.timing, "Record wall time in the manifest");
  };
  auto* expand = app.add_subcommand("expand", "Expand (alpha x + beta y)^r - (gamma x + delta y)^r");
  add_common(expand, false, false);
  auto* inv = app.add_subcommand("invariants", "j, chi, A, B, C, D, Delta, Delta'");
  add_common(inv, true, false);
  auto* check = app.add_subcommand("check", "Test a theorem's hypothesis on Delta'");
  add_common(check, true, false);
  check->add_option("--theorem", opt.theorem, "main, akss1, akss2:m or siegel:l");
  auto* solve = app.add_subcommand("solve", "Enumerate primitive solutions in a box");
  add_common(solve, true, true);
  solve->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  solve->add_flag("--verify-theorem", opt.verify_theorem,
                  "Compare N with the predicted bound when the hypothesis holds");
  auto* part = app.add_subcommand("partition", "Group solutions by related root of unity");
  add_common(part, true, true);
  auto* lemmas = app.add_subcommand("verify-lemmas", "Check every lemma on the solutions found");
  add_common(lemmas, true, true);
  lemmas->add_option("--zk-n", opt.zk_n, "n used for the (Zk) bound");
  auto* zk = app.add_subcommand("zk", "(Zk) bound for classes of three solutions");
  add_common(zk, true, true);
  zk->add_option("--n", opt.n, "Induction depth n >= 1");
  auto* ind = app.add_subcommand("induction", "One step of the P[a1..a5] induction");
  ind->add_option("--r", opt.r, "Degree r >= 7");
  ind->add_option("--seed", opt.seed, "'default' or '(a1,a2,a3,a4,a5)'");
  ind->add_option("--n", opt.n, "n >= 1");
  ind->add_option("--g", opt.g, "g in {0, 1}")->check(CLI::IsMember({0, 1}));
  ind->add_flag("--sigma-zero", opt.sigma_zero, "Treat Sigma as vanishing");
  ind->add_option("--chain", opt.chain_to, "Run the whole chain up to this n");
  ind->add_option("--out", opt.out_path);
  ind->add_flag("--timing", opt.timing);
  auto* table = app.add_subcommand("table", "Compare theorem thresholds (CSV)");
  table->add_option("--r", opt.r_range, "Degree or range, e.g. 7..12")
      ->check(CLI::Validator(
          [](std::string& text) -> std::string {
            static const std::regex kRange(R"(\d{1,4}(\.\.\d{1,4})?)");
            return std::regex_match(text, kRange) ? "" : "must look like 7 or 7..12";
          },
          "R[..R]"));
  table->add_option("--h", opt.h, "Comma-separated h values");
  table->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", opt.out_path);
  table->add_flag("--timing", opt.timing);
  opt.format = "";

  std::vector<std::string> storage{"diagthue"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << DIAGTHUE_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  try {
    Output result;
    const std::string name = app.get_subcommands().front()->get_name();
    if (opt.format.empty()) opt.format = name == "table" ? "csv" : "json";
    if (name == "expand") result = cmd_expand(opt);
    else if (name == "invariants") result = cmd_invariants(opt);
    else if (name == "check") result = cmd_check(opt);
    else if (name == "solve") result = cmd_solve(opt);
    else if (name == "partition") result = cmd_partition(opt);
    else if (name == "verify-lemmas") result = cmd_verify_lemmas(opt);
    else if (name == "zk") result = cmd_zk(opt);
    else if (name == "induction") result = cmd_induction(opt);
    else result = cmd_table(opt);

    if (opt.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kInvalidInput, "cannot write '" + opt.out_path + "'");
      file << result.text;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << Json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace diagthue::cli
