#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "discmat/analysis.hpp"
#include "discmat/cech.hpp"
#include "discmat/errors.hpp"
#include "discmat/formulas.hpp"
#include "discmat/swallowtail.hpp"
#include "serialize.hpp"

namespace discmat::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kBuildFormulas = {"sylvester",           "bezout",           "swallowtail-full",
                                                 "swallowtail-minimal", "swallowtail-monic", "partial2",
                                                 "d1",                  "bezout-cech"};
const std::vector<std::string> kVerifyFormulas = {"sylvester",           "bezout",           "swallowtail",
                                                  "swallowtail-full",    "swallowtail-minimal", "swallowtail-monic"};

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json tri_degree_table(const PolyMatrix& m, int n) {
  json table = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::optional<TriDegree> common;
      bool uniform = !m(r, c).is_zero();
      for (const auto& [mono, coeff] : m(r, c).terms()) {
        const auto d = mono.uses_xy() ? std::nullopt : tri_degree(mono, n);
        if (!d || (common && !(*common == *d))) {
          uniform = false;
          break;
        }
        common = d;
      }
      row.push_back(uniform && common ? json::array({common->a, common->x, common->y}) : json(nullptr));
    }
    table.push_back(std::move(row));
  }
  return table;
}

PolyMatrix build_matrix(const std::string& formula, int n) {
  if (formula == "partial2") return partial2_matrix(n);
  if (formula == "d1") return d1_matrix(n);
  if (formula == "bezout-cech") return a_via_cech(n);
  const auto kind = parse_formula_kind(formula);
  if (!kind) throw std::invalid_argument("unknown formula '" + formula + "'");
  return make_bundle(*kind, n).matrix;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    out.push_back(Rational::parse(item));
  }
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& r : v) out += (out.empty() ? "" : ",") + r.str();
  return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw std::invalid_argument("format '" + cfg.format + "' is not available for " + cfg.command);
}

}  // namespace

CommandResult cmd_build(const RunConfig& cfg) {
  const PolyMatrix m = build_matrix(cfg.formula, cfg.n);
  if (cfg.format == "json") {
    return {kSuccess, json_text({{"formula", cfg.formula},
                                 {"n", cfg.n},
                                 {"matrix", matrix_to_json(m)},
                                 {"tri_degrees", tri_degree_table(m, cfg.n)}})};
  }
  if (cfg.format == "latex") return {kSuccess, matrix_to_latex(m)};
  if (cfg.format == "csv") return {kSuccess, matrix_to_csv(m)};
  std::ostringstream os;
  os << cfg.formula << " n=" << cfg.n << " size=" << m.rows() << "x" << m.cols() << "\n" << matrix_to_plain(m);
  return {kSuccess, os.str()};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"plain", "json", "csv"});
  const std::string formula = cfg.formula == "swallowtail" ? "swallowtail-full" : cfg.formula;
  const auto kind = parse_formula_kind(formula);
  if (!kind) throw std::invalid_argument("unknown formula '" + cfg.formula + "'");
  const int min_n = *kind == FormulaKind::sylvester || *kind == FormulaKind::bezout ? 2 : 3;
  if (cfg.n < min_n) {
    throw std::invalid_argument(formula + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(cfg.n));
  }
  if (cfg.mode != "symbolic" && cfg.mode != "sampled") throw std::invalid_argument("unknown mode '" + cfg.mode + "'");
  if (cfg.mode == "sampled" && cfg.samples < 1) throw std::invalid_argument("--samples must be at least 1");

  const VerifyOptions options{cfg.mode == "symbolic" ? VerifyMode::symbolic : VerifyMode::sampled, cfg.samples,
                              cfg.seed};
  const FormulaBundle bundle = make_bundle(*kind, cfg.n);
  std::optional<DetRelation> rel;
  std::string failure;
  try {
    rel = verify_det_relation(bundle.matrix, cfg.n, options, *kind == FormulaKind::swallowtail_monic);
  } catch (const FormulaVerificationError& e) {
    failure = e.what();
  }
  const bool pass = rel.has_value();
  const int samples = options.mode == VerifyMode::sampled ? cfg.samples : 0;

  std::string text;
  if (cfg.format == "json") {
    json j = {{"formula", formula}, {"n", cfg.n},       {"mode", cfg.mode},
              {"samples", samples}, {"seed", cfg.seed}, {"result", pass ? "pass" : "fail"}};
    if (rel) {
      j["c"] = rel->c.str();
      j["e"] = rel->a0_exponent;
    } else {
      j["message"] = failure;
    }
    text = json_text(j);
  } else if (cfg.format == "csv") {
    text = "formula,n,mode,samples,seed,c,e,result\n" + formula + "," + std::to_string(cfg.n) + "," + cfg.mode + "," +
           std::to_string(samples) + "," + std::to_string(cfg.seed) + "," + (rel ? rel->c.str() : "") + "," +
           (rel ? std::to_string(rel->a0_exponent) : "") + "," + (pass ? "pass" : "fail") + "\n";
  } else {
    std::ostringstream os;
    os << "formula=" << formula << " n=" << cfg.n << " mode=" << cfg.mode;
    if (samples > 0) os << " samples=" << samples << " seed=" << cfg.seed;
    if (rel) os << " c=" << rel->c << " e=" << rel->a0_exponent << " result=pass\n";
    else os << " result=fail\n" << failure << "\n";
    text = os.str();
  }
  return {pass ? kSuccess : kVerificationFailed, text};
}

CommandResult cmd_analyze(const RunConfig& cfg) {
  require_format(cfg, {"plain", "json", "csv"});
  if (cfg.coeffs.has_value() == cfg.profile.has_value()) {
    throw std::invalid_argument("analyze needs exactly one of --coeffs and --profile");
  }
  const std::vector<Rational> coeffs =
      cfg.coeffs ? parse_coeffs(*cfg.coeffs) : poly_from_profile(RootProfile::parse(*cfg.profile));
  if (!coeffs.empty() && coeffs.front().is_zero()) throw std::invalid_argument("leading coefficient zero");
  const Classification c = classify(coeffs);

  const std::vector<std::pair<std::string, std::string>> fields = {
      {"n", std::to_string(c.n)},
      {"coeffs", join(coeffs)},
      {"bezout_rank", std::to_string(c.bezout_rank)},
      {"bezout_nullity", std::to_string(c.bezout_nullity)},
      {"swallowtail_nullity", std::to_string(c.swallowtail_nullity)},
      {"distinct_roots_detected", std::to_string(c.distinct_roots_detected)},
      {"multiplicity_excess", std::to_string(c.multiplicity_excess)},
      {"multi_double_pair", c.multi_double_pair ? "true" : "false"}};
  if (cfg.format == "json") {
    json j = {{"n", c.n},
              {"coeffs", json::array()},
              {"bezout_rank", c.bezout_rank},
              {"bezout_nullity", c.bezout_nullity},
              {"swallowtail_nullity", c.swallowtail_nullity},
              {"distinct_roots_detected", c.distinct_roots_detected},
              {"multiplicity_excess", c.multiplicity_excess},
              {"multi_double_pair", c.multi_double_pair}};
    for (const auto& r : coeffs) j["coeffs"].push_back(r.str());
    return {kSuccess, json_text(j)};
  }
  std::string head;
  std::string row;
  std::string plain;
  for (const auto& [k, v] : fields) {
    head += (head.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + csv_escape(v);
    plain += k + "=" + v + "\n";
  }
  return {kSuccess, cfg.format == "csv" ? head + "\n" + row + "\n" : plain};
}

CommandResult cmd_probe(const RunConfig& cfg) {
  require_format(cfg, {"plain", "json", "csv"});
  if (cfg.trials < 0) throw std::invalid_argument("--trials must be nonnegative");
  const ProbeReport report = probe_higher_nullity(cfg.n, cfg.derivative_order, cfg.trials, cfg.seed);
  if (cfg.format == "json") {
    json samples = json::array();
    for (const auto& s : report.samples) {
      samples.push_back({{"profile", s.profile.str()}, {"coeffs", join(s.coeffs)}, {"swallowtail_nullity", s.swallowtail_nullity}});
    }
    json histogram = json::object();
    for (const auto& [k, v] : report.histogram) histogram[std::to_string(k)] = v;
    return {kSuccess, json_text({{"n", report.n},
                                 {"i", report.i},
                                 {"trials", cfg.trials},
                                 {"seed", cfg.seed},
                                 {"histogram", histogram},
                                 {"samples", samples}})};
  }
  if (cfg.format == "csv") {
    std::string text = "profile,coeffs,swallowtail_nullity\n";
    for (const auto& s : report.samples) {
      text += csv_escape(s.profile.str()) + "," + csv_escape(join(s.coeffs)) + "," +
              std::to_string(s.swallowtail_nullity) + "\n";
    }
    return {kSuccess, text};
  }
  std::ostringstream os;
  os << "probe n=" << report.n << " i=" << report.i << " trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
  for (const auto& [k, v] : report.histogram) os << "nullity " << k << ": " << v << "\n";
  return {kSuccess, os.str()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Determinantal formulas for discriminants of binary forms", "discmat"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"plain", "json", "latex", "csv"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Degree of the form")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  CLI::App* build = app.add_subcommand("build", "Build a formula matrix");
  common(build);
  build->add_option("--formula", cfg.formula, "Formula to build")->required()->check(CLI::IsMember(kBuildFormulas));

  CLI::App* verify = app.add_subcommand("verify", "Verify det(M) = c * a0^e * D_n");
  common(verify);
  verify->add_option("--formula", cfg.formula, "Formula to verify")->required()->check(CLI::IsMember(kVerifyFormulas));
  verify->add_option("--mode", cfg.mode, "symbolic or sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}))
      ->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Number of sample points")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  CLI::App* analyze = app.add_subcommand("analyze", "Classify the root structure of a polynomial");
  analyze->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  analyze->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  analyze->add_option("--coeffs", cfg.coeffs, "Coefficients a0,...,an");
  analyze->add_option("--profile", cfg.profile, "Roots with multiplicities, e.g. 0^3,1^1");

  CLI::App* probe = app.add_subcommand("probe", "Swallowtail nullity of derivatives of forms with two high-order roots");
  common(probe);
  probe->add_option("--i", cfg.derivative_order, "Number of derivatives")->capture_default_str();
  probe->add_option("--trials", cfg.trials, "Number of random profiles")->capture_default_str();
  probe->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  CommandResult result;
  try {
    if (build->parsed()) cfg.command = "build", result = cmd_build(cfg);
    else if (verify->parsed()) cfg.command = "verify", result = cmd_verify(cfg);
    else if (analyze->parsed()) cfg.command = "analyze", result = cmd_analyze(cfg);
    else cfg.command = "probe", result = cmd_probe(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kUsageError;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace discmat::cli
