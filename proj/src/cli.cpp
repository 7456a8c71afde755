#include "padic/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "padic/errors.hpp"
#include "padic/haar.hpp"
#include "padic/text.hpp"
#include "padic/vanderput.hpp"
#include "padic/zoo/balls.hpp"
#include "padic/zoo/registry.hpp"

namespace padic::cli {

namespace {

using nlohmann::json;

struct Options {
  std::int64_t prime = 2;
  std::int64_t precision = PadicNumber::kDefaultPrecision;
  std::uint64_t seed = 1;
  std::string format;  // empty: per-command default
  std::string out_path;

  int k = 1;
  int bit = 0;
  std::string coefficients;
  std::string beta;
  std::string a;
  std::int64_t power = 1;
  std::string polynomial;

  std::string entry;
  std::string claim;
  std::string x;
  std::int64_t samples = 0;
  std::int64_t max_index = 0;

  std::string criterion = "lip";
  double alpha = 2;
  std::uint64_t n_max = 1000;

  std::int64_t prefix = 10;
  std::string statistic = "E-prefix";
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

zoo::ZooParams params_from(const Options& o) {
  const Prime p(o.prime);
  zoo::ZooParams q;
  q.prime = p;
  q.precision = o.precision;
  q.family_size = o.k;
  q.bit = o.bit;
  for (const auto& c : split_list(o.coefficients)) q.coefficients.push_back(parse_padic(c, p));
  if (!o.beta.empty()) q.beta = parse_padic(o.beta, p);
  if (!o.a.empty()) q.a = parse_padic(o.a, p);
  q.power = o.power;
  if (!o.polynomial.empty()) q.polynomial = zoo::parse_polynomial(o.polynomial, p);
  return q;
}

json config_json(const Options& o, const std::string& command) {
  json c = {{"command", command}, {"prime", o.prime}, {"precision", o.precision}, {"seed", o.seed}};
  if (!o.entry.empty()) {
    c["entry"] = o.entry;
    c["family_size"] = o.k;
    c["bit"] = o.bit;
    if (!o.coefficients.empty()) c["coefficients"] = o.coefficients;
    if (!o.beta.empty()) c["beta"] = o.beta;
    if (!o.a.empty()) c["a"] = o.a;
    if (!o.polynomial.empty()) c["polynomial"] = o.polynomial;
  }
  if (!o.claim.empty()) c["claim"] = o.claim;
  return c;
}

json envelope(const Options& o, const std::string& command) {
  return {{"schema", 1}, {"config", config_json(o, command)}};
}

// Writes to --out when given, else to out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const zoo::ZooEntry e = zoo::make_entry(o.entry, params_from(o));
  const Prime p(o.prime);
  const PadicNumber x = parse_padic(o.x, p);
  const PadicNumber y = e.function(x);
  Sink sink(o.out_path, out);
  const std::string fmt = o.format.empty() ? "text" : o.format;
  if (fmt == "json") {
    json j = envelope(o, "eval");
    j["x"] = to_string(x);
    j["value"] = to_string(y);
    j["abs_precision"] = y.is_exact() ? json("exact") : json(y.abs_precision());
    if (y.is_nonzero()) j["norm"] = y.abs_value().to_string();
    sink.get() << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    sink.get() << "x,value,abs_precision\n"
               << '"' << to_string(x) << "\",\"" << to_string(y) << "\","
               << (y.is_exact() ? std::string("exact") : std::to_string(y.abs_precision())) << '\n';
  } else {
    sink.get() << to_string(y) << '\n';
  }
  return kPass;
}

int cmd_verify_haar(const Options& o, std::ostream& out) {
  const Prime p(o.prime);
  const std::int64_t samples = o.samples > 0 ? o.samples : 100000;
  json j = envelope(o, "verify");
  bool passed = true;
  if (o.claim == "E-prefix") {
    auto series = haar::estimate_E_prefix_series(p, o.prefix, samples, o.seed);
    json reports = json::array();
    for (std::size_t k = 0; k < series.size(); ++k) {
      json r = series[k].to_json();
      r["k"] = k + 1;
      r["within_3_sigma"] = series[k].within(3);
      passed = passed && series[k].within(3);
      reports.push_back(r);
    }
    j["reports"] = reports;
    j["summary"] = passed ? "all estimates within 3 sigma of (1 - 1/p^2)^k"
                          : "some estimate is outside 3 sigma of (1 - 1/p^2)^k";
  } else if (o.claim == "Y0") {
    auto r = haar::estimate_Y0(p, samples, o.seed);
    passed = r.within(3);
    j["reports"] = json::array({r.to_json()});
    j["summary"] = passed ? "mean Y_0 within 3 sigma of 1/p^2" : "mean Y_0 outside 3 sigma of 1/p^2";
  } else {
    throw DomainError("haar has claims E-prefix and Y0, not '" + o.claim + "'");
  }
  j["passed"] = passed;
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << '\n';
  return passed ? kPass : kClaimFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.entry == "haar") return cmd_verify_haar(o, out);
  const zoo::ZooEntry e = zoo::make_entry(o.entry, params_from(o));
  const zoo::Claim& c = e.claim(o.claim);
  const zoo::ClaimOutcome r = c.run(zoo::ClaimContext{o.seed, o.samples, o.max_index});
  Sink sink(o.out_path, out);
  if (o.format == "text") {
    sink.get() << (r.passed ? "PASS " : "FAIL ") << e.name << ' ' << c.name << ": " << r.summary << '\n';
  } else {
    json j = envelope(o, "verify");
    j["description"] = c.description;
    j["passed"] = r.passed;
    j["summary"] = r.summary;
    j["details"] = r.details;
    sink.get() << j.dump(2) << '\n';
  }
  return r.passed ? kPass : kClaimFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  const zoo::ZooEntry e = zoo::make_entry(o.entry, params_from(o));
  const Prime p(o.prime);
  Support support;
  if (e.name == "lip") support = [p](std::uint64_t k) { return zoo::sigma(k, p); };
  VdPSeries series(e.function, support);
  double alpha = o.alpha;
  if (o.criterion == "n1") {
    alpha = 1;
  } else if (o.criterion != "lip") {
    throw DomainError("criterion must be lip or n1, not '" + o.criterion + "'");
  }
  const LipReport report = lip_criterion(series, alpha, o.n_max);
  Sink sink(o.out_path, out);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "json") {
    json j = envelope(o, "table");
    j["criterion"] = o.criterion;
    j["alpha"] = alpha;
    j["running_sup"] = format_log_real(report.log_sup);
    if (o.criterion == "n1") {
      const N1Report n1 = n1_criterion(series, o.n_max);
      json windows = json::array();
      for (const auto& w : n1.windows) windows.push_back({{"octave", w.octave}, {"max", format_log_real(w.log_max)}});
      j["windows"] = windows;
      j["decays"] = n1.decays;
      j["all_zero"] = n1.all_zero;
    }
    std::ostringstream csv;
    write_csv(csv, report);
    j["csv"] = csv.str();
    sink.get() << j.dump(2) << '\n';
  } else {
    write_csv(sink.get(), report);
  }
  return kPass;
}

int cmd_haar(const Options& o, std::ostream& out) {
  const Prime p(o.prime);
  const std::int64_t samples = o.samples > 0 ? o.samples : 100000;
  auto series = haar::estimate_E_prefix_series(p, o.prefix, samples, o.seed);
  Sink sink(o.out_path, out);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "json") {
    json j = envelope(o, "haar");
    json reports = json::array();
    for (std::size_t k = 0; k < series.size(); ++k) {
      json r = series[k].to_json();
      r["k"] = k + 1;
      reports.push_back(r);
    }
    j["reports"] = reports;
    j["y0"] = haar::estimate_Y0(p, samples, o.seed).to_json();
    sink.get() << j.dump(2) << '\n';
  } else {
    haar::write_csv(sink.get(), series);
  }
  return kPass;
}

int cmd_list(const Options& o, std::ostream& out) {
  zoo::ZooParams q;
  q.prime = Prime(o.prime);
  Sink sink(o.out_path, out);
  if (o.format == "json") {
    json j = envelope(o, "list");
    json entries = json::array();
    for (const auto& item : zoo::registry()) {
      json claims = json::array();
      for (const auto& c : zoo::make_entry(item.name, q).claims) claims.push_back({{"name", c.name}, {"description", c.description}});
      entries.push_back({{"name", item.name}, {"description", item.description}, {"claims", claims}});
    }
    entries.push_back({{"name", "haar"}, {"description", "Monte Carlo checks of the Haar measure on Z_p"},
                       {"claims", json::array({{{"name", "E-prefix"}}, {{"name", "Y0"}}})}});
    j["entries"] = entries;
    sink.get() << j.dump(2) << '\n';
    return kPass;
  }
  for (const auto& item : zoo::registry()) {
    sink.get() << item.name << "  " << item.description << '\n';
    for (const auto& c : zoo::make_entry(item.name, q).claims) sink.get() << "    " << c.name << '\n';
  }
  sink.get() << "haar  Monte Carlo checks of the Haar measure on Z_p\n    E-prefix\n    Y0\n";
  return kPass;
}

void add_entry_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "size of the index-set family")->check(CLI::Range(1, kMaxFamilySize));
  cmd->add_option("--bit", o.bit, "which set of the family")->check(CLI::NonNegativeNumber);
  cmd->add_option("--coeffs", o.coefficients, "comma-separated coefficients of a linear combination");
  cmd->add_option("--beta", o.beta, "exponent beta");
  cmd->add_option("--a", o.a, "centre a");
  cmd->add_option("--power", o.power, "power k for sphere_g")->check(CLI::PositiveNumber);
  cmd->add_option("--poly", o.polynomial, "polynomial 'c:e1,e2;c:e1,e2' for fbeta_poly");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pathological p-adic functions: evaluation, witness checks, coefficient tables, Haar sampling",
               "padic_zoo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", o.prime, "the prime p")->check([](const std::string& s) -> std::string {
    try {
      Prime(std::stoll(s));
      return {};
    } catch (const std::exception&) {
      return s + " is not a prime below 2^31";
    }
  });
  app.add_option("--precision", o.precision, "working precision in digits")->check(CLI::Range(8, 100000));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out_path, "write the report here instead of stdout");

  auto* eval = app.add_subcommand("eval", "evaluate an entry at a point");
  eval->add_option("entry", o.entry, "entry name")->required();
  eval->add_option("x", o.x, "point, e.g. 'p^2', '1/3', '1 2 0 * p^-1 (mod p^10)'")->required();
  add_entry_options(eval, o);

  auto* verify = app.add_subcommand("verify", "run a claim; exit 0 on pass, 1 on failure");
  verify->add_option("entry", o.entry, "entry name, or haar")->required();
  verify->add_option("claim", o.claim, "claim name")->required();
  verify->add_option("--samples", o.samples, "number of random samples")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-index", o.max_index, "largest witness index")->check(CLI::NonNegativeNumber);
  verify->add_option("--prefix", o.prefix, "pairs in the E prefix (haar)")->check(CLI::Range(1, 64));
  add_entry_options(verify, o);

  auto* table = app.add_subcommand("table", "van der Put coefficient table as CSV");
  table->add_option("entry", o.entry, "entry name")->required();
  table->add_option("--criterion", o.criterion, "lip or n1")->check(CLI::IsMember({"lip", "n1"}));
  table->add_option("--alpha", o.alpha, "exponent alpha for lip")->check(CLI::PositiveNumber);
  table->add_option("--n-max", o.n_max, "number of support indices")->check(CLI::Range(1, 10000000));
  add_entry_options(table, o);

  auto* haar_cmd = app.add_subcommand("haar", "E-prefix estimates for k = 1..prefix");
  haar_cmd->add_option("--samples", o.samples, "number of samples")->check(CLI::NonNegativeNumber);
  haar_cmd->add_option("--prefix", o.prefix, "largest k")->check(CLI::Range(1, 64));

  auto* list = app.add_subcommand("list", "registered entries and their claims");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*table) return cmd_table(o, out);
    if (*haar_cmd) return cmd_haar(o, out);
    if (*list) return cmd_list(o, out);
  } catch (const InsufficientPrecision& e) {
    err << "insufficient precision: " << e.what() << '\n';
    if (e.required() > 0) err << "hint: give the input to at least " << e.required() << " digits (mod p^" << e.required() << ")\n";
    return kInsufficientPrecision;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PrimeMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace padic::cli
