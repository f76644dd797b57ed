// Command-line front end: moments, expansions, limits, convergence probes,
// alpha/N sweeps, and the verification suites.  All numeric output carries
// the exact rational alongside a 12-significant-digit decimal derived from
// it.  Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 computation error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permastat/asymptotics.hpp"
#include "permastat/errors.hpp"
#include "permastat/moments.hpp"
#include "permastat/partition.hpp"
#include "permastat/rational.hpp"
#include "permastat/serialize.hpp"
#include "permastat/symfunc.hpp"
#include "permastat/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permastat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
  return buf;
}

void emit(ordered_json doc, bool timestamp) {
  if (timestamp) doc["timestamp"] = iso_timestamp();
  std::cout << doc.dump(2) << "\n";
}

Route parse_route(const std::string& s) {
  if (s == "auto") return Route::Auto;
  if (s == "schur") return Route::SchurKadell;
  if (s == "jack") return Route::JackKadell;
  if (s == "hyperdet") return Route::HyperdetCauchy;
  throw UsageError("unknown route '" + s + "' (expected auto|schur|jack|hyperdet)");
}

RegimeClass parse_regime(const std::string& s) {
  if (s == "p<1" || s == "sublinear") return RegimeClass::SubLinear;
  if (s == "p=1" || s == "linear") return RegimeClass::Linear;
  if (s == "p>1" || s == "superlinear") return RegimeClass::SuperLinear;
  throw UsageError("unknown regime '" + s + "' (expected p<1|p=1|p>1)");
}

std::string regime_name(RegimeClass c) {
  switch (c) {
    case RegimeClass::SubLinear: return "p<1";
    case RegimeClass::Linear: return "p=1";
    case RegimeClass::SuperLinear: return "p>1";
  }
  return "?";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw UsageError("empty list");
  return out;
}

ExactRational parse_rational_arg(const std::string& s, const std::string& flag) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Partition parse_partition_arg(const std::string& s) {
  try {
    return parse_partition(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

int cmd_moment(const std::string& lambda_s, const std::string& alpha_s, int beta, long n,
               const std::string& route_s, bool timestamp) {
  MomentQuery q;
  q.lambda = parse_partition_arg(lambda_s);
  q.alpha = parse_rational_arg(alpha_s, "--alpha");
  q.beta = beta;
  q.n = n;
  q.route = parse_route(route_s);
  const ExactRational value = moment(q);
  emit(moment_json(q, value, resolve_route(q)), timestamp);
  return kExitOk;
}

int cmd_expand(const std::string& basis_s, const std::string& lambda_s,
               const std::string& xi_s, int max_length, bool timestamp) {
  const Partition lambda = parse_partition_arg(lambda_s);
  SymExpansion e;
  if (basis_s == "schur") {
    e = monomial_to_schur(lambda);
  } else if (basis_s == "jackJ" || basis_s == "jackP") {
    const ExactRational xi = parse_rational_arg(xi_s, "--xi");
    if (xi.sign() <= 0) throw UsageError("--xi must be positive");
    e = basis_s == "jackJ" ? monomial_to_jackJ(lambda, xi) : monomial_to_jackP(lambda, xi);
  } else {
    throw UsageError("unknown basis '" + basis_s + "' (expected schur|jackJ|jackP)");
  }
  if (max_length >= 0) {
    SymExpansion cut;
    cut.basis = e.basis;
    cut.xi = e.xi;
    for (const auto& [mu, c] : e.terms)
      if (mu.length() <= max_length) cut.add(mu, c);
    e = std::move(cut);
  }
  ordered_json doc = expansion_json(e);
  doc["lambda"] = lambda.parts();
  emit(std::move(doc), timestamp);
  return kExitOk;
}

int cmd_limit(const std::string& lambda_s, const std::string& regime_s,
              const std::string& ell_s, bool timestamp) {
  const Partition lambda = parse_partition_arg(lambda_s);
  if (lambda.empty()) throw UsageError("--lambda must have at least one part");
  Regime r;
  r.cls = parse_regime(regime_s);
  r.ell = parse_rational_arg(ell_s, "--ell");
  if (r.cls == RegimeClass::Linear && r.ell.sign() <= 0)
    throw UsageError("--ell must be positive");
  const PartitionLimit lim = limit_partition(lambda, r);
  ordered_json doc;
  doc["lambda"] = lambda.parts();
  doc["regime"] = regime_name(r.cls);
  if (r.cls == RegimeClass::Linear) doc["ell"] = r.ell.str();
  doc["value"] = lim.value.str();
  doc["value_float"] = decimal_string(lim.value);
  doc["conjecture"] = lim.conjectural;
  emit(std::move(doc), timestamp);
  return kExitOk;
}

int cmd_probe(const std::string& lambda_s, int beta, const std::string& regime_s,
              const std::string& ell_s, const std::string& ns_s, bool timestamp) {
  const Partition lambda = parse_partition_arg(lambda_s);
  if (lambda.empty()) throw UsageError("--lambda must have at least one part");
  Regime r;
  r.cls = parse_regime(regime_s);
  r.ell = parse_rational_arg(ell_s, "--ell");
  std::vector<long> ns;
  for (const std::string& tok : split_commas(ns_s)) {
    try {
      ns.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw UsageError("--N: '" + tok + "' is not an integer");
    }
    if (ns.back() < 1) throw UsageError("--N entries must be positive");
  }
  const auto rows = convergence_probe(lambda, beta, r, ns);
  const PartitionLimit lim = limit_partition(lambda, r);
  ordered_json doc;
  doc["lambda"] = lambda.parts();
  doc["beta"] = beta;
  doc["regime"] = regime_name(r.cls);
  if (r.cls == RegimeClass::Linear) doc["ell"] = r.ell.str();
  doc["limit"] = lim.value.str();
  doc["limit_float"] = decimal_string(lim.value);
  doc["conjecture"] = lim.conjectural;
  doc["rows"] = ordered_json::array();
  for (const ProbeRow& row : rows) {
    ordered_json jr;
    jr["N"] = row.n;
    jr["value"] = row.value.str();
    jr["value_float"] = decimal_string(row.value);
    jr["rel_dev"] = row.rel_dev.str();
    jr["rel_dev_float"] = decimal_string(row.rel_dev);
    doc["rows"].push_back(std::move(jr));
  }
  emit(std::move(doc), timestamp);
  return kExitOk;
}

struct SweepRow {
  std::string key; // alpha or N, as given
  ExactRational value;
};

int cmd_sweep(const std::string& lambda_s, int beta, const std::string& n_s,
              const std::string& alpha_grid_s, const std::string& n_grid_s,
              const std::string& alpha_rule_s, const std::string& ell_s,
              const std::string& out_path, const std::string& format, bool timestamp) {
  const Partition lambda = parse_partition_arg(lambda_s);
  if (format != "csv" && format != "json")
    throw UsageError("--format must be csv or json");
  if (alpha_grid_s.empty() == n_grid_s.empty())
    throw UsageError("exactly one of --alpha-grid and --N-grid is required");

  std::vector<SweepRow> rows;
  if (!alpha_grid_s.empty()) {
    long n = 0;
    try {
      n = std::stol(n_s);
    } catch (const std::exception&) {
      throw UsageError("--N: '" + n_s + "' is not an integer");
    }
    std::vector<ExactRational> alphas;
    std::vector<std::string> keys;
    for (const std::string& tok : split_commas(alpha_grid_s)) {
      ExactRational a = parse_rational_arg(tok, "--alpha-grid");
      if (a.sign() <= 0) throw UsageError("--alpha-grid values must be positive");
      alphas.push_back(std::move(a));
      keys.push_back(tok);
    }
    const auto values = moment_sweep(lambda, beta, n, alphas);
    for (size_t i = 0; i < values.size(); ++i)
      rows.push_back({keys[i], values[i].second});
  } else {
    Regime r;
    r.cls = parse_regime(alpha_rule_s.empty() ? "p=1" : alpha_rule_s);
    r.ell = parse_rational_arg(ell_s, "--ell");
    std::vector<long> ns;
    for (const std::string& tok : split_commas(n_grid_s)) {
      try {
        ns.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw UsageError("--N-grid: '" + tok + "' is not an integer");
      }
      if (ns.back() < 1) throw UsageError("--N-grid entries must be positive");
    }
    const auto probe = convergence_probe(lambda, beta, r, ns);
    for (const ProbeRow& row : probe)
      rows.push_back({std::to_string(row.n), row.value});
  }

  std::ostringstream body;
  if (format == "csv") {
    body << "alpha_or_N,value_rational,value_float\n";
    for (const SweepRow& row : rows)
      body << row.key << "," << row.value.str() << "," << decimal_string(row.value) << "\n";
    if (timestamp) body << "# generated " << iso_timestamp() << "\n";
  } else {
    ordered_json doc;
    doc["lambda"] = lambda.parts();
    doc["beta"] = beta;
    doc["rows"] = ordered_json::array();
    for (const SweepRow& row : rows) {
      ordered_json jr;
      jr["key"] = row.key;
      jr["value"] = row.value.str();
      jr["value_float"] = decimal_string(row.value);
      doc["rows"].push_back(std::move(jr));
    }
    if (timestamp) doc["timestamp"] = iso_timestamp();
    body << doc.dump(2) << "\n";
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << body.str()) || !f.flush()) {
      f.close();
      std::error_code ec;
      std::filesystem::remove(out_path, ec); // drop the partial file
      throw std::runtime_error("failed to write " + out_path);
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& level_s) {
  VerifyLevel level;
  if (level_s == "quick") {
    level = VerifyLevel::Quick;
  } else if (level_s == "full") {
    level = VerifyLevel::Full;
  } else {
    throw UsageError("--level must be quick or full");
  }
  const auto results = run_verification(level);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("[%s] %-36s (%.2f s)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
  }
  std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES PRESENT");
  return all_pass ? kExitOk : kExitVerifyFail;
}

void emit_error(const std::string& type, const std::string& message) {
  ordered_json doc;
  doc["error"] = message;
  doc["type"] = type;
  std::cerr << doc.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nonlinear eigenvalue statistics of classical invariant ensembles"};
  app.require_subcommand(1);
  bool timestamp = false;
  app.add_flag("--timestamp", timestamp, "append a wall-clock timestamp to the output");

  std::string lambda_s = "[]", alpha_s = "1", route_s = "auto";
  int beta = 2;
  long n = 1;
  auto* c_moment = app.add_subcommand("moment", "compute <T_1^l1 ... T_N^lN> exactly");
  c_moment->add_option("--lambda", lambda_s, "exponent partition, e.g. [4,3,2]")->required();
  c_moment->add_option("--alpha", alpha_s, "weight exponent offset (rational, > 0)");
  c_moment->add_option("--beta", beta, "symmetry class: 1, 2, or 4");
  c_moment->add_option("--N", n, "matrix dimension")->required();
  c_moment->add_option("--route", route_s, "auto|schur|jack|hyperdet");

  std::string basis_s = "schur", xi_s = "1";
  int max_length = -1;
  auto* c_expand = app.add_subcommand("expand", "expand a monomial symmetric function");
  c_expand->add_option("--basis", basis_s, "target basis: schur|jackJ|jackP");
  c_expand->add_option("--lambda", lambda_s, "partition to expand")->required();
  c_expand->add_option("--xi", xi_s, "Jack parameter (rational, > 0)");
  c_expand->add_option("--max-length", max_length, "drop terms longer than this");

  std::string regime_s = "p=1", ell_s = "1", ns_s;
  auto* c_limit = app.add_subcommand("limit", "large-N limit of a moment");
  c_limit->add_option("--lambda", lambda_s, "exponent partition")->required();
  c_limit->add_option("--regime", regime_s, "p<1|p=1|p>1");
  c_limit->add_option("--ell", ell_s, "channel ratio (p=1 regime only)");

  auto* c_probe = app.add_subcommand("probe", "finite-N deviation from the limit");
  c_probe->add_option("--lambda", lambda_s, "exponent partition")->required();
  c_probe->add_option("--beta", beta, "symmetry class: 1, 2, or 4");
  c_probe->add_option("--regime", regime_s, "p<1|p=1|p>1");
  c_probe->add_option("--ell", ell_s, "channel ratio (p=1 regime only)");
  c_probe->add_option("--N", ns_s, "comma-separated dimensions, e.g. 10,100,1000")->required();

  std::string n_s = "1", alpha_grid_s, n_grid_s, alpha_rule_s, out_path, format = "csv";
  auto* c_sweep = app.add_subcommand("sweep", "tabulate moments over an alpha or N grid");
  c_sweep->add_option("--lambda", lambda_s, "exponent partition")->required();
  c_sweep->add_option("--beta", beta, "symmetry class: 1, 2, or 4");
  c_sweep->add_option("--N", n_s, "dimension (with --alpha-grid)");
  c_sweep->add_option("--alpha-grid", alpha_grid_s, "comma-separated rational alphas");
  c_sweep->add_option("--N-grid", n_grid_s, "comma-separated dimensions");
  c_sweep->add_option("--alpha-rule", alpha_rule_s,
                      "alpha(N) schedule for --N-grid: p<1|p=1|p>1");
  c_sweep->add_option("--ell", ell_s, "channel ratio for the p=1 schedule");
  c_sweep->add_option("--out", out_path, "output file (default: stdout)");
  c_sweep->add_option("--format", format, "csv|json");

  std::string level_s = "quick";
  auto* c_verify = app.add_subcommand("verify", "run the self-verification suite");
  c_verify->add_option("--level", level_s, "quick|full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
    emit_error("usage", e.what());
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_moment))
      return cmd_moment(lambda_s, alpha_s, beta, n, route_s, timestamp);
    if (app.got_subcommand(c_expand))
      return cmd_expand(basis_s, lambda_s, xi_s, max_length, timestamp);
    if (app.got_subcommand(c_limit)) return cmd_limit(lambda_s, regime_s, ell_s, timestamp);
    if (app.got_subcommand(c_probe))
      return cmd_probe(lambda_s, beta, regime_s, ell_s, ns_s, timestamp);
    if (app.got_subcommand(c_sweep))
      return cmd_sweep(lambda_s, beta, n_s, alpha_grid_s, n_grid_s, alpha_rule_s, ell_s,
                       out_path, format, timestamp);
    if (app.got_subcommand(c_verify)) return cmd_verify(level_s);
    emit_error("usage", "no subcommand given");
    return kExitUsage;
  } catch (const UsageError& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    emit_error("computation", e.what());
    return kExitComputation;
  }
}
