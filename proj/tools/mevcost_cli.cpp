// Command-line front end: exact cost reports, spectra and coherence tables,
// the bound-verification suite, and sampled CFMM sup-cost estimates.
//
// Exit codes: 0 = success / all certificates pass, 1 = a certificate failed,
// 2 = configuration error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mevcost/bounds_suite.hpp"
#include "mevcost/cfmm.hpp"
#include "mevcost/cost.hpp"
#include "mevcost/report_json.hpp"
#include "mevcost/spectral.hpp"

namespace {

using nlohmann::json;
using namespace mevcost;

struct OutputOptions {
  std::string path;  // empty: stdout
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
  cmd->add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw std::runtime_error("cannot open output file: " + out.path);
  f << text;
}

void write_json(const OutputOptions& out, const json& j) {
  write_text(out, j.dump(2) + "\n");
}

json load_json_arg(const std::string& arg) {
  // Inline JSON starts with '{'; anything else is a file path.
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream f(arg);
  if (!f) throw std::runtime_error("cannot open payoff config: " + arg);
  return json::parse(f);
}

std::vector<double> number_list(const json& a) {
  std::vector<double> v;
  for (const auto& e : a) v.push_back(e.get<double>());
  return v;
}

GraphKind parse_graph_kind(const std::string& spec, std::string* custom_path) {
  if (spec == "complete") return GraphKind::complete;
  if (spec == "transposition") return GraphKind::transposition;
  if (spec.rfind("custom:", 0) == 0) {
    *custom_path = spec.substr(7);
    return GraphKind::custom;
  }
  throw CLI::ValidationError("--graph",
                             "expected complete|transposition|custom:<path>");
}

std::vector<Edge> load_edge_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open edge file: " + path);
  std::vector<Edge> edges;
  std::uint64_t a, b;
  while (f >> a >> b)
    edges.emplace_back(static_cast<std::uint32_t>(a),
                       static_cast<std::uint32_t>(b));
  return edges;
}

ForwardExchangeFn make_g(const std::string& family, double scale,
                         double exponent) {
  if (family == "power") return ForwardExchangeFn::power(scale, exponent);
  if (family == "piecewise")
    // A representative concave staircase scaled by `scale`.
    return ForwardExchangeFn::piecewise_linear(
        {0.0, 1.0, 4.0, 16.0},
        {scale, 0.5 * scale, 0.25 * scale, 0.125 * scale});
  throw CLI::ValidationError("--g-family", "expected power|piecewise");
}

// Evaluates a payoff config and x, producing the cost report plus the
// stabilizer-bound certificate.
json run_cost_config(const json& cfg) {
  const std::string family = cfg.at("family").get<std::string>();
  const json& params = cfg.at("params");
  json report;
  report["family"] = family;

  auto finish = [&report](const auto& f, const auto& x) {
    report["cost_report"] = to_json(cost(f, x));
    auto [tilde, scale, offset] = normalize(f, x);
    report["normalization"] = {{"scale", scale}, {"offset", offset}};
    report["certificates"] =
        json::array({to_json(stabilizer_bound(tilde, x))});
  };

  if (family == "indicator") {
    auto x = number_list(params.at("x"));
    finish(indicator_payoff(number_list(params.at("y"))), x);
  } else if (family == "linear") {
    auto x = number_list(params.at("x"));
    finish(linear_tightness_payoff(), x);
  } else if (family == "worst_cost") {
    auto x = number_list(params.at("x"));
    finish(global_worst_cost_payoff<double>(), x);
  } else if (family == "table") {
    auto x = number_list(params.at("x"));
    finish(table_payoff(number_list(params.at("values")), x), x);
  } else if (family == "liquidation") {
    TransactionList<LiqAction> x;
    for (const auto& e : params.at("x")) {
      if (e.is_string() && e.get<std::string>() == "L")
        x.push_back(LiqAction::liq());
      else
        x.push_back(LiqAction::trade(e.get<double>()));
    }
    double p = params.value("p", static_cast<double>(x.size()) / 2.0);
    report["threshold"] = p;
    finish(liquidation_payoff(p), x);
  } else {
    throw std::runtime_error("unknown payoff family: " + family);
  }
  report["tool_version"] = kToolVersion;
  return report;
}

int cmd_spectrum(int n, const std::string& graph_spec, bool allow_large,
                 const OutputOptions& out) {
  std::string custom_path;
  auto kind = parse_graph_kind(graph_spec, &custom_path);
  std::optional<std::vector<Edge>> edges;
  if (kind == GraphKind::custom) edges = load_edge_file(custom_path);
  auto g = build_graph(n, kind, std::move(edges), allow_large);
  auto s = decompose(g);

  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "index,eigenvalue,inf_norm\n";
    for (std::uint64_t i = 0; i < s.num_vertices; ++i)
      csv << i << ',' << s.eigenvalues[i] << ','
          << kernels::max_abs(s.column(i), s.num_vertices) << '\n';
    write_text(out, csv.str());
    return 0;
  }
  json j = {{"n", n},
            {"graph", graph_kind_name(kind)},
            {"num_vertices", s.num_vertices},
            {"num_edges", g.edges.size()},
            {"diameter", g.diameter},
            {"eigenvalues", s.eigenvalues},
            {"coherence", coherence(s)},
            {"degenerate", s.degenerate},
            {"provenance", s.provenance},
            {"tool_version", kToolVersion}};
  std::vector<double> inf_norms;
  for (std::uint64_t i = 0; i < s.num_vertices; ++i)
    inf_norms.push_back(kernels::max_abs(s.column(i), s.num_vertices));
  j["inf_norms"] = inf_norms;
  write_json(out, j);
  return 0;
}

int cmd_coherence_table(int n_max, const OutputOptions& out) {
  if (n_max < 1 || n_max > kSpectralCap)
    throw std::runtime_error("coherence table supports 1 <= n <= 7");
  struct Row {
    int n;
    double transposition, complete;
    bool basis_dependent;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= n_max; ++n) {
    auto st = decompose(build_graph(n, GraphKind::transposition));
    auto sc = decompose(build_graph(n, GraphKind::complete));
    rows.push_back({n, coherence(st), coherence(sc), st.degenerate});
  }
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "n,transposition,complete,transposition_basis_dependent\n";
    for (const auto& r : rows)
      csv << r.n << ',' << r.transposition << ',' << r.complete << ','
          << (r.basis_dependent ? 1 : 0) << '\n';
    write_text(out, csv.str());
    return 0;
  }
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"n", r.n},
                  {"transposition", r.transposition},
                  {"complete", r.complete},
                  {"transposition_basis_dependent", r.basis_dependent}});
  write_json(out, {{"rows", jr}, {"tool_version", kToolVersion}});
  return 0;
}

int cmd_frontrun(int n, double m, double delta, const std::string& g_family,
                 double g_scale, double g_exponent, int trials,
                 std::uint64_t seed, const OutputOptions& out) {
  auto G = make_g(g_family, g_scale, g_exponent);
  G.validate_on_grid(m + delta + 1.0);
  auto cs = sampled_cs_frontrun(G, delta, m, n, trials, seed);
  double bound = 8.0 * G.derivative_at_zero() * m;
  auto cert = global_smooth_bound(cs.value, 2.0 * G.derivative_at_zero(),
                                  2.0 * m, 0.0, "frontrun");
  json j = {{"market", {{"g_family", g_family},
                        {"g_scale", g_scale},
                        {"g_exponent", g_exponent},
                        {"m", m},
                        {"delta", delta},
                        {"n", n}}},
            {"sampled_cs", to_json(cs)},
            {"analytic_bound", bound},
            {"utilization", cs.value / bound},
            {"certificates", json::array({to_json(cert)})},
            {"tool_version", kToolVersion}};
  write_json(out, j);
  return cert.satisfied ? 0 : 1;
}

int cmd_sandwich(int n, double m, const std::string& g_family, double g_scale,
                 double g_exponent, int trials, std::uint64_t seed,
                 const OutputOptions& out) {
  auto G = make_g(g_family, g_scale, g_exponent);
  G.validate_on_grid(2.0 * m + 1.0);
  auto cs = sampled_cs_sandwich(G, m, n, trials, seed);
  // Payoff <= trader volume on every sampled feasible list.
  std::mt19937_64 rng(seed);
  auto f = sandwich_payoff();
  bool payoff_ok = true;
  for (int s = 0; s < trials; ++s) {
    auto z = sample_sandwich_list(rng, n, m, G);
    double t = 0.0;
    for (const auto& a : z) t += a.trader;
    if (f(z) > t + 1e-9) payoff_ok = false;
  }
  auto weak = make_certificate("global_smooth", cs.value, 2.0 * m, "C_s <= 2M");
  auto strong = make_certificate("global_smooth", cs.value, m,
                                 "strengthened C_s <= M");
  json j = {{"market", {{"g_family", g_family},
                        {"g_scale", g_scale},
                        {"g_exponent", g_exponent},
                        {"m", m},
                        {"n", n}}},
            {"sampled_cs", to_json(cs)},
            {"payoff_below_volume", payoff_ok},
            {"certificates", json::array({to_json(weak), to_json(strong)})},
            {"tool_version", kToolVersion}};
  write_json(out, j);
  return (weak.satisfied && strong.satisfied && payoff_ok) ? 0 : 1;
}

int cmd_fair_demo(int n, int trials, std::uint64_t seed,
                  const OutputOptions& out) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  TransactionList<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> values(factorial(n));
    for (auto& v : values) v = unif(rng);
    auto f = table_payoff(values, x);
    worst = std::max(worst, std::abs(randomized_cost(fair_wrapper(f, n), x)));
  }
  json j = {{"n", n},
            {"trials", trials},
            {"seed", seed},
            {"max_abs_randomized_cost", worst},
            {"tolerance", 1e-12},
            {"tool_version", kToolVersion}};
  write_json(out, j);
  return worst <= 1e-12 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost-of-MEV calculator: exact costs, spectral bounds and "
               "CFMM sup-cost estimates over transaction orderings"};
  app.require_subcommand(1);

  int n = 4;
  std::uint64_t seed = 0;
  int trials = 100;
  std::string graph_spec = "transposition";
  std::string payoff_arg;
  bool allow_large = false;
  OutputOptions out;

  auto* c_cost = app.add_subcommand("cost", "Exact cost of a payoff config");
  c_cost->add_option("--payoff", payoff_arg, "JSON file or inline JSON")
      ->required();
  add_output_flags(c_cost, out);

  auto* c_spec = app.add_subcommand("spectrum", "Laplacian spectrum report");
  c_spec->add_option("--n", n, "degree")->required();
  c_spec->add_option("--graph", graph_spec,
                     "complete|transposition|custom:<path>");
  c_spec->add_flag("--allow-n8", allow_large, "permit n = 8 (large solve)");
  add_output_flags(c_spec, out);

  auto* c_table =
      app.add_subcommand("coherence-table", "Coherence for n = 1..n_max");
  c_table->add_option("--n", n, "largest degree")->required();
  add_output_flags(c_table, out);

  auto* c_suite =
      app.add_subcommand("bounds-suite", "Run every bound verifier");
  c_suite->add_option("--n", n, "degree (2..6)")->required();
  c_suite->add_option("--seed", seed, "RNG seed");
  c_suite->add_option("--trials", trials, "random trials");
  bool inject = false;
  c_suite->add_flag("--inject-corruption", inject,
                    "negative control: force a reported failure");
  add_output_flags(c_suite, out);

  double m = 10.0, delta = 5.0, g_scale = 1.0, g_exponent = 0.5;
  std::string g_family = "power";
  auto add_market = [&](CLI::App* cmd, bool with_delta) {
    cmd->add_option("--n", n, "transactions per list")->required();
    cmd->add_option("--m", m, "trader volume cap M");
    if (with_delta) cmd->add_option("--delta", delta, "validator trade size");
    cmd->add_option("--g-family", g_family, "power|piecewise");
    cmd->add_option("--g-scale", g_scale, "G'(0) scale");
    cmd->add_option("--g-exponent", g_exponent, "power-family exponent");
    cmd->add_option("--trials", trials, "samples for C_s");
    cmd->add_option("--seed", seed, "RNG seed");
    add_output_flags(cmd, out);
  };
  auto* c_front = app.add_subcommand("frontrun", "Sampled frontrun C_s");
  add_market(c_front, true);
  auto* c_sand = app.add_subcommand("sandwich", "Sampled sandwich C_s");
  add_market(c_sand, false);

  auto* c_fair = app.add_subcommand("fair-demo", "Randomized fair wrapper");
  c_fair->add_option("--n", n, "degree")->required();
  c_fair->add_option("--seed", seed, "RNG seed");
  c_fair->add_option("--trials", trials, "random payoffs");
  add_output_flags(c_fair, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; any parse error is config error
  }

  try {
    if (c_cost->parsed()) {
      write_json(out, run_cost_config(load_json_arg(payoff_arg)));
      return 0;
    }
    if (c_spec->parsed()) return cmd_spectrum(n, graph_spec, allow_large, out);
    if (c_table->parsed()) return cmd_coherence_table(n, out);
    if (c_suite->parsed()) {
      auto result = run_bounds_suite(n, seed, trials, inject);
      write_json(out, to_json(result));
      return result.failures == 0 ? 0 : 1;
    }
    if (c_front->parsed())
      return cmd_frontrun(n, m, delta, g_family, g_scale, g_exponent, trials,
                          seed, out);
    if (c_sand->parsed())
      return cmd_sandwich(n, m, g_family, g_scale, g_exponent, trials, seed,
                          out);
    if (c_fair->parsed()) return cmd_fair_demo(n, trials, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
