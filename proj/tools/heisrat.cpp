// heisrat: exact verification runs for the Heisenberg-group invariant field.
//
//   heisrat group-check --n 4
//   heisrat rationalize --n 5 --format structured --out cert.json
//   heisrat parse-eval --n 3 --expr "x0*x1*x2"

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "heisrat/commands.hpp"
#include "heisrat/polynomial_text.hpp"

namespace {

constexpr int kUsageError = 2;

struct Options {
  long n = 3;
  long max_deg = -1;
  std::string budget = "default";
  std::string format = "human";
  std::string out;
  std::string method = "groebner";
  std::string expr;
  bool timing = false;
};

void add_common(CLI::App* sub, Options& o, bool with_n = true) {
  if (with_n) sub->add_option("--n", o.n, "level n of the Heisenberg group")->capture_default_str();
  sub->add_option("--budget", o.budget, "small | default | large | S-pair limit")->capture_default_str();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "write the report to this file instead of stdout");
  sub->add_flag("--timing", o.timing, "include wall-clock timings (output is then not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification runs for H_n acting on C(x_0, ..., x_{n-1})"};
  app.require_subcommand(1);
  Options o;

  add_common(app.add_subcommand("group-check", "enumerate H_n; center, homomorphism, spectra"), o);
  add_common(app.add_subcommand("invariants", "characters of f_k; invariance of f_k^n and the product"), o);
  auto* molien = app.add_subcommand("molien", "Molien series and brute-force Reynolds ranks");
  add_common(molien, o);
  molien->add_option("--max-deg", o.max_deg, "largest degree (default 3n)");
  auto* bpf = app.add_subcommand("bpf", "Rabinowitsch radical membership for f_1..f_n, x_0...x_{n-1}");
  add_common(bpf, o);
  bpf->add_option("--method", o.method, "certificate method")->check(CLI::IsMember({"groebner"}))->capture_default_str();
  add_common(app.add_subcommand("rationalize", "rationalization tower certificate"), o);
  add_common(app.add_subcommand("hesse", "n = 3: invariant generators, Hesse pencil, special orbits"), o, false);
  auto* parse = app.add_subcommand("parse-eval", "parse a Laurent polynomial and act on it");
  add_common(parse, o);
  parse->add_option("--expr,expr", o.expr, "polynomial in x0..x{n-1}, w = omega, z{N}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  heisrat::RunConfig config;
  config.command = app.get_subcommands().front()->get_name();
  config.n = o.n;
  if (o.max_deg >= 0) config.max_deg = o.max_deg;
  config.format = o.format == "structured" ? heisrat::OutputFormat::structured : heisrat::OutputFormat::human;
  if (!o.out.empty()) config.out = o.out;
  config.method = o.method;
  config.expr = o.expr;
  config.timing = o.timing;

  heisrat::Report report;
  try {
    config.budget = heisrat::Budget::parse(o.budget);
    report = heisrat::run_command(config);
  } catch (const heisrat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = config.format == heisrat::OutputFormat::structured
                               ? heisrat::render_structured(report, config.timing)
                               : heisrat::render_human(report, config.timing);
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      std::cerr << "error: cannot write " << *config.out << "\n";
      return kUsageError;
    }
    file << text;
  } else {
    std::cout << text;
  }
  return heisrat::exit_code(report);
}
