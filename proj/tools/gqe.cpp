// Command-line front end: check, scan, certify, limits.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gqe/cli.hpp"

namespace {

struct Flags {
  std::optional<std::string> mode;
  std::optional<std::string> b;
  std::optional<double> kmax;
  std::optional<double> tol;
  std::optional<int> jobs;
  std::optional<std::string> out;
  std::optional<std::string> config;
  bool no_timing = false;
};

void add_common(CLI::App *cmd, Flags &f) {
  cmd->add_option("--mode", f.mode, "gqe or generalized")
      ->check(CLI::IsMember({"gqe", "generalized"}));
  cmd->add_option("--b", f.b, "affine coefficient b for generalized mode (rational)");
  cmd->add_option("--kmax", f.kmax, "k search window [-kmax, kmax] (default 50)");
  cmd->add_option("--tol", f.tol, "k-condition tolerance relative to |P| (default 1e-12)");
  cmd->add_option("--config", f.config, "JSON config file; flags take precedence");
}

gqe::cli::Options resolve(const Flags &f) {
  gqe::cli::Options opts;
  if (f.config)
    gqe::cli::apply_config(gqe::cli::read_json(*f.config), opts);
  if (f.mode)
    opts.mode = gqe::cli::parse_mode(*f.mode);
  if (f.b) {
    opts.b = gqe::parse_rational(*f.b);
    if (!f.mode)
      opts.mode = gqe::ModeKind::generalized;
  }
  if (f.kmax)
    opts.solver.kmax = *f.kmax;
  if (f.tol)
    opts.solver.tol = *f.tol;
  if (f.jobs)
    opts.jobs = *f.jobs;
  if (f.out)
    opts.out = *f.out;
  if (f.no_timing)
    opts.timing = false;
  return opts;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Admissible GQE metric solver, certifier and Kaehler-cone scanner"};
  app.require_subcommand(1);

  Flags flags;
  std::string input = "-";
  std::optional<std::string> k_text;
  int d0 = 0, dinf = 0;

  auto *check = app.add_subcommand("check", "decide existence for one admissible class");
  check->add_option("input", input, "admissible data JSON (- for stdin)");
  add_common(check, flags);

  auto *scan = app.add_subcommand("scan", "sweep a grid of classes, write CSV rows");
  scan->add_option("spec", input, "scan spec JSON (- for stdin)")->required();
  add_common(scan, flags);
  scan->add_option("--jobs", flags.jobs, "worker threads");
  scan->add_option("--out", flags.out, "CSV output path");
  scan->add_flag("--no-timing", flags.no_timing, "write millis as 0 for byte-stable output");

  auto *certify = app.add_subcommand("certify", "verify a claimed k without searching");
  certify->add_option("input", input, "admissible data JSON with optional k and b");
  certify->add_option("--k", k_text, "claimed k (rational or decimal)");
  add_common(certify, flags);

  auto *limits = app.add_subcommand("limits", "small-class limit of P' and its root structure");
  limits->add_option("d0", d0)->required();
  limits->add_option("dinf", dinf)->required();
  limits->add_option("--b", flags.b, "affine coefficient b (generalized limit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gqe::cli::usage;
  }

  return gqe::cli::guarded(std::cerr, [&]() -> int {
    if (*limits) {
      std::optional<gqe::Rational> b;
      if (flags.b)
        b = gqe::parse_rational(*flags.b);
      return gqe::cli::cmd_limits(d0, dinf, b, std::cout, std::cerr);
    }
    auto opts = resolve(flags);
    auto doc = gqe::cli::read_json(input);
    if (*check)
      return gqe::cli::cmd_check(doc, opts, std::cout, std::cerr);
    if (*scan)
      return gqe::cli::cmd_scan(doc, opts, std::cout, std::cerr);
    return gqe::cli::cmd_certify(doc, k_text, opts, std::cout, std::cerr);
  });
}
