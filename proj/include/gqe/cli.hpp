#ifndef GQE_CLI_HPP
#define GQE_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gqe/scan.hpp"

namespace gqe::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, negative = 1, usage = 2, inconclusive = 3 };

struct Options {
  ModeKind mode = ModeKind::gqe;
  Rational b = 0;
  SolverOptions solver;
  int jobs = 1;
  std::string out;
  bool timing = true;

  ProfileMode profile_mode() const {
    return mode == ModeKind::generalized ? ProfileMode::generalized(b)
                                         : ProfileMode::gqe();
  }
};

inline ModeKind parse_mode(const std::string &m) {
  if (m == "gqe")
    return ModeKind::gqe;
  if (m == "generalized")
    return ModeKind::generalized;
  throw Error(ErrorKind::InvalidInput, "mode must be gqe or generalized, got '" + m + "'");
}

/// Overlays a JSON config file onto `opts`. Flags are applied afterwards by
/// the caller, giving flags > config > defaults.
inline void apply_config(const json &cfg, Options &opts) {
  if (!cfg.is_object())
    throw io::field_error("config", "expected a JSON object");
  auto number = [&](const char *key, double &dst) {
    if (!cfg.contains(key))
      return;
    if (!cfg.at(key).is_number())
      throw io::field_error(std::string("config.") + key, "expected a number");
    dst = cfg.at(key).get<double>();
  };
  if (cfg.contains("mode"))
    opts.mode = parse_mode(cfg.at("mode").get<std::string>());
  if (cfg.contains("b"))
    opts.b = io::rational_field(cfg.at("b"), "config.b");
  number("kmax", opts.solver.kmax);
  number("tol", opts.solver.tol);
  number("k_switch", opts.solver.k_switch);
  number("series_rel", opts.solver.series_rel);
  number("boundary_tol", opts.solver.boundary_tol);
  if (cfg.contains("jobs"))
    opts.jobs = io::int_field(cfg, "jobs", "config.jobs");
  if (cfg.contains("out"))
    opts.out = cfg.at("out").get<std::string>();
}

inline json read_json(const std::string &path) {
  try {
    if (path == "-")
      return json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
      throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON in '" + path + "': " + e.what());
  }
}

/// Runs a command body; malformed input and validation failures exit 2.
template <typename Body> int guarded(std::ostream &err, Body &&body) {
  try {
    return body();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

inline int verdict_exit(Verdict v) {
  switch (v) {
  case Verdict::exists: return ok;
  case Verdict::fails_positivity: return negative;
  case Verdict::no_k_found:
  case Verdict::inconclusive: return inconclusive;
  }
  return inconclusive;
}

/// Existence check for one class; report JSON on `out`.
inline int cmd_check(const json &input, const Options &opts, std::ostream &out,
                     std::ostream &err) {
  return guarded(err, [&] {
    ValidatedData data = validate(parse_admissible(input));
    auto rep = decide_existence(data, opts.profile_mode(), opts.solver);
    out << to_json(rep).dump(2) << "\n";
    return verdict_exit(rep.verdict);
  });
}

/// Verifies a supplied k (flag, else the input's "k" field). A "b" field in
/// the input selects generalized mode with that b.
inline int cmd_certify(const json &input, std::optional<std::string> k_text,
                       const Options &opts, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    ValidatedData data = validate(parse_admissible(input));
    Options local = opts;
    if (input.contains("b")) {
      local.mode = ModeKind::generalized;
      local.b = io::rational_field(input.at("b"), "b");
    }
    Real k;
    if (k_text) {
      k = to_real(parse_rational(*k_text));
    } else if (input.contains("k")) {
      const json &kj = input.at("k");
      if (kj.is_number_float())
        k = Real(kj.get<double>());
      else
        k = to_real(io::rational_field(kj, "k"));
    } else {
      throw io::field_error("k", "missing; pass --k or a \"k\" field");
    }
    if (!isfinite(k))
      throw io::field_error("k", "must be finite");
    auto rep = certify_candidate(data, k, local.profile_mode(), local.solver);
    out << to_json(rep).dump(2) << "\n";
    if (rep.unresolved)
      err << "warning: " << rep.note << "\n";
    if (rep.passed())
      return ok;
    return rep.unresolved ? inconclusive : negative;
  });
}

/// Grid scan: CSV rows to opts.out, summary JSON on `out`.
inline int cmd_scan(const json &spec_json, const Options &opts, std::ostream &out,
                    std::ostream &err) {
  return guarded(err, [&] {
    ScanSpec spec = parse_scan_spec(spec_json);
    if (!spec_json.contains("mode"))
      spec.mode = opts.mode;
    if (!spec_json.contains("b") && spec.mode == ModeKind::generalized)
      spec.b_values = {opts.b};
    if (opts.out.empty())
      throw Error(ErrorKind::InvalidInput, "scan needs --out <path>");
    std::ofstream csv(opts.out);
    if (!csv)
      throw Error(ErrorKind::InvalidInput, "cannot write '" + opts.out + "'");
    auto rows = run_scan(spec, opts.solver, opts.jobs, opts.timing);
    for (const auto &r : rows)
      if (r.verdict == "skipped")
        err << "skipped grid point: " << r.reason << "\n";
    write_csv(spec, rows, csv);
    csv.flush();
    if (!csv)
      throw Error(ErrorKind::InvalidInput, "failed writing '" + opts.out + "'");
    out << scan_summary(spec, rows).dump(2) << "\n";
    return ok;
  });
}

inline int cmd_limits(int d0, int dinf, const std::optional<Rational> &b,
                      std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (d0 < 0 || dinf < 0)
      throw Error(ErrorKind::InvalidDimension, "d0 and dinf must be nonnegative");
    auto s = limit_root_structure(d0, dinf, b);
    out << to_json(s, d0, dinf, b).dump(2) << "\n";
    return static_cast<int>(ok);
  });
}

} // namespace gqe::cli

#endif
