#ifndef GQE_SCAN_HPP
#define GQE_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <thread>
#include <variant>
#include <vector>

#include "gqe/json_io.hpp"

namespace gqe {

/// x_a follows another factor: x_a = scale * x_index.
struct LinkedAxis {
  std::size_t index = 0;
  Rational scale = 1;
};

struct FactorAxis {
  int d = 1;
  Rational s;
  std::variant<std::vector<Rational>, LinkedAxis> x; // swept values or link
};

struct ScanSpec {
  int d0 = 0;
  int dinf = 0;
  std::vector<FactorAxis> factors;
  ModeKind mode = ModeKind::gqe;
  std::vector<Rational> b_values{Rational(0)};
};

struct ScanRecord {
  std::vector<Rational> x;
  std::optional<Rational> b; // generalized mode only
  std::string verdict;       // a Verdict name or "skipped"
  std::optional<double> k;
  std::optional<double> margin;
  int root_count = 0;
  std::optional<double> futaki;
  long long millis = 0;
  std::string reason;
  std::vector<std::size_t> index; // grid multi-index
};

namespace scan_detail {

/// {"from","to","steps"} (inclusive, evenly spaced), ["..", ..] or "..".
inline std::vector<Rational> value_list(const json &j, const std::string &field) {
  if (j.is_array()) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(io::rational_field(j[i], field + "[" + std::to_string(i) + "]"));
    if (out.empty())
      throw io::field_error(field, "empty value list");
    return out;
  }
  if (j.is_object() && j.contains("from")) {
    Rational from = io::rational_field(j.at("from"), field + ".from");
    Rational to = j.contains("to") ? io::rational_field(j.at("to"), field + ".to") : from;
    int steps = io::int_field(j, "steps", field + ".steps", 1);
    if (steps < 1)
      throw io::field_error(field + ".steps", "must be at least 1");
    std::vector<Rational> out;
    for (int i = 0; i < steps; ++i)
      out.push_back(steps == 1 ? from : from + (to - from) * Rational(i, steps - 1));
    return out;
  }
  return {io::rational_field(j, field)};
}

} // namespace scan_detail

inline ScanSpec parse_scan_spec(const json &j) {
  if (!j.is_object())
    throw io::field_error("<root>", "expected a JSON object");
  ScanSpec spec;
  spec.d0 = io::int_field(j, "d0", "d0", 0);
  spec.dinf = io::int_field(j, "dinf", "dinf", 0);
  if (!j.contains("factors") || !j.at("factors").is_array())
    throw io::field_error("factors", "expected an array");
  const json &fs = j.at("factors");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string at = "factors[" + std::to_string(i) + "]";
    const json &f = fs[i];
    FactorAxis ax;
    ax.d = io::int_field(f, "d", at + ".d");
    if (!f.contains("s") || !f.contains("x"))
      throw io::field_error(at, "needs both s and x");
    ax.s = io::rational_field(f.at("s"), at + ".s");
    const json &x = f.at("x");
    if (x.is_object() && x.contains("link")) {
      LinkedAxis link;
      int idx = io::int_field(x, "link", at + ".x.link");
      if (idx < 0 || static_cast<std::size_t>(idx) >= i)
        throw io::field_error(at + ".x.link", "must name an earlier factor");
      if (!std::holds_alternative<std::vector<Rational>>(spec.factors[idx].x))
        throw io::field_error(at + ".x.link", "cannot link to a linked factor");
      link.index = static_cast<std::size_t>(idx);
      link.scale = x.contains("scale") ? io::rational_field(x.at("scale"), at + ".x.scale")
                                       : Rational(1);
      ax.x = link;
    } else {
      ax.x = scan_detail::value_list(x, at + ".x");
    }
    spec.factors.push_back(std::move(ax));
  }
  if (j.contains("mode")) {
    auto m = j.at("mode").get<std::string>();
    if (m == "gqe")
      spec.mode = ModeKind::gqe;
    else if (m == "generalized")
      spec.mode = ModeKind::generalized;
    else
      throw io::field_error("mode", "expected gqe or generalized");
  }
  if (j.contains("b"))
    spec.b_values = scan_detail::value_list(j.at("b"), "b");
  return spec;
}

/// Grid points in lexicographic order of (swept factor indices..., b index).
inline std::vector<ScanRecord> scan_grid(const ScanSpec &spec) {
  std::vector<std::size_t> swept;
  std::vector<std::size_t> extent;
  for (std::size_t i = 0; i < spec.factors.size(); ++i)
    if (auto *vals = std::get_if<std::vector<Rational>>(&spec.factors[i].x)) {
      swept.push_back(i);
      extent.push_back(vals->size());
    }
  const bool generalized = spec.mode == ModeKind::generalized;
  const std::vector<Rational> bs =
      generalized ? spec.b_values : std::vector<Rational>{Rational(0)};
  extent.push_back(bs.size());

  std::vector<ScanRecord> grid;
  std::vector<std::size_t> idx(extent.size(), 0);
  for (;;) {
    ScanRecord r;
    r.index = idx;
    r.x.resize(spec.factors.size());
    for (std::size_t a = 0; a < swept.size(); ++a)
      r.x[swept[a]] = std::get<std::vector<Rational>>(spec.factors[swept[a]].x)[idx[a]];
    for (std::size_t i = 0; i < spec.factors.size(); ++i)
      if (auto *link = std::get_if<LinkedAxis>(&spec.factors[i].x))
        r.x[i] = r.x[link->index] * link->scale;
    if (generalized)
      r.b = bs[idx.back()];
    grid.push_back(std::move(r));
    std::size_t pos = extent.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < extent[pos])
        break;
      idx[pos] = 0;
      if (pos == 0)
        return grid;
    }
  }
}

inline void evaluate_record(const ScanSpec &spec, ScanRecord &r,
                            const SolverOptions &opts, bool timing) {
  auto start = std::chrono::steady_clock::now();
  AdmissibleData data;
  data.d0 = spec.d0;
  data.dinf = spec.dinf;
  for (std::size_t i = 0; i < spec.factors.size(); ++i)
    data.factors.push_back({spec.factors[i].d, spec.factors[i].s, r.x[i]});
  try {
    auto valid = validate(data);
    ProfileMode mode = r.b ? ProfileMode::generalized(*r.b) : ProfileMode::gqe();
    auto rep = decide_existence(valid, mode, opts);
    r.verdict = to_string(rep.verdict);
    if (rep.k)
      r.k = rep.k->convert_to<double>();
    r.margin = rep.margin;
    r.root_count = rep.root_count;
    r.futaki = to_double(rep.futaki_k);
    r.reason = rep.diagnostic;
  } catch (const Error &e) {
    r.verdict = "skipped";
    r.reason = e.what();
  }
  if (timing)
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
}

/// Evaluates every grid point; results keep grid order for any `jobs`.
inline std::vector<ScanRecord> run_scan(const ScanSpec &spec,
                                        const SolverOptions &opts = {},
                                        int jobs = 1, bool timing = true) {
  auto grid = scan_grid(spec);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++)
      evaluate_record(spec, grid[i], opts, timing);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < n; ++t)
      pool.emplace_back(worker);
    worker();
  }
  return grid;
}

inline void write_csv(const ScanSpec &spec, const std::vector<ScanRecord> &rows,
                      std::ostream &os) {
  for (std::size_t i = 0; i < spec.factors.size(); ++i)
    os << "x_" << (i + 1) << ",";
  if (spec.mode == ModeKind::generalized)
    os << "b,";
  os << "verdict,k,margin,root_count,futaki_k,millis\n";
  auto opt = [](const std::optional<double> &v) {
    return v ? to_string(*v) : std::string();
  };
  for (const auto &r : rows) {
    for (const auto &x : r.x)
      os << to_string(x) << ",";
    if (spec.mode == ModeKind::generalized)
      os << (r.b ? to_string(*r.b) : std::string()) << ",";
    os << r.verdict << "," << opt(r.k) << "," << opt(r.margin) << ","
       << r.root_count << "," << opt(r.futaki) << "," << r.millis << "\n";
  }
}

/// Verdict counts, the small-class threshold and verdict transitions between
/// neighbouring grid points.
inline json scan_summary(const ScanSpec &spec, const std::vector<ScanRecord> &rows) {
  std::map<std::string, int> counts;
  for (const auto &r : rows)
    ++counts[r.verdict];

  // Largest T such that every tested point with max|x_a| <= T exists.
  std::vector<std::pair<Rational, bool>> by_size;
  for (const auto &r : rows) {
    if (r.verdict == "skipped")
      continue;
    Rational m = 0;
    for (const auto &x : r.x)
      m = std::max(m, Rational(abs(x)));
    by_size.emplace_back(m, r.verdict == "exists");
  }
  std::sort(by_size.begin(), by_size.end(), [](const auto &a, const auto &b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  std::optional<Rational> threshold;
  for (const auto &[m, ok] : by_size) {
    if (!ok)
      break;
    threshold = m;
  }

  std::map<std::vector<std::size_t>, const ScanRecord *> at;
  for (const auto &r : rows)
    at[r.index] = &r;
  auto coords = [&](const ScanRecord &r) {
    json c = json::array();
    for (const auto &x : r.x)
      c.push_back(to_string(x));
    json out = {{"x", c}, {"verdict", r.verdict}};
    if (r.b)
      out["b"] = to_string(*r.b);
    return out;
  };
  json transitions = json::array();
  for (const auto &r : rows) {
    for (std::size_t dim = 0; dim < r.index.size(); ++dim) {
      auto nb = r.index;
      ++nb[dim];
      auto it = at.find(nb);
      if (it == at.end() || it->second->verdict == r.verdict)
        continue;
      transitions.push_back({{"axis", dim}, {"from", coords(r)}, {"to", coords(*it->second)}});
    }
  }
  json c = json::object();
  for (const auto &[k, v] : counts)
    c[k] = v;
  return {{"version", "gqe-scan/1"},
          {"mode", to_string(spec.mode)},
          {"points", rows.size()},
          {"counts", c},
          {"small_class_threshold", threshold ? json(to_string(*threshold)) : json(nullptr)},
          {"transitions", transitions}};
}

} // namespace gqe

#endif
