// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <sstream>

#include "support.hpp"

using namespace gqe;

namespace {

double d(const Real &v) { return v.convert_to<double>(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (pass)
        detail << "failed: ";
      else
        detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

ValidatedData two(const Rational &x1, const Rational &x2) {
  return validate(oracle::two_factor(x1, x2));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Failing two-factor class on the line.
Outcome criterion1() {
  Outcome o;
  auto rep = decide_existence(two(Rational(4, 5), Rational(-4, 5)));
  o.require(rep.verdict == Verdict::fails_positivity, "verdict " + std::string(to_string(rep.verdict)));
  o.require(rep.witness.has_value(), "no witness");
  if (rep.witness && rep.k) {
    auto f = build_F({*rep.k, rep.profile});
    o.require(f.F(Real(*rep.witness)) <= 0, "F(witness) > 0");
  }
  const double closed = to_double(oracle::line_F(Rational(4, 5))(Rational(0)));
  o.require(std::abs(closed - (-0.1184 / 4.72)) < 1e-10, "closed-form F(0) mismatch");
  auto f0 = build_F({Real(0), rep.profile});
  o.require(std::abs(d(f0.F(Real(0))) - (-0.1184 / 4.72)) < 1e-10, "pipeline F(0) mismatch");
  o.detail << (o.pass ? "" : "; ") << "F(0) = " << d(f0.F(Real(0)));
  return o;
}

// 2. Existing two-factor class off the line.
Outcome criterion2() {
  Outcome o;
  auto rep = decide_existence(two(Rational(9, 10), Rational(-3, 4)));
  o.require(rep.verdict == Verdict::exists, "verdict " + std::string(to_string(rep.verdict)));
  int roots = count_roots(rep.profile.P, -1, 1);
  o.require(roots == 1, "P has " + std::to_string(roots) + " interior roots");
  if (o.pass)
    o.detail << "k = " << d(*rep.k) << ", one interior root";
  return o;
}

// 3. Exact golden formulas at x1 = 1/2.
Outcome criterion3() {
  Outcome o;
  auto p = build_P(two(Rational(1, 2), Rational(-1, 2)));
  Polynomial golden({Rational(0), Rational(-14, 11), Rational(0), Rational(-5, 22)});
  o.require(p.P == golden, "P = " + to_string(p.P));
  o.require(oracle::line_P(Rational(1, 2)) == golden, "substitution oracle disagrees");
  Polynomial F = Polynomial({Rational(1), Rational(0), Rational(-1)}) *
                 Polynomial({Rational(61), Rational(0), Rational(5)}) * Rational(1, 88);
  o.require(p.P.antiderivative_from(Rational(-1)) == F, "exact F coefficients");
  o.require(oracle::line_F(Rational(1, 2)) == F, "closed-form F oracle");
  auto f = build_F({Real(0), p});
  double worst = 0;
  for (int i = 0; i <= 200; ++i) {
    Rational z(i - 100, 100);
    worst = std::max(worst, d(abs(f.F(to_real(z)) - to_real(F(z)))));
  }
  o.require(worst < 1e-12, "F evaluation error " + fmt(worst));
  if (o.pass)
    o.detail << "P exact, F coefficients exact, max F error " << fmt(worst);
  return o;
}

// 4. Boundary identities and endpoint sign profile on random data.
Outcome criterion4() {
  Outcome o;
  oracle::DataGen g(2024);
  for (int i = 0; i < 50; ++i) {
    auto v = validate(g.data());
    auto p = build_P(v);
    const auto &pc = p.source.pc;
    o.require(p.P(Rational(-1)) == 2 * pc(Rational(-1)), "P(-1) != 2pc(-1)");
    o.require(p.P(Rational(1)) == -2 * pc(Rational(1)), "P(1) != -2pc(1)");
    auto e = endpoint_sign_profile(p);
    o.require(e.order_minus == static_cast<unsigned>(v.d0()), "order at -1");
    o.require(e.order_plus == static_cast<unsigned>(v.dinf()), "order at +1");
    o.require(e.derivative_sign_minus == 1, "sign of P^(d0)(-1)");
    o.require(e.derivative_sign_plus == (v.dinf() % 2 == 0 ? -1 : 1), "sign of P^(dinf)(1)");
    o.require(e.sign_near_minus == 1 && e.sign_near_plus == -1, "sign near endpoints");
  }
  if (o.pass)
    o.detail << "50 random classes";
  return o;
}

const std::vector<Rational> kSmallGrid{Rational(-5, 100), Rational(-3, 100), Rational(-1, 100),
                                       Rational(1, 100), Rational(3, 100), Rational(5, 100)};

AdmissibleData template_class(int d0, int dinf, const Rational &x1, const Rational &x2) {
  return {d0, dinf, {{1, Rational(-2), x1}, {2, Rational(3, 2), x2}}};
}

// 5. Small-class existence across the four cases.
Outcome criterion5() {
  Outcome o;
  int points = 0;
  for (int d0 = 0; d0 <= 2; ++d0)
    for (int dinf = 0; dinf <= 2; ++dinf)
      for (const auto &x1 : kSmallGrid)
        for (const auto &x2 : kSmallGrid) {
          auto v = validate(template_class(d0, dinf, x1, x2));
          auto rep = decide_existence(v);
          ++points;
          std::string at = " at d0=" + std::to_string(d0) + " dinf=" + std::to_string(dinf) +
                           " x=(" + to_string(x1) + "," + to_string(x2) + ")";
          o.require(rep.verdict == Verdict::exists, std::string(to_string(rep.verdict)) + at);
          unsigned m0 = d0 > 0 ? d0 - 1 : 0, m1 = dinf > 0 ? dinf - 1 : 0;
          int got = count_roots(deflate_endpoint_factors(rep.profile.dP, m0, m1), -1, 1);
          int want = expected_Pprime_roots(case_of(d0, dinf));
          o.require(got == want, "P' roots " + std::to_string(got) + " != " +
                                     std::to_string(want) + at);
        }
  if (o.pass)
    o.detail << points << " grid points, all exist, P' root counts 2/1/1/0";
  return o;
}

// 6. k-condition at every returned k; closed form vs quadrature.
Outcome criterion6() {
  Outcome o;
  oracle::DataGen g(606);
  std::vector<ProfilePolynomial> profiles{build_P(two(Rational(9, 10), Rational(-3, 4))),
                                          build_P(two(Rational(4, 5), Rational(-4, 5))),
                                          build_P(two(Rational(19, 20), Rational(-19, 20)))};
  for (int i = 0; i < 30; ++i)
    profiles.push_back(build_P(validate(g.data())));
  double worst_I = 0;
  int ks = 0;
  for (const auto &p : profiles) {
    KSolution sol;
    try {
      sol = solve_k(p);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::NoRootInWindow)
        throw;
      continue;
    }
    ExpWeightedIntegral I(p.P);
    for (const auto &k : sol.roots) {
      ++ks;
      worst_I = std::max(worst_I, d(abs(I.I(k))));
    }
  }
  o.require(worst_I < 1e-12, "max |I(k)| = " + fmt(worst_I));

  double worst_rel = 0;
  const double kvals[] = {-25.0, -1e-5, 3e-6, 5e-5, 1e-4, 2e-4, 0.7, 12.0};
  for (int trial = 0; trial < 6; ++trial) {
    auto p = oracle::random_poly(g, 6);
    ExpWeightedIntegral I(p);
    for (double k : kvals) {
      double q = oracle::weighted_integral(p, k);
      worst_rel = std::max(worst_rel, std::abs(d(I.I(Real(k))) - q) / std::abs(q));
    }
  }
  o.require(worst_rel < 1e-10, "quadrature rel error " + fmt(worst_rel));
  if (o.pass)
    o.detail << ks << " roots, max |I(k)| " << fmt(worst_I) << ", max rel error vs quadrature "
             << fmt(worst_rel);
  return o;
}

// 7. Equation residual for every exists verdict.
Outcome criterion7() {
  Outcome o;
  std::vector<ValidatedData> cases{two(Rational(9, 10), Rational(-3, 4)),
                                   two(Rational(1, 2), Rational(-1, 2))};
  for (int d0 = 0; d0 <= 2; ++d0)
    for (int dinf = 0; dinf <= 2; ++dinf)
      cases.push_back(validate(template_class(d0, dinf, Rational(1, 20), Rational(-3, 100))));
  oracle::DataGen g(707);
  for (int i = 0; i < 20; ++i)
    cases.push_back(validate(g.data(60, 100)));
  int checked = 0;
  double worst = 0, slowest = 0;
  const auto zs = chebyshev_samples(200);
  for (const auto &v : cases) {
    auto t = Clock::now();
    auto rep = decide_existence(v);
    if (rep.verdict != Verdict::exists)
      continue;
    ScalarProfile s(build_F({*rep.k, rep.profile}), v.extended());
    double r = d(s.gqe_residual(zs));
    worst = std::max(worst, r);
    slowest = std::max(slowest, seconds_since(t));
    ++checked;
  }
  o.require(checked >= 15, "only " + std::to_string(checked) + " exists verdicts");
  o.require(worst < 1e-9, "max residual " + fmt(worst));
  o.require(slowest < 5, "slowest case " + fmt(slowest) + " s");
  if (o.pass)
    o.detail << checked << " classes, max residual " << fmt(worst) << ", slowest " << fmt(slowest)
             << " s";
  return o;
}

// 8. Futaki consistency.
Outcome criterion8() {
  Outcome o;
  for (int n = 1; n <= 19; n += 2) {
    Rational x(n, 20);
    auto rep = decide_existence(two(x, -x));
    o.require(abs(to_double(rep.futaki_k)) < 1e-12, "futaki on line at " + to_string(x));
    o.require(rep.k && abs(*rep.k) < 1e-12, "k != 0 on line at " + to_string(x));
  }
  const std::pair<const char *, const char *> off[] = {
      {"0.9", "-0.75"}, {"0.3", "-0.6"}, {"0.5", "-0.1"}, {"0.1", "-0.9"}, {"0.95", "-0.05"},
      {"0.2", "-0.3"},  {"0.7", "-0.2"}, {"0.05", "-0.5"}, {"0.6", "-0.65"}, {"0.4", "-0.35"}};
  double lo = 1e300, hi = -1e300;
  for (auto [a, b] : off) {
    Rational x1 = parse_rational(a), x2 = parse_rational(b);
    double ratio = to_double(futaki_on_K(build_P(two(x1, x2))) / oracle::futaki_shape(x1, x2));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  o.require((hi - lo) <= 1e-8 * std::abs(hi), "ratio spread " + fmt(hi - lo));

  oracle::DataGen g(808);
  int seen = 0;
  double worst = 0;
  for (int trial = 0; trial < 400 && seen < 20; ++trial) {
    auto v = validate(g.data(80, 100, 3, 3));
    auto rep = decide_existence(v);
    if (rep.verdict != Verdict::exists)
      continue;
    ++seen;
    ScalarProfile s(build_F({*rep.k, rep.profile}), v.extended());
    double lhs = oracle::integrate_fixed(
        [&](double z) {
          Real Z(z);
          return d((s.scal(Z) - s.scal_bar()) * Z * s.pc(Z));
        },
        -1, 1);
    worst = std::max(worst, std::abs(lhs + to_double(rep.profile.P.integrate(-1, 1))));
  }
  o.require(seen == 20, "only " + std::to_string(seen) + " certified candidates");
  o.require(worst < 1e-9, "integral identity error " + fmt(worst));
  if (o.pass)
    o.detail << "line k = 0, ratio " << lo << " (spread " << fmt(hi - lo)
             << "), identity error " << fmt(worst) << " on 20 classes";
  return o;
}

// 9. Generalized existence for small classes, and l.
Outcome criterion9() {
  Outcome o;
  const std::vector<Rational> grid{Rational(-5, 100), Rational(-2, 100), Rational(2, 100),
                                   Rational(5, 100)};
  double worst = 0;
  int points = 0;
  for (int b : {-5, -1, 0, 1, 5})
    for (const auto &x1 : grid)
      for (const auto &x2 : grid) {
        auto v = validate(template_class(1, 1, x1, x2));
        auto mode = ProfileMode::generalized(Rational(b));
        auto rep = decide_existence(v, mode);
        ++points;
        o.require(rep.verdict == Verdict::exists,
                  std::string(to_string(rep.verdict)) + " at b=" + std::to_string(b));
        if (rep.verdict != Verdict::exists)
          continue;
        ScalarProfile s(build_F({*rep.k, rep.profile}), v.extended());
        worst = std::max(worst, d(s.generalized_residual(Rational(b), chebyshev_samples())));
      }
  o.require(worst < 1e-9, "generalized residual " + fmt(worst));

  oracle::DataGen g(909);
  for (int i = 0; i < 30; ++i) {
    auto q = base_quantities(validate(g.data()));
    Rational a0 = oracle::moment_integral(q.pc);
    Rational a1 = oracle::moment_integral(q.pc * Polynomial::monomial(Rational(1), 1));
    o.require(q.ell == -a1 / a0, "l != -alpha1/alpha0");
  }
  for (int d0 = 0; d0 <= 3; ++d0)
    for (int dinf = 0; dinf <= 3; ++dinf) {
      Rational expect(dinf - d0, 2 + d0 + dinf);
      o.require(limit_ell(d0, dinf) == expect, "lim l formula");
      auto zero = template_class(d0, dinf, Rational(0), Rational(0));
      o.require(base_quantities(extended_factors(zero)).ell == expect, "lim l at x = 0");
      auto tiny = validate(template_class(d0, dinf, Rational(1, 1000000), Rational(-1, 2000000)));
      o.require(abs(base_quantities(tiny).ell - expect) < Rational(1, 100000), "l near 0");
    }
  if (o.pass)
    o.detail << points << " generalized classes exist, max residual " << fmt(worst)
             << "; l exact";
  return o;
}

// 10. Failing class admits a generalized metric for some b != 0.
Outcome criterion10() {
  Outcome o;
  auto spec = parse_scan_spec(json::parse(
      R"({"mode":"generalized","b":{"from":"-10","to":"10","steps":81},
          "factors":[{"d":1,"s":"-2","x":"0.8"},{"d":1,"s":"2","x":"-0.8"}]})"));
  auto rows = run_scan(spec, {}, 1, false);
  std::vector<std::string> found;
  for (const auto &r : rows)
    if (r.verdict == "exists" && r.b && *r.b != 0)
      found.push_back(to_string(*r.b));
  o.require(rows.size() == 81, "grid size " + std::to_string(rows.size()));
  o.require(!found.empty(), "no b != 0 admits a metric");
  if (o.pass)
    o.detail << found.size() << " of 81 b values exist, e.g. b = " << found.front();
  return o;
}

} // namespace

int main() {
  struct Entry {
    int id;
    const char *name;
    Outcome (*run)();
    double budget; // seconds
  };
  const Entry entries[] = {
      {1, "non-existence on the line at x1 = 0.8", criterion1, 1},
      {2, "existence off the line at (0.9, -0.75)", criterion2, 1},
      {3, "exact P and F at x1 = 1/2", criterion3, 60},
      {4, "boundary identities and endpoint profile", criterion4, 10},
      {5, "small-class existence, Cases 1-4", criterion5, 120},
      {6, "k-condition solver and quadrature agreement", criterion6, 5},
      {7, "GQE residual for exists verdicts", criterion7, 120},
      {8, "Futaki consistency", criterion8, 120},
      {9, "generalized type for small classes and l", criterion9, 120},
      {10, "generalized metric for the failing class", criterion10, 60},
  };
  int failed = 0;
  for (const auto &e : entries) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception &ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    double secs = seconds_since(t);
    if (secs > e.budget)
      o.require(false, "runtime " + fmt(secs) + " s over " + fmt(e.budget) + " s");
    if (!o.pass)
      ++failed;
    std::printf("%s criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", e.id, e.name, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
