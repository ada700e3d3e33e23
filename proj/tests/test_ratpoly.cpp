#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace gqe;

namespace {

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }

} // namespace

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("-0.75"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.8"), Rational(4, 5));
  EXPECT_EQ(parse_rational("08"), Rational(8));
  EXPECT_EQ(parse_rational("4/5"), Rational(4, 5));
  EXPECT_EQ(parse_rational("-010/04"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(parse_rational(" 2E2 "), Rational(200));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1.2.3"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, PrintsTerminatingDecimalsElseFraction) {
  EXPECT_EQ(to_string(Rational(-3, 4)), "-0.75");
  EXPECT_EQ(to_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_EQ(to_string(Rational(1, 20)), "0.05");
  EXPECT_EQ(parse_rational(to_string(Rational(-13, 1250))), Rational(-13, 1250));
}

TEST(Polynomial, Arithmetic) {
  auto a = P({1, 1}), b = P({1, -1});
  EXPECT_EQ(a * b, P({1, 0, -1}));
  EXPECT_EQ(a + b, P({2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), P({1, 3, 3, 1}));
  EXPECT_EQ(a.pow(0), P({1}));
  EXPECT_EQ(P({0, 0, 0}).degree(), -1);
}

TEST(Polynomial, DerivativeAndIntegral) {
  EXPECT_EQ(P({1, 2, 3}).derivative(), P({2, 6}));
  EXPECT_EQ(P({0, 0, 1}).derivative(2), P({2}));
  EXPECT_EQ(P({1}).integrate(0, 1), Rational(1));
  EXPECT_EQ(P({0, 1, 0, 5}).integrate(-1, 1), Rational(0));
  auto from = P({3, 1}).antiderivative_from(Rational(-1));
  EXPECT_EQ(from(Rational(-1)), Rational(0));
  EXPECT_EQ(from.derivative(), P({3, 1}));
}

TEST(Polynomial, DivisionAndGcd) {
  auto q = P({2, -1, 3});
  auto p = P({1, 1}).pow(2) * P({1, -1}) * q;
  auto [quo, rem] = p.divmod(P({1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo * P({1, 1}), p);
  EXPECT_EQ(gcd(p, p.derivative()), P({1, 1}));
  EXPECT_EQ(squarefree_part(p), (P({1, 1}) * P({1, -1}) * q).monic());
  EXPECT_THROW(p.divmod(Polynomial{}), Error);
}

TEST(Polynomial, DeflateEndpointFactors) {
  auto q = P({5, 0, 7, -1});
  auto p = P({1, 1}).pow(2) * P({1, -1}) * q;
  EXPECT_EQ(deflate_endpoint_factors(p, 2, 1), q);
  try {
    deflate_endpoint_factors(P({1, 2}), 1, 0);
    FAIL() << "expected NotDivisible";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
  // Limit P' for d0 = dinf = 2: dividing out (1+t)(1-t) leaves a parabola.
  auto g = deflate_endpoint_factors(limit_Pprime(2, 2), 1, 1);
  EXPECT_EQ(g.degree(), 2);
  EXPECT_GT(g.leading(), 0);
}

TEST(Polynomial, VanishingOrder) {
  auto p = P({1, 1}).pow(3) * P({2, 1});
  EXPECT_EQ(vanishing_order(p, Rational(-1)), 3u);
  EXPECT_EQ(vanishing_order(p, Rational(0)), 0u);
}

TEST(Roots, IsolatesKnownRoots) {
  auto iv = isolate_roots(P({-4, 0, 12}), -1, 1);
  ASSERT_EQ(iv.size(), 2u);
  const double r = 1 / std::sqrt(3.0);
  RootIsolator iso(P({-4, 0, 12}));
  for (std::size_t i = 0; i < 2; ++i) {
    auto fine = iso.refine(iv[i], Rational(1, 1000000));
    double expect = i == 0 ? -r : r;
    EXPECT_LE(to_double(fine.lo), expect);
    EXPECT_GE(to_double(fine.hi), expect);
  }

  auto one = isolate_roots(P({0, Rational(-14, 11), 0, Rational(-5, 22)}), -1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LE(one[0].lo, 0);
  EXPECT_GE(one[0].hi, 0);
  EXPECT_EQ(RootIsolator(P({0, Rational(-14, 11), 0, Rational(-5, 22)}))
                .refine(one[0], Rational(1, 1 << 20))
                .midpoint(),
            0);

  EXPECT_TRUE(isolate_roots(P({1}), -1, 1).empty());
}

TEST(Roots, CountsDistinctRootsOnly) {
  auto p = P({0, 1}).pow(3) * P({-1, 2}).pow(2);
  EXPECT_EQ(count_roots(p, -1, 1), 2);
  EXPECT_EQ(count_roots(P({1, 0, 1}), -1, 1), 0);
}

TEST(Properties, DerivativeOfAntiderivative) {
  oracle::DataGen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_poly(g, g.uniform(0, 12));
    EXPECT_EQ(p.antiderivative().derivative(), p);
  }
}

TEST(Properties, OddPolynomialsIntegrateToZero) {
  oracle::DataGen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c(2 * g.uniform(1, 6), Rational(0));
    for (std::size_t i = 1; i < c.size(); i += 2)
      c[i] = g.small_rational(-30, 30, 11);
    EXPECT_EQ(Polynomial(c).integrate(-1, 1), 0);
  }
}

TEST(Properties, SturmCountMatchesDenseSignChanges) {
  oracle::DataGen g(13);
  for (int trial = 0; trial < 40; ++trial) {
    // Distinct rational roots, well separated from the grid spacing.
    Polynomial p = P({1});
    int n = g.uniform(1, 5);
    std::vector<Rational> roots;
    for (int i = 0; i < n; ++i) {
      Rational r = g.small_rational(-97, 97, 100) + Rational(1, 30011);
      if (std::find(roots.begin(), roots.end(), r) == roots.end())
        roots.push_back(r);
    }
    for (const auto &r : roots)
      p = p * P({-r, 1});
    p = p * P({3, 0, 1}); // no real roots
    int changes = 0;
    const int N = 10000;
    double prev = oracle::eval(p, -1);
    for (int i = 1; i <= N; ++i) {
      double v = oracle::eval(p, -1 + 2.0 * i / N);
      if ((prev < 0) != (v < 0))
        ++changes;
      prev = v;
    }
    EXPECT_EQ(count_roots(p, -1, 1), changes);
    EXPECT_EQ(static_cast<int>(isolate_roots(p, -1, 1).size()), changes);
  }
}
