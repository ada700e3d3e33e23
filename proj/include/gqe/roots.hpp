#ifndef GQE_ROOTS_HPP
#define GQE_ROOTS_HPP

#include <vector>

#include "gqe/polynomial.hpp"

namespace gqe {

/// Isolating interval for one real root. When lo == hi the root is exactly lo;
/// otherwise the root lies strictly inside (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm-sequence root isolation over the rationals. Works on the square-free
/// part, so counts are of distinct roots.
class RootIsolator {
public:
  explicit RootIsolator(const Polynomial &p) {
    if (p.is_zero())
      throw Error(ErrorKind::ZeroPolynomial, "cannot isolate roots of zero");
    squarefree_ = squarefree_part(p);
    chain_.push_back(squarefree_);
    if (squarefree_.degree() < 1)
      return;
    chain_.push_back(squarefree_.derivative());
    while (chain_.back().degree() > 0) {
      const auto n = chain_.size();
      auto rem = chain_[n - 2].divmod(chain_[n - 1]).second;
      if (rem.is_zero())
        break;
      chain_.push_back(-rem);
    }
  }

  const Polynomial &squarefree() const { return squarefree_; }

  /// Number of distinct roots in the open interval (a, b).
  int count(const Rational &a, const Rational &b) const {
    if (!(a < b))
      return 0;
    int n = variations(a) - variations(b);
    if (squarefree_(b) == 0)
      --n;
    return n;
  }

  /// Isolating intervals for every distinct root in (a, b), ascending.
  std::vector<RootInterval> isolate(const Rational &a, const Rational &b) const {
    std::vector<RootInterval> out;
    split(a, b, count(a, b), out);
    return out;
  }

  /// Bisects until the interval is no wider than `width`.
  RootInterval refine(RootInterval iv, const Rational &width) const {
    while (!iv.exact() && iv.width() > width) {
      Rational m = iv.midpoint();
      if (squarefree_(m) == 0)
        return {m, m};
      if (count(iv.lo, m) == 1)
        iv.hi = m;
      else
        iv.lo = m;
    }
    return iv;
  }

private:
  int variations(const Rational &x) const {
    int changes = 0, last = 0;
    for (const auto &p : chain_) {
      int s = sign(p(x));
      if (s == 0)
        continue;
      if (last != 0 && s != last)
        ++changes;
      last = s;
    }
    return changes;
  }

  void split(const Rational &a, const Rational &b, int n,
             std::vector<RootInterval> &out) const {
    if (n <= 0)
      return;
    if (n == 1) {
      out.push_back({a, b});
      return;
    }
    Rational m = (a + b) / 2;
    bool root_at_m = squarefree_(m) == 0;
    int left = count(a, m);
    split(a, m, left, out);
    if (root_at_m)
      out.push_back({m, m});
    split(m, b, n - left - (root_at_m ? 1 : 0), out);
  }

  Polynomial squarefree_;
  std::vector<Polynomial> chain_;
};

inline std::vector<RootInterval> isolate_roots(const Polynomial &p,
                                               const Rational &lo,
                                               const Rational &hi) {
  return RootIsolator(p).isolate(lo, hi);
}

inline int count_roots(const Polynomial &p, const Rational &lo,
                       const Rational &hi) {
  return RootIsolator(p).count(lo, hi);
}

} // namespace gqe

#endif
