#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace wiener::exact {

/// Dense polynomial over Q, coefficient i of x^i. Normalised polynomials have
/// no trailing zero coefficients; the zero polynomial is empty.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial

QPoly from_integers(const std::vector<mpz_class>& coeffs);
QPoly derivative(const QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(QPoly a, QPoly b);  // monic, or zero when both are zero

/// Scales to the primitive integer polynomial with positive leading coefficient.
std::vector<mpz_class> primitive(const QPoly& p);

/// Square-free decomposition (Yun): p = c * prod f_i^{m_i} with f_i monic,
/// square-free and pairwise coprime. Returns (f_i, m_i) pairs.
std::vector<std::pair<QPoly, int>> squarefree_factors(const QPoly& p);

mpq_class evaluate(const QPoly& p, const mpq_class& x);
int sign_at(const QPoly& p, const mpq_class& x);

/// Every root of p has modulus strictly below this bound (Cauchy).
mpq_class root_bound(const QPoly& p);

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& squarefree);

  int variations_at(const mpq_class& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_in(const mpq_class& lo, const mpq_class& hi) const { return variations_at(lo) - variations_at(hi); }
  int count_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

  const QPoly& base() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

/// Half-open interval (lo, hi] holding exactly one real root. When the root is
/// known exactly, lo == hi == root and `exact` is set.
struct IsolatedRoot {
  mpq_class lo;
  mpq_class hi;
  bool exact = false;
};

/// Isolates the real roots of a square-free p inside (lo, hi], refining each
/// isolating interval to width at most `width`. Ordered left to right.
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& squarefree, const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& width);

/// Decides whether the unique root inside a refined isolating interval is
/// rational by testing the only candidate of the form k / lc(primitive p).
/// Requires width < 1 / lc; on success the interval collapses to the root.
bool try_rational(const QPoly& squarefree, IsolatedRoot& root);

}  // namespace wiener::exact
