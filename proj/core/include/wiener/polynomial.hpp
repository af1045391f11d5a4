#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

/// W(G;x) = sum_{i=1..D} d_i x^i. Stores d_1..d_D; the constant term is
/// implicitly zero.
class WienerPolynomial {
 public:
  explicit WienerPolynomial(std::vector<mpz_class> d);

  const std::vector<mpz_class>& counts() const { return d_; }
  int degree() const { return static_cast<int>(d_.size()); }
  /// Coefficient of x^i; zero for i == 0 and i > degree().
  mpz_class coefficient(int i) const;

  friend bool operator==(const WienerPolynomial&, const WienerPolynomial&) = default;

 private:
  std::vector<mpz_class> d_;
};

/// W(G;x) / x: coefficients c_0..c_{D-1} with c_{i-1} = d_i.
class ReducedPolynomial {
 public:
  explicit ReducedPolynomial(std::vector<mpz_class> c);

  const std::vector<mpz_class>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;

 private:
  std::vector<mpz_class> c_;
};

std::string to_string(const WienerPolynomial& w);

WienerPolynomial wiener_polynomial(const DistanceDistribution& dd);
ReducedPolynomial reduce(const WienerPolynomial& w);

/// Horner evaluation carried out in double-double arithmetic.
std::complex<double> evaluate(const ReducedPolynomial& p, std::complex<double> z);
std::complex<double> evaluate(const WienerPolynomial& w, std::complex<double> z);

/// Expected number of communicating pairs of a tree whose edges each operate
/// independently with probability p; equals W(T;p).
mpq_class resilience(const WienerPolynomial& w, const mpq_class& p);
double resilience(const WienerPolynomial& w, double p);

struct GaussianRational {
  mpq_class re;
  mpq_class im;

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational evaluate_gaussian(const ReducedPolynomial& p, const GaussianRational& z);

/// Sum of i * d_i: the sum of all pairwise distances.
mpz_class wiener_index(const WienerPolynomial& w);

struct Annulus {
  mpq_class r;
  mpq_class R;
};

/// Min and max of consecutive ratios c_i / c_{i+1}; every root lies in
/// r <= |z| <= R. Throws DomainError for constant polynomials.
Annulus enestrom_kakeya(const ReducedPolynomial& p);

std::string to_string(const mpq_class& q);

}  // namespace wiener
