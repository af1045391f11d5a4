#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "wiener/errors.hpp"
#include "wiener/polynomial.hpp"

namespace wiener {

struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
  /// |p(z)| / (max_i |c_i| * max(1,|z|)^deg).
  double residual = 0.0;
  /// Set when the root came from a closed form: rational, quadratic surd, or
  /// a linear/quadratic square-free factor.
  bool exact = false;
  /// Rational or radical text of an exact root, e.g. "-1+i*sqrt(2)".
  std::string exact_form;

  std::complex<double> value() const { return {re, im}; }
};

struct RootOptions {
  int max_sweeps = 500;
  /// Aberth stops once every update satisfies |dz| <= step_tolerance * (1 + |z|).
  double step_tolerance = 1e-13;
  double residual_limit = 1e-9;
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, std::vector<ComplexRoot> partial)
      : Error(what), partial_(std::move(partial)) {}

  const std::vector<ComplexRoot>& partial() const { return partial_; }

 private:
  std::vector<ComplexRoot> partial_;
};

double relative_residual(const ReducedPolynomial& p, std::complex<double> z);

/// All roots of p with multiplicity, sorted by (re, im). Degrees 1 and 2 and
/// linear/quadratic square-free factors are solved in closed form; other
/// factors use Aberth-Ehrlich iteration with Newton polish. Throws
/// RootFindingError (carrying the partial roots) on non-convergence or when a
/// residual exceeds the acceptance limit.
std::vector<ComplexRoot> roots(const ReducedPolynomial& p, const RootOptions& options = {});

struct AberthResult {
  std::vector<std::complex<double>> roots;
  int sweeps = 0;
  bool converged = false;
};

/// Plain Aberth-Ehrlich iteration on integer coefficients (c_0..c_d).
AberthResult aberth(const std::vector<mpz_class>& coeffs, const RootOptions& options = {});

/// A conjugate pair +-b*i of roots on the imaginary axis. b^2 lies in
/// [b_squared_lo, b_squared_hi]; both ends coincide when b^2 is rational.
struct ImaginaryRoot {
  bool exact = false;
  mpq_class b_squared_lo;
  mpq_class b_squared_hi;
  double b = 0.0;
  std::string text;
};

/// Exact detection of purely imaginary roots: with p(x) = E(x^2) + x O(x^2),
/// bi is a root iff t = -b^2 is a common negative root of E and O.
std::vector<ImaginaryRoot> purely_imaginary_roots(const ReducedPolynomial& p);

/// Formats r + s*sqrt(k) (k < 0 renders with i).
std::string format_surd(const mpq_class& r, const mpq_class& s, const mpz_class& k);

}  // namespace wiener
