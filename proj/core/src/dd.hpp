#pragma once

// Double-double arithmetic for compensated Horner evaluation.

#include <gmpxx.h>

#include <cmath>
#include <complex>

namespace wiener::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p, e);
}

inline double to_double(DD a) { return a.hi + a.lo; }

inline DD from_mpz(const mpz_class& z) {
  const double hi = z.get_d();
  const mpz_class rest = z - mpz_class(hi);
  return {hi, rest.get_d()};
}

struct CDD {
  DD re;
  DD im;
};

inline CDD operator+(CDD a, CDD b) { return {a.re + b.re, a.im + b.im}; }
inline CDD operator*(CDD a, CDD b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline CDD from_complex(std::complex<double> z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }
inline std::complex<double> to_complex(CDD z) { return {to_double(z.re), to_double(z.im)}; }

}  // namespace wiener::detail
