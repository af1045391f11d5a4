#include "wiener/polynomial.hpp"

#include <sstream>

#include "dd.hpp"
#include "wiener/errors.hpp"

namespace wiener {

namespace {

void require_positive(const std::vector<mpz_class>& v, const char* what) {
  if (v.empty()) throw DomainError(std::string(what) + " must have at least one coefficient");
  for (const auto& c : v) {
    if (sgn(c) <= 0) throw DomainError(std::string(what) + " coefficients must be positive");
  }
}

}  // namespace

WienerPolynomial::WienerPolynomial(std::vector<mpz_class> d) : d_(std::move(d)) {
  require_positive(d_, "Wiener polynomial");
}

mpz_class WienerPolynomial::coefficient(int i) const {
  if (i < 1 || i > degree()) return 0;
  return d_[static_cast<std::size_t>(i - 1)];
}

ReducedPolynomial::ReducedPolynomial(std::vector<mpz_class> c) : c_(std::move(c)) {
  require_positive(c_, "reduced Wiener polynomial");
}

std::string to_string(const WienerPolynomial& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) os << " + ";
    os << w.coefficient(i).get_str();
    if (i == 1) {
      os << "x";
    } else {
      os << "x^" << i;
    }
  }
  return os.str();
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

WienerPolynomial wiener_polynomial(const DistanceDistribution& dd) {
  std::vector<mpz_class> d;
  d.reserve(dd.counts().size());
  for (auto c : dd.counts()) d.emplace_back(static_cast<unsigned long>(c));
  return WienerPolynomial(std::move(d));
}

ReducedPolynomial reduce(const WienerPolynomial& w) { return ReducedPolynomial(w.counts()); }

namespace {

std::complex<double> horner_dd(const std::vector<mpz_class>& coeffs, std::complex<double> z, int shift) {
  using namespace detail;
  const CDD x = from_complex(z);
  CDD acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + CDD{from_mpz(*it), {}};
  for (int i = 0; i < shift; ++i) acc = acc * x;
  return to_complex(acc);
}

}  // namespace

std::complex<double> evaluate(const ReducedPolynomial& p, std::complex<double> z) {
  return horner_dd(p.coefficients(), z, 0);
}

std::complex<double> evaluate(const WienerPolynomial& w, std::complex<double> z) { return horner_dd(w.counts(), z, 1); }

mpq_class resilience(const WienerPolynomial& w, const mpq_class& p) {
  mpq_class acc = 0;
  for (auto it = w.counts().rbegin(); it != w.counts().rend(); ++it) acc = acc * p + *it;
  return acc * p;
}

double resilience(const WienerPolynomial& w, double p) { return evaluate(w, {p, 0.0}).real(); }

GaussianRational evaluate_gaussian(const ReducedPolynomial& p, const GaussianRational& z) {
  GaussianRational acc{0, 0};
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    mpq_class re = acc.re * z.re - acc.im * z.im + *it;
    mpq_class im = acc.re * z.im + acc.im * z.re;
    acc = {std::move(re), std::move(im)};
  }
  return acc;
}

mpz_class wiener_index(const WienerPolynomial& w) {
  mpz_class total = 0;
  for (int i = 1; i <= w.degree(); ++i) total += w.coefficient(i) * i;
  return total;
}

Annulus enestrom_kakeya(const ReducedPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() < 2) throw DomainError("Enestrom-Kakeya annulus needs degree >= 1");
  Annulus a;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    mpq_class ratio(c[i], c[i + 1]);
    ratio.canonicalize();
    if (i == 0 || ratio < a.r) a.r = ratio;
    if (i == 0 || ratio > a.R) a.R = ratio;
  }
  return a;
}

}  // namespace wiener
