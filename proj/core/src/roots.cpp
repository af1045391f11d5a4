#include "wiener/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dd.hpp"
#include "wiener/exact_poly.hpp"

namespace wiener {

namespace {

using exact::QPoly;
using cplx = std::complex<double>;

constexpr unsigned kFloatBits = 256;

// Splits |k| = s^2 * rest by trial division, returning (s, rest) with sign(rest) = sign(k).
std::pair<mpz_class, mpz_class> split_square(const mpz_class& k) {
  mpz_class rest = abs(k);
  mpz_class s = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    return {s, sgn(k) < 0 ? mpz_class(-1) : mpz_class(1)};
  }
  for (unsigned long p = 2; p * p <= 100000 && p * p <= rest; ++p) {
    const unsigned long sq = p * p;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), sq) != 0) {
      rest /= sq;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    s *= r;
    rest = 1;
  }
  if (sgn(k) < 0) rest = -rest;
  return {s, rest};
}

// mpf_get_d truncates; pick the nearer of the two neighbouring doubles.
double to_double(const mpf_class& x) {
  const double t = x.get_d();
  if (!std::isfinite(t) || sgn(x) == 0) return t;
  const double away = std::nextafter(t, sgn(x) > 0 ? HUGE_VAL : -HUGE_VAL);
  const mpf_class et = abs(x - mpf_class(t, x.get_prec()));
  const mpf_class ea = abs(x - mpf_class(away, x.get_prec()));
  return ea < et ? away : t;
}

}  // namespace

std::string format_surd(const mpq_class& r, const mpq_class& s, const mpz_class& k) {
  std::string out;
  if (sgn(r) != 0 || sgn(s) == 0 || sgn(k) == 0) out = r.get_str();
  if (sgn(s) == 0 || sgn(k) == 0) return out;
  const mpq_class mag = abs(s);
  if (sgn(s) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  std::string radical;
  const mpz_class ak = abs(k);
  if (ak != 1) radical = "sqrt(" + ak.get_str() + ")";
  if (sgn(k) < 0) radical = radical.empty() ? "i" : "i*" + radical;
  if (radical.empty()) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out + radical;
}

double relative_residual(const ReducedPolynomial& p, cplx z) {
  mpz_class largest = 0;
  for (const auto& c : p.coefficients()) {
    if (abs(c) > largest) largest = abs(c);
  }
  const double scale = largest.get_d() * std::pow(std::max(1.0, std::abs(z)), p.degree());
  return std::abs(evaluate(p, z)) / scale;
}

namespace {

ComplexRoot rational_root(const mpq_class& q) { return ComplexRoot{q.get_d(), 0.0, 0.0, true, q.get_str()}; }

// Roots of a2 x^2 + a1 x + a0 over Q in closed form.
std::vector<ComplexRoot> quadratic_roots(const QPoly& f) {
  const auto prim = exact::primitive(f);
  const mpz_class& a = prim[2];
  const mpz_class& b = prim[1];
  const mpz_class& c = prim[0];
  const mpz_class disc = b * b - 4 * a * c;
  mpq_class centre(-b, 2 * a);
  centre.canonicalize();
  if (sgn(disc) == 0) return {rational_root(centre), rational_root(centre)};

  auto [s, k] = split_square(disc);
  mpq_class half_width(s, 2 * a);
  half_width.canonicalize();
  if (k == 1) return {rational_root(centre - half_width), rational_root(centre + half_width)};

  mpf_class root_abs(0, kFloatBits);
  mpf_class disc_abs(abs(disc), kFloatBits);
  mpf_sqrt(root_abs.get_mpf_t(), disc_abs.get_mpf_t());
  const mpf_class denom(2 * a, kFloatBits);
  std::vector<ComplexRoot> out;
  if (sgn(disc) > 0) {
    // -b and sqrt(disc) are combined in extended precision to avoid cancellation.
    const mpf_class lo = (mpf_class(-b, kFloatBits) - root_abs) / denom;
    const mpf_class hi = (mpf_class(-b, kFloatBits) + root_abs) / denom;
    out.push_back({to_double(lo), 0.0, 0.0, true, format_surd(centre, -half_width, k)});
    out.push_back({to_double(hi), 0.0, 0.0, true, format_surd(centre, half_width, k)});
  } else {
    const double im = to_double(root_abs / denom);
    out.push_back({centre.get_d(), -im, 0.0, true, format_surd(centre, -half_width, k)});
    out.push_back({centre.get_d(), im, 0.0, true, format_surd(centre, half_width, k)});
  }
  return out;
}

struct DDPoly {
  std::vector<detail::DD> c;
  std::vector<detail::DD> dc;

  explicit DDPoly(const std::vector<mpz_class>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      c.push_back(detail::from_mpz(coeffs[i]));
      if (i > 0) dc.push_back(detail::from_mpz(coeffs[i] * static_cast<unsigned long>(i)));
    }
  }

  // p(z) and p'(z), both in double-double.
  std::pair<detail::CDD, detail::CDD> eval(cplx z) const {
    using namespace detail;
    const CDD x = from_complex(z);
    CDD p{}, d{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + CDD{*it, {}};
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) d = d * x + CDD{*it, {}};
    return {p, d};
  }
};

cplx newton_polish(const DDPoly& poly, cplx z, int steps) {
  for (int i = 0; i < steps; ++i) {
    auto [p, d] = poly.eval(z);
    const cplx pd = detail::to_complex(d);
    if (pd == cplx{}) break;
    const cplx step = detail::to_complex(p) / pd;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// Numeric roots of a square-free factor of degree >= 3.
std::vector<ComplexRoot> numeric_factor_roots(const QPoly& factor, const RootOptions& options) {
  const auto prim = exact::primitive(factor);
  const int deg = static_cast<int>(prim.size()) - 1;
  const AberthResult result = aberth(prim, options);
  auto partial = [&] {
    std::vector<ComplexRoot> out;
    for (auto z : result.roots) out.push_back({z.real(), z.imag(), 0.0, false, {}});
    return out;
  };
  if (!result.converged) {
    throw RootFindingError("Aberth iteration did not converge within " + std::to_string(options.max_sweeps) +
                               " sweeps",
                           partial());
  }

  const DDPoly poly(prim);
  const int real_count = exact::SturmSequence(factor).count_real();
  std::vector<cplx> z = result.roots;
  std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
    return std::abs(a.imag()) / (1 + std::abs(a)) < std::abs(b.imag()) / (1 + std::abs(b));
  });

  std::vector<ComplexRoot> out;
  std::vector<double> reals;
  for (int i = 0; i < real_count; ++i) {
    const double x = newton_polish(poly, {z[static_cast<std::size_t>(i)].real(), 0.0}, 8).real();
    reals.push_back(x);
  }
  std::sort(reals.begin(), reals.end());
  for (std::size_t i = 1; i < reals.size(); ++i) {
    if (reals[i] - reals[i - 1] <= 1e-12 * (1.0 + std::abs(reals[i]))) {
      throw RootFindingError("real roots of a square-free factor collapsed during polishing", partial());
    }
  }
  const mpz_class& lead = prim.back();
  for (double x : reals) {
    ComplexRoot root{x, 0.0, 0.0, false, {}};
    // A rational root of a primitive integer polynomial has the form k / lead.
    const double scaled = x * lead.get_d();
    if (std::abs(scaled) < 9e15) {
      mpq_class candidate(mpz_class(static_cast<long>(std::llround(scaled))), lead);
      candidate.canonicalize();
      const bool close = std::abs(candidate.get_d() - x) <= 1e-9 * (1.0 + std::abs(x));
      if (close && exact::sign_at(factor, candidate) == 0) root = rational_root(candidate);
    }
    out.push_back(root);
  }

  std::vector<cplx> upper, lower;
  for (std::size_t i = static_cast<std::size_t>(real_count); i < z.size(); ++i) {
    const cplx polished = newton_polish(poly, z[i], 4);
    (polished.imag() > 0 ? upper : lower).push_back(polished);
  }
  if (upper.size() != lower.size() || 2 * upper.size() + reals.size() != static_cast<std::size_t>(deg)) {
    throw RootFindingError("nonreal roots do not split into conjugate pairs", partial());
  }
  std::vector<bool> used(lower.size(), false);
  for (cplx u : upper) {
    std::size_t best = lower.size();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (!used[j] && (best == lower.size() || std::abs(u - std::conj(lower[j])) < std::abs(u - std::conj(lower[best])))) {
        best = j;
      }
    }
    used[best] = true;
    const double re = 0.5 * (u.real() + lower[best].real());
    const double im = 0.5 * (u.imag() - lower[best].imag());
    out.push_back({re, im, 0.0, false, {}});
    out.push_back({re, -im, 0.0, false, {}});
  }
  return out;
}

// Divides the rational roots found numerically out of a factor; a quadratic
// remainder then gets closed-form roots.
std::vector<ComplexRoot> deflate_rational(const QPoly& factor, std::vector<ComplexRoot> part) {
  QPoly rest = factor;
  std::vector<ComplexRoot> out;
  for (const auto& r : part) {
    if (!r.exact) continue;
    out.push_back(r);
    mpq_class q(r.exact_form);
    q.canonicalize();
    rest = exact::divmod(rest, QPoly{-q, 1}).first;
  }
  if (exact::degree(rest) != 2) return part;
  for (auto& r : quadratic_roots(rest)) out.push_back(std::move(r));
  return out;
}

}  // namespace

AberthResult aberth(const std::vector<mpz_class>& coeffs, const RootOptions& options) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  AberthResult result;
  if (deg < 1) {
    result.converged = true;
    return result;
  }
  const DDPoly poly(coeffs);
  const double log_radius =
      (std::log(mpz_class(abs(coeffs.front())).get_d()) - std::log(mpz_class(abs(coeffs.back())).get_d())) / static_cast<double>(deg);
  const double radius = std::exp(log_radius);
  constexpr double kOffset = 0.4;
  for (int k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / deg + kOffset;
    result.roots.push_back(std::polar(radius, angle));
  }

  std::vector<bool> settled(static_cast<std::size_t>(deg), false);
  auto& z = result.roots;
  for (result.sweeps = 1; result.sweeps <= options.max_sweeps; ++result.sweeps) {
    bool all_settled = true;
    for (int i = 0; i < deg; ++i) {
      if (settled[static_cast<std::size_t>(i)]) continue;
      auto [p, d] = poly.eval(z[static_cast<std::size_t>(i)]);
      const cplx pv = detail::to_complex(p);
      if (pv == cplx{}) {
        settled[static_cast<std::size_t>(i)] = true;
        continue;
      }
      const cplx ratio = pv / detail::to_complex(d);
      cplx repulsion{};
      for (int j = 0; j < deg; ++j) {
        if (j != i) repulsion += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      z[static_cast<std::size_t>(i)] -= step;
      if (std::abs(step) <= options.step_tolerance * (1.0 + std::abs(z[static_cast<std::size_t>(i)]))) {
        settled[static_cast<std::size_t>(i)] = true;
      } else {
        all_settled = false;
      }
    }
    if (all_settled) {
      result.converged = true;
      return result;
    }
  }
  result.sweeps = options.max_sweeps;
  return result;
}

std::vector<ComplexRoot> roots(const ReducedPolynomial& p, const RootOptions& options) {
  const QPoly q = exact::from_integers(p.coefficients());
  std::vector<ComplexRoot> out;
  if (p.degree() == 0) return out;
  if (p.degree() == 1) {
    mpq_class r(-p.coefficients()[0], p.coefficients()[1]);
    r.canonicalize();
    out.push_back(rational_root(r));
  } else if (p.degree() == 2) {
    out = quadratic_roots(q);
  } else {
    for (const auto& [factor, multiplicity] : exact::squarefree_factors(q)) {
      std::vector<ComplexRoot> part;
      switch (exact::degree(factor)) {
        case 1:
          part.push_back(rational_root(-factor[0] / factor[1]));
          break;
        case 2:
          part = quadratic_roots(factor);
          break;
        default:
          part = numeric_factor_roots(factor, options);
          part = deflate_rational(factor, std::move(part));
      }
      for (int m = 0; m < multiplicity; ++m) out.insert(out.end(), part.begin(), part.end());
    }
  }

  for (auto& r : out) {
    r.residual = relative_residual(p, r.value());
    if (r.im == 0.0) r.im = 0.0;  // normalise -0
  }
  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  });
  for (const auto& r : out) {
    if (!(r.residual <= options.residual_limit)) {
      throw RootFindingError("root residual " + std::to_string(r.residual) + " exceeds acceptance limit", out);
    }
  }
  return out;
}

namespace {

std::string format_sqrt_of(const mpq_class& value) {
  // sqrt(a/b) = sqrt(a*b)/b
  const mpz_class prod = value.get_num() * value.get_den();
  auto [s, k] = split_square(prod);
  mpq_class coef(s, value.get_den());
  coef.canonicalize();
  return format_surd(0, coef, k);
}

}  // namespace

std::vector<ImaginaryRoot> purely_imaginary_roots(const ReducedPolynomial& p) {
  QPoly even, odd;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? even : odd).push_back(mpq_class(c[i]));
  exact::trim(even);
  exact::trim(odd);
  if (odd.empty()) return {};
  const QPoly g = exact::gcd(even, odd);
  if (exact::degree(g) < 1) return {};
  const QPoly squarefree = exact::divmod(g, exact::gcd(g, exact::derivative(g))).first;

  const mpq_class bound = exact::root_bound(squarefree);
  const mpq_class width(1, mpz_class(1) << 40);
  // g(0) = gcd evaluated at 0 divides c_0 > 0, so the interval (-bound, 0] has no root at 0.
  auto isolated = exact::isolate_real_roots(squarefree, -bound, 0, width);

  std::vector<ImaginaryRoot> out;
  for (auto& iso : isolated) {
    exact::try_rational(squarefree, iso);
    ImaginaryRoot root;
    root.exact = iso.exact;
    root.b_squared_lo = -iso.hi;
    root.b_squared_hi = -iso.lo;
    const mpq_class mid = (root.b_squared_lo + root.b_squared_hi) / 2;
    root.b = std::sqrt(mid.get_d());
    if (iso.exact) {
      root.text = format_sqrt_of(root.b_squared_lo);
    } else {
      root.text = "sqrt(s), s in [" + root.b_squared_lo.get_str() + ", " + root.b_squared_hi.get_str() + "]";
    }
    out.push_back(std::move(root));
  }
  std::sort(out.begin(), out.end(), [](const ImaginaryRoot& a, const ImaginaryRoot& b) { return a.b < b.b; });
  return out;
}

}  // namespace wiener
