#include "wiener/exact_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wiener::exact {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly from_integers(const std::vector<mpz_class>& coeffs) {
  QPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  return p;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  if (degree(rem) < degree(b)) return {{}, rem};
  QPoly quot(rem.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  while (!rem.empty() && degree(rem) >= degree(b)) {
    const std::size_t shift = rem.size() - b.size();
    const mpq_class factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= factor * b[j];
    rem.pop_back();  // the leading term cancels exactly
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

QPoly monic(const QPoly& p) {
  if (p.empty()) return p;
  QPoly out = p;
  const mpq_class lead = p.back();
  for (auto& c : out) c /= lead;
  return out;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::vector<mpz_class> primitive(const QPoly& p) {
  if (p.empty()) return {};
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

std::vector<std::pair<QPoly, int>> squarefree_factors(const QPoly& p_in) {
  QPoly p = p_in;
  trim(p);
  std::vector<std::pair<QPoly, int>> out;
  if (degree(p) < 1) return out;
  const QPoly dp = derivative(p);
  QPoly a = gcd(p, dp);
  QPoly b = divmod(p, a).first;
  QPoly c = divmod(dp, a).first;
  QPoly d = c;
  {
    const QPoly db = derivative(b);
    for (std::size_t i = 0; i < std::max(d.size(), db.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      if (i < db.size()) d[i] -= db[i];
    }
    trim(d);
  }
  for (int m = 1; degree(b) >= 1; ++m) {
    QPoly f = gcd(b, d);
    if (degree(f) >= 1) out.emplace_back(f, m);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    const QPoly db = derivative(b);
    d = c;
    for (std::size_t i = 0; i < std::max(d.size(), db.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      if (i < db.size()) d[i] -= db[i];
    }
    trim(d);
  }
  return out;
}

mpq_class evaluate(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const QPoly& p, const mpq_class& x) { return sgn(evaluate(p, x)); }

mpq_class root_bound(const QPoly& p) {
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class r = abs(p[i] / p.back());
    if (r > bound) bound = r;
  }
  return bound + 1;
}

SturmSequence::SturmSequence(const QPoly& squarefree) {
  QPoly p0 = squarefree;
  trim(p0);
  if (p0.empty()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain_.push_back(p0);
  QPoly p1 = derivative(p0);
  while (!p1.empty()) {
    chain_.push_back(p1);
    QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    for (auto& c : r) c = -c;
    p1 = std::move(r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations_at(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.back()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(degree(q) % 2 == 0 ? sgn(q.back()) : -sgn(q.back()));
  return count_variations(signs);
}

namespace {

void refine(const SturmSequence& sturm, IsolatedRoot& root, const mpq_class& width) {
  const QPoly& p = sturm.base();
  if (!root.exact && sign_at(p, root.hi) == 0) {
    root.lo = root.hi;
    root.exact = true;
  }
  while (!root.exact && root.hi - root.lo > width) {
    mpq_class mid = (root.lo + root.hi) / 2;
    if (sign_at(p, mid) == 0) {
      root.lo = root.hi = mid;
      root.exact = true;
    } else if (sturm.count_in(root.lo, mid) == 1) {
      root.hi = mid;
    } else {
      root.lo = mid;
    }
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& squarefree, const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& width) {
  const SturmSequence sturm(squarefree);
  std::vector<IsolatedRoot> out;
  std::vector<std::pair<mpq_class, mpq_class>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int count = sturm.count_in(a, b);
    if (count == 0) continue;
    if (count == 1) {
      IsolatedRoot root{a, b, false};
      refine(sturm, root, width);
      out.push_back(root);
      continue;
    }
    const mpq_class mid = (a + b) / 2;
    // Right half first so the left half pops next.
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.hi < y.hi; });
  return out;
}

bool try_rational(const QPoly& squarefree, IsolatedRoot& root) {
  if (root.exact) return true;
  const auto prim = primitive(squarefree);
  const mpz_class& lead = prim.back();
  const mpq_class max_width(1, lead + 1);
  if (root.hi - root.lo >= max_width) {
    refine(SturmSequence(squarefree), root, max_width / 2);
    if (root.exact) return true;
  }
  const mpq_class scaled = root.lo * lead;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  k += 1;  // smallest multiple of 1/lead strictly above lo
  mpq_class candidate(k, lead);
  candidate.canonicalize();
  if (candidate <= root.hi && sign_at(squarefree, candidate) == 0) {
    root.lo = root.hi = candidate;
    root.exact = true;
    return true;
  }
  return false;
}

}  // namespace wiener::exact
