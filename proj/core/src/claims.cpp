#include "wiener/claims.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>

#include "wiener/errors.hpp"
#include "wiener/exact_poly.hpp"
#include "wiener/graph6.hpp"

namespace wiener {

namespace {

constexpr std::size_t kStoredCounterexamples = 25;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

mpz_class z(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

ReducedPolynomial reduced(const DistanceDistribution& dd) {
  std::vector<mpz_class> c;
  c.reserve(dd.counts().size());
  for (std::uint64_t v : dd.counts()) c.emplace_back(static_cast<unsigned long>(v));
  return ReducedPolynomial(std::move(c));
}

std::string describe(const Graph& g, const DistanceDistribution& dd) {
  return "graph6 " + to_graph6(g) + " d=" + to_string(dd);
}

class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::map<std::string, std::int64_t> params)
      : start_(std::chrono::steady_clock::now()) {
    report_.claim_id = std::move(id);
    report_.params = std::move(params);
  }

  void witness(std::string subject, std::string detail) { report_.witnesses.push_back({std::move(subject), std::move(detail)}); }

  void counterexample(std::string subject, std::string detail) {
    ++counter_total_;
    if (report_.counterexamples.size() < kStoredCounterexamples) {
      report_.counterexamples.push_back({std::move(subject), std::move(detail)});
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void inconclusive() { inconclusive_ = true; }
  bool failed() const { return counter_total_ > 0; }

  ClaimReport finish() {
    if (counter_total_ > report_.counterexamples.size()) {
      note(std::to_string(counter_total_) + " counterexamples found, first " +
           std::to_string(report_.counterexamples.size()) + " kept");
    }
    if (counter_total_ > 0) {
      report_.verdict = Verdict::fail;
    } else {
      report_.verdict = inconclusive_ ? Verdict::inconclusive_budget : Verdict::pass;
    }
    report_.runtime = std::chrono::steady_clock::now() - start_;
    return std::move(report_);
  }

 private:
  ClaimReport report_;
  std::chrono::steady_clock::time_point start_;
  std::size_t counter_total_ = 0;
  bool inconclusive_ = false;
};

// Instances of a sweep with their roots, memoised per (class, order).

struct Instance {
  Graph graph;
  DistanceDistribution distribution;
  std::vector<ComplexRoot> roots;
};

std::mutex cache_mutex;

int max_graph_order(const ClaimOptions& opt) { return opt.allow_long ? kMaxGraphOrder : kDefaultMaxGraphOrder; }

void check_order(InstanceClass cls, int n, int lo, const ClaimOptions& opt) {
  const int hi = cls == InstanceClass::graphs ? max_graph_order(opt) : kMaxTreeOrder;
  if (n < lo || n > hi) {
    std::string msg = std::string(to_string(cls)) + " order must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]";
    if (cls == InstanceClass::graphs && n == kMaxGraphOrder) msg += " (order 8 needs --long)";
    throw DomainError(msg);
  }
}

const std::vector<Instance>& instances(InstanceClass cls, int n, const ClaimOptions& opt) {
  static std::map<std::pair<InstanceClass, int>, std::vector<Instance>> cache;
  static std::map<DistanceDistribution, std::vector<ComplexRoot>> root_cache;
  check_order(cls, n, 2, opt);

  std::lock_guard lock(cache_mutex);
  auto found = cache.find({cls, n});
  if (found != cache.end()) return found->second;

  auto roots_of = [&](const DistanceDistribution& dd) -> const std::vector<ComplexRoot>& {
    auto it = root_cache.find(dd);
    if (it == root_cache.end()) it = root_cache.emplace(dd, roots(reduced(dd))).first;
    return it->second;
  };

  std::vector<Instance> out;
  if (cls == InstanceClass::graphs) {
    const auto sweep = enumerate_connected_distributions(n, SweepOptions{std::max(1, opt.jobs), opt.allow_long});
    out.reserve(sweep.classes.size());
    for (const auto& c : sweep.classes) out.push_back({c.representative, c.distribution, roots_of(c.distribution)});
  } else {
    enumerate_trees(n, [&](const Graph& t) {
      auto dd = distance_distribution(t);
      const auto& r = roots_of(dd);
      out.push_back({t, std::move(dd), r});
    });
  }
  return cache.emplace(std::pair{cls, n}, std::move(out)).first->second;
}

std::string centre_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int u = 0; u < t.order(); ++u) {
    if (u != parent && t.has_edge(v, u)) kids.push_back(centre_code(t, u, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> tree_centres(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u = 0; u < n; ++u) {
        if (t.has_edge(v, u) && --deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Graph prufer_tree(const std::vector<int>& seq, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : seq) ++deg[static_cast<std::size_t>(v)];
  Graph t(n);
  for (int v : seq) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    t.add_edge(leaf, v);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(v)];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        t.add_edge(u, v);
        break;
      }
    }
  }
  return t;
}

bool all_real(const std::vector<ComplexRoot>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const ComplexRoot& r) { return r.im == 0.0; });
}

bool all_rational(const std::vector<ComplexRoot>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const ComplexRoot& r) {
    return r.im == 0.0 && r.exact && r.exact_form.find("sqrt") == std::string::npos;
  });
}

std::string roots_text(const std::vector<ComplexRoot>& rs) {
  std::string s;
  for (const auto& r : rs) {
    if (!s.empty()) s += ' ';
    s += r.exact ? r.exact_form : fmt(r.re) + (r.im < 0 ? "-" : "+") + fmt(std::abs(r.im)) + "i";
  }
  return s;
}

double max_modulus_of(const std::vector<ComplexRoot>& rs) {
  double m = 0.0;
  for (const auto& r : rs) m = std::max(m, std::abs(r.value()));
  return m;
}

std::map<std::string, std::int64_t> one(const char* name, std::int64_t v) { return {{name, v}}; }

mpq_class ratio(std::uint64_t a, std::uint64_t b) {
  mpq_class q(mpz_class(static_cast<unsigned long>(a)), mpz_class(static_cast<unsigned long>(b)));
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> ladder(std::int64_t n_max, std::int64_t min_order) {
  std::vector<std::int64_t> out;
  for (std::int64_t div : {1000, 100, 10, 1}) {
    const std::int64_t n = n_max / div;
    if (n >= min_order && (out.empty() || out.back() != n)) out.push_back(n);
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive_budget:
      return "inconclusive_budget";
  }
  return "?";
}

std::string_view to_string(InstanceClass c) { return c == InstanceClass::graphs ? "graphs" : "trees"; }

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::max_modulus:
      return "max_modulus";
    case Objective::max_real:
      return "max_real";
    case Objective::max_imag:
      return "max_imag";
    case Objective::min_nonzero_modulus:
      return "min_nonzero_modulus";
  }
  return "?";
}

InstanceClass parse_instance_class(std::string_view text) {
  if (text == "graphs") return InstanceClass::graphs;
  if (text == "trees") return InstanceClass::trees;
  throw ParseError("instance class must be graphs or trees");
}

Objective parse_objective(std::string_view text) {
  for (auto o : {Objective::max_modulus, Objective::max_real, Objective::max_imag, Objective::min_nonzero_modulus}) {
    if (to_string(o) == text) return o;
  }
  throw ParseError("unknown objective '" + std::string(text) + "'");
}

std::string_view to_string(Asymptotic a) {
  switch (a) {
    case Asymptotic::broom_imag:
      return "broom_imag";
    case Asymptotic::broom_real:
      return "broom_real";
    case Asymptotic::g_n_imag:
      return "gn_imag";
  }
  return "?";
}

Asymptotic parse_asymptotic(std::string_view text) {
  for (auto a : {Asymptotic::broom_imag, Asymptotic::broom_real, Asymptotic::g_n_imag}) {
    if (to_string(a) == text) return a;
  }
  throw ParseError("unknown asymptotic '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- fixtures

Graph sqrt2_graph() {
  const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {2, 3}, {0, 5}, {0, 4}, {4, 5}};
  return Graph::from_edge_list(6, e);
}

Graph unit_root_tree() {
  const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {1, 3}, {0, 5}, {0, 4}, {1, 6},
                                   {4, 7}, {2, 8}, {3, 9}, {9, 10}, {6, 11}};
  return Graph::from_edge_list(12, e);
}

Graph max_real_tree_16() { return family_graph(FamilySpec{Family::path_with_pendants, {15, 8, 1}}); }
Graph max_real_tree_17() { return family_graph(FamilySpec{Family::path_with_pendants, {13, 7, 4}}); }

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw DomainError("tree_canonical_form needs a tree");
  if (tree.order() == 1) return "()";
  std::string best;
  for (int c : tree_centres(tree)) {
    std::string code = centre_code(tree, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// ---------------------------------------------------------------- modulus bounds

ClaimReport verify_max_modulus(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::graphs, n, 3, opt);
  ReportBuilder rb("max_modulus", one("n", n));
  const std::int64_t bound = static_cast<std::int64_t>(n) * (n - 1) / 2 - 1;
  const double slack = opt.tolerance * static_cast<double>(bound);
  std::vector<const Instance*> attainers;
  for (const auto& inst : instances(InstanceClass::graphs, n, opt)) {
    const auto& c = inst.distribution.counts();
    if (c.size() == 2) {
      const mpq_class m = ratio(c[0], c[1]);
      if (m > bound) rb.counterexample(describe(inst.graph, inst.distribution), "|root| = " + to_string(m));
      if (m == bound) attainers.push_back(&inst);
      continue;
    }
    for (const auto& r : inst.roots) {
      const double m = std::abs(r.value());
      if (m > static_cast<double>(bound) + slack) {
        rb.counterexample(describe(inst.graph, inst.distribution), "|root| = " + fmt(m));
      } else if (m >= static_cast<double>(bound) - slack) {
        rb.counterexample(describe(inst.graph, inst.distribution),
                          "non-linear case numerically attains the bound: |root| = " + fmt(m));
      }
    }
  }
  const DistanceDistribution expected(n, {static_cast<std::uint64_t>(bound), 1});
  if (attainers.size() == 1 && attainers.front()->distribution == expected) {
    rb.witness(describe(attainers.front()->graph, expected), "unique attainer, root -" + std::to_string(bound));
  } else {
    for (const auto* a : attainers) rb.counterexample(describe(a->graph, a->distribution), "attains bound");
    if (attainers.empty()) rb.counterexample("K_n - e", "bound " + std::to_string(bound) + " not attained");
  }
  return rb.finish();
}

ClaimReport verify_min_modulus(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::graphs, n, 3, opt);
  ReportBuilder rb("min_modulus", one("n", n));
  mpq_class bound(2, n - 2);
  bound.canonicalize();
  const double b = bound.get_d();
  std::vector<const Instance*> attainers;
  for (const auto& inst : instances(InstanceClass::graphs, n, opt)) {
    const auto& c = inst.distribution.counts();
    if (c.size() == 1) continue;
    if (c.size() == 2) {
      const mpq_class m = ratio(c[0], c[1]);
      if (m < bound) rb.counterexample(describe(inst.graph, inst.distribution), "|root| = " + to_string(m));
      if (m == bound) attainers.push_back(&inst);
      continue;
    }
    for (const auto& r : inst.roots) {
      const double m = std::abs(r.value());
      if (m < b - opt.tolerance) {
        rb.counterexample(describe(inst.graph, inst.distribution), "|root| = " + fmt(m));
      } else if (m <= b + opt.tolerance) {
        rb.counterexample(describe(inst.graph, inst.distribution),
                          "non-linear case numerically attains the bound: |root| = " + fmt(m));
      }
    }
  }
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const DistanceDistribution expected(n, {un - 1, (un - 1) * (un - 2) / 2});
  if (attainers.size() == 1 && attainers.front()->distribution == expected) {
    rb.witness(describe(attainers.front()->graph, expected), "unique attainer, root -" + to_string(bound));
  } else {
    for (const auto* a : attainers) rb.counterexample(describe(a->graph, a->distribution), "attains bound");
    if (attainers.empty()) rb.counterexample("star", "bound " + to_string(bound) + " not attained");
  }
  return rb.finish();
}

ClaimReport verify_tree_ratio_bounds(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::trees, n, 3, opt);
  ReportBuilder rb("tree_ratio_bounds", one("n", n));
  mpq_class tightest(-1);
  std::string tightest_subject;
  for (const auto& inst : instances(InstanceClass::trees, n, opt)) {
    const auto& d = inst.distribution.counts();
    const std::uint64_t D = d.size();
    for (std::size_t k = 0; k + 1 < D; ++k) {
      const std::uint64_t bound = 2 * (static_cast<std::uint64_t>(n) - D);
      if (d[k] > bound * d[k + 1]) {
        rb.counterexample(describe(inst.graph, inst.distribution),
                          "d_" + std::to_string(k + 1) + "/d_" + std::to_string(k + 2) + " > 2(n-D)");
      }
      if (n >= 5 && d[k] > 2 * (static_cast<std::uint64_t>(n) - 4) * d[k + 1]) {
        rb.counterexample(describe(inst.graph, inst.distribution),
                          "d_" + std::to_string(k + 1) + "/d_" + std::to_string(k + 2) + " > 2(n-4)");
      }
      const mpq_class use = ratio(d[k], bound * d[k + 1]);
      if (use > tightest) {
        tightest = use;
        tightest_subject = describe(inst.graph, inst.distribution);
      }
    }
  }
  if (tightest >= 0) rb.witness(tightest_subject, "largest d_k / (2(n-D) d_{k+1}) = " + to_string(tightest));
  return rb.finish();
}

ClaimReport verify_ratio_lower(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::graphs, n, 3, opt);
  ReportBuilder rb("ratio_lower", one("n", n));
  std::size_t equalities = 0;
  for (const auto& inst : instances(InstanceClass::graphs, n, opt)) {
    const auto& d = inst.distribution.counts();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      const std::uint64_t lhs = d[k] * (static_cast<std::uint64_t>(n) - (k + 1) - 1);
      const std::uint64_t rhs = 2 * d[k + 1];
      if (lhs < rhs) {
        rb.counterexample(describe(inst.graph, inst.distribution),
                          "d_" + std::to_string(k + 1) + "(n-" + std::to_string(k + 2) + ") < 2 d_" +
                              std::to_string(k + 2));
      } else if (lhs == rhs) {
        if (equalities++ == 0) rb.witness(describe(inst.graph, inst.distribution), "equality at k=" + std::to_string(k + 1));
      }
    }
  }
  rb.note(std::to_string(equalities) + " equality cases");
  return rb.finish();
}

ClaimReport verify_tree_root_bound(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::trees, n, 5, opt);
  ReportBuilder rb("tree_root_bound", one("n", n));
  const double bound = 2.0 * (n - 4);
  double best = 0.0;
  std::string best_subject;
  for (const auto& inst : instances(InstanceClass::trees, n, opt)) {
    const double m = max_modulus_of(inst.roots);
    if (m > bound + opt.tolerance * bound) rb.counterexample(describe(inst.graph, inst.distribution), "|root| = " + fmt(m));
    if (m > best) {
      best = m;
      best_subject = describe(inst.graph, inst.distribution);
    }
  }
  rb.witness(best_subject, "largest modulus " + fmt(best) + " <= " + fmt(bound));
  return rb.finish();
}

ClaimReport verify_tn_interval(int n, const ClaimOptions&) {
  ReportBuilder rb("tn_interval", one("n", n));
  if (n < 5) throw DomainError("tn_interval needs n >= 5");
  if (n == 5) {
    // The interval statement starts at n = 6; report rather than fail.
    rb.note("T_5 lies outside the range of the interval statement (n >= 6)");
    rb.inconclusive();
    return rb.finish();
  }
  const auto w = closed_form_polynomial(FamilySpec{Family::t_n, {n}});
  const auto p = reduce(*w);
  const int prec = 256;
  mpf_class s2(2, prec);
  s2 = sqrt(s2);
  const mpf_class c = mpf_class(1, prec) + mpf_class(1, prec) / s2;
  const mpf_class left = -c * n + 7;
  const mpf_class right = -c * n + 8;
  auto eval = [&](const mpf_class& x) {
    mpf_class acc(0, prec);
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + mpf_class(*it, prec);
    return acc;
  };
  const int sl = sgn(eval(left));
  const int sr = sgn(eval(right));
  const std::string subject = "t_n:" + std::to_string(n) + " d=" + to_string(*w);
  if (sl == 0 || sr == 0 || sl == sr) {
    rb.counterexample(subject, "no sign change of W/x between the interval ends");
  }
  int inside = 0;
  double where = 0.0;
  for (const auto& r : roots(p)) {
    if (r.im == 0.0 && r.re > left.get_d() && r.re < right.get_d()) {
      ++inside;
      where = r.re;
    }
  }
  if (inside != 1) {
    rb.counterexample(subject, std::to_string(inside) + " real roots found inside the interval");
  } else {
    rb.witness(subject, "root " + fmt(where) + " in (" + fmt(left.get_d()) + ", " + fmt(right.get_d()) + ")");
  }
  return rb.finish();
}

ClaimReport verify_tn_extremal(int n, const ClaimOptions& opt) {
  check_order(InstanceClass::trees, n, 5, opt);
  ReportBuilder rb("tn_extremal", one("n", n));
  const auto& all = instances(InstanceClass::trees, n, opt);
  double best = 0.0;
  for (const auto& inst : all) best = std::max(best, max_modulus_of(inst.roots));
  std::vector<const Instance*> argmax;
  for (const auto& inst : all) {
    if (max_modulus_of(inst.roots) >= best - 1e-9 * std::max(1.0, best)) argmax.push_back(&inst);
  }
  const std::string expected = tree_canonical_form(family_graph(FamilySpec{Family::t_n, {n}}));
  if (argmax.size() == 1 && tree_canonical_form(argmax.front()->graph) == expected) {
    rb.witness(describe(argmax.front()->graph, argmax.front()->distribution), "unique maximiser, modulus " + fmt(best));
  } else {
    for (const auto* a : argmax) {
      rb.counterexample(describe(a->graph, a->distribution),
                        tree_canonical_form(a->graph) == expected ? "T_n ties with another tree"
                                                                  : "maximiser other than T_n, modulus " + fmt(best));
    }
  }
  return rb.finish();
}

ClaimReport verify_path_annulus(int n, const ClaimOptions& opt) {
  if (n < 3) throw DomainError("path_annulus needs n >= 3");
  ReportBuilder rb("path_annulus", one("n", n));
  const auto p = reduce(family_polynomial(FamilySpec{Family::path, {n}}));
  const double lo = static_cast<double>(n - 1) / (n - 2);
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  for (const auto& r : roots(p)) {
    const double m = std::abs(r.value());
    mn = std::min(mn, m);
    mx = std::max(mx, m);
    if (m < lo - opt.tolerance || m > 2.0 + opt.tolerance) {
      rb.counterexample("path:" + std::to_string(n), "|root| = " + fmt(m));
    }
  }
  rb.witness("path:" + std::to_string(n),
             "moduli in [" + fmt(mn) + ", " + fmt(mx) + "] within [" + fmt(lo) + ", 2]");
  return rb.finish();
}

// ---------------------------------------------------------------- density

ClaimReport verify_density(std::int64_t a, std::int64_t b, const ClaimOptions&) {
  ReportBuilder rb("density", {{"a", a}, {"b", b}});
  const auto dc = dense_construct(a, b);
  mpq_class target(-z(a), z(b));
  target.canonicalize();
  const std::string subject = dc.spec.to_string();
  if (dc.root != target) rb.counterexample(subject, "root " + to_string(dc.root) + " != " + to_string(target));

  const auto closed = *closed_form_polynomial(dc.spec);
  if (dc.spec.order() <= Graph::kMaxOrder) {
    const Graph g = family_graph(dc.spec);
    const auto bfs = wiener_polynomial(distance_distribution(g));
    if (!(bfs == closed)) rb.counterexample(subject, "constructed graph has W = " + to_string(bfs));
  }
  const auto rs = roots(reduce(closed));
  if (rs.size() != 1 || !rs[0].exact || rs[0].exact_form != target.get_str()) {
    rb.counterexample(subject, "root solver reports " + roots_text(rs));
  }
  if (!rb.failed()) rb.witness(subject, "single root " + to_string(target));
  return rb.finish();
}

ClaimReport verify_tree_density_limit(std::int64_t a, std::int64_t b, std::int64_t l_max, const ClaimOptions&) {
  ReportBuilder rb("tree_density_limit", {{"a", a}, {"b", b}, {"l_max", l_max}});
  if (l_max < 5) throw DomainError("tree_density_limit needs l_max >= 5");
  const int prec = 256;
  const mpf_class r = mpf_class(z(a), prec) / mpf_class(z(b), prec);
  const mpf_class limit = -r - mpf_class(1, prec) / (4 * r);

  std::vector<std::int64_t> ls;
  for (std::int64_t div : {8, 4, 2, 1}) {
    const std::int64_t l = l_max / div;
    if (l >= 5 && (ls.empty() || ls.back() != l)) ls.push_back(l);
  }
  double previous = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (std::int64_t l : ls) {
    const auto spec = tree_dense_construct(a, b, l);
    const auto w = *closed_form_polynomial(spec);
    const auto& d = w.counts();
    const mpz_class disc = d[1] * d[1] - 4 * d[0] * d[2];
    if (disc < 0) {
      rb.counterexample(spec.to_string(), "complex roots (negative discriminant)");
      continue;
    }
    mpf_class sq(disc, prec);
    sq = sqrt(sq);
    const mpf_class leftmost = (-mpf_class(d[1], prec) - sq) / (2 * mpf_class(d[2], prec));
    const double dev = mpf_class(abs(leftmost - limit) / abs(limit)).get_d();
    rb.witness(spec.to_string(), "leftmost root " + fmt(leftmost.get_d()) + ", relative deviation " + fmt(dev));
    if (dev >= previous) rb.counterexample(spec.to_string(), "deviation does not decrease along the ladder");
    previous = dev;
    last = dev;
  }
  if (last > 0.01) rb.counterexample("l=" + std::to_string(l_max), "deviation " + fmt(last) + " exceeds 1%");
  rb.note("limit " + fmt(limit.get_d()));
  return rb.finish();
}

ClaimReport verify_double_star_discriminant(std::int64_t n, const ClaimOptions&) {
  if (n < 4) throw DomainError("double_star_discriminant needs n >= 4");
  ReportBuilder rb("double_star_discriminant", one("n", n));
  std::vector<std::int64_t> negative;
  for (std::int64_t k = 2; k <= n / 2; ++k) {
    const auto w = *closed_form_polynomial(FamilySpec{Family::double_star, {k, n}});
    const auto& d = w.counts();
    if (d[1] * d[1] - 4 * d[0] * d[2] < 0) negative.push_back(k);
  }
  if (n >= 15) {
    for (std::int64_t k : negative) {
      rb.counterexample("double_star:" + std::to_string(k) + "," + std::to_string(n), "negative discriminant");
    }
    if (negative.empty()) rb.witness("n=" + std::to_string(n), "every double star has real roots");
  } else if (negative.empty()) {
    rb.counterexample("n=" + std::to_string(n), "no double star with nonreal roots");
  } else {
    rb.witness("double_star:" + std::to_string(negative.front()) + "," + std::to_string(n),
               "negative discriminant (" + std::to_string(negative.size()) + " such k)");
  }
  return rb.finish();
}

// ---------------------------------------------------------------- real and imaginary parts

ClaimReport verify_broom_asymptotics(Asymptotic which, std::int64_t n_max, const ClaimOptions&) {
  ReportBuilder rb(std::string(to_string(which)), one("n_max", n_max));
  double target = 0.0;
  double tol = 0.05;
  std::int64_t min_order = 0;
  switch (which) {
    case Asymptotic::broom_imag:
      target = std::pow(2.0, -0.5);
      min_order = 5;
      break;
    case Asymptotic::broom_real:
      target = std::pow(2.0, -4.0 / 3.0);
      min_order = 6;
      break;
    case Asymptotic::g_n_imag:
      target = 1.0;
      tol = 0.01;
      min_order = 4;
      break;
  }
  const auto steps = ladder(n_max, min_order);
  if (steps.empty()) throw DomainError("n_max below the family's smallest order");

  double previous = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (std::int64_t n : steps) {
    FamilySpec spec = which == Asymptotic::g_n_imag  ? FamilySpec{Family::g_n, {n}}
                      : which == Asymptotic::broom_imag ? FamilySpec{Family::broom, {4, n - 4}}
                                                        : FamilySpec{Family::broom, {5, n - 5}};
    const auto rs = roots(reduce(*closed_form_polynomial(spec)));
    double value = -std::numeric_limits<double>::infinity();
    for (const auto& r : rs) {
      if (which == Asymptotic::broom_real) {
        if (r.im != 0.0) value = std::max(value, r.re);
      } else {
        value = std::max(value, r.im);
      }
    }
    const double nd = static_cast<double>(n);
    const double scale = which == Asymptotic::broom_imag ? std::sqrt(nd)
                         : which == Asymptotic::broom_real ? std::cbrt(nd)
                                                           : nd / 2.0;
    const double normalised = value / scale;
    const double dev = std::abs(normalised / target - 1.0);
    rb.witness(spec.to_string(), "normalised " + fmt(normalised) + ", relative deviation " + fmt(dev));
    if (dev >= previous) rb.counterexample(spec.to_string(), "deviation does not decrease along the ladder");
    previous = dev;
    last = dev;
  }
  if (last > tol) rb.counterexample("n=" + std::to_string(steps.back()), "deviation " + fmt(last) + " above " + fmt(tol));
  rb.note("target " + fmt(target));
  return rb.finish();
}

ExtremalReport search_extremal(int order, Objective objective, InstanceClass cls, const ClaimOptions& opt) {
  check_order(cls, order, 3, opt);
  const auto& all = instances(cls, order, opt);
  const bool minimise = objective == Objective::min_nonzero_modulus;
  auto score = [&](const Instance& inst) -> std::optional<double> {
    if (inst.roots.empty()) return std::nullopt;
    double v = minimise ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    for (const auto& r : inst.roots) {
      double x = 0.0;
      switch (objective) {
        case Objective::max_modulus:
        case Objective::min_nonzero_modulus:
          x = std::abs(r.value());
          break;
        case Objective::max_real:
          x = r.re;
          break;
        case Objective::max_imag:
          x = r.im;
          break;
      }
      v = minimise ? std::min(v, x) : std::max(v, x);
    }
    return v;
  };

  ExtremalReport rep;
  rep.order = order;
  rep.objective = objective;
  rep.instance_class = cls;
  std::vector<std::optional<double>> scores;
  scores.reserve(all.size());
  std::optional<double> best;
  for (const auto& inst : all) {
    scores.push_back(score(inst));
    const auto& s = scores.back();
    if (s && (!best || (minimise ? *s < *best : *s > *best))) best = s;
  }
  if (!best) return rep;
  rep.best_value = *best;
  const double tie = 1e-9 * std::max(1.0, std::abs(*best));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (scores[i] && std::abs(*scores[i] - *best) <= tie) {
      rep.argmax.push_back({describe(all[i].graph, all[i].distribution), all[i].distribution, all[i].graph});
    }
  }
  return rep;
}

ClaimReport verify_extremal_real(int order, InstanceClass cls, const ClaimOptions& opt) {
  ReportBuilder rb("extremal_real_" + std::string(to_string(cls)), one("n", order));
  const auto rep = search_extremal(order, Objective::max_real, cls, opt);
  for (const auto& a : rep.argmax) rb.witness(a.description, "largest real part " + fmt(rep.best_value));

  std::optional<Graph> expected;
  if (cls == InstanceClass::graphs) {
    if (order <= 5) {
      if (rep.best_value > opt.tolerance) {
        for (const auto& a : rep.argmax) rb.counterexample(a.description, "root with positive real part");
      }
      return rb.finish();
    }
    expected = family_graph(FamilySpec{Family::path, {order}});
    const auto want = distance_distribution(*expected);
    if (rep.argmax.size() != 1 || rep.argmax.front().distribution != want) {
      for (const auto& a : rep.argmax) rb.counterexample(a.description, "maximiser is not the path");
    }
    return rb.finish();
  }

  if (order >= 6 && order <= 15) {
    expected = family_graph(FamilySpec{Family::path, {order}});
  } else if (order == 16) {
    expected = max_real_tree_16();
  } else if (order == 17) {
    expected = max_real_tree_17();
  } else {
    rb.note("no stated maximiser at this order; search reported only");
    return rb.finish();
  }
  const std::string want = tree_canonical_form(*expected);
  if (rep.argmax.size() != 1 || tree_canonical_form(rep.argmax.front().graph) != want) {
    for (const auto& a : rep.argmax) rb.counterexample(a.description, "maximiser differs from the expected tree");
    if (rep.argmax.empty()) rb.counterexample("n=" + std::to_string(order), "no maximiser");
  }
  return rb.finish();
}

ClaimReport find_purely_imaginary(InstanceClass cls, int order, const ClaimOptions& opt) {
  check_order(cls, order, 2, opt);
  ReportBuilder rb("purely_imaginary_" + std::string(to_string(cls)), one("n", order));
  bool found_sqrt2 = false;
  bool found_unit = false;
  std::size_t hits = 0;
  for (const auto& inst : instances(cls, order, opt)) {
    const auto p = reduced(inst.distribution);
    const auto imag = purely_imaginary_roots(p);
    const std::string subject = describe(inst.graph, inst.distribution);

    for (const auto& ir : imag) {
      const bool matched = std::any_of(inst.roots.begin(), inst.roots.end(), [&](const ComplexRoot& r) {
        return std::abs(r.value() - std::complex<double>(0.0, ir.b)) <= 1e-7 * std::max(1.0, ir.b);
      });
      if (!matched) rb.counterexample(subject, "exact root " + ir.text + "i has no numeric counterpart");
    }
    for (const auto& r : inst.roots) {
      if (r.im > 0.0 && std::abs(r.re) <= 1e-10 * std::max(1.0, r.im)) {
        const bool matched = std::any_of(imag.begin(), imag.end(), [&](const ImaginaryRoot& ir) {
          return std::abs(ir.b - r.im) <= 1e-7 * std::max(1.0, r.im);
        });
        if (!matched) rb.counterexample(subject, "numeric root " + fmt(r.re) + "+" + fmt(r.im) + "i not confirmed exactly");
      }
    }
    if (imag.empty()) continue;
    ++hits;
    std::string text;
    for (const auto& ir : imag) {
      text += (text.empty() ? "+-" : ", +-") + ir.text + "i";
      if (ir.exact && ir.b_squared_lo == 2) found_sqrt2 = true;
      if (ir.exact && ir.b_squared_lo == 1) found_unit = true;
    }
    rb.witness(subject, text);
    if (cls == InstanceClass::graphs && order <= 5) rb.counterexample(subject, "purely imaginary root below order 6");
    if (cls == InstanceClass::trees && order < 12 && found_unit) {
      rb.counterexample(subject, "tree below order 12 with root i");
      found_unit = false;
    }
  }
  rb.note(std::to_string(hits) + " instances with purely imaginary roots");

  if (cls == InstanceClass::graphs && order == 6) {
    const auto dd = distance_distribution(sqrt2_graph());
    if (dd != DistanceDistribution(6, {6, 4, 3, 2}) || !found_sqrt2) {
      rb.counterexample("d=(6,4,3,2)", "expected root sqrt(2)i not found");
    }
  }
  if (cls == InstanceClass::trees && order == 12) {
    const auto p = reduced(distance_distribution(unit_root_tree()));
    const auto at_i = evaluate_gaussian(p, GaussianRational{0, 1});
    if (!found_unit || at_i.re != 0 || at_i.im != 0) rb.counterexample("order 12 tree", "expected root i not found");
  }
  return rb.finish();
}

ClaimReport verify_half_plane(const ClaimOptions&) {
  ReportBuilder rb("half_plane", {});
  auto check = [&](const FamilySpec& spec, auto pick, double threshold, const char* what) {
    const auto rs = roots(reduce(family_polynomial(spec)));
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : rs) best = std::max(best, pick(r));
    if (best > threshold) {
      rb.witness(spec.to_string(), std::string(what) + " " + fmt(best) + " beyond " + fmt(threshold));
    } else {
      rb.counterexample(spec.to_string(), std::string(what) + " only " + fmt(best));
    }
  };
  check(FamilySpec{Family::complete_minus_edge, {50}}, [](const ComplexRoot& r) { return -r.re; }, 1e3,
        "negated real part");
  check(FamilySpec{Family::broom, {4, 40000 - 4}}, [](const ComplexRoot& r) { return r.im; }, 1e2, "imaginary part");
  check(FamilySpec{Family::broom, {5, 100000 - 5}}, [](const ComplexRoot& r) { return r.im != 0.0 ? r.re : -1e300; },
        10.0, "real part");
  return rb.finish();
}

// ---------------------------------------------------------------- leaf augmentation

ClaimReport verify_leaf_augmentation(int count, int min_order, int max_order, int depth, const ClaimOptions&) {
  if (count < 1 || min_order < 2 || max_order < min_order || depth < 1 || (max_order << depth) > Graph::kMaxOrder) {
    throw DomainError("leaf_augmentation parameters out of range");
  }
  ReportBuilder rb("leaf_augmentation",
                   {{"count", count}, {"min_order", min_order}, {"max_order", max_order}, {"depth", depth}});

  // Identity W(T1) = (x+1)^2 W(T0) on random labeled trees.
  std::mt19937_64 rng(0x5eed'1ea7'0000'0001ULL);
  std::uniform_int_distribution<int> pick_order(min_order, max_order);
  std::size_t off_by_nx = 0;
  std::size_t mismatches = 0;
  for (int t = 0; t < count; ++t) {
    const int n = pick_order(rng);
    std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    for (auto& v : seq) v = pick_vertex(rng);
    const Graph t0 = n == 2 ? family_graph(FamilySpec{Family::path, {2}}) : prufer_tree(seq, n);
    const auto w0 = wiener_polynomial(distance_distribution(t0));
    const Graph t1 = leaf_augment(t0);
    const auto w1 = wiener_polynomial(distance_distribution(t1));
    const auto predicted = times_x_plus_one_squared(w0);
    std::vector<mpz_class> actual(w1.counts().begin(), w1.counts().end());
    if (actual == predicted) continue;
    ++mismatches;
    auto diff = actual;
    diff.resize(std::max(diff.size(), predicted.size()));
    for (std::size_t i = 0; i < predicted.size(); ++i) diff[i] -= predicted[i];
    bool only_linear = diff[0] == n;
    for (std::size_t i = 1; i < diff.size(); ++i) only_linear = only_linear && diff[i] == 0;
    if (only_linear) ++off_by_nx;
    rb.counterexample(describe(t0, distance_distribution(t0)),
                      "W(T1) = " + to_string(w1) + " but (x+1)^2 W(T0) differs" +
                          (only_linear ? " by n*x" : ""));
  }
  rb.note(std::to_string(mismatches) + " of " + std::to_string(count) + " random trees break the identity; " +
          std::to_string(off_by_nx) + " differ exactly by n*x");

  // Iterated augmentation of real-rooted bases.
  for (int n = min_order; n <= std::min(max_order, 7); ++n) {
    for (const Graph& base : all_trees(n)) {
      const auto base_roots = roots(reduced(distance_distribution(base)));
      if (!all_real(base_roots)) continue;
      const bool rational = all_rational(base_roots);
      Graph t = base;
      for (int k = 1; k <= depth; ++k) {
        t = leaf_augment(t);
        const auto dd = distance_distribution(t);
        const auto rs = roots(reduced(dd));
        if (!all_real(rs)) {
          rb.counterexample(describe(base, distance_distribution(base)),
                            "after " + std::to_string(k) + " augmentation(s) roots are " + roots_text(rs));
          break;
        }
        if (rational && !all_rational(rs)) {
          rb.counterexample(describe(base, distance_distribution(base)),
                            "after " + std::to_string(k) + " augmentation(s) irrational roots " + roots_text(rs));
          break;
        }
        if (k == depth) rb.witness(describe(base, distance_distribution(base)), "real through depth " + std::to_string(depth));
      }
    }
  }
  return rb.finish();
}

// ---------------------------------------------------------------- properties

ClaimReport verify_properties(InstanceClass cls, int n, const ClaimOptions& opt) {
  check_order(cls, n, 2, opt);
  ReportBuilder rb("properties_" + std::string(to_string(cls)), one("n", n));
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const bool check_imaginary = cls == InstanceClass::graphs || n <= 12;
  std::size_t count = 0;
  for (const auto& inst : instances(cls, n, opt)) {
    ++count;
    const std::string subject = describe(inst.graph, inst.distribution);
    const auto& d = inst.distribution.counts();
    std::uint64_t sum = 0;
    for (auto v : d) {
      sum += v;
      if (v == 0) rb.counterexample(subject, "zero count below the diameter");
    }
    if (sum != pairs) rb.counterexample(subject, "counts sum to " + std::to_string(sum));
    if (static_cast<int>(d.size()) != diameter(inst.graph)) rb.counterexample(subject, "diameter mismatch");

    const auto p = reduced(inst.distribution);
    if (static_cast<int>(inst.roots.size()) != p.degree()) rb.counterexample(subject, "root count != degree");
    if (p.degree() == 0) continue;
    const auto ek = enestrom_kakeya(p);
    const double r = ek.r.get_d();
    const double R = ek.R.get_d();
    for (const auto& root : inst.roots) {
      const double m = std::abs(root.value());
      if (root.residual > 1e-9) rb.counterexample(subject, "residual " + fmt(root.residual));
      if (m < r * (1 - opt.tolerance) || m > R * (1 + opt.tolerance)) {
        rb.counterexample(subject, "|root| " + fmt(m) + " outside [" + fmt(r) + ", " + fmt(R) + "]");
      }
      if (root.im == 0.0 && root.re > 0.0) rb.counterexample(subject, "positive real root " + fmt(root.re));
      if (root.im != 0.0) {
        const bool paired = std::any_of(inst.roots.begin(), inst.roots.end(), [&](const ComplexRoot& o) {
          return o.re == root.re && o.im == -root.im;
        });
        if (!paired) rb.counterexample(subject, "root without conjugate");
      }
    }
    if (d.size() == 2 && (inst.roots.size() != 1 || inst.roots[0].im != 0.0 || !inst.roots[0].exact)) {
      rb.counterexample(subject, "diameter-2 graph without a single exact real root");
    }
    if (check_imaginary) {
      const auto imag = purely_imaginary_roots(p);
      std::size_t numeric = 0;
      for (const auto& root : inst.roots) {
        if (root.im > 0.0 && std::abs(root.re) <= 1e-10 * std::max(1.0, root.im)) ++numeric;
      }
      if (numeric != imag.size()) {
        rb.counterexample(subject, "exact test finds " + std::to_string(imag.size()) + " imaginary pairs, numeric " +
                                       std::to_string(numeric));
      }
    }
  }
  rb.note(std::to_string(count) + " instances checked");
  return rb.finish();
}

// ---------------------------------------------------------------- registry

namespace {

int as_int(const std::map<std::string, std::int64_t>& p, const char* key) {
  const std::int64_t v = p.at(key);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw DomainError(std::string(key) + " out of range");
  }
  return static_cast<int>(v);
}

using Params = std::map<std::string, std::int64_t>;

std::vector<ClaimDefinition> build_registry() {
  std::vector<ClaimDefinition> r;
  auto add = [&](std::string id, std::string summary, std::vector<std::string> names, auto fn) {
    r.push_back({std::move(id), std::move(summary), std::move(names), std::move(fn)});
  };
  add("max_modulus", "graph roots satisfy |z| <= C(n,2)-1, attained only by K_n - e", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_max_modulus(as_int(p, "n"), o); });
  add("min_modulus", "graph roots satisfy |z| >= 2/(n-2), attained only by the star", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_min_modulus(as_int(p, "n"), o); });
  add("tree_ratio_bounds", "tree counts satisfy d_k <= 2(n-D) d_{k+1} and d_k <= 2(n-4) d_{k+1}", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_tree_ratio_bounds(as_int(p, "n"), o); });
  add("ratio_lower", "graph counts satisfy d_k (n-k-1) >= 2 d_{k+1}", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_ratio_lower(as_int(p, "n"), o); });
  add("tree_root_bound", "tree roots satisfy |z| <= 2(n-4)", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_tree_root_bound(as_int(p, "n"), o); });
  add("tn_interval", "T_n has a real root in (-(1+1/sqrt2)n+7, -(1+1/sqrt2)n+8)", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_tn_interval(as_int(p, "n"), o); });
  add("tn_extremal", "T_n uniquely maximises root modulus among trees", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_tn_extremal(as_int(p, "n"), o); });
  add("path_annulus", "path roots satisfy (n-1)/(n-2) <= |z| <= 2", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_path_annulus(as_int(p, "n"), o); });
  add("density", "a diameter-2 graph has root exactly -a/b", {"a", "b"},
      [](const Params& p, const ClaimOptions& o) { return verify_density(p.at("a"), p.at("b"), o); });
  add("tree_density_limit", "double-star roots approach -r - 1/(4r)", {"a", "b", "l_max"},
      [](const Params& p, const ClaimOptions& o) {
        return verify_tree_density_limit(p.at("a"), p.at("b"), p.at("l_max"), o);
      });
  add("double_star_discriminant", "double stars have real roots iff n >= 15", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_double_star_discriminant(p.at("n"), o); });
  add("broom_imag", "B_{4,n-4} largest imaginary part ~ sqrt(n/2)", {"n_max"},
      [](const Params& p, const ClaimOptions& o) {
        return verify_broom_asymptotics(Asymptotic::broom_imag, p.at("n_max"), o);
      });
  add("broom_real", "B_{5,n-5} largest real part ~ 2^(-4/3) n^(1/3)", {"n_max"},
      [](const Params& p, const ClaimOptions& o) {
        return verify_broom_asymptotics(Asymptotic::broom_real, p.at("n_max"), o);
      });
  add("gn_imag", "G_n imaginary part ~ n/2", {"n_max"},
      [](const Params& p, const ClaimOptions& o) {
        return verify_broom_asymptotics(Asymptotic::g_n_imag, p.at("n_max"), o);
      });
  add("extremal_real_trees", "tree maximising the real part of a root", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_extremal_real(as_int(p, "n"), InstanceClass::trees, o); });
  add("extremal_real_graphs", "graph maximising the real part of a root", {"n"},
      [](const Params& p, const ClaimOptions& o) {
        return verify_extremal_real(as_int(p, "n"), InstanceClass::graphs, o);
      });
  add("purely_imaginary_graphs", "graphs with purely imaginary roots", {"n"},
      [](const Params& p, const ClaimOptions& o) {
        return find_purely_imaginary(InstanceClass::graphs, as_int(p, "n"), o);
      });
  add("purely_imaginary_trees", "trees with purely imaginary roots", {"n"},
      [](const Params& p, const ClaimOptions& o) {
        return find_purely_imaginary(InstanceClass::trees, as_int(p, "n"), o);
      });
  add("half_plane", "roots with large negative real, large imaginary and large positive real parts", {},
      [](const Params&, const ClaimOptions& o) { return verify_half_plane(o); });
  add("leaf_augmentation", "W(T1) = (x+1)^2 W(T0) and preservation of real roots",
      {"count", "min_order", "max_order", "depth"}, [](const Params& p, const ClaimOptions& o) {
        return verify_leaf_augmentation(as_int(p, "count"), as_int(p, "min_order"), as_int(p, "max_order"),
                                        as_int(p, "depth"), o);
      });
  add("properties_graphs", "root-set invariants over all connected graphs", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_properties(InstanceClass::graphs, as_int(p, "n"), o); });
  add("properties_trees", "root-set invariants over all trees", {"n"},
      [](const Params& p, const ClaimOptions& o) { return verify_properties(InstanceClass::trees, as_int(p, "n"), o); });
  return r;
}

}  // namespace

const std::vector<ClaimDefinition>& claim_registry() {
  static const std::vector<ClaimDefinition> registry = build_registry();
  return registry;
}

const ClaimDefinition* find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<ClaimReport> run_claim(std::string_view id, const ParamMap& params, const ClaimOptions& opt) {
  const auto* def = find_claim(id);
  if (def == nullptr) throw DomainError("unknown claim '" + std::string(id) + "'");
  for (const auto& [name, range] : params) {
    if (std::find(def->param_names.begin(), def->param_names.end(), name) == def->param_names.end()) {
      throw DomainError(def->id + " has no parameter '" + name + "'");
    }
    if (range.lo > range.hi) throw DomainError("empty range for " + name);
  }
  std::vector<ParamRange> ranges;
  for (const auto& name : def->param_names) {
    auto it = params.find(name);
    if (it == params.end()) throw DomainError(def->id + " needs parameter '" + name + "'");
    ranges.push_back(it->second);
  }

  std::vector<ClaimReport> out;
  std::vector<std::int64_t> point;
  for (const auto& r : ranges) point.push_back(r.lo);
  while (true) {
    Params p;
    for (std::size_t i = 0; i < point.size(); ++i) p[def->param_names[i]] = point[i];
    out.push_back(def->run(p, opt));
    std::size_t i = point.size();
    while (i > 0) {
      --i;
      if (point[i] < ranges[i].hi) {
        ++point[i];
        break;
      }
      point[i] = ranges[i].lo;
      if (i == 0) return out;
    }
    if (point.empty()) return out;
  }
}

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::quick;
  if (text == "full") return Profile::full;
  throw ParseError("profile must be quick or full");
}

std::vector<PlannedRun> suite_plan(Profile profile, bool allow_long) {
  const bool full = profile == Profile::full;
  const std::int64_t graphs = full && allow_long ? kMaxGraphOrder : kDefaultMaxGraphOrder;
  const std::int64_t trees = full ? 17 : 14;
  auto n = [](std::int64_t lo, std::int64_t hi) { return ParamMap{{"n", {lo, hi}}}; };
  auto v = [](std::int64_t x) { return ParamRange{x, x}; };
  return {
      {"max_modulus", n(3, graphs)},
      {"min_modulus", n(3, graphs)},
      {"ratio_lower", n(3, graphs)},
      {"tree_ratio_bounds", n(3, trees)},
      {"tree_root_bound", n(5, trees)},
      {"tn_interval", n(6, full ? 200 : 60)},
      {"tn_extremal", n(5, trees)},
      {"path_annulus", n(3, full ? 100 : 60)},
      {"density", {{"a", {1, full ? 50 : 10}}, {"b", {1, full ? 50 : 10}}}},
      {"tree_density_limit", {{"a", {1, full ? 5 : 3}}, {"b", {1, full ? 5 : 3}}, {"l_max", v(1000)}}},
      {"double_star_discriminant", n(4, full ? 200 : 60)},
      {"broom_imag", {{"n_max", v(full ? 1000000 : 100000)}}},
      {"broom_real", {{"n_max", v(full ? 1000000 : 100000)}}},
      {"gn_imag", {{"n_max", v(10000)}}},
      {"extremal_real_graphs", n(3, graphs)},
      {"extremal_real_trees", n(6, trees)},
      {"purely_imaginary_graphs", n(3, graphs)},
      {"purely_imaginary_trees", n(3, full ? 14 : 12)},
      {"half_plane", {}},
      {"leaf_augmentation", {{"count", v(200)}, {"min_order", v(3)}, {"max_order", v(15)}, {"depth", v(3)}}},
      {"properties_graphs", n(2, graphs)},
      {"properties_trees", n(2, trees)},
  };
}

std::vector<ClaimReport> run_suite(Profile profile, const ClaimOptions& opt) {
  std::vector<ClaimReport> out;
  for (const auto& run : suite_plan(profile, opt.allow_long)) {
    auto reports = run_claim(run.id, run.params, opt);
    std::move(reports.begin(), reports.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace wiener
