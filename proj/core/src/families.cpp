#include "wiener/families.hpp"

#include <array>
#include <charconv>

#include "wiener/errors.hpp"

namespace wiener {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::complete, "complete", 1},
    FamilyInfo{Family::complete_minus_edge, "complete_minus_edge", 1},
    FamilyInfo{Family::star, "star", 1},
    FamilyInfo{Family::path, "path", 1},
    FamilyInfo{Family::double_star, "double_star", 2},
    FamilyInfo{Family::broom, "broom", 2},
    FamilyInfo{Family::t_n, "t_n", 1},
    FamilyInfo{Family::g_n, "g_n", 1},
    FamilyInfo{Family::diameter2, "diameter2", 2},
    FamilyInfo{Family::path_with_pendants, "path_with_pendants", 3},
    FamilyInfo{Family::leaf_augmented, "leaf_augmented", 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw DomainError("unknown family");
}

mpz_class choose2(const mpz_class& n) { return n * (n - 1) / 2; }
mpz_class choose2(std::int64_t n) { return choose2(mpz_class(static_cast<long>(n))); }
mpz_class z(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

void require(bool ok, const FamilySpec& spec, const char* rule) {
  if (!ok) throw DomainError(spec.to_string() + ": parameters violate " + rule);
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec must look like name:p1,p2");
  const std::string_view name = text.substr(0, colon);
  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies) {
    if (i.name == name) found = &i;
  }
  if (found == nullptr) throw ParseError("unknown family '" + std::string(name) + "'");

  FamilySpec spec{found->family, {}};
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("family parameter '" + std::string(item) + "' is not an integer");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw ParseError("family spec has a trailing comma");
  }
  if (spec.params.size() != found->arity) {
    throw ParseError(std::string(name) + " takes " + std::to_string(found->arity) + " parameter(s)");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

std::int64_t FamilySpec::order() const {
  switch (family) {
    case Family::double_star:
      return params.at(1);
    case Family::broom:
      return params.at(0) + params.at(1);
    case Family::path_with_pendants:
      return params.at(0) + params.at(2);
    case Family::leaf_augmented:
      return params.at(0) << params.at(1);
    default:
      return params.at(0);
  }
}

void validate(const FamilySpec& spec) {
  if (spec.params.size() != info(spec.family).arity) throw DomainError(spec.to_string() + ": wrong parameter count");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::complete:
    case Family::path:
      require(p[0] >= 2, spec, "n >= 2");
      break;
    case Family::complete_minus_edge:
    case Family::star:
      require(p[0] >= 3, spec, "n >= 3");
      break;
    case Family::double_star:
      require(p[1] >= 4 && p[0] >= 2 && p[0] <= p[1] / 2, spec, "n >= 4, 2 <= k <= floor(n/2)");
      break;
    case Family::broom:
      require(p[0] >= 3 && p[1] >= 1, spec, "n > k >= 3");
      break;
    case Family::t_n:
      require(p[0] >= 5, spec, "n >= 5");
      break;
    case Family::g_n:
      require(p[0] >= 4, spec, "n >= 4");
      break;
    case Family::diameter2:
      require(p[0] >= 3 && p[1] >= p[0] - 1 && z(p[1]) < choose2(p[0]), spec, "n >= 3, n-1 <= m < C(n,2)");
      break;
    case Family::path_with_pendants:
      require(p[0] >= 1 && p[1] >= 1 && p[1] <= p[0] && p[2] >= 0 && p[0] + p[2] >= 2, spec,
              "path >= 1, 1 <= attach <= path, leaves >= 0, order >= 2");
      break;
    case Family::leaf_augmented:
      require(p[0] >= 2 && p[1] >= 0 && p[1] <= 7 && (p[0] << p[1]) <= Graph::kMaxOrder, spec,
              "base >= 2, order base*2^times <= 256");
      break;
  }
}

std::optional<WienerPolynomial> closed_form_polynomial(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  const std::int64_t n = spec.order();
  std::vector<mpz_class> d;
  switch (spec.family) {
    case Family::complete:
      d = {choose2(n)};
      break;
    case Family::complete_minus_edge:
      d = {choose2(n) - 1, 1};
      break;
    case Family::star:
      d = {z(n - 1), choose2(n - 1)};
      break;
    case Family::path:
      for (std::int64_t i = 1; i < n; ++i) d.push_back(z(n - i));
      break;
    case Family::double_star: {
      const std::int64_t k = p[0];
      d = {z(n - 1), choose2(k) + choose2(n - k), z(k - 1) * z(n - k - 1)};
      break;
    }
    case Family::t_n:
      d = {z(n - 1), choose2(n - 3) + 2, z(2 * (n - 4)), 1};
      break;
    case Family::g_n:
      d = {choose2(n - 1), z(n - 2), 1};
      break;
    case Family::diameter2:
      d = {z(p[1]), choose2(n) - z(p[1])};
      break;
    case Family::broom:
      if (p[0] == 4) {
        d = {z(n - 1), choose2(n - 3) + 2, z(n - 3), z(n - 4)};
      } else if (p[0] == 5) {
        d = {z(n - 1), choose2(n - 4) + 3, z(n - 3), z(n - 4), z(n - 5)};
      } else {
        return std::nullopt;
      }
      break;
    case Family::path_with_pendants:
    case Family::leaf_augmented:
      return std::nullopt;
  }
  return WienerPolynomial(std::move(d));
}

WienerPolynomial family_polynomial(const FamilySpec& spec) {
  if (auto closed = closed_form_polynomial(spec)) return *std::move(closed);
  return wiener_polynomial(distance_distribution(family_graph(spec)));
}

Graph family_graph(const FamilySpec& spec) {
  validate(spec);
  const std::int64_t order = spec.order();
  if (order > Graph::kMaxOrder) {
    throw DomainError(spec.to_string() + ": graph construction supports order <= " +
                      std::to_string(Graph::kMaxOrder));
  }
  const int n = static_cast<int>(order);
  const auto& p = spec.params;
  Graph g(n);
  switch (spec.family) {
    case Family::complete:
    case Family::complete_minus_edge:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (spec.family == Family::complete || u != 0 || v != 1) g.add_edge(u, v);
        }
      }
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case Family::path:
      for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
      break;
    case Family::double_star: {
      // Centres 0 and 1; the k-1 leaves of centre 0 come first.
      const int k = static_cast<int>(p[0]);
      g.add_edge(0, 1);
      for (int v = 2; v < n; ++v) g.add_edge(v < k + 1 ? 0 : 1, v);
      break;
    }
    case Family::broom: {
      const int k = static_cast<int>(p[0]);
      for (int v = 1; v < k; ++v) g.add_edge(v - 1, v);
      for (int v = k; v < n; ++v) g.add_edge(k - 1, v);
      break;
    }
    case Family::t_n:
      return family_graph(FamilySpec{Family::path_with_pendants, {5, 3, order - 5}});
    case Family::g_n:
      for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n - 1; ++v) {
          if (u != 0 || v != 1) g.add_edge(u, v);
        }
      }
      g.add_edge(0, n - 1);
      break;
    case Family::diameter2: {
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      std::int64_t extra = p[1] - (n - 1);
      for (int u = 1; u < n && extra > 0; ++u) {
        for (int v = u + 1; v < n && extra > 0; ++v, --extra) g.add_edge(u, v);
      }
      break;
    }
    case Family::path_with_pendants: {
      const int len = static_cast<int>(p[0]);
      const int attach = static_cast<int>(p[1]) - 1;
      for (int v = 1; v < len; ++v) g.add_edge(v - 1, v);
      for (int v = len; v < n; ++v) g.add_edge(attach, v);
      break;
    }
    case Family::leaf_augmented: {
      Graph t = family_graph(FamilySpec{Family::path, {p[0]}});
      for (std::int64_t i = 0; i < p[1]; ++i) t = leaf_augment(t);
      return t;
    }
  }
  return g;
}

DenseConstruction dense_construct(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("dense_construct needs positive a and b");
  const std::int64_t n = 2 * (a + b);
  const std::int64_t m = a * (2 * (a + b) - 1);
  FamilySpec spec{Family::diameter2, {n, m}};
  validate(spec);
  mpq_class root(-z(m), choose2(n) - z(m));
  root.canonicalize();
  return {std::move(spec), std::move(root)};
}

FamilySpec tree_dense_construct(std::int64_t a, std::int64_t b, std::int64_t l) {
  if (a < 1 || b < 1) throw DomainError("tree_dense_construct needs positive a and b");
  if (l < 5) throw DomainError("tree_dense_construct needs l >= 5 so that n >= 15");
  const std::int64_t n = (2 * a + b) * l;
  std::int64_t k = l * b;
  if (k > n - k) k = n - k;
  FamilySpec spec{Family::double_star, {k, n}};
  validate(spec);
  return spec;
}

Graph leaf_augment(const Graph& tree) {
  if (tree.order() < 2 || !tree.is_tree()) throw DomainError("leaf_augment needs a tree of order >= 2");
  const int n = tree.order();
  Graph out(2 * n);
  for (auto [u, v] : tree.edges()) out.add_edge(u, v);
  for (int v = 0; v < n; ++v) out.add_edge(v, v + n);
  return out;
}

std::vector<mpz_class> times_x_plus_one_squared(const WienerPolynomial& w) {
  // Coefficients indexed by power of x, starting at x^1.
  std::vector<mpz_class> out(static_cast<std::size_t>(w.degree()) + 2, 0);
  for (int i = 1; i <= w.degree(); ++i) {
    const mpz_class c = w.coefficient(i);
    out[static_cast<std::size_t>(i - 1)] += c;
    out[static_cast<std::size_t>(i)] += 2 * c;
    out[static_cast<std::size_t>(i + 1)] += c;
  }
  return out;
}

}  // namespace wiener
