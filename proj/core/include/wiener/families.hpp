#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/graph.hpp"
#include "wiener/polynomial.hpp"

namespace wiener {

enum class Family {
  complete,             // (n)
  complete_minus_edge,  // (n)
  star,                 // (n): K_{1,n-1}
  path,                 // (n)
  double_star,          // (k, n): D_{k,n-k}
  broom,                // (k, leaves): B_{k,leaves}, order k + leaves
  t_n,                  // (n): P_5 with n-5 leaves on its middle vertex
  g_n,                  // (n): K_{n-1}-e plus a leaf on a degree-(n-3) vertex
  diameter2,            // (n, m)
  path_with_pendants,   // (path, attach, leaves); attach is 1-indexed
  leaf_augmented,       // (base, times): P_base with a leaf added to every vertex, repeated
};

std::string_view family_name(Family f);

struct FamilySpec {
  Family family;
  std::vector<std::int64_t> params;

  /// Parses "name:p1,p2,..." e.g. "double_star:2,5" or "t_n:9".
  static FamilySpec parse(std::string_view text);

  std::int64_t order() const;
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws DomainError when the parameters are outside the family's range.
void validate(const FamilySpec& spec);

/// Closed-form W for families that have one (complete, complete_minus_edge,
/// star, path, double_star, t_n, g_n, diameter2, broom with k in {4,5}).
std::optional<WienerPolynomial> closed_form_polynomial(const FamilySpec& spec);

/// Closed form where available, otherwise constructor + BFS.
WienerPolynomial family_polynomial(const FamilySpec& spec);

Graph family_graph(const FamilySpec& spec);

struct DenseConstruction {
  FamilySpec spec;  // diameter2 with n = 2(a+b), m = a(2(a+b)-1)
  mpq_class root;   // -m / (C(n,2) - m), which reduces to -a/b
};

DenseConstruction dense_construct(std::int64_t a, std::int64_t b);

/// Double star with n = (2a+b)l and k = l*b (reflected to min(k, n-k)); its
/// leftmost root tends to -r - 1/(4r) for r = a/b as l grows.
FamilySpec tree_dense_construct(std::int64_t a, std::int64_t b, std::int64_t l);

/// Attaches one new leaf to every vertex of a tree (order doubles; new leaf
/// of v is v + n).
Graph leaf_augment(const Graph& tree);

/// (x+1)^2 * W, coefficient-exact.
std::vector<mpz_class> times_x_plus_one_squared(const WienerPolynomial& w);

}  // namespace wiener
