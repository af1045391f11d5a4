#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"
#include "wiener/polynomial.hpp"
#include "wiener/roots.hpp"

namespace wiener {

enum class Verdict { pass, fail, inconclusive_budget };

std::string_view to_string(Verdict v);

/// A described instance (graph, family member, ratio) with the values that
/// make it a witness or a counterexample.
struct Evidence {
  std::string subject;
  std::string detail;
};

struct ClaimReport {
  std::string claim_id;
  std::map<std::string, std::int64_t> params;
  Verdict verdict = Verdict::pass;
  std::vector<Evidence> witnesses;
  std::vector<Evidence> counterexamples;
  std::vector<std::string> notes;
  std::chrono::duration<double> runtime{0};
};

struct ClaimOptions {
  /// Slack for inequality checks on numeric roots.
  double tolerance = 1e-8;
  int jobs = 1;
  /// Enables order-8 graph sweeps.
  bool allow_long = false;
};

enum class InstanceClass { graphs, trees };
enum class Objective { max_modulus, max_real, max_imag, min_nonzero_modulus };

std::string_view to_string(InstanceClass c);
std::string_view to_string(Objective o);
InstanceClass parse_instance_class(std::string_view text);
Objective parse_objective(std::string_view text);

struct ExtremalInstance {
  std::string description;  // graph6 of a representative plus its d-vector
  DistanceDistribution distribution;
  Graph graph;
};

struct ExtremalReport {
  int order = 0;
  Objective objective = Objective::max_modulus;
  InstanceClass instance_class = InstanceClass::trees;
  double best_value = 0.0;
  std::vector<ExtremalInstance> argmax;
};

// Modulus and coefficient-ratio bounds.
ClaimReport verify_max_modulus(int n, const ClaimOptions& opt = {});
ClaimReport verify_min_modulus(int n, const ClaimOptions& opt = {});
ClaimReport verify_tree_ratio_bounds(int n, const ClaimOptions& opt = {});
ClaimReport verify_ratio_lower(int n, const ClaimOptions& opt = {});
ClaimReport verify_tree_root_bound(int n, const ClaimOptions& opt = {});
ClaimReport verify_tn_interval(int n, const ClaimOptions& opt = {});
ClaimReport verify_tn_extremal(int n, const ClaimOptions& opt = {});
ClaimReport verify_path_annulus(int n, const ClaimOptions& opt = {});

// Density constructions.
ClaimReport verify_density(std::int64_t a, std::int64_t b, const ClaimOptions& opt = {});
ClaimReport verify_tree_density_limit(std::int64_t a, std::int64_t b, std::int64_t l_max,
                                      const ClaimOptions& opt = {});
ClaimReport verify_double_star_discriminant(std::int64_t n, const ClaimOptions& opt = {});

// Real and imaginary parts.
enum class Asymptotic { broom_imag, broom_real, g_n_imag };
Asymptotic parse_asymptotic(std::string_view text);
std::string_view to_string(Asymptotic a);

ClaimReport verify_broom_asymptotics(Asymptotic which, std::int64_t n_max, const ClaimOptions& opt = {});
ExtremalReport search_extremal(int order, Objective objective, InstanceClass cls, const ClaimOptions& opt = {});
ClaimReport verify_extremal_real(int order, InstanceClass cls, const ClaimOptions& opt = {});
ClaimReport find_purely_imaginary(InstanceClass cls, int order, const ClaimOptions& opt = {});
ClaimReport verify_half_plane(const ClaimOptions& opt = {});

// Leaf augmentation.
ClaimReport verify_leaf_augmentation(int count, int min_order, int max_order, int depth, const ClaimOptions& opt = {});

/// Root-set invariants over every instance of a sweep: distribution sums,
/// conjugate closure, annulus containment, nonpositive real roots, diameter-2
/// realness and agreement of the exact purely-imaginary test with the numeric
/// roots.
ClaimReport verify_properties(InstanceClass cls, int n, const ClaimOptions& opt = {});

// Special instances; edge lists also live in data/fixtures.
Graph sqrt2_graph();
Graph unit_root_tree();
Graph max_real_tree_16();
Graph max_real_tree_17();

/// Canonical string of a free tree (AHU encoding rooted at its centre(s)).
std::string tree_canonical_form(const Graph& tree);

// Registry used by the CLI and the suite runner.
struct ParamRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
using ParamMap = std::map<std::string, ParamRange>;

struct ClaimDefinition {
  std::string id;
  std::string summary;
  std::vector<std::string> param_names;
  /// Runs the claim once per point of the cartesian product of the ranges.
  std::function<ClaimReport(const std::map<std::string, std::int64_t>&, const ClaimOptions&)> run;
};

const std::vector<ClaimDefinition>& claim_registry();
const ClaimDefinition* find_claim(std::string_view id);

/// Expands ranges and runs the claim; throws DomainError for unknown ids or
/// missing parameters.
std::vector<ClaimReport> run_claim(std::string_view id, const ParamMap& params, const ClaimOptions& opt = {});

enum class Profile { quick, full };
Profile parse_profile(std::string_view text);

struct PlannedRun {
  std::string id;
  ParamMap params;
};

std::vector<PlannedRun> suite_plan(Profile profile, bool allow_long);
std::vector<ClaimReport> run_suite(Profile profile, const ClaimOptions& opt = {});

}  // namespace wiener
